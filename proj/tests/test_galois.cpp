#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"
#include "tsheaf/galois.hpp"

using namespace tsheaf;

TEST_CASE("upper adjoint synthesis matches the direct formula") {
  auto C2 = FiniteLattice::chain(2);
  auto C3 = FiniteLattice::chain(3);

  SUBCASE("chain example") {
    std::vector<Elem> lower = {0, 2};
    auto expect = oracle::brute_upper_adjoint(*C2, *C3, lower);
    CHECK(expect == std::vector<Elem>{0, 0, 1});
    auto c = synthesize_upper(C2, C3, lower);
    CHECK(c.upper == expect);
    CHECK_FALSE(verify(c).has_value());
  }
  SUBCASE("identity synthesizes identity") {
    auto L = FiniteLattice::powerset(2);
    std::vector<Elem> id = {0, 1, 2, 3};
    auto c = synthesize_upper(L, L, id);
    CHECK(c.upper == id);
  }
  SUBCASE("constant bottom synthesizes the zero morphism") {
    auto P1 = FiniteLattice::powerset(1);
    auto c = synthesize_upper(P1, P1, {0, 0});
    CHECK(c.upper == std::vector<Elem>{1, 1});  // constant top
    auto z = zero_connection(P1, P1);
    CHECK(c.lower == z.lower);
    CHECK(c.upper == z.upper);
  }
  SUBCASE("non-join-preserving input is rejected with a witness") {
    // powerset(2): send atoms to top but their join {a,b} to an atom
    auto P2 = FiniteLattice::powerset(2);
    CHECK_THROWS_AS(synthesize_upper(P2, P2, {0, 3, 3, 1}), NotJoinPreserving);
    // bottom must go to bottom
    CHECK_THROWS_AS(synthesize_upper(C2, C2, {1, 1}), NotJoinPreserving);
  }
}

TEST_CASE("adjunction law verification") {
  auto C2 = FiniteLattice::chain(2);
  SUBCASE("identity verifies") {
    CHECK_FALSE(verify(identity_connection(C2)).has_value());
  }
  SUBCASE("broken upper yields the witness (1,1)") {
    Connection bad{C2, C2, {0, 1}, {0, 0}};
    auto w = verify(bad);
    REQUIRE(w.has_value());
    CHECK(w->x == 1);
    CHECK(w->y == 1);
  }
}

TEST_CASE("composition") {
  auto C2 = FiniteLattice::chain(2);
  auto C3 = FiniteLattice::chain(3);
  auto f = synthesize_upper(C2, C3, {0, 2});
  auto g = synthesize_upper(C3, C2, {0, 0, 1});

  SUBCASE("identity is a two-sided unit") {
    auto fi = compose(f, identity_connection(C3));
    CHECK(fi.lower == f.lower);
    CHECK(fi.upper == f.upper);
    auto if_ = compose(identity_connection(C2), f);
    CHECK(if_.lower == f.lower);
    CHECK(if_.upper == f.upper);
  }
  SUBCASE("composing with zero gives zero") {
    auto z = compose(f, zero_connection(C3, C2));
    auto zz = zero_connection(C2, C2);
    CHECK(z.lower == zz.lower);
    CHECK(z.upper == zz.upper);
  }
  SUBCASE("chain round trip verifies") {
    auto gf = compose(f, g);
    CHECK_FALSE(verify(gf).has_value());
    CHECK(gf.lower == std::vector<Elem>{0, 1});
  }
  SUBCASE("mismatched domains are rejected") {
    CHECK_THROWS_AS(compose(f, f), DomainMismatch);
  }
  SUBCASE("associativity on random connections") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 25; ++i) {
      auto& pool = gen::stalk_pool();
      auto A = pool[rng() % pool.size()];
      auto B = pool[rng() % pool.size()];
      auto Cc = pool[rng() % pool.size()];
      auto D = pool[rng() % pool.size()];
      auto p = gen::random_connection(A, B, rng);
      auto q = gen::random_connection(B, Cc, rng);
      auto r = gen::random_connection(Cc, D, rng);
      auto left = compose(compose(p, q), r);
      auto right = compose(p, compose(q, r));
      CHECK(left.lower == right.lower);
      CHECK(left.upper == right.upper);
    }
  }
}

TEST_CASE("semi-additive sums") {
  auto P2 = FiniteLattice::powerset(2);
  std::mt19937_64 rng(5);

  SUBCASE("zero is the unit") {
    auto f = gen::random_connection(P2, P2, rng);
    auto s = sum(f, zero_connection(P2, P2));
    CHECK(s.lower == f.lower);
    CHECK(s.upper == f.upper);
  }
  SUBCASE("commutative and associative on random connections") {
    for (int i = 0; i < 25; ++i) {
      auto& pool = gen::stalk_pool();
      auto A = pool[rng() % pool.size()];
      auto B = pool[rng() % pool.size()];
      auto f = gen::random_connection(A, B, rng);
      auto g = gen::random_connection(A, B, rng);
      auto h = gen::random_connection(A, B, rng);
      auto fg = sum(f, g);
      auto gf = sum(g, f);
      CHECK(fg.lower == gf.lower);
      CHECK(fg.upper == gf.upper);
      auto l = sum(sum(f, g), h);
      auto r = sum(f, sum(g, h));
      CHECK(l.lower == r.lower);
      CHECK(l.upper == r.upper);
      // the sum of connections is itself a connection
      CHECK_FALSE(verify(fg).has_value());
    }
  }
  SUBCASE("idempotent join: id + id = id") {
    auto s = sum(identity_connection(P2), identity_connection(P2));
    auto id = identity_connection(P2);
    CHECK(s.lower == id.lower);
    CHECK(s.upper == id.upper);
  }
}

TEST_CASE("kernel, cokernel, normal image") {
  auto C2 = FiniteLattice::chain(2);
  auto C3 = FiniteLattice::chain(3);

  SUBCASE("kernel of zero is everything") {
    auto z = zero_connection(C3, C2);
    auto k = kernel(z);
    CHECK(k.lo == C3->bottom());
    CHECK(k.hi == C3->top());
  }
  SUBCASE("kernel of an injective-ish map is trivial") {
    auto f = synthesize_upper(C2, C3, {0, 2});
    auto k = kernel(f);
    CHECK(k.lo == 0);
    CHECK(k.hi == 0);
  }
  SUBCASE("cokernel of identity is the top singleton") {
    auto c = cokernel(identity_connection(C3));
    CHECK(c.lo == C3->top());
    CHECK(c.hi == C3->top());
  }
  SUBCASE("normal image is the downset of lower(1)") {
    auto f = synthesize_upper(C2, C3, {0, 1});
    auto n = normal_image(f);
    CHECK(n.lo == 0);
    CHECK(n.hi == 1);
  }
}

TEST_CASE("exactness") {
  auto C2 = FiniteLattice::chain(2);
  auto C3 = FiniteLattice::chain(3);

  SUBCASE("identity is exact") {
    auto r = exactness(identity_connection(C3));
    CHECK(r.left_exact);
    CHECK(r.right_exact);
  }
  SUBCASE("collapsing the top two elements of a chain is not left exact") {
    // lower: 0 -> 0, 1 -> 1, 2 -> 1; upper(lower(1)) = 2 but 1 v upper(0) = 1
    auto f = synthesize_upper(C3, C2, {0, 1, 1});
    CHECK(f.upper == oracle::brute_upper_adjoint(*C3, *C2, f.lower));
    auto r = exactness(f);
    CHECK_FALSE(r.left_exact);
  }
  SUBCASE("collapsing the bottom two elements is exact both ways") {
    auto f = synthesize_upper(C3, C2, {0, 0, 1});
    auto r = exactness(f);
    CHECK(r.left_exact);
    CHECK(r.right_exact);
  }
}

TEST_CASE("connection order properties hold for synthesized maps") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 40; ++i) {
    auto& pool = gen::stalk_pool();
    auto A = pool[rng() % pool.size()];
    auto B = pool[rng() % pool.size()];
    auto f = gen::random_connection(A, B, rng);
    // upper.lower expands, lower.upper contracts
    for (Elem x = 0; x < A->size(); ++x)
      CHECK(A->leq(x, f.upper[f.lower[x]]));
    for (Elem y = 0; y < B->size(); ++y)
      CHECK(B->leq(f.lower[f.upper[y]], y));
    // lower preserves joins of random subsets, upper meets
    for (int s = 0; s < 10; ++s) {
      std::vector<Elem> xs;
      for (Elem x = 0; x < A->size(); ++x)
        if (rng() & 1) xs.push_back(x);
      std::vector<Elem> img;
      for (Elem x : xs) img.push_back(f.lower[x]);
      CHECK(f.lower[A->join_of(xs)] == B->join_of(img));
      std::vector<Elem> ys;
      for (Elem y = 0; y < B->size(); ++y)
        if (rng() & 1) ys.push_back(y);
      std::vector<Elem> pre;
      for (Elem y : ys) pre.push_back(f.upper[y]);
      CHECK(f.upper[B->meet_of(ys)] == A->meet_of(pre));
    }
  }
}

TEST_CASE("biproduct structure maps") {
  auto P2 = FiniteLattice::powerset(2);
  auto C3 = FiniteLattice::chain(3);
  auto prod = FiniteLattice::product({P2, C3});
  auto p = product_projection(prod, 0);
  auto q = product_projection(prod, 1);
  auto i = product_injection(prod, 0);
  auto j = product_injection(prod, 1);

  CHECK_FALSE(verify(p).has_value());
  CHECK_FALSE(verify(q).has_value());
  CHECK_FALSE(verify(i).has_value());
  CHECK_FALSE(verify(j).has_value());

  auto pi = compose(i, p);
  auto qj = compose(j, q);
  auto idP = identity_connection(P2);
  auto idC = identity_connection(C3);
  CHECK(pi.lower == idP.lower);
  CHECK(qj.lower == idC.lower);

  auto pj = compose(j, p);
  auto qi = compose(i, q);
  auto zPC = zero_connection(C3, P2);
  auto zCP = zero_connection(P2, C3);
  CHECK(pj.lower == zPC.lower);
  CHECK(pj.upper == zPC.upper);
  CHECK(qi.lower == zCP.lower);
  CHECK(qi.upper == zCP.upper);
}
