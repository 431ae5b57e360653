#include "doctest.h"
#include "tsheaf/complex.hpp"

using namespace tsheaf;

namespace {

ComplexPtr path3() {
  return CellComplex::build(
      {{"u", 0}, {"v", 0}, {"w", 0}, {"e1", 1}, {"e2", 1}},
      {{"u", "e1"}, {"v", "e1"}, {"v", "e2"}, {"w", "e2"}});
}

ComplexPtr circle() {
  return CellComplex::build({{"a", 0}, {"b", 0}, {"e1", 1}, {"e2", 1}},
                            {{"a", "e1"}, {"b", "e1"}, {"a", "e2"}, {"b", "e2"}});
}

// u,v,w; edges a=uv b=vw c=uw; one 2-cell T; signs chosen so that the
// composite incidence around each vertex cancels
ComplexPtr filled_triangle() {
  return CellComplex::build(
      {{"u", 0}, {"v", 0}, {"w", 0}, {"a", 1}, {"b", 1}, {"c", 1}, {"T", 2}},
      {{"u", "a", -1},
       {"v", "a", +1},
       {"v", "b", -1},
       {"w", "b", +1},
       {"u", "c", -1},
       {"w", "c", +1},
       {"a", "T", +1},
       {"b", "T", +1},
       {"c", "T", -1}},
      true);
}

}  // namespace

TEST_CASE("path graph boundary and coboundary") {
  auto cx = path3();
  auto e1 = cx->index_of("e1");
  auto v = cx->index_of("v");
  auto bd = cx->boundary(e1);
  REQUIRE(bd.size() == 2);
  CHECK(cx->cell(bd[0].first).id == "u");
  CHECK(cx->cell(bd[1].first).id == "v");
  auto cb = cx->coboundary(v);
  REQUIRE(cb.size() == 2);
  CHECK(cx->cell(cb[0].first).id == "e1");
  CHECK(cx->cell(cb[1].first).id == "e2");
  CHECK(cx->dimension() == 1);
  CHECK(cx->skeleton(0).size() == 3);
  CHECK(cx->skeleton(1).size() == 2);
  CHECK(cx->skeleton(2).empty());
}

TEST_CASE("circle is a valid 1-complex with parallel edges") {
  auto cx = circle();
  CHECK(cx->skeleton(0).size() == 2);
  CHECK(cx->skeleton(1).size() == 2);
  for (std::size_t e : cx->skeleton(1)) CHECK(cx->boundary(e).size() == 2);
}

TEST_CASE("boundary and coboundary edge cases") {
  auto cx = filled_triangle();
  // top cell has empty coboundary, vertices empty boundary
  CHECK(cx->coboundary(cx->index_of("T")).empty());
  CHECK(cx->boundary(cx->index_of("u")).empty());
  CHECK(cx->boundary(cx->index_of("T")).size() == 3);
  CHECK_THROWS_AS(cx->index_of("nope"), UnknownCell);
}

TEST_CASE("incidence validation") {
  SUBCASE("filled triangle passes") {
    auto cx = filled_triangle();
    CHECK(cx->incidences_validated());
    CHECK(cx->fully_signed());
  }
  SUBCASE("breaking one sign fails") {
    CHECK_THROWS_AS(
        CellComplex::build({{"u", 0},
                            {"v", 0},
                            {"w", 0},
                            {"a", 1},
                            {"b", 1},
                            {"c", 1},
                            {"T", 2}},
                           {{"u", "a", -1},
                            {"v", "a", +1},
                            {"v", "b", -1},
                            {"w", "b", +1},
                            {"u", "c", -1},
                            {"w", "c", +1},
                            {"a", "T", +1},
                            {"b", "T", +1},
                            {"c", "T", +1}},  // wrong sign on c < T
                           true),
        IncidenceViolation);
  }
  SUBCASE("missing signs fail only when validation is requested") {
    std::vector<CellSpec> cells = {{"u", 0}, {"v", 0}, {"e", 1}};
    std::vector<FaceRel> faces = {{"u", "e"}, {"v", "e"}};
    CHECK_NOTHROW(CellComplex::build(cells, faces, false));
  }
}

TEST_CASE("dimension bookkeeping is enforced") {
  CHECK_THROWS_AS(
      CellComplex::build({{"u", 0}, {"T", 2}}, {{"u", "T"}}), DimMismatch);
  CHECK_THROWS_AS(
      CellComplex::build({{"u", 0}, {"u", 1}}, {}), ValidationError);
  CHECK_THROWS_AS(
      CellComplex::build({{"u", 0}, {"e", 1}}, {{"x", "e"}}), UnknownCell);
}

TEST_CASE("graph orientation") {
  SUBCASE("edge gets -1 at the lower vertex and +1 at the higher") {
    auto cx = CellComplex::orient_graph(*path3());
    auto e1 = cx->index_of("e1");
    CHECK(cx->incidence(cx->index_of("u"), e1) == -1);
    CHECK(cx->incidence(cx->index_of("v"), e1) == +1);
    CHECK(cx->fully_signed());
  }
  SUBCASE("isolated vertices are untouched") {
    auto cx = CellComplex::orient_graph(
        *CellComplex::build({{"u", 0}, {"v", 0}, {"w", 0}, {"e", 1}},
                            {{"u", "e"}, {"v", "e"}}));
    CHECK(cx->cell_count() == 4);
    CHECK(cx->boundary(cx->index_of("w")).empty());
  }
  SUBCASE("circle orients both edges") {
    auto cx = CellComplex::orient_graph(*circle());
    for (std::size_t e : cx->skeleton(1)) {
      auto bd = cx->boundary(e);
      CHECK(bd[0].second == -1);
      CHECK(bd[1].second == +1);
    }
  }
  SUBCASE("loops and non-graphs are rejected") {
    auto loop = CellComplex::build({{"u", 0}, {"e", 1}}, {{"u", "e"}});
    CHECK_THROWS_AS(CellComplex::orient_graph(*loop), LoopEdge);
    CHECK_THROWS_AS(CellComplex::orient_graph(*filled_triangle()), NotAGraph);
  }
}

TEST_CASE("face poset and duality of boundary and coboundary") {
  auto cx = filled_triangle();
  for (std::size_t a = 0; a < cx->cell_count(); ++a)
    for (auto [b, s] : cx->coboundary(a)) {
      (void)s;
      bool found = false;
      for (auto [f, s2] : cx->boundary(b)) {
        (void)s2;
        if (f == a) found = true;
      }
      CHECK(found);
    }
  CHECK(cx->face_leq(cx->index_of("u"), cx->index_of("T")));
  CHECK_FALSE(cx->face_leq(cx->index_of("T"), cx->index_of("u")));
  CHECK(cx->face_leq(cx->index_of("v"), cx->index_of("v")));
}

TEST_CASE("complex dot export") {
  auto dot = path3()->to_dot("path");
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("e1") != std::string::npos);
}
