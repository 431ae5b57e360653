#include "tsheaf/hodge.hpp"

namespace tsheaf {

Cochain pseudo_coboundary(const LatticeSheaf& sheaf, int k, const Cochain& x) {
  sheaf.check_degree(k, x, "pseudo_coboundary");
  const auto& cx = sheaf.complex();
  auto cells = cx.skeleton(k + 1);
  Cochain out{k + 1, std::vector<Elem>(cells.size())};
  for (std::size_t pos = 0; pos < cells.size(); ++pos) {
    std::size_t tau = cells[pos];
    const auto& stalk = *sheaf.stalk(tau);
    Elem acc = stalk.bottom();
    for (auto [sigma, s] : cx.boundary(tau)) {
      (void)s;
      const auto& r = sheaf.restriction(sigma, tau);
      acc = stalk.join(acc, r.lower[x.values[cx.skeleton_pos(sigma)]]);
    }
    out.values[pos] = acc;
  }
  return out;
}

Cochain pseudo_coboundary_upper(const LatticeSheaf& sheaf, int k,
                                const Cochain& y) {
  sheaf.check_degree(k + 1, y, "pseudo_coboundary_upper");
  const auto& cx = sheaf.complex();
  auto cells = cx.skeleton(k);
  Cochain out{k, std::vector<Elem>(cells.size())};
  for (std::size_t pos = 0; pos < cells.size(); ++pos) {
    std::size_t sigma = cells[pos];
    const auto& stalk = *sheaf.stalk(sigma);
    Elem acc = stalk.top();
    for (auto [tau, s] : cx.coboundary(sigma)) {
      (void)s;
      const auto& r = sheaf.restriction(sigma, tau);
      acc = stalk.meet(acc, r.upper[y.values[cx.skeleton_pos(tau)]]);
    }
    out.values[pos] = acc;
  }
  return out;
}

Cochain PseudoCoboundary::lower(const Cochain& x) const {
  return pseudo_coboundary(*sheaf, degree, x);
}

Cochain PseudoCoboundary::upper(const Cochain& y) const {
  return pseudo_coboundary_upper(*sheaf, degree, y);
}

Cochain up_laplacian(const LatticeSheaf& sheaf, int k, const Cochain& x) {
  sheaf.check_degree(k, x, "up_laplacian");
  const auto& cx = sheaf.complex();
  auto cells = cx.skeleton(k);
  Cochain out{k, std::vector<Elem>(cells.size())};
  for (std::size_t pos = 0; pos < cells.size(); ++pos) {
    std::size_t sigma = cells[pos];
    const auto& stalk = *sheaf.stalk(sigma);
    Elem acc = stalk.top();
    for (auto [tau, s1] : cx.coboundary(sigma)) {
      (void)s1;
      const auto& up = sheaf.restriction(sigma, tau);
      const auto& tau_stalk = *sheaf.stalk(tau);
      Elem inner = tau_stalk.bottom();
      for (auto [facet, s2] : cx.boundary(tau)) {
        (void)s2;
        const auto& low = sheaf.restriction(facet, tau);
        inner = tau_stalk.join(inner,
                               low.lower[x.values[cx.skeleton_pos(facet)]]);
      }
      acc = stalk.meet(acc, up.upper[inner]);
    }
    out.values[pos] = acc;
  }
  return out;
}

Cochain down_laplacian(const LatticeSheaf& sheaf, int k, const Cochain& x) {
  sheaf.check_degree(k, x, "down_laplacian");
  const auto& cx = sheaf.complex();
  auto cells = cx.skeleton(k);
  Cochain out{k, std::vector<Elem>(cells.size())};
  for (std::size_t pos = 0; pos < cells.size(); ++pos) {
    std::size_t sigma = cells[pos];
    const auto& stalk = *sheaf.stalk(sigma);
    Elem acc = stalk.bottom();
    for (auto [rho, s1] : cx.boundary(sigma)) {
      (void)s1;
      const auto& low = sheaf.restriction(rho, sigma);
      const auto& rho_stalk = *sheaf.stalk(rho);
      Elem inner = rho_stalk.top();
      for (auto [coface, s2] : cx.coboundary(rho)) {
        (void)s2;
        const auto& up = sheaf.restriction(rho, coface);
        inner = rho_stalk.meet(inner,
                               up.upper[x.values[cx.skeleton_pos(coface)]]);
      }
      acc = stalk.join(acc, low.lower[inner]);
    }
    out.values[pos] = acc;
  }
  return out;
}

bool in_hodge_up(const LatticeSheaf& sheaf, int k, const Cochain& x) {
  return sheaf.cochain_leq(x, up_laplacian(sheaf, k, x));
}

bool in_hodge_down(const LatticeSheaf& sheaf, int k, const Cochain& x) {
  return sheaf.cochain_leq(down_laplacian(sheaf, k, x), x);
}

namespace {

// monotone flows shared by the summaries: meet-flow descends to the greatest
// post-fixed point below x0, join-flow ascends to the least pre-fixed point
// above x0
template <typename Op>
Cochain meet_flow(const LatticeSheaf& sheaf, int k, Cochain x, Op&& op) {
  std::size_t cap = default_step_bound(sheaf, k);
  for (std::size_t i = 0; i < cap; ++i) {
    Cochain next = sheaf.cochain_meet(x, op(x));
    if (next == x) return x;
    x = std::move(next);
  }
  throw StepBoundExceeded("descending flow did not stabilize");
}

template <typename Op>
Cochain join_flow(const LatticeSheaf& sheaf, int k, Cochain x, Op&& op) {
  std::size_t cap = default_step_bound(sheaf, k);
  for (std::size_t i = 0; i < cap; ++i) {
    Cochain next = sheaf.cochain_join(x, op(x));
    if (next == x) return x;
    x = std::move(next);
  }
  throw StepBoundExceeded("ascending flow did not stabilize");
}

}  // namespace

FixedPointSet hodge_cohomology(const LatticeSheaf& sheaf, int k,
                               HodgeVariant which, FixMode mode,
                               std::uint64_t limit) {
  FixedPointSet fps;
  fps.degree = k;
  if (which == HodgeVariant::Upper) {
    fps.kind = FixKind::HodgeUpPost;
    auto op = [&](const Cochain& x) { return up_laplacian(sheaf, k, x); };
    fps.min = sheaf.bottom_cochain(k);
    fps.max = meet_flow(sheaf, k, sheaf.top_cochain(k), op);
    if (mode == FixMode::Enumerate) {
      sheaf.for_each_cochain(k, limit, [&](const Cochain& x) {
        if (in_hodge_up(sheaf, k, x)) fps.members.push_back(x);
      });
      fps.complete = true;
    }
  } else {
    fps.kind = FixKind::HodgeDownPre;
    auto op = [&](const Cochain& x) { return down_laplacian(sheaf, k, x); };
    fps.max = sheaf.top_cochain(k);
    fps.min = join_flow(sheaf, k, sheaf.bottom_cochain(k), op);
    if (mode == FixMode::Enumerate) {
      sheaf.for_each_cochain(k, limit, [&](const Cochain& x) {
        if (in_hodge_down(sheaf, k, x)) fps.members.push_back(x);
      });
      fps.complete = true;
    }
  }
  return fps;
}

CoboundarySquaredReport check_coboundary_squared(const LatticeSheaf& sheaf,
                                                 int k) {
  CoboundarySquaredReport rep;
  if (sheaf.complex().dimension() < k + 2) return rep;  // nothing to compose
  auto kcells = sheaf.complex().skeleton(k);
  Cochain zero2 = sheaf.bottom_cochain(k + 2);
  // the double coboundary preserves joins, so it vanishes everywhere iff it
  // vanishes on every join-generator (one irreducible in one coordinate)
  for (std::size_t pos = 0; pos < kcells.size(); ++pos) {
    auto ji = join_irreducibles(*sheaf.stalk(kcells[pos]));
    for (Elem gen : ji) {
      Cochain g = sheaf.bottom_cochain(k);
      g.values[pos] = gen;
      Cochain img = pseudo_coboundary(sheaf, k + 1,
                                      pseudo_coboundary(sheaf, k, g));
      if (!(img == zero2)) {
        rep.zero = false;
        rep.witness = std::move(g);
        rep.image = std::move(img);
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace tsheaf
