#include "tsheaf/tarski.hpp"

namespace tsheaf {

Cochain tarski_laplacian(const LatticeSheaf& sheaf, int k, const Cochain& x) {
  sheaf.check_degree(k, x, "tarski_laplacian");
  const auto& cx = sheaf.complex();
  auto kcells = cx.skeleton(k);
  Cochain out{k, std::vector<Elem>(kcells.size())};
  for (std::size_t pos = 0; pos < kcells.size(); ++pos) {
    std::size_t sigma = kcells[pos];
    const auto& stalk = *sheaf.stalk(sigma);
    Elem acc = stalk.top();
    for (auto [tau, s1] : cx.coboundary(sigma)) {
      (void)s1;
      const auto& up = sheaf.restriction(sigma, tau);
      const auto& tau_stalk = *sheaf.stalk(tau);
      Elem inner = tau_stalk.top();
      for (auto [facet, s2] : cx.boundary(tau)) {
        (void)s2;
        const auto& low = sheaf.restriction(facet, tau);
        inner = tau_stalk.meet(inner,
                               low.lower[x.values[cx.skeleton_pos(facet)]]);
      }
      acc = stalk.meet(acc, up.upper[inner]);
    }
    out.values[pos] = acc;
  }
  return out;
}

Cochain harmonic_step(const LatticeSheaf& sheaf, int k, const Cochain& x) {
  return sheaf.cochain_meet(x, tarski_laplacian(sheaf, k, x));
}

std::size_t default_step_bound(const LatticeSheaf& sheaf, int k) {
  std::size_t bound = 1;
  for (std::size_t c : sheaf.complex().skeleton(k))
    bound += sheaf.stalk(c)->height();
  return bound;
}

FlowResult harmonic_flow(const LatticeSheaf& sheaf, int k, Cochain x,
                         std::optional<std::size_t> max_apps,
                         bool record_trajectory) {
  sheaf.check_degree(k, x, "harmonic_flow");
  std::size_t cap = max_apps.value_or(default_step_bound(sheaf, k));
  FlowResult r;
  if (record_trajectory) r.trajectory.push_back(x);
  std::size_t apps = 0;
  while (true) {
    if (apps == cap)
      throw StepBoundExceeded("harmonic flow did not stabilize within " +
                              std::to_string(cap) + " applications");
    Cochain next = harmonic_step(sheaf, k, x);
    ++apps;
    if (next == x) break;
    x = std::move(next);
    ++r.steps;
    if (record_trajectory) r.trajectory.push_back(x);
  }
  r.final = std::move(x);
  r.converged = true;
  return r;
}

bool in_tarski_cohomology(const LatticeSheaf& sheaf, int k, const Cochain& x) {
  return sheaf.cochain_leq(x, tarski_laplacian(sheaf, k, x));
}

FixedPointSet tarski_cohomology(const LatticeSheaf& sheaf, int k, FixMode mode,
                                std::uint64_t limit) {
  FixedPointSet fps;
  fps.kind = FixKind::TarskiPost;
  fps.degree = k;
  fps.min = sheaf.bottom_cochain(k);
  fps.max = harmonic_flow(sheaf, k, sheaf.top_cochain(k)).final;
  if (mode == FixMode::Enumerate) {
    sheaf.for_each_cochain(k, limit, [&](const Cochain& x) {
      if (in_tarski_cohomology(sheaf, k, x)) fps.members.push_back(x);
    });
    fps.complete = true;
  }
  return fps;
}

Cochain section_join(const LatticeSheaf& sheaf, int k,
                     std::span<const Cochain> xs) {
  Cochain acc = sheaf.bottom_cochain(k);
  for (const auto& x : xs) {
    if (!in_tarski_cohomology(sheaf, k, x))
      throw NotAFixedPoint("section_join: input is not a fixed point");
    acc = sheaf.cochain_join(acc, x);
  }
  return acc;
}

Cochain section_meet(const LatticeSheaf& sheaf, int k,
                     std::span<const Cochain> xs) {
  Cochain acc = sheaf.top_cochain(k);
  for (const auto& x : xs) {
    if (!in_tarski_cohomology(sheaf, k, x))
      throw NotAFixedPoint("section_meet: input is not a fixed point");
    acc = sheaf.cochain_meet(acc, x);
  }
  return harmonic_flow(sheaf, k, std::move(acc)).final;
}

}  // namespace tsheaf
