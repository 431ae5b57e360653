#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tsheaf/sheaf.hpp"

namespace tsheaf {

/// Degree-k Tarski Laplacian: at each k-cell, the meet over cobounding
/// (k+1)-cells of the upper restriction applied to the meet of the lower
/// restrictions of all facet values. Empty meets resolve to the stalk top,
/// so in top degree the Laplacian is constantly the top cochain.
Cochain tarski_laplacian(const LatticeSheaf& sheaf, int k, const Cochain& x);

/// One step of the harmonic flow: x meet L(x). Never increases x.
Cochain harmonic_step(const LatticeSheaf& sheaf, int k, const Cochain& x);

struct FlowResult {
  Cochain final;
  /// Number of strictly decreasing steps; 0 when the input was already
  /// fixed. The implementation performs steps + 1 applications, which is
  /// bounded by the sum of the stalk heights plus one.
  std::size_t steps = 0;
  bool converged = false;
  std::vector<Cochain> trajectory;  // recorded on request; starts at x
};

/// Sum of stalk heights over the k-cells, plus one: the naive bound on the
/// number of Laplacian applications any orbit needs.
std::size_t default_step_bound(const LatticeSheaf& sheaf, int k);

/// Iterates harmonic_step to its fixed point. `max_apps` caps Laplacian
/// applications (defaults to the height bound); exceeding it throws
/// StepBoundExceeded, which cannot happen for finite stalks within the
/// default.
FlowResult harmonic_flow(const LatticeSheaf& sheaf, int k, Cochain x,
                         std::optional<std::size_t> max_apps = std::nullopt,
                         bool record_trajectory = false);

/// Membership in Post(L_k) = Fix(id ^ L_k): L_k(x) >= x.
bool in_tarski_cohomology(const LatticeSheaf& sheaf, int k, const Cochain& x);

enum class FixMode { Enumerate, Summary };

enum class FixKind { TarskiPost, HodgeUpPost, HodgeDownPre };

/// A set of (pre/post) fixed points. Complete enumerations carry members;
/// summaries carry the extremal elements only.
struct FixedPointSet {
  FixKind kind = FixKind::TarskiPost;
  int degree = 0;
  bool complete = false;
  std::vector<Cochain> members;  // populated when complete
  Cochain max;                   // greatest member
  Cochain min;                   // least member
};

FixedPointSet tarski_cohomology(const LatticeSheaf& sheaf, int k, FixMode mode,
                                std::uint64_t limit = kDefaultEnumLimit);

/// Coordinatewise join of fixed points, itself a fixed point. Inputs are
/// checked for membership in Post(L_k); the empty join is the bottom
/// cochain.
Cochain section_join(const LatticeSheaf& sheaf, int k,
                     std::span<const Cochain> xs);

/// Greatest fixed point below the coordinatewise meet, computed by flowing
/// from the meet. The empty meet flows from the top cochain and yields the
/// maximum fixed point.
Cochain section_meet(const LatticeSheaf& sheaf, int k,
                     std::span<const Cochain> xs);

}  // namespace tsheaf
