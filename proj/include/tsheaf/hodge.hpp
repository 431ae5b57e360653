#pragma once

#include <optional>

#include "tsheaf/tarski.hpp"

namespace tsheaf {

/// The pseudo-coboundary of a lattice sheaf: the sum over covering pairs of
/// restriction-after-projection connections, C^k -> C^{k+1}. Evaluated
/// coordinatewise; the product lattices are never materialized.
struct PseudoCoboundary {
  const LatticeSheaf* sheaf = nullptr;
  int degree = 0;

  /// (lower x)_tau = join over facets sigma of tau of lower(x_sigma);
  /// empty joins give the stalk bottom.
  Cochain lower(const Cochain& x) const;
  /// (upper y)_sigma = meet over cofaces tau of sigma of upper(y_tau);
  /// empty meets give the stalk top.
  Cochain upper(const Cochain& y) const;
};

Cochain pseudo_coboundary(const LatticeSheaf& sheaf, int k, const Cochain& x);
Cochain pseudo_coboundary_upper(const LatticeSheaf& sheaf, int k,
                                const Cochain& y);

/// Up-Laplacian: upper adjoint of the degree-k pseudo-coboundary composed
/// with its lower. Expanding by adjunction.
Cochain up_laplacian(const LatticeSheaf& sheaf, int k, const Cochain& x);

/// Down-Laplacian: lower of the degree-(k-1) pseudo-coboundary composed
/// with its upper. Contracting by adjunction; in degree 0 the empty join
/// makes it constantly the bottom cochain.
Cochain down_laplacian(const LatticeSheaf& sheaf, int k, const Cochain& x);

bool in_hodge_up(const LatticeSheaf& sheaf, int k, const Cochain& x);
bool in_hodge_down(const LatticeSheaf& sheaf, int k, const Cochain& x);

enum class HodgeVariant { Upper, Lower };

/// Upper: Post(L+). Lower: Pre(L-). Summaries report the extremal members
/// (computed by monotone flows, not by assuming triviality).
FixedPointSet hodge_cohomology(const LatticeSheaf& sheaf, int k,
                               HodgeVariant which, FixMode mode,
                               std::uint64_t limit = kDefaultEnumLimit);

struct CoboundarySquaredReport {
  bool zero = true;
  // a join-generator cochain whose double coboundary is not bottom, and its
  // image, when zero fails
  std::optional<Cochain> witness;
  std::optional<Cochain> image;
};

/// Decides whether lower(delta~_{k+1}) . lower(delta~_k) is constantly the
/// bottom cochain by evaluating it on all join-generators of C^k.
/// Vacuously zero when the complex has no cells in dimension k+2.
CoboundarySquaredReport check_coboundary_squared(const LatticeSheaf& sheaf,
                                                 int k);

}  // namespace tsheaf
