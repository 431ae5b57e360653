#pragma once

#include <optional>
#include <vector>

#include "tsheaf/lattice.hpp"

namespace tsheaf {

/// A Galois connection between two finite lattices, stored as dense
/// element-index arrays in both directions. `lower` preserves joins and
/// bottom, `upper` preserves meets and top, and the two are adjoint:
/// lower(x) <= y iff x <= upper(y).
///
/// Lattice identity is pointer identity; operations that require equal
/// endpoints compare the shared lattice objects, not their structure.
struct Connection {
  LatticePtr src;
  LatticePtr dst;
  std::vector<Elem> lower;  // indexed by src element
  std::vector<Elem> upper;  // indexed by dst element

  Elem apply_lower(Elem x) const { return lower[x]; }
  Elem apply_upper(Elem y) const { return upper[y]; }
};

/// Validates that `lower` preserves binary joins and bottom (exhaustively),
/// then synthesizes the upper adjoint via upper(y) = join{ x : lower(x) <= y }.
/// Throws NotJoinPreserving with a witness pair.
Connection synthesize_upper(LatticePtr src, LatticePtr dst,
                            std::vector<Elem> lower);

struct AdjunctionWitness {
  Elem x;
  Elem y;
};

/// Checks the adjunction law for all pairs; a witness means failure.
std::optional<AdjunctionWitness> verify(const Connection& c);

Connection identity_connection(LatticePtr lattice);

/// lower: everything to bottom; upper: everything to top.
Connection zero_connection(LatticePtr src, LatticePtr dst);

/// (g . f) with lower = g.lower . f.lower and upper = f.upper . g.upper.
Connection compose(const Connection& f, const Connection& g);

/// Pointwise join of lowers / meet of uppers; the semi-additive sum.
Connection sum(const Connection& f, const Connection& g);

/// Ker f = [0, upper(0)] in the source lattice.
Interval kernel(const Connection& f);
/// Cok f = [lower(1), 1] in the destination lattice.
Interval cokernel(const Connection& f);
/// Nim f = [0, lower(1)] in the destination lattice.
Interval normal_image(const Connection& f);

struct ExactnessReport {
  bool left_exact = false;   // upper(lower(x)) == x v upper(0) for all x
  bool right_exact = false;  // lower(upper(y)) == y ^ lower(1) for all y
};

ExactnessReport exactness(const Connection& f);

/// Biproduct structure maps of a materialized product lattice.
/// projection: lower picks the coordinate, upper pads with tops.
/// injection: lower pads with bottoms, upper picks the coordinate.
Connection product_projection(LatticePtr prod, std::size_t coord);
Connection product_injection(LatticePtr prod, std::size_t coord);

}  // namespace tsheaf
