#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tsheaf/errors.hpp"

namespace tsheaf {

/// Dense element index into a lattice universe.
using Elem = std::uint32_t;

struct LatticeLimits {
  // largest universe for which O(m^2) meet/join tables are materialized
  std::uint64_t table_cap = 4096;
  // hard cap on the index space of a lazily evaluated product
  std::uint64_t product_cap = std::uint64_t(1) << 32;
};

class FiniteLattice;
using LatticePtr = std::shared_ptr<const FiniteLattice>;

/// A finite bounded lattice over the universe 0..size()-1.
///
/// Two representations share one interface: a table-backed form (full order
/// relation as packed bit rows plus m x m meet/join tables) and a lazy
/// product form that evaluates everything coordinatewise through its
/// factors. Stalk-sized lattices are always table-backed; only products
/// above the table cap are lazy. Instances are immutable after construction
/// and safe to share across threads.
class FiniteLattice {
 public:
  // -- constructors ---------------------------------------------------------

  /// Builds the lattice generated by an acyclic covering relation over
  /// `count` elements. The input pairs may contain transitively redundant
  /// edges; the stored cover set is the recomputed transitive reduction.
  /// Throws CyclicCovers or NotALattice(a, b).
  static LatticePtr from_covers(std::size_t count,
                                const std::vector<std::pair<Elem, Elem>>& covers,
                                std::vector<std::string> labels = {},
                                const LatticeLimits& limits = {});

  /// Builds a lattice from an explicit order predicate (verified to be
  /// reflexive, antisymmetric and transitive, then checked for glb/lub
  /// existence pairwise).
  template <typename Leq>
  static LatticePtr from_relation(std::size_t count, Leq&& leq,
                                  std::vector<std::string> labels = {},
                                  const LatticeLimits& limits = {}) {
    std::vector<bool> rel(count * count);
    for (std::size_t a = 0; a < count; ++a)
      for (std::size_t b = 0; b < count; ++b)
        rel[a * count + b] = leq(static_cast<Elem>(a), static_cast<Elem>(b));
    return from_relation_impl(count, rel, std::move(labels), limits);
  }

  /// Total order 0 < 1 < ... < n-1.
  static LatticePtr chain(std::size_t n);

  /// Subsets of `atoms` generators, ordered by inclusion; element index is
  /// the atom bitmask.
  static LatticePtr powerset(std::size_t atoms);

  /// The four-element boolean square {0, a, b, 1}.
  static LatticePtr diamond();

  /// N5: {0, a, c, b, 1} with 0 < a < c < 1 and 0 < b < 1. Not modular.
  static LatticePtr pentagon();

  /// M3: bottom, three incomparable atoms, top. Modular, not distributive.
  static LatticePtr m3();

  /// Product with coordinatewise order. Table-backed when the total size is
  /// within limits.table_cap, lazy otherwise. Throws SizeLimitExceeded past
  /// limits.product_cap.
  static LatticePtr product(std::vector<LatticePtr> factors,
                            const LatticeLimits& limits = {});

  // -- order and operations -------------------------------------------------

  std::uint64_t size() const noexcept { return size_; }
  bool leq(Elem a, Elem b) const;
  Elem meet(Elem a, Elem b) const;
  Elem join(Elem a, Elem b) const;
  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }

  /// Greatest lower bound of a set; the empty meet is top.
  Elem meet_of(std::span<const Elem> xs) const;
  /// Least upper bound of a set; the empty join is bottom.
  Elem join_of(std::span<const Elem> xs) const;

  /// Length of the longest chain. For lazy products this is the sum of the
  /// factor heights.
  std::size_t height() const;

  // -- structure (table-backed only) ---------------------------------------

  bool has_tables() const noexcept { return !tables_.meet.empty() || size_ == 0; }

  /// Transitive reduction of the order; pairs (x, y) with x covered by y.
  const std::vector<std::pair<Elem, Elem>>& covers() const;

  /// Longest chain from bottom up to x. Doubles as the canonical ranking
  /// when the lattice is graded.
  std::uint32_t height_from_bottom(Elem x) const;

  const std::string& label(Elem x) const;

  // -- product introspection -------------------------------------------------

  bool is_product() const noexcept { return !factors_.empty(); }
  const std::vector<LatticePtr>& factors() const noexcept { return factors_; }
  /// Decodes a product element into per-factor coordinates.
  std::vector<Elem> decode(Elem x) const;
  Elem encode(std::span<const Elem> coords) const;

 private:
  FiniteLattice() = default;
  static LatticePtr from_relation_impl(std::size_t count,
                                       const std::vector<bool>& rel,
                                       std::vector<std::string> labels,
                                       const LatticeLimits& limits);

  struct Tables {
    // packed bit rows; row a of `up` holds {b : a <= b}, row a of `down`
    // holds {b : b <= a}
    std::size_t words = 0;
    std::vector<std::uint64_t> up;
    std::vector<std::uint64_t> down;
    std::vector<Elem> meet;
    std::vector<Elem> join;
  };

  static LatticePtr finish_from_order(std::size_t m,
                                      std::vector<std::uint64_t> up_bits,
                                      std::size_t words,
                                      std::vector<std::string> labels);

  void require_tables(const char* op) const;

  std::uint64_t size_ = 0;
  Elem bottom_ = 0;
  Elem top_ = 0;
  Tables tables_;
  std::vector<std::pair<Elem, Elem>> covers_;
  std::vector<std::uint32_t> height_from_bottom_;
  std::size_t height_ = 0;
  std::vector<std::string> labels_;

  // product provenance; non-empty also for table-backed products
  std::vector<LatticePtr> factors_;
  std::vector<std::uint64_t> strides_;
};

/// Closed interval [lo, hi]; requires lo <= hi. A quasi-sublattice under the
/// induced order.
struct Interval {
  LatticePtr lattice;
  Elem lo = 0;
  Elem hi = 0;

  bool contains(Elem x) const { return lattice->leq(lo, x) && lattice->leq(x, hi); }
  std::vector<Elem> elements() const;
  std::uint64_t size() const;
  /// Longest chain within the interval (table-backed lattices only).
  std::size_t height() const;
};

Interval downset_of(LatticePtr lattice, Elem x);
Interval upset_of(LatticePtr lattice, Elem x);

/// Interval height d(x, y) = h([x, y]) for comparable pairs; nullopt when
/// x is not below y (the interval is empty and the distance undefined).
std::optional<std::size_t> distance(const LatticePtr& lattice, Elem x, Elem y);

struct StructureReport {
  bool graded = false;
  std::vector<std::uint32_t> ranking;  // valid when graded
  std::size_t height = 0;
  bool modular = false;
  bool distributive = false;
  std::vector<Elem> join_irreducibles;
  std::vector<Elem> meet_irreducibles;
};

/// Exhaustive structural classification (O(m^3) law checks).
StructureReport structure_report(const FiniteLattice& lattice);

/// Elements with exactly one lower cover (excluding bottom).
std::vector<Elem> join_irreducibles(const FiniteLattice& lattice);
/// Elements with exactly one upper cover (excluding top).
std::vector<Elem> meet_irreducibles(const FiniteLattice& lattice);

/// Hasse diagram in DOT format, covers as edges, bottom at rank 0.
std::string hasse_dot(const FiniteLattice& lattice,
                      std::string_view name = "lattice");

}  // namespace tsheaf
