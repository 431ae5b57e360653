#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "tsheaf/complex.hpp"
#include "tsheaf/galois.hpp"
#include "tsheaf/lattice.hpp"

namespace tsheaf {

constexpr std::uint64_t kDefaultEnumLimit = std::uint64_t(1) << 22;

/// One lattice element per k-cell, indexed by skeleton(k) position.
struct Cochain {
  int degree = 0;
  std::vector<Elem> values;

  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.degree == b.degree && a.values == b.values;
  }
};

enum class CochainOrder { Equal, Less, Greater, Incomparable };

/// A cellular sheaf of finite lattices: a stalk per cell and a Galois
/// connection per covering face pair, functorial on the face poset.
/// Immutable after build; all cochain operations are pure.
class LatticeSheaf {
 public:
  /// Validates every lower map (join preservation), synthesizes all uppers,
  /// and checks path-independence on every length-2 chain of the face poset.
  static LatticeSheaf build(
      ComplexPtr complex, std::vector<LatticePtr> stalks,
      const std::map<std::pair<std::size_t, std::size_t>, std::vector<Elem>>&
          lower_maps);

  /// All stalks a fixed lattice, all restrictions the identity.
  static LatticeSheaf constant(ComplexPtr complex, const LatticePtr& stalk);

  const CellComplex& complex() const { return *complex_; }
  const ComplexPtr& complex_ptr() const { return complex_; }
  const LatticePtr& stalk(std::size_t cell_idx) const { return stalks_[cell_idx]; }
  const LatticePtr& stalk_at(int k, std::size_t pos) const {
    return stalks_[complex_->skeleton(k)[pos]];
  }
  const Connection& restriction(std::size_t face, std::size_t cell) const;
  const std::vector<Connection>& restrictions() const { return restr_; }

  // -- cochains ---------------------------------------------------------------

  std::size_t cells_in_degree(int k) const { return complex_->skeleton(k).size(); }
  Cochain top_cochain(int k) const;
  Cochain bottom_cochain(int k) const;
  /// |C^k| if it fits in 64 bits.
  std::optional<std::uint64_t> cochain_count(int k) const;

  Cochain cochain_meet(const Cochain& x, const Cochain& y) const;
  Cochain cochain_join(const Cochain& x, const Cochain& y) const;
  bool cochain_leq(const Cochain& x, const Cochain& y) const;
  CochainOrder cochain_order(const Cochain& x, const Cochain& y) const;

  /// Runs `fn` over all degree-k cochains in lexicographic order of their
  /// value tuples. Throws SizeLimitExceeded when |C^k| > limit.
  void for_each_cochain(int k, std::uint64_t limit,
                        const std::function<void(const Cochain&)>& fn) const;

  /// Degree-0 section test; on failure returns the violating edge index.
  std::optional<std::size_t> section_violation(const Cochain& x) const;
  bool is_section(const Cochain& x) const {
    return !section_violation(x).has_value();
  }

  /// All global sections by exhaustive enumeration, in lexicographic order.
  std::vector<Cochain> sections_bruteforce(
      std::uint64_t limit = kDefaultEnumLimit) const;

  void check_degree(int k, const Cochain& x, const char* who) const;

 private:
  LatticeSheaf() = default;

  ComplexPtr complex_;
  std::vector<LatticePtr> stalks_;
  std::vector<Connection> restr_;  // parallel to complex covering order
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> restr_index_;
};

}  // namespace tsheaf
