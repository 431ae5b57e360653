#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "tsheaf/errors.hpp"

namespace tsheaf {

struct CellSpec {
  std::string id;
  int dim = 0;
};

/// One face relation entry: `face` is covered by `cell`
/// (dim cell = dim face + 1). `incidence` is +1/-1, or 0 when unset.
struct FaceRel {
  std::string face;
  std::string cell;
  int incidence = 0;
};

/// A finite regular-style cell complex: cells with dimensions and a covering
/// face relation carrying optional signed incidence numbers. Cells are
/// indexed densely, ordered by (dimension, id); cochains downstream index
/// k-cells by their position in skeleton(k).
class CellComplex {
 public:
  struct Cell {
    std::string id;
    int dim;
  };

  /// Validates ids, dimensions and (optionally) that signed incidence
  /// numbers satisfy the square-zero condition over the integers.
  static std::shared_ptr<const CellComplex> build(
      const std::vector<CellSpec>& cells, const std::vector<FaceRel>& faces,
      bool validate_incidence = false);

  std::size_t cell_count() const { return cells_.size(); }
  const Cell& cell(std::size_t idx) const { return cells_[idx]; }
  std::size_t index_of(const std::string& id) const;
  int dimension() const { return dim_; }

  /// All k-cells in id-lexicographic order.
  std::span<const std::size_t> skeleton(int k) const;
  /// Position of a k-cell within skeleton(k).
  std::size_t skeleton_pos(std::size_t cell_idx) const;

  /// Faces one dimension below, with incidence numbers (0 when unset).
  std::span<const std::pair<std::size_t, int>> boundary(std::size_t idx) const;
  /// Cofaces one dimension above.
  std::span<const std::pair<std::size_t, int>> coboundary(std::size_t idx) const;

  std::size_t boundary_size(const std::string& id) const;

  /// All covering pairs (face, cell), in deterministic order.
  const std::vector<std::pair<std::size_t, std::size_t>>& covering() const {
    return covering_;
  }
  int incidence(std::size_t face, std::size_t cell) const;

  /// Face-poset comparability (reflexive-transitive closure of covering).
  bool face_leq(std::size_t a, std::size_t b) const;

  bool incidences_validated() const { return validated_; }
  bool fully_signed() const;

  /// Copy with graph orientation applied: for every edge over two distinct
  /// vertices the lower-indexed vertex gets -1 and the higher +1.
  /// Requires dimension <= 1; throws NotAGraph or LoopEdge.
  static std::shared_ptr<const CellComplex> orient_graph(
      const CellComplex& complex);

  std::string to_dot(std::string_view name = "complex") const;

 private:
  CellComplex() = default;

  std::vector<Cell> cells_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> skeleta_;
  std::vector<std::size_t> skeleton_pos_;
  std::vector<std::vector<std::pair<std::size_t, int>>> boundary_;
  std::vector<std::vector<std::pair<std::size_t, int>>> coboundary_;
  std::vector<std::pair<std::size_t, std::size_t>> covering_;
  int dim_ = -1;
  bool validated_ = false;
};

using ComplexPtr = std::shared_ptr<const CellComplex>;

}  // namespace tsheaf
