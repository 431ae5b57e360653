#include "tsheaf/complex.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tsheaf {

std::shared_ptr<const CellComplex> CellComplex::build(
    const std::vector<CellSpec>& cells, const std::vector<FaceRel>& faces,
    bool validate_incidence) {
  auto cx = std::shared_ptr<CellComplex>(new CellComplex());

  cx->cells_.reserve(cells.size());
  for (const auto& c : cells) {
    if (c.dim < 0) throw DimMismatch("cell " + c.id + " has negative dimension");
    cx->cells_.push_back(Cell{c.id, c.dim});
  }
  std::sort(cx->cells_.begin(), cx->cells_.end(),
            [](const Cell& a, const Cell& b) {
              return a.dim != b.dim ? a.dim < b.dim : a.id < b.id;
            });
  for (std::size_t i = 0; i < cx->cells_.size(); ++i) {
    if (!cx->index_.emplace(cx->cells_[i].id, i).second)
      throw ValidationError("duplicate cell id " + cx->cells_[i].id);
    cx->dim_ = std::max(cx->dim_, cx->cells_[i].dim);
  }

  cx->skeleta_.resize(std::size_t(cx->dim_ + 1));
  cx->skeleton_pos_.resize(cx->cells_.size());
  for (std::size_t i = 0; i < cx->cells_.size(); ++i) {
    auto& layer = cx->skeleta_[std::size_t(cx->cells_[i].dim)];
    cx->skeleton_pos_[i] = layer.size();
    layer.push_back(i);
  }

  cx->boundary_.resize(cx->cells_.size());
  cx->coboundary_.resize(cx->cells_.size());
  std::map<std::pair<std::size_t, std::size_t>, int> seen;
  for (const auto& f : faces) {
    auto fi = cx->index_.find(f.face);
    auto ci = cx->index_.find(f.cell);
    if (fi == cx->index_.end()) throw UnknownCell("unknown face id " + f.face);
    if (ci == cx->index_.end()) throw UnknownCell("unknown cell id " + f.cell);
    std::size_t a = fi->second, b = ci->second;
    if (cx->cells_[b].dim != cx->cells_[a].dim + 1)
      throw DimMismatch("face relation " + f.face + " < " + f.cell +
                        " does not step up one dimension");
    if (!seen.emplace(std::make_pair(a, b), f.incidence).second)
      throw ValidationError("duplicate face relation " + f.face + " < " + f.cell);
    cx->boundary_[b].emplace_back(a, f.incidence);
    cx->coboundary_[a].emplace_back(b, f.incidence);
    cx->covering_.emplace_back(a, b);
  }
  for (auto& v : cx->boundary_) std::sort(v.begin(), v.end());
  for (auto& v : cx->coboundary_) std::sort(v.begin(), v.end());
  std::sort(cx->covering_.begin(), cx->covering_.end());

  if (validate_incidence) {
    for (std::size_t sigma = 0; sigma < cx->cells_.size(); ++sigma) {
      std::map<std::size_t, long long> acc;  // upsilon -> sum of products
      for (auto [tau, s1] : cx->coboundary_[sigma]) {
        if (s1 == 0)
          throw IncidenceViolation("missing incidence number on " +
                                   cx->cells_[sigma].id + " < " +
                                   cx->cells_[tau].id);
        for (auto [ups, s2] : cx->coboundary_[tau]) {
          if (s2 == 0)
            throw IncidenceViolation("missing incidence number on " +
                                     cx->cells_[tau].id + " < " +
                                     cx->cells_[ups].id);
          acc[ups] += (long long)(s1)*s2;
        }
      }
      for (auto [ups, sum] : acc)
        if (sum != 0)
          throw IncidenceViolation("incidence numbers between " +
                                   cx->cells_[sigma].id + " and " +
                                   cx->cells_[ups].id +
                                   " do not square to zero");
    }
    cx->validated_ = true;
  }
  return cx;
}

std::size_t CellComplex::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw UnknownCell("unknown cell id " + id);
  return it->second;
}

std::span<const std::size_t> CellComplex::skeleton(int k) const {
  static const std::vector<std::size_t> empty;
  if (k < 0 || k > dim_) return empty;
  return skeleta_[std::size_t(k)];
}

std::size_t CellComplex::skeleton_pos(std::size_t cell_idx) const {
  return skeleton_pos_[cell_idx];
}

std::span<const std::pair<std::size_t, int>> CellComplex::boundary(
    std::size_t idx) const {
  if (idx >= cells_.size()) throw UnknownCell("cell index out of range");
  return boundary_[idx];
}

std::span<const std::pair<std::size_t, int>> CellComplex::coboundary(
    std::size_t idx) const {
  if (idx >= cells_.size()) throw UnknownCell("cell index out of range");
  return coboundary_[idx];
}

std::size_t CellComplex::boundary_size(const std::string& id) const {
  return boundary_[index_of(id)].size();
}

int CellComplex::incidence(std::size_t face, std::size_t cell) const {
  for (auto [f, s] : boundary_[cell])
    if (f == face) return s;
  throw UnknownCell("no face relation between " + cells_[face].id + " and " +
                    cells_[cell].id);
}

bool CellComplex::face_leq(std::size_t a, std::size_t b) const {
  if (a == b) return true;
  for (auto [t, s] : coboundary_[a]) {
    (void)s;
    if (face_leq(t, b)) return true;
  }
  return false;
}

bool CellComplex::fully_signed() const {
  for (const auto& bd : boundary_)
    for (auto [f, s] : bd) {
      (void)f;
      if (s == 0) return false;
    }
  return true;
}

std::shared_ptr<const CellComplex> CellComplex::orient_graph(
    const CellComplex& complex) {
  if (complex.dimension() > 1)
    throw NotAGraph("orientation convention applies to complexes of dimension <= 1");
  std::vector<CellSpec> cells;
  for (std::size_t i = 0; i < complex.cell_count(); ++i)
    cells.push_back({complex.cell(i).id, complex.cell(i).dim});
  std::vector<FaceRel> faces;
  for (std::size_t e : complex.skeleton(1)) {
    auto bd = complex.boundary(e);
    if (bd.size() == 1)
      throw LoopEdge("edge " + complex.cell(e).id + " is a loop");
    if (bd.size() != 2)
      throw NotAGraph("edge " + complex.cell(e).id + " covers " +
                      std::to_string(bd.size()) + " vertices");
    std::size_t u = bd[0].first, v = bd[1].first;  // sorted: u < v
    faces.push_back({complex.cell(u).id, complex.cell(e).id, -1});
    faces.push_back({complex.cell(v).id, complex.cell(e).id, +1});
  }
  return build(cells, faces, false);
}

std::string CellComplex::to_dot(std::string_view name) const {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=ellipse];\n";
  for (int k = 0; k <= dim_; ++k) {
    os << "  { rank=same;";
    for (std::size_t i : skeleton(k)) os << " c" << i << ";";
    os << " }\n";
  }
  for (std::size_t i = 0; i < cells_.size(); ++i)
    os << "  c" << i << " [label=\"" << cells_[i].id << "\"];\n";
  for (auto [a, b] : covering_) {
    os << "  c" << a << " -> c" << b;
    int s = incidence(a, b);
    if (s != 0) os << " [label=\"" << (s > 0 ? "+" : "-") << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace tsheaf
