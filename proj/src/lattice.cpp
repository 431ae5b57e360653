#include "tsheaf/lattice.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace tsheaf {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t m) { return (m + kWordBits - 1) / kWordBits; }

bool test_bit(const std::uint64_t* row, std::size_t i) {
  return (row[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void set_bit(std::uint64_t* row, std::size_t i) {
  row[i / kWordBits] |= std::uint64_t(1) << (i % kWordBits);
}

std::size_t row_popcount(const std::uint64_t* row, std::size_t words) {
  std::size_t n = 0;
  for (std::size_t w = 0; w < words; ++w) n += std::popcount(row[w]);
  return n;
}

// a_row & b_row subset of c_row?
bool and_subset_of(const std::uint64_t* a, const std::uint64_t* b,
                   const std::uint64_t* c, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w)
    if ((a[w] & b[w] & ~c[w]) != 0) return false;
  return true;
}

std::string default_label(std::size_t i) { return std::to_string(i); }

}  // namespace

void FiniteLattice::require_tables(const char* op) const {
  if (!has_tables())
    throw SizeLimitExceeded(std::string(op) +
                            " requires a table-backed lattice; this product of " +
                            std::to_string(size_) +
                            " elements is evaluated lazily");
}

bool FiniteLattice::leq(Elem a, Elem b) const {
  if (has_tables())
    return test_bit(tables_.up.data() + std::size_t(a) * tables_.words, b);
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = *factors_[i];
    Elem ca = Elem((a / strides_[i]) % f.size());
    Elem cb = Elem((b / strides_[i]) % f.size());
    if (!f.leq(ca, cb)) return false;
  }
  return true;
}

Elem FiniteLattice::meet(Elem a, Elem b) const {
  if (has_tables()) return tables_.meet[std::size_t(a) * size_ + b];
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = *factors_[i];
    Elem ca = Elem((a / strides_[i]) % f.size());
    Elem cb = Elem((b / strides_[i]) % f.size());
    out += std::uint64_t(f.meet(ca, cb)) * strides_[i];
  }
  return Elem(out);
}

Elem FiniteLattice::join(Elem a, Elem b) const {
  if (has_tables()) return tables_.join[std::size_t(a) * size_ + b];
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = *factors_[i];
    Elem ca = Elem((a / strides_[i]) % f.size());
    Elem cb = Elem((b / strides_[i]) % f.size());
    out += std::uint64_t(f.join(ca, cb)) * strides_[i];
  }
  return Elem(out);
}

Elem FiniteLattice::meet_of(std::span<const Elem> xs) const {
  Elem acc = top_;
  for (Elem x : xs) acc = meet(acc, x);
  return acc;
}

Elem FiniteLattice::join_of(std::span<const Elem> xs) const {
  Elem acc = bottom_;
  for (Elem x : xs) acc = join(acc, x);
  return acc;
}

std::size_t FiniteLattice::height() const { return height_; }

const std::vector<std::pair<Elem, Elem>>& FiniteLattice::covers() const {
  require_tables("covers");
  return covers_;
}

std::uint32_t FiniteLattice::height_from_bottom(Elem x) const {
  require_tables("height_from_bottom");
  return height_from_bottom_[x];
}

const std::string& FiniteLattice::label(Elem x) const {
  require_tables("label");
  return labels_[x];
}

std::vector<Elem> FiniteLattice::decode(Elem x) const {
  if (!is_product()) throw ValidationError("decode: not a product lattice");
  std::vector<Elem> coords(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i)
    coords[i] = Elem((x / strides_[i]) % factors_[i]->size());
  return coords;
}

Elem FiniteLattice::encode(std::span<const Elem> coords) const {
  if (!is_product()) throw ValidationError("encode: not a product lattice");
  if (coords.size() != factors_.size())
    throw ValidationError("encode: wrong coordinate count");
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    out += std::uint64_t(coords[i]) * strides_[i];
  return Elem(out);
}

// Builds tables, covers, heights and bounds from a validated order relation
// given as packed up-rows.
LatticePtr FiniteLattice::finish_from_order(std::size_t m,
                                            std::vector<std::uint64_t> up_bits,
                                            std::size_t words,
                                            std::vector<std::string> labels) {
  auto lat = std::shared_ptr<FiniteLattice>(new FiniteLattice());
  lat->size_ = m;
  lat->tables_.words = words;
  lat->tables_.up = std::move(up_bits);
  const auto* up = lat->tables_.up.data();

  lat->tables_.down.assign(m * words, 0);
  auto* down = lat->tables_.down.data();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (test_bit(up + a * words, b)) set_bit(down + b * words, a);

  // linear extension: descending up-set size puts smaller elements first
  std::vector<Elem> lin(m);
  std::iota(lin.begin(), lin.end(), Elem(0));
  std::vector<std::size_t> upcount(m);
  for (std::size_t a = 0; a < m; ++a)
    upcount[a] = row_popcount(up + a * words, words);
  std::stable_sort(lin.begin(), lin.end(), [&](Elem a, Elem b) {
    return upcount[a] > upcount[b];
  });
  std::vector<std::uint32_t> pos(m);
  for (std::size_t i = 0; i < m; ++i) pos[lin[i]] = std::uint32_t(i);

  lat->tables_.meet.assign(m * m, 0);
  lat->tables_.join.assign(m * m, 0);
  std::vector<std::uint64_t> scratch(words);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a; b < m; ++b) {
      // glb: greatest element of down(a) & down(b)
      Elem glb = 0;
      bool found = false;
      std::uint32_t best = 0;
      for (std::size_t w = 0; w < words; ++w)
        scratch[w] = down[a * words + w] & down[b * words + w];
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t bits = scratch[w];
        while (bits) {
          std::size_t c = w * kWordBits + std::size_t(std::countr_zero(bits));
          bits &= bits - 1;
          if (!found || pos[c] > best) {
            glb = Elem(c);
            best = pos[c];
            found = true;
          }
        }
      }
      if (!found || !and_subset_of(down + a * words, down + b * words,
                                   down + std::size_t(glb) * words, words))
        throw NotALattice(Elem(a), Elem(b),
                          "elements " + std::to_string(a) + " and " +
                              std::to_string(b) + " have no greatest lower bound");
      // lub: least element of up(a) & up(b)
      Elem lub = 0;
      found = false;
      for (std::size_t w = 0; w < words; ++w)
        scratch[w] = up[a * words + w] & up[b * words + w];
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t bits = scratch[w];
        while (bits) {
          std::size_t c = w * kWordBits + std::size_t(std::countr_zero(bits));
          bits &= bits - 1;
          if (!found || pos[c] < best) {
            lub = Elem(c);
            best = pos[c];
            found = true;
          }
        }
      }
      if (!found || !and_subset_of(up + a * words, up + b * words,
                                   up + std::size_t(lub) * words, words))
        throw NotALattice(Elem(a), Elem(b),
                          "elements " + std::to_string(a) + " and " +
                              std::to_string(b) + " have no least upper bound");
      lat->tables_.meet[a * m + b] = glb;
      lat->tables_.meet[b * m + a] = glb;
      lat->tables_.join[a * m + b] = lub;
      lat->tables_.join[b * m + a] = lub;
    }
  }

  lat->bottom_ = lin[0];
  lat->top_ = lin[m - 1];
  // bounds really are global: lin[0] has the full up-set iff it is below all
  if (upcount[lat->bottom_] != m || row_popcount(down + std::size_t(lat->top_) * words, words) != m)
    throw NotALattice(0, 0, "universe has no global bottom or top");

  // covers = transitive reduction
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b || !test_bit(up + a * words, b)) continue;
      bool has_mid = false;
      for (std::size_t w = 0; w < words && !has_mid; ++w) {
        std::uint64_t mid = up[a * words + w] & down[b * words + w];
        if (w == a / kWordBits) mid &= ~(std::uint64_t(1) << (a % kWordBits));
        if (w == b / kWordBits) mid &= ~(std::uint64_t(1) << (b % kWordBits));
        has_mid = mid != 0;
      }
      if (!has_mid) lat->covers_.emplace_back(Elem(a), Elem(b));
    }
  }

  lat->height_from_bottom_.assign(m, 0);
  std::vector<std::vector<Elem>> upper_covers(m);
  for (auto [x, y] : lat->covers_) upper_covers[x].push_back(y);
  for (Elem x : lin)
    for (Elem y : upper_covers[x])
      lat->height_from_bottom_[y] = std::max(lat->height_from_bottom_[y],
                                             lat->height_from_bottom_[x] + 1);
  lat->height_ = m == 0 ? 0 : lat->height_from_bottom_[lat->top_];

  if (labels.empty()) {
    labels.resize(m);
    for (std::size_t i = 0; i < m; ++i) labels[i] = default_label(i);
  } else if (labels.size() != m) {
    throw ValidationError("label count does not match universe size");
  }
  lat->labels_ = std::move(labels);
  return lat;
}

LatticePtr FiniteLattice::from_covers(
    std::size_t count, const std::vector<std::pair<Elem, Elem>>& covers,
    std::vector<std::string> labels, const LatticeLimits& limits) {
  if (count == 0) throw ValidationError("lattice universe must be non-empty");
  if (count > limits.table_cap)
    throw SizeLimitExceeded("universe of " + std::to_string(count) +
                            " elements exceeds the table cap of " +
                            std::to_string(limits.table_cap));
  std::vector<std::vector<Elem>> succ(count);
  std::vector<std::size_t> indeg(count, 0);
  for (auto [x, y] : covers) {
    if (x >= count || y >= count)
      throw ValidationError("cover pair references element outside universe");
    if (x == y) throw CyclicCovers("cover pair (" + std::to_string(x) + ", " +
                                   std::to_string(x) + ") is reflexive");
    succ[x].push_back(y);
    ++indeg[y];
  }

  // Kahn topological order; rejects cycles
  std::vector<Elem> order;
  order.reserve(count);
  std::vector<Elem> queue;
  for (std::size_t i = 0; i < count; ++i)
    if (indeg[i] == 0) queue.push_back(Elem(i));
  while (!queue.empty()) {
    Elem x = queue.back();
    queue.pop_back();
    order.push_back(x);
    for (Elem y : succ[x])
      if (--indeg[y] == 0) queue.push_back(y);
  }
  if (order.size() != count)
    throw CyclicCovers("cover relation contains a cycle");

  // reflexive-transitive closure, processing sinks first
  std::size_t words = word_count(count);
  std::vector<std::uint64_t> up(count * words, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Elem x = *it;
    set_bit(up.data() + std::size_t(x) * words, x);
    for (Elem y : succ[x])
      for (std::size_t w = 0; w < words; ++w)
        up[std::size_t(x) * words + w] |= up[std::size_t(y) * words + w];
  }
  return finish_from_order(count, std::move(up), words, std::move(labels));
}

LatticePtr FiniteLattice::from_relation_impl(std::size_t count,
                                             const std::vector<bool>& rel,
                                             std::vector<std::string> labels,
                                             const LatticeLimits& limits) {
  if (count == 0) throw ValidationError("lattice universe must be non-empty");
  if (count > limits.table_cap)
    throw SizeLimitExceeded("universe of " + std::to_string(count) +
                            " elements exceeds the table cap of " +
                            std::to_string(limits.table_cap));
  std::size_t words = word_count(count);
  std::vector<std::uint64_t> up(count * words, 0);
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b)
      if (rel[a * count + b]) set_bit(up.data() + a * words, b);

  for (std::size_t a = 0; a < count; ++a) {
    if (!test_bit(up.data() + a * words, a))
      throw ValidationError("order relation is not reflexive at " +
                            std::to_string(a));
    for (std::size_t b = 0; b < count; ++b) {
      if (a != b && test_bit(up.data() + a * words, b)) {
        if (test_bit(up.data() + b * words, a))
          throw ValidationError("order relation is not antisymmetric on (" +
                                std::to_string(a) + ", " + std::to_string(b) + ")");
        // transitivity: up(b) must lie inside up(a)
        for (std::size_t w = 0; w < words; ++w)
          if (up[b * words + w] & ~up[a * words + w])
            throw ValidationError("order relation is not transitive at (" +
                                  std::to_string(a) + ", " + std::to_string(b) + ")");
      }
    }
  }
  return finish_from_order(count, std::move(up), words, std::move(labels));
}

LatticePtr FiniteLattice::chain(std::size_t n) {
  if (n == 0) throw ValidationError("chain requires at least one element");
  std::vector<std::pair<Elem, Elem>> covers;
  covers.reserve(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i)
    covers.emplace_back(Elem(i), Elem(i + 1));
  return from_covers(n, covers);
}

LatticePtr FiniteLattice::powerset(std::size_t atoms) {
  if (atoms > 12)
    throw SizeLimitExceeded("powerset of " + std::to_string(atoms) +
                            " atoms exceeds the table cap");
  std::size_t m = std::size_t(1) << atoms;
  std::size_t words = word_count(m);
  std::vector<std::uint64_t> up(m * words, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if ((a & ~b) == 0) set_bit(up.data() + a * words, b);
  std::vector<std::string> labels(m);
  for (std::size_t a = 0; a < m; ++a) {
    std::string s = "{";
    for (std::size_t i = 0; i < atoms; ++i)
      if (a >> i & 1) {
        if (s.size() > 1) s += ",";
        s += char('a' + i);
      }
    labels[a] = s + "}";
  }
  return finish_from_order(m, std::move(up), words, std::move(labels));
}

LatticePtr FiniteLattice::diamond() {
  return from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}},
                     {"0", "a", "b", "1"});
}

LatticePtr FiniteLattice::pentagon() {
  return from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}},
                     {"0", "a", "c", "b", "1"});
}

LatticePtr FiniteLattice::m3() {
  return from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}},
                     {"0", "a", "b", "c", "1"});
}

LatticePtr FiniteLattice::product(std::vector<LatticePtr> factors,
                                  const LatticeLimits& limits) {
  if (factors.empty()) throw ValidationError("product of no factors");
  std::uint64_t total = 1;
  for (const auto& f : factors) {
    if (!f) throw ValidationError("null product factor");
    if (f->size() == 0 || total > limits.product_cap / f->size())
      throw SizeLimitExceeded("product index space exceeds " +
                              std::to_string(limits.product_cap));
    total *= f->size();
  }
  std::vector<std::uint64_t> strides(factors.size());
  std::uint64_t s = 1;
  for (std::size_t i = factors.size(); i-- > 0;) {
    strides[i] = s;
    s *= factors[i]->size();
  }

  if (total <= limits.table_cap) {
    std::size_t m = std::size_t(total);
    std::size_t k = factors.size();
    std::vector<std::vector<Elem>> coords(m, std::vector<Elem>(k));
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t i = 0; i < k; ++i)
        coords[x][i] = Elem((x / strides[i]) % factors[i]->size());

    std::size_t words = word_count(m);
    std::vector<std::uint64_t> up(m * words, 0);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        bool le = true;
        for (std::size_t i = 0; i < k && le; ++i)
          le = factors[i]->leq(coords[a][i], coords[b][i]);
        if (le) set_bit(up.data() + a * words, b);
      }
    std::vector<std::string> labels(m);
    for (std::size_t x = 0; x < m; ++x) {
      std::string s2 = "(";
      for (std::size_t i = 0; i < k; ++i) {
        if (i) s2 += ",";
        s2 += factors[i]->label(coords[x][i]);
      }
      labels[x] = s2 + ")";
    }
    auto lat = finish_from_order(m, std::move(up), words, std::move(labels));
    // retain provenance so projections/injections can address coordinates
    auto* mut = const_cast<FiniteLattice*>(lat.get());
    mut->factors_ = std::move(factors);
    mut->strides_ = std::move(strides);
    return lat;
  }

  auto lat = std::shared_ptr<FiniteLattice>(new FiniteLattice());
  lat->size_ = total;
  lat->factors_ = std::move(factors);
  lat->strides_ = std::move(strides);
  std::uint64_t bot = 0, top = 0;
  std::size_t h = 0;
  for (std::size_t i = 0; i < lat->factors_.size(); ++i) {
    bot += std::uint64_t(lat->factors_[i]->bottom()) * lat->strides_[i];
    top += std::uint64_t(lat->factors_[i]->top()) * lat->strides_[i];
    h += lat->factors_[i]->height();
  }
  lat->bottom_ = Elem(bot);
  lat->top_ = Elem(top);
  lat->height_ = h;
  return lat;
}

// -- Interval ----------------------------------------------------------------

std::vector<Elem> Interval::elements() const {
  lattice->covers();  // force table-backed
  std::vector<Elem> out;
  for (Elem x = 0; x < lattice->size(); ++x)
    if (contains(x)) out.push_back(x);
  return out;
}

std::uint64_t Interval::size() const {
  std::uint64_t n = 0;
  for (Elem x = 0; x < lattice->size(); ++x)
    if (contains(x)) ++n;
  return n;
}

std::size_t Interval::height() const {
  // an interval of a lattice inherits its covers from the ambient lattice,
  // so the longest chain is a longest path in the restricted cover DAG
  auto members = elements();
  std::vector<Elem> by_rank = members;
  std::sort(by_rank.begin(), by_rank.end(), [&](Elem a, Elem b) {
    return lattice->height_from_bottom(a) < lattice->height_from_bottom(b);
  });
  std::vector<std::uint32_t> h(lattice->size(), 0);
  std::vector<bool> in(lattice->size(), false);
  for (Elem x : members) in[x] = true;
  std::vector<std::vector<Elem>> ups(lattice->size());
  for (auto [x, y] : lattice->covers())
    if (in[x] && in[y]) ups[x].push_back(y);
  std::size_t best = 0;
  for (Elem x : by_rank)
    for (Elem y : ups[x]) {
      h[y] = std::max(h[y], h[x] + 1);
      best = std::max<std::size_t>(best, h[y]);
    }
  return best;
}

Interval downset_of(LatticePtr lattice, Elem x) {
  return Interval{lattice, lattice->bottom(), x};
}

Interval upset_of(LatticePtr lattice, Elem x) {
  return Interval{lattice, x, lattice->top()};
}

std::optional<std::size_t> distance(const LatticePtr& lattice, Elem x, Elem y) {
  if (!lattice->leq(x, y)) return std::nullopt;
  return Interval{lattice, x, y}.height();
}

// -- structure ---------------------------------------------------------------

std::vector<Elem> join_irreducibles(const FiniteLattice& lattice) {
  std::vector<std::size_t> lower(lattice.size(), 0);
  for (auto [x, y] : lattice.covers()) ++lower[y];
  std::vector<Elem> out;
  for (Elem x = 0; x < lattice.size(); ++x)
    if (x != lattice.bottom() && lower[x] == 1) out.push_back(x);
  return out;
}

std::vector<Elem> meet_irreducibles(const FiniteLattice& lattice) {
  std::vector<std::size_t> upper(lattice.size(), 0);
  for (auto [x, y] : lattice.covers()) ++upper[x];
  std::vector<Elem> out;
  for (Elem x = 0; x < lattice.size(); ++x)
    if (x != lattice.top() && upper[x] == 1) out.push_back(x);
  return out;
}

StructureReport structure_report(const FiniteLattice& lattice) {
  lattice.covers();
  StructureReport r;
  std::size_t m = std::size_t(lattice.size());
  r.height = lattice.height();

  r.graded = true;
  for (auto [x, y] : lattice.covers())
    if (lattice.height_from_bottom(y) != lattice.height_from_bottom(x) + 1) {
      r.graded = false;
      break;
    }
  if (r.graded) {
    r.ranking.resize(m);
    for (Elem x = 0; x < m; ++x) r.ranking[x] = lattice.height_from_bottom(x);
  }

  r.modular = true;
  for (Elem x = 0; x < m && r.modular; ++x)
    for (Elem y = 0; y < m && r.modular; ++y) {
      if (!lattice.leq(x, y)) continue;
      for (Elem z = 0; z < m; ++z)
        if (lattice.join(x, lattice.meet(z, y)) !=
            lattice.meet(lattice.join(x, z), y)) {
          r.modular = false;
          break;
        }
    }

  r.distributive = true;
  for (Elem x = 0; x < m && r.distributive; ++x)
    for (Elem y = 0; y < m && r.distributive; ++y)
      for (Elem z = 0; z < m; ++z)
        if (lattice.meet(x, lattice.join(y, z)) !=
            lattice.join(lattice.meet(x, y), lattice.meet(x, z))) {
          r.distributive = false;
          break;
        }

  r.join_irreducibles = join_irreducibles(lattice);
  r.meet_irreducibles = meet_irreducibles(lattice);
  return r;
}

std::string hasse_dot(const FiniteLattice& lattice, std::string_view name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=box];\n";
  std::size_t m = std::size_t(lattice.size());
  std::vector<std::vector<Elem>> by_rank(lattice.height() + 1);
  for (Elem x = 0; x < m; ++x)
    by_rank[lattice.height_from_bottom(x)].push_back(x);
  for (std::size_t rk = 0; rk < by_rank.size(); ++rk) {
    if (by_rank[rk].empty()) continue;
    os << "  { rank=same;";
    for (Elem x : by_rank[rk]) os << " n" << x << ";";
    os << " }\n";
  }
  for (Elem x = 0; x < m; ++x)
    os << "  n" << x << " [label=\"" << lattice.label(x) << "\"];\n";
  for (auto [x, y] : lattice.covers())
    os << "  n" << x << " -> n" << y << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace tsheaf
