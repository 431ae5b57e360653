#include "tsheaf/sheaf.hpp"

#include <algorithm>

namespace tsheaf {

LatticeSheaf LatticeSheaf::build(
    ComplexPtr complex, std::vector<LatticePtr> stalks,
    const std::map<std::pair<std::size_t, std::size_t>, std::vector<Elem>>&
        lower_maps) {
  LatticeSheaf sh;
  if (stalks.size() != complex->cell_count())
    throw ValidationError("stalk count does not match cell count");
  for (std::size_t i = 0; i < stalks.size(); ++i)
    if (!stalks[i])
      throw ValidationError("missing stalk for cell " + complex->cell(i).id);
  sh.complex_ = std::move(complex);
  sh.stalks_ = std::move(stalks);

  for (auto [face, cell] : sh.complex_->covering()) {
    auto it = lower_maps.find({face, cell});
    if (it == lower_maps.end())
      throw ValidationError("missing restriction map for " +
                            sh.complex_->cell(face).id + " < " +
                            sh.complex_->cell(cell).id);
    try {
      sh.restr_index_[{face, cell}] = sh.restr_.size();
      sh.restr_.push_back(
          synthesize_upper(sh.stalks_[face], sh.stalks_[cell], it->second));
    } catch (const NotJoinPreserving& e) {
      throw NotJoinPreserving(e.a, e.b,
                              std::string(e.what()) + " (restriction " +
                                  sh.complex_->cell(face).id + " < " +
                                  sh.complex_->cell(cell).id + ")");
    }
  }

  // path-independence across every diamond rho < sigma < tau
  for (std::size_t rho = 0; rho < sh.complex_->cell_count(); ++rho) {
    std::map<std::size_t, std::vector<Elem>> composite;  // tau -> lower map
    for (auto [sigma, s1] : sh.complex_->coboundary(rho)) {
      (void)s1;
      const auto& first = sh.restriction(rho, sigma);
      for (auto [tau, s2] : sh.complex_->coboundary(sigma)) {
        (void)s2;
        const auto& second = sh.restriction(sigma, tau);
        std::vector<Elem> lower(first.lower.size());
        for (Elem x = 0; x < lower.size(); ++x)
          lower[x] = second.lower[first.lower[x]];
        auto [it, inserted] = composite.emplace(tau, lower);
        if (!inserted && it->second != lower)
          throw FunctorialityViolation(
              "restriction composites from " + sh.complex_->cell(rho).id +
              " to " + sh.complex_->cell(tau).id + " depend on the path");
      }
    }
  }
  return sh;
}

LatticeSheaf LatticeSheaf::constant(ComplexPtr complex,
                                    const LatticePtr& stalk) {
  std::vector<LatticePtr> stalks(complex->cell_count(), stalk);
  std::vector<Elem> id(stalk->size());
  for (Elem x = 0; x < stalk->size(); ++x) id[x] = x;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Elem>> lowers;
  for (auto [face, cell] : complex->covering()) lowers[{face, cell}] = id;
  return build(std::move(complex), std::move(stalks), lowers);
}

const Connection& LatticeSheaf::restriction(std::size_t face,
                                            std::size_t cell) const {
  auto it = restr_index_.find({face, cell});
  if (it == restr_index_.end())
    throw UnknownCell("no restriction between " + complex_->cell(face).id +
                      " and " + complex_->cell(cell).id);
  return restr_[it->second];
}

Cochain LatticeSheaf::top_cochain(int k) const {
  Cochain x{k, {}};
  for (std::size_t c : complex_->skeleton(k))
    x.values.push_back(stalks_[c]->top());
  return x;
}

Cochain LatticeSheaf::bottom_cochain(int k) const {
  Cochain x{k, {}};
  for (std::size_t c : complex_->skeleton(k))
    x.values.push_back(stalks_[c]->bottom());
  return x;
}

std::optional<std::uint64_t> LatticeSheaf::cochain_count(int k) const {
  unsigned __int128 total = 1;
  for (std::size_t c : complex_->skeleton(k)) {
    total *= stalks_[c]->size();
    if (total > std::uint64_t(-1)) return std::nullopt;
  }
  return std::uint64_t(total);
}

void LatticeSheaf::check_degree(int k, const Cochain& x, const char* who) const {
  if (x.degree != k || x.values.size() != cells_in_degree(k))
    throw DegreeMismatch(std::string(who) + ": cochain of degree " +
                         std::to_string(x.degree) + " with " +
                         std::to_string(x.values.size()) +
                         " values used in degree " + std::to_string(k));
}

Cochain LatticeSheaf::cochain_meet(const Cochain& x, const Cochain& y) const {
  if (x.degree != y.degree || x.values.size() != y.values.size())
    throw DegreeMismatch("cochain_meet: degrees differ");
  Cochain out{x.degree, std::vector<Elem>(x.values.size())};
  for (std::size_t i = 0; i < x.values.size(); ++i)
    out.values[i] = stalk_at(x.degree, i)->meet(x.values[i], y.values[i]);
  return out;
}

Cochain LatticeSheaf::cochain_join(const Cochain& x, const Cochain& y) const {
  if (x.degree != y.degree || x.values.size() != y.values.size())
    throw DegreeMismatch("cochain_join: degrees differ");
  Cochain out{x.degree, std::vector<Elem>(x.values.size())};
  for (std::size_t i = 0; i < x.values.size(); ++i)
    out.values[i] = stalk_at(x.degree, i)->join(x.values[i], y.values[i]);
  return out;
}

bool LatticeSheaf::cochain_leq(const Cochain& x, const Cochain& y) const {
  if (x.degree != y.degree || x.values.size() != y.values.size())
    throw DegreeMismatch("cochain_leq: degrees differ");
  for (std::size_t i = 0; i < x.values.size(); ++i)
    if (!stalk_at(x.degree, i)->leq(x.values[i], y.values[i])) return false;
  return true;
}

CochainOrder LatticeSheaf::cochain_order(const Cochain& x,
                                         const Cochain& y) const {
  bool le = cochain_leq(x, y);
  bool ge = cochain_leq(y, x);
  if (le && ge) return CochainOrder::Equal;
  if (le) return CochainOrder::Less;
  if (ge) return CochainOrder::Greater;
  return CochainOrder::Incomparable;
}

void LatticeSheaf::for_each_cochain(
    int k, std::uint64_t limit,
    const std::function<void(const Cochain&)>& fn) const {
  auto count = cochain_count(k);
  if (!count || *count > limit)
    throw SizeLimitExceeded("cochain space in degree " + std::to_string(k) +
                            " exceeds the enumeration bound of " +
                            std::to_string(limit));
  std::size_t n = cells_in_degree(k);
  // odometer over element indices, last cell fastest
  Cochain x{k, std::vector<Elem>(n, 0)};
  for (std::uint64_t it = 0; it < *count; ++it) {
    fn(x);
    for (std::size_t i = n; i-- > 0;) {
      if (++x.values[i] < stalk_at(k, i)->size()) break;
      x.values[i] = 0;
    }
  }
}

std::optional<std::size_t> LatticeSheaf::section_violation(
    const Cochain& x) const {
  check_degree(0, x, "is_section");
  for (std::size_t pos = 0; pos < complex_->skeleton(1).size(); ++pos) {
    std::size_t e = complex_->skeleton(1)[pos];
    auto bd = complex_->boundary(e);
    bool first = true;
    Elem ref = 0;
    for (auto [v, s] : bd) {
      (void)s;
      Elem img = restriction(v, e).lower[x.values[complex_->skeleton_pos(v)]];
      if (first) {
        ref = img;
        first = false;
      } else if (img != ref) {
        return e;
      }
    }
  }
  return std::nullopt;
}

std::vector<Cochain> LatticeSheaf::sections_bruteforce(
    std::uint64_t limit) const {
  std::vector<Cochain> out;
  for_each_cochain(0, limit, [&](const Cochain& x) {
    if (is_section(x)) out.push_back(x);
  });
  return out;
}

}  // namespace tsheaf
