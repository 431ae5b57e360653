#pragma once

// Randomized instance generators shared by the unit and acceptance suites.

#include <random>
#include <vector>

#include "tsheaf/galois.hpp"
#include "tsheaf/lattice.hpp"

namespace gen {

using tsheaf::Elem;
using tsheaf::FiniteLattice;
using tsheaf::LatticePtr;

inline const std::vector<LatticePtr>& stalk_pool() {
  static const std::vector<LatticePtr> pool = {
      FiniteLattice::chain(2),    FiniteLattice::chain(3),
      FiniteLattice::chain(4),    FiniteLattice::chain(5),
      FiniteLattice::powerset(1), FiniteLattice::powerset(2),
      FiniteLattice::powerset(3), FiniteLattice::diamond(),
  };
  return pool;
}

// Random join-preserving map: assign arbitrary images to the join
// irreducibles and extend by joins. For distributive sources (the whole
// stalk pool) the extension is always join-preserving; a rejection loop
// covers other sources.
inline std::vector<Elem> random_join_preserving(const LatticePtr& src,
                                                const LatticePtr& dst,
                                                std::mt19937_64& rng,
                                                int max_tries = 64) {
  auto ji = tsheaf::join_irreducibles(*src);
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    std::vector<Elem> image(ji.size());
    for (auto& v : image) v = Elem(rng() % dst->size());
    std::vector<Elem> lower(src->size());
    for (Elem x = 0; x < src->size(); ++x) {
      Elem acc = dst->bottom();
      for (std::size_t i = 0; i < ji.size(); ++i)
        if (src->leq(ji[i], x)) acc = dst->join(acc, image[i]);
      lower[x] = acc;
    }
    bool ok = lower[src->bottom()] == dst->bottom();
    for (Elem a = 0; a < src->size() && ok; ++a)
      for (Elem b = a; b < src->size() && ok; ++b)
        ok = lower[src->join(a, b)] == dst->join(lower[a], lower[b]);
    if (ok) return lower;
  }
  throw std::runtime_error("could not sample a join-preserving map");
}

inline tsheaf::Connection random_connection(const LatticePtr& src,
                                            const LatticePtr& dst,
                                            std::mt19937_64& rng) {
  return tsheaf::synthesize_upper(src, dst,
                                  random_join_preserving(src, dst, rng));
}

}  // namespace gen
