#pragma once

// Brute-force reference computations used by the unit and acceptance suites.
// Everything here works from first principles (order scans, exhaustive law
// checks, vector enumeration) and stays independent of the library's table
// and elimination machinery.

#include <cstdint>
#include <optional>
#include <vector>

#include "tsheaf/lattice.hpp"

namespace oracle {

using tsheaf::Elem;
using tsheaf::FiniteLattice;

// greatest lower bound by scanning the order relation; nullopt when absent
// or not unique
inline std::optional<Elem> brute_glb(const FiniteLattice& L, Elem a, Elem b) {
  std::vector<Elem> lower;
  for (Elem c = 0; c < L.size(); ++c)
    if (L.leq(c, a) && L.leq(c, b)) lower.push_back(c);
  for (Elem g : lower) {
    bool greatest = true;
    for (Elem c : lower)
      if (!L.leq(c, g)) {
        greatest = false;
        break;
      }
    if (greatest) return g;
  }
  return std::nullopt;
}

inline std::optional<Elem> brute_lub(const FiniteLattice& L, Elem a, Elem b) {
  std::vector<Elem> upper;
  for (Elem c = 0; c < L.size(); ++c)
    if (L.leq(a, c) && L.leq(b, c)) upper.push_back(c);
  for (Elem g : upper) {
    bool least = true;
    for (Elem c : upper)
      if (!L.leq(g, c)) {
        least = false;
        break;
      }
    if (least) return g;
  }
  return std::nullopt;
}

// law checks computed from brute glb/lub, not from the tables under test
inline bool brute_modular(const FiniteLattice& L) {
  for (Elem x = 0; x < L.size(); ++x)
    for (Elem y = 0; y < L.size(); ++y) {
      if (!L.leq(x, y)) continue;
      for (Elem z = 0; z < L.size(); ++z) {
        Elem lhs = *brute_lub(L, x, *brute_glb(L, z, y));
        Elem rhs = *brute_glb(L, *brute_lub(L, x, z), y);
        if (lhs != rhs) return false;
      }
    }
  return true;
}

inline bool brute_distributive(const FiniteLattice& L) {
  for (Elem x = 0; x < L.size(); ++x)
    for (Elem y = 0; y < L.size(); ++y)
      for (Elem z = 0; z < L.size(); ++z) {
        Elem lhs = *brute_glb(L, x, *brute_lub(L, y, z));
        Elem rhs = *brute_lub(L, *brute_glb(L, x, y), *brute_glb(L, x, z));
        if (lhs != rhs) return false;
      }
  return true;
}

// upper adjoint of a join-preserving map by the direct formula:
// upper(y) = lub of { x : lower(x) <= y }
inline std::vector<Elem> brute_upper_adjoint(const FiniteLattice& src,
                                             const FiniteLattice& dst,
                                             const std::vector<Elem>& lower) {
  std::vector<Elem> upper(dst.size());
  for (Elem y = 0; y < dst.size(); ++y) {
    Elem acc = src.bottom();
    for (Elem x = 0; x < src.size(); ++x)
      if (dst.leq(lower[x], y)) acc = src.join(acc, x);
    upper[y] = acc;
  }
  return upper;
}

}  // namespace oracle
