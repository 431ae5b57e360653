#include "tsheaf/galois.hpp"

#include <string>

namespace tsheaf {

Connection synthesize_upper(LatticePtr src, LatticePtr dst,
                            std::vector<Elem> lower) {
  if (!src || !dst) throw ValidationError("connection endpoints must be set");
  if (lower.size() != src->size())
    throw ValidationError("lower map has " + std::to_string(lower.size()) +
                          " entries for a source of " +
                          std::to_string(src->size()));
  for (Elem x : lower)
    if (x >= dst->size())
      throw ValidationError("lower map image outside destination universe");

  if (lower[src->bottom()] != dst->bottom())
    throw NotJoinPreserving(src->bottom(), src->bottom(),
                            "lower map does not send bottom to bottom");
  for (Elem a = 0; a < src->size(); ++a)
    for (Elem b = a; b < src->size(); ++b)
      if (lower[src->join(a, b)] != dst->join(lower[a], lower[b]))
        throw NotJoinPreserving(
            a, b,
            "lower map does not preserve the join of " + std::to_string(a) +
                " and " + std::to_string(b));

  std::vector<Elem> upper(dst->size());
  for (Elem y = 0; y < dst->size(); ++y) {
    Elem acc = src->bottom();
    for (Elem x = 0; x < src->size(); ++x)
      if (dst->leq(lower[x], y)) acc = src->join(acc, x);
    upper[y] = acc;
  }
  return Connection{std::move(src), std::move(dst), std::move(lower),
                    std::move(upper)};
}

std::optional<AdjunctionWitness> verify(const Connection& c) {
  for (Elem x = 0; x < c.src->size(); ++x)
    for (Elem y = 0; y < c.dst->size(); ++y)
      if (c.dst->leq(c.lower[x], y) != c.src->leq(x, c.upper[y]))
        return AdjunctionWitness{x, y};
  return std::nullopt;
}

Connection identity_connection(LatticePtr lattice) {
  std::vector<Elem> id(lattice->size());
  for (Elem x = 0; x < lattice->size(); ++x) id[x] = x;
  return Connection{lattice, lattice, id, id};
}

Connection zero_connection(LatticePtr src, LatticePtr dst) {
  std::vector<Elem> lower(src->size(), dst->bottom());
  std::vector<Elem> upper(dst->size(), src->top());
  return Connection{std::move(src), std::move(dst), std::move(lower),
                    std::move(upper)};
}

Connection compose(const Connection& f, const Connection& g) {
  if (f.dst != g.src)
    throw DomainMismatch("compose: middle lattices do not match");
  std::vector<Elem> lower(f.src->size());
  for (Elem x = 0; x < f.src->size(); ++x) lower[x] = g.lower[f.lower[x]];
  std::vector<Elem> upper(g.dst->size());
  for (Elem z = 0; z < g.dst->size(); ++z) upper[z] = f.upper[g.upper[z]];
  return Connection{f.src, g.dst, std::move(lower), std::move(upper)};
}

Connection sum(const Connection& f, const Connection& g) {
  if (f.src != g.src || f.dst != g.dst)
    throw DomainMismatch("sum: connections must share source and destination");
  std::vector<Elem> lower(f.src->size());
  for (Elem x = 0; x < f.src->size(); ++x)
    lower[x] = f.dst->join(f.lower[x], g.lower[x]);
  std::vector<Elem> upper(f.dst->size());
  for (Elem y = 0; y < f.dst->size(); ++y)
    upper[y] = f.src->meet(f.upper[y], g.upper[y]);
  return Connection{f.src, f.dst, std::move(lower), std::move(upper)};
}

Interval kernel(const Connection& f) {
  return Interval{f.src, f.src->bottom(), f.upper[f.dst->bottom()]};
}

Interval cokernel(const Connection& f) {
  return Interval{f.dst, f.lower[f.src->top()], f.dst->top()};
}

Interval normal_image(const Connection& f) {
  return Interval{f.dst, f.dst->bottom(), f.lower[f.src->top()]};
}

ExactnessReport exactness(const Connection& f) {
  ExactnessReport r{true, true};
  Elem u0 = f.upper[f.dst->bottom()];
  for (Elem x = 0; x < f.src->size() && r.left_exact; ++x)
    if (f.upper[f.lower[x]] != f.src->join(x, u0)) r.left_exact = false;
  Elem l1 = f.lower[f.src->top()];
  for (Elem y = 0; y < f.dst->size() && r.right_exact; ++y)
    if (f.lower[f.upper[y]] != f.dst->meet(y, l1)) r.right_exact = false;
  return r;
}

namespace {

const FiniteLattice& factor_of(const LatticePtr& prod, std::size_t coord) {
  if (!prod->is_product())
    throw ValidationError("biproduct maps require a product lattice");
  if (coord >= prod->factors().size())
    throw ValidationError("coordinate index out of range");
  if (!prod->has_tables())
    throw SizeLimitExceeded("biproduct maps require a materialized product");
  return *prod->factors()[coord];
}

}  // namespace

Connection product_projection(LatticePtr prod, std::size_t coord) {
  const auto& fac = factor_of(prod, coord);
  auto fac_ptr = prod->factors()[coord];
  std::vector<Elem> lower(prod->size());
  for (Elem x = 0; x < prod->size(); ++x) lower[x] = prod->decode(x)[coord];
  std::vector<Elem> upper(fac.size());
  for (Elem y = 0; y < fac.size(); ++y) {
    std::vector<Elem> coords(prod->factors().size());
    for (std::size_t i = 0; i < coords.size(); ++i)
      coords[i] = prod->factors()[i]->top();
    coords[coord] = y;
    upper[y] = prod->encode(coords);
  }
  return Connection{prod, fac_ptr, std::move(lower), std::move(upper)};
}

Connection product_injection(LatticePtr prod, std::size_t coord) {
  const auto& fac = factor_of(prod, coord);
  auto fac_ptr = prod->factors()[coord];
  std::vector<Elem> lower(fac.size());
  for (Elem x = 0; x < fac.size(); ++x) {
    std::vector<Elem> coords(prod->factors().size());
    for (std::size_t i = 0; i < coords.size(); ++i)
      coords[i] = prod->factors()[i]->bottom();
    coords[coord] = x;
    lower[x] = prod->encode(coords);
  }
  std::vector<Elem> upper(prod->size());
  for (Elem y = 0; y < prod->size(); ++y) upper[y] = prod->decode(y)[coord];
  return Connection{fac_ptr, prod, std::move(lower), std::move(upper)};
}

}  // namespace tsheaf
