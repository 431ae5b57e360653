#include "tsheaf/fpmatrix.hpp"

#include <string>

namespace tsheaf {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is tiny; a linear scan beats bookkeeping
  for (std::uint32_t i = 1; i < p; ++i)
    if (a * i % p == 1) return i;
  throw ValidationError("no modular inverse for " + std::to_string(a) +
                        " mod " + std::to_string(p));
}

}  // namespace

FpMatrix::FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
}

FpMatrix FpMatrix::identity(std::uint32_t p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FpMatrix FpMatrix::from_rows(
    std::uint32_t p, const std::vector<std::vector<std::uint32_t>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  FpMatrix m(p, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c)
      throw ShapeMismatch("ragged rows in matrix literal");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

FpMatrix FpMatrix::mul(const FpMatrix& other) const {
  if (p_ != other.p_) throw ShapeMismatch("matrix product across different primes");
  if (cols_ != other.rows_)
    throw ShapeMismatch("matrix product shape mismatch: " +
                        std::to_string(cols_) + " vs " +
                        std::to_string(other.rows_));
  FpMatrix out(p_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint32_t v = at(i, k);
      if (!v) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        out.a_[i * out.cols_ + j] =
            (out.a_[i * out.cols_ + j] + v * other.at(k, j)) % p_;
    }
  return out;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix out(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  return out;
}

FpMatrix FpMatrix::vstack(const FpMatrix& other) const {
  if (p_ != other.p_ || cols_ != other.cols_)
    throw ShapeMismatch("vstack shape mismatch");
  FpMatrix out(p_, rows_ + other.rows_, cols_);
  out.a_ = a_;
  out.a_.insert(out.a_.end(), other.a_.begin(), other.a_.end());
  return out;
}

FpMatrix FpMatrix::scaled(std::uint32_t factor) const {
  FpMatrix out = *this;
  for (auto& v : out.a_) v = v * (factor % p_) % p_;
  return out;
}

FpMatrix FpMatrix::rref() const {
  FpMatrix m = *this;
  std::size_t lead = 0;
  for (std::size_t r = 0; r < rows_ && lead < cols_; ++r) {
    std::size_t pivot = r;
    while (pivot < rows_ && m.at(pivot, lead) == 0) ++pivot;
    if (pivot == rows_) {
      ++lead;
      --r;
      continue;
    }
    for (std::size_t j = 0; j < cols_; ++j) {
      std::uint32_t t = m.at(r, j);
      m.set(r, j, m.at(pivot, j));
      m.set(pivot, j, t);
    }
    std::uint32_t inv = inv_mod(m.at(r, lead), p_);
    for (std::size_t j = 0; j < cols_; ++j) m.set(r, j, m.at(r, j) * inv % p_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      std::uint32_t f = m.at(i, lead);
      if (!f) continue;
      for (std::size_t j = 0; j < cols_; ++j)
        m.set(i, j, (m.at(i, j) + (p_ - f) * m.at(r, j)) % p_);
    }
    ++lead;
  }
  return m;
}

std::size_t FpMatrix::rank() const {
  FpMatrix m = rref();
  std::size_t r = 0;
  for (std::size_t i = 0; i < rows_; ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < cols_; ++j)
      if (m.at(i, j)) {
        nonzero = true;
        break;
      }
    if (nonzero) ++r;
  }
  return r;
}

FpMatrix FpMatrix::row_space() const {
  FpMatrix m = rref();
  std::size_t r = 0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (m.at(i, j)) {
        ++r;
        break;
      }
  FpMatrix out(p_, r, cols_);
  std::size_t k = 0;
  for (std::size_t i = 0; i < rows_; ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < cols_; ++j)
      if (m.at(i, j)) {
        nonzero = true;
        break;
      }
    if (nonzero) {
      for (std::size_t j = 0; j < cols_; ++j) out.set(k, j, m.at(i, j));
      ++k;
    }
  }
  return out;
}

FpMatrix FpMatrix::kernel_basis() const {
  FpMatrix m = row_space();  // rref, no zero rows
  std::size_t r = m.rows();
  std::vector<std::size_t> pivot_col(r);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t j = 0;
    while (j < cols_ && m.at(i, j) == 0) ++j;
    pivot_col[i] = j;
    is_pivot[j] = true;
  }
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < cols_; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  FpMatrix out(p_, free_cols.size(), cols_);
  for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
    std::size_t f = free_cols[fi];
    out.set(fi, f, 1);
    for (std::size_t i = 0; i < r; ++i)
      out.set(fi, pivot_col[i], (p_ - m.at(i, f)) % p_);
  }
  // rows are already in reverse-lex echelon shape; canonicalize anyway
  return out.row_space();
}

bool FpMatrix::is_zero() const {
  for (auto v : a_)
    if (v) return false;
  return true;
}

}  // namespace tsheaf
