#pragma once

#include <cstdint>
#include <vector>

#include "tsheaf/errors.hpp"

namespace tsheaf {

bool is_prime(std::uint32_t n);

/// Dense matrix over GF(p), p a small prime. Row-major entries in [0, p).
/// Subspace bases are stored as rows; vectors act as columns under mul.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);
  static FpMatrix identity(std::uint32_t p, std::size_t n);
  static FpMatrix from_rows(std::uint32_t p,
                            const std::vector<std::vector<std::uint32_t>>& rows);

  std::uint32_t p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t at(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::uint32_t v) {
    a_[r * cols_ + c] = v % p_;
  }

  FpMatrix mul(const FpMatrix& other) const;
  FpMatrix transpose() const;
  /// this on top of other (same column count).
  FpMatrix vstack(const FpMatrix& other) const;
  FpMatrix scaled(std::uint32_t factor) const;

  /// Reduced row echelon form.
  FpMatrix rref() const;
  std::size_t rank() const;
  /// Rows dropped below the rank after reduction: a canonical basis of the
  /// row space.
  FpMatrix row_space() const;
  /// Canonical (RREF) basis of { x : this. x = 0 }, one row per kernel
  /// dimension.
  FpMatrix kernel_basis() const;

  bool is_zero() const;

  friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
    return a.p_ == b.p_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.a_ == b.a_;
  }

 private:
  std::uint32_t p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> a_;
};

}  // namespace tsheaf
