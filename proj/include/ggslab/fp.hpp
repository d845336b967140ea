#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "ggslab/error.hpp"

namespace ggslab::fp {

/// Canonical residue of x modulo m, in [0, m).
constexpr std::int64_t reduce(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

bool is_prime(std::int64_t n);

/// Throws InputError unless p is an odd prime.
void require_odd_prime(std::int64_t p);

/// Multiplicative inverse of a nonzero residue modulo the prime p.
std::int64_t inverse(std::int64_t x, std::int64_t p);

/// An element of F_p. The modulus travels with the value; mixing moduli throws.
class FpScalar {
 public:
  FpScalar(std::int64_t value, std::int64_t p) : value_(reduce(value, p)), p_(p) {}

  std::int64_t value() const { return value_; }
  std::int64_t modulus() const { return p_; }
  bool is_zero() const { return value_ == 0; }

  FpScalar operator+(FpScalar o) const { return {value_ + check(o).value_, p_}; }
  FpScalar operator-(FpScalar o) const { return {value_ - check(o).value_, p_}; }
  FpScalar operator*(FpScalar o) const { return {value_ * check(o).value_, p_}; }
  FpScalar operator-() const { return {-value_, p_}; }
  FpScalar inverse() const { return {fp::inverse(value_, p_), p_}; }

  bool operator==(const FpScalar&) const = default;

 private:
  const FpScalar& check(const FpScalar& o) const {
    if (o.p_ != p_) throw InputError("F_p modulus mismatch");
    return o;
  }

  std::int64_t value_;
  std::int64_t p_;
};

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// A dense matrix over F_p. Entries are kept in canonical range.
class FpMatrix {
 public:
  FpMatrix(IntMatrix entries, std::int64_t p);

  static FpMatrix identity(Eigen::Index n, std::int64_t p);
  static FpMatrix zero(Eigen::Index rows, Eigen::Index cols, std::int64_t p);

  /// Matrix whose row r is the input cyclically shifted right by r.
  static FpMatrix circulant(std::span<const std::int64_t> first_row, std::int64_t p);

  const IntMatrix& entries() const { return entries_; }
  std::int64_t modulus() const { return p_; }
  Eigen::Index rows() const { return entries_.rows(); }
  Eigen::Index cols() const { return entries_.cols(); }
  FpScalar operator()(Eigen::Index r, Eigen::Index c) const { return {entries_(r, c), p_}; }

 private:
  IntMatrix entries_;
  std::int64_t p_;
};

/// Rank over F_p of any integer-valued Eigen expression, by Gaussian elimination
/// on a reduced copy.
template <typename Derived>
Eigen::Index rank_mod(const Eigen::MatrixBase<Derived>& m, std::int64_t p) {
  IntMatrix work = m.template cast<std::int64_t>().unaryExpr(
      [p](std::int64_t x) { return reduce(x, p); });
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < work.cols() && rank < work.rows(); ++col) {
    Eigen::Index pivot = rank;
    while (pivot < work.rows() && work(pivot, col) == 0) ++pivot;
    if (pivot == work.rows()) continue;
    work.row(pivot).swap(work.row(rank));
    const std::int64_t inv = inverse(work(rank, col), p);
    work.row(rank) = work.row(rank).unaryExpr([&](std::int64_t x) { return reduce(x * inv, p); });
    for (Eigen::Index r = 0; r < work.rows(); ++r) {
      if (r == rank || work(r, col) == 0) continue;
      const std::int64_t f = work(r, col);
      for (Eigen::Index c = col; c < work.cols(); ++c)
        work(r, c) = reduce(work(r, c) - f * work(rank, c), p);
    }
    ++rank;
  }
  return rank;
}

Eigen::Index gaussian_rank(const FpMatrix& m);

/// Rank of the p x p circulant whose rows are the cyclic shifts of m, computed
/// from the polynomial m(x) without building the matrix. Requires m.size() == p.
Eigen::Index circulant_rank(std::span<const std::int64_t> m, std::int64_t p);

}  // namespace ggslab::fp
