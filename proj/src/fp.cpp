#include "ggslab/fp.hpp"

#include <string>

namespace ggslab::fp {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_odd_prime(std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw InputError("modulus must be an odd prime, got " + std::to_string(p));
}

std::int64_t inverse(std::int64_t x, std::int64_t p) {
  std::int64_t a = reduce(x, p), m = p, u = 1, v = 0;
  if (a == 0) throw PreconditionError("zero has no inverse in F_p");
  while (m != 0) {
    const std::int64_t q = a / m;
    a -= q * m;
    std::swap(a, m);
    u -= q * v;
    std::swap(u, v);
  }
  return reduce(u, p);
}

FpMatrix::FpMatrix(IntMatrix entries, std::int64_t p) : entries_(std::move(entries)), p_(p) {
  require_odd_prime(p);
  entries_ = entries_.unaryExpr([p](std::int64_t x) { return reduce(x, p); });
}

FpMatrix FpMatrix::identity(Eigen::Index n, std::int64_t p) {
  return {IntMatrix::Identity(n, n), p};
}

FpMatrix FpMatrix::zero(Eigen::Index rows, Eigen::Index cols, std::int64_t p) {
  return {IntMatrix::Zero(rows, cols), p};
}

FpMatrix FpMatrix::circulant(std::span<const std::int64_t> first_row, std::int64_t p) {
  const auto n = static_cast<Eigen::Index>(first_row.size());
  IntMatrix c(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index k = 0; k < n; ++k) c(r, (k + r) % n) = first_row[static_cast<std::size_t>(k)];
  return {std::move(c), p};
}

Eigen::Index gaussian_rank(const FpMatrix& m) { return rank_mod(m.entries(), m.modulus()); }

Eigen::Index circulant_rank(std::span<const std::int64_t> m, std::int64_t p) {
  require_odd_prime(p);
  if (static_cast<std::int64_t>(m.size()) != p)
    throw InputError("circulant_rank expects a vector of length p");
  // The circulant algebra is F_p[x]/(x^p - 1) and x^p - 1 = (x - 1)^p, so the
  // rank is p minus the multiplicity of 1 as a root of m(x).
  std::vector<std::int64_t> poly(m.begin(), m.end());
  for (auto& c : poly) c = reduce(c, p);
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
  if (poly.empty()) return 0;
  Eigen::Index multiplicity = 0;
  while (true) {
    std::int64_t at_one = 0;
    for (auto c : poly) at_one = reduce(at_one + c, p);
    if (at_one != 0) break;
    // Synthetic division by (x - 1).
    std::vector<std::int64_t> q(poly.size() - 1);
    std::int64_t carry = 0;
    for (std::size_t k = poly.size(); k-- > 1;) {
      carry = reduce(carry + poly[k], p);
      q[k - 1] = carry;
    }
    poly = std::move(q);
    ++multiplicity;
  }
  return static_cast<Eigen::Index>(p) - multiplicity;
}

}  // namespace ggslab::fp
