#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Core>
#include <json.hpp>

namespace ggslab::model {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntRowVector = Eigen::Matrix<std::int64_t, 1, Eigen::Dynamic>;

/// The (p-1) x (p-1) matrix by which the generator of Z/pZ acts on Z^{p-1}:
/// first row (0, ..., 0, -1), below it the identity block beside a column of -1.
struct ActionMatrix {
  int p;
  IntMatrix A;
  /// A^0, ..., A^{p-1}.
  std::vector<IntMatrix> powers;

  const IntMatrix& pow(std::int64_t c) const;
};

/// Builds A and checks A^p = I, A != I, sum_k A^k = 0 (InvariantError otherwise).
ActionMatrix model_matrix(int p);

/// (c, v) in (Z/pZ) ⋉ Z^{p-1}; v is a row vector.
struct ModelElement {
  int c = 0;
  IntRowVector v;
  bool operator==(const ModelElement& o) const { return c == o.c && v == o.v; }
};

ModelElement model_identity(const ActionMatrix& A);

/// (c1, v1)(c2, v2) = (c1 + c2, v1 A^{c2} + v2).
ModelElement model_mul(const ModelElement& x, const ModelElement& y, const ActionMatrix& A);
ModelElement model_inverse(const ModelElement& x, const ActionMatrix& A);

/// x lies in (Z/pZ) ⋉ (qZ)^{p-1}.
bool mq_membership(const ModelElement& x, std::int64_t q);

/// (Z/pZ) ⋉ (Z/qZ)^{p-1} with elements numbered 0 .. order-1.
class FiniteModel {
 public:
  FiniteModel(const ActionMatrix& A, int q);

  int p() const { return A_.p; }
  int q() const { return q_; }
  std::size_t order() const { return order_; }

  ModelElement element(std::size_t idx) const;
  std::size_t index_of(const ModelElement& x) const;
  std::size_t mul(std::size_t x, std::size_t y) const;
  std::size_t inverse(std::size_t x) const;
  std::size_t identity() const { return 0; }
  std::size_t element_order(std::size_t x) const;
  /// (1, 0) together with the unit translations.
  std::vector<std::size_t> generators() const;

 private:
  ActionMatrix A_;
  int q_;
  std::size_t vec_count_;
  std::size_t order_;
};

/// Guards: q >= 2, gcd(q, p) = 1, p q^{p-1} <= 5000.
FiniteModel reduce_mod(int p, int q);

struct Subgroup {
  std::vector<std::size_t> elements;  // sorted
  std::vector<std::size_t> generators;
  std::size_t index = 0;
  bool normal = false;
};

/// Every subgroup is reached as a join of cyclic subgroups; the maximal ones
/// are the proper subgroups contained in no other proper subgroup.
std::vector<Subgroup> enumerate_maximal_subgroups(const FiniteModel& fm);

/// Number of elements of each order.
std::map<std::size_t, std::size_t> order_profile(const FiniteModel& fm);

/// For distinct primes q1, q2: (q1 Z)^{p-1} + (q2 Z)^{p-1} = Z^{p-1},
/// shown by writing every unit vector through Bezout coefficients.
bool distinct_mq_witness(int q1, int q2, int p);

/// {p, q, order, maximal: [{order, index, normal, generators}]}; generators are
/// written as [c, [v...]].
nlohmann::json census_to_json(const FiniteModel& fm, const std::vector<Subgroup>& maximal);

}  // namespace ggslab::model
