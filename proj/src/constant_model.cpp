#include "ggslab/constant_model.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ggslab/error.hpp"
#include "ggslab/fp.hpp"

namespace ggslab::model {

namespace {

constexpr std::size_t kModelGuard = 5000;

// Closure of a generating set under right multiplication.
std::vector<std::size_t> closure(const FiniteModel& fm, const std::vector<std::size_t>& gens) {
  std::vector<char> seen(fm.order(), 0);
  std::vector<std::size_t> out{fm.identity()};
  seen[fm.identity()] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto g : gens) {
      const auto y = fm.mul(out[head], g);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool includes(const std::vector<std::size_t>& big, const std::vector<std::size_t>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

const IntMatrix& ActionMatrix::pow(std::int64_t c) const {
  return powers[static_cast<std::size_t>(fp::reduce(c, p))];
}

ActionMatrix model_matrix(int p) {
  fp::require_odd_prime(p);
  const int d = p - 1;
  IntMatrix A = IntMatrix::Zero(d, d);
  A(0, d - 1) = -1;
  A.block(1, 0, d - 1, d - 1).setIdentity();
  A.block(1, d - 1, d - 1, 1).setConstant(-1);

  ActionMatrix out{p, A, {}};
  out.powers.push_back(IntMatrix::Identity(d, d));
  IntMatrix sum = out.powers.back();
  for (int k = 1; k < p; ++k) {
    out.powers.push_back(out.powers.back() * A);
    sum += out.powers.back();
  }
  if (out.powers.back() * A != IntMatrix::Identity(d, d)) throw InvariantError("A^p != I");
  if (A == IntMatrix::Identity(d, d)) throw InvariantError("A == I");
  if (!sum.isZero()) throw InvariantError("sum of A^k != 0");
  return out;
}

ModelElement model_identity(const ActionMatrix& A) { return {0, IntRowVector::Zero(A.p - 1)}; }

ModelElement model_mul(const ModelElement& x, const ModelElement& y, const ActionMatrix& A) {
  return {static_cast<int>(fp::reduce(x.c + y.c, A.p)), x.v * A.pow(y.c) + y.v};
}

ModelElement model_inverse(const ModelElement& x, const ActionMatrix& A) {
  return {static_cast<int>(fp::reduce(-x.c, A.p)), -(x.v * A.pow(-x.c))};
}

bool mq_membership(const ModelElement& x, std::int64_t q) {
  if (q < 2) throw PreconditionError("mq_membership needs q >= 2");
  return (x.v.array() - (x.v.array() / q) * q).isZero();
}

FiniteModel::FiniteModel(const ActionMatrix& A, int q) : A_(A), q_(q), vec_count_(1) {
  for (int k = 0; k < A.p - 1; ++k) vec_count_ *= static_cast<std::size_t>(q);
  order_ = vec_count_ * static_cast<std::size_t>(A.p);
}

ModelElement FiniteModel::element(std::size_t idx) const {
  ModelElement x{static_cast<int>(idx / vec_count_), IntRowVector(A_.p - 1)};
  std::size_t rest = idx % vec_count_;
  for (Eigen::Index k = 0; k < x.v.size(); ++k) {
    x.v(k) = static_cast<std::int64_t>(rest % static_cast<std::size_t>(q_));
    rest /= static_cast<std::size_t>(q_);
  }
  return x;
}

std::size_t FiniteModel::index_of(const ModelElement& x) const {
  std::size_t idx = 0;
  for (Eigen::Index k = x.v.size(); k-- > 0;)
    idx = idx * static_cast<std::size_t>(q_) + static_cast<std::size_t>(fp::reduce(x.v(k), q_));
  return static_cast<std::size_t>(fp::reduce(x.c, A_.p)) * vec_count_ + idx;
}

std::size_t FiniteModel::mul(std::size_t x, std::size_t y) const {
  return index_of(model_mul(element(x), element(y), A_));
}

std::size_t FiniteModel::inverse(std::size_t x) const { return index_of(model_inverse(element(x), A_)); }

std::size_t FiniteModel::element_order(std::size_t x) const {
  std::size_t k = 1;
  for (std::size_t y = x; y != identity(); y = mul(y, x)) ++k;
  return k;
}

std::vector<std::size_t> FiniteModel::generators() const {
  std::vector<std::size_t> gens;
  ModelElement rot = model_identity(A_);
  rot.c = 1;
  gens.push_back(index_of(rot));
  for (int k = 0; k < A_.p - 1; ++k) {
    ModelElement t = model_identity(A_);
    t.v(k) = 1;
    gens.push_back(index_of(t));
  }
  return gens;
}

FiniteModel reduce_mod(int p, int q) {
  const ActionMatrix A = model_matrix(p);
  if (q < 2) throw InputError("reduce_mod needs q >= 2");
  if (std::gcd(q, p) != 1) throw InputError("reduce_mod needs gcd(q, p) = 1");
  double size = p;
  for (int k = 0; k < p - 1; ++k) size *= q;
  if (size > static_cast<double>(kModelGuard))
    throw ResourceError("reduce_mod: p q^(p-1) exceeds " + std::to_string(kModelGuard));
  return {A, q};
}

std::vector<Subgroup> enumerate_maximal_subgroups(const FiniteModel& fm) {
  if (fm.order() > kModelGuard) throw ResourceError("enumerate_maximal_subgroups: group too large");

  struct Node {
    std::vector<std::size_t> elements;
    std::vector<std::size_t> generators;
  };
  std::set<std::vector<std::size_t>> known;
  std::vector<Node> all;
  std::vector<Node> cyclic;
  for (std::size_t x = 0; x < fm.order(); ++x) {
    auto els = closure(fm, {x});
    if (known.insert(els).second) {
      cyclic.push_back({els, {x}});
      all.push_back({std::move(els), {x}});
    }
  }
  for (std::size_t head = 0; head < all.size(); ++head) {
    for (const auto& c : cyclic) {
      if (std::binary_search(all[head].elements.begin(), all[head].elements.end(), c.generators[0])) continue;
      auto gens = all[head].generators;
      gens.push_back(c.generators[0]);
      auto els = closure(fm, gens);
      if (known.insert(els).second) all.push_back({std::move(els), std::move(gens)});
    }
  }

  std::vector<Subgroup> maximal;
  const auto group_gens = fm.generators();
  for (const auto& h : all) {
    if (h.elements.size() == fm.order()) continue;
    bool is_max = true;
    for (const auto& k : all) {
      if (k.elements.size() > h.elements.size() && k.elements.size() < fm.order() && includes(k.elements, h.elements)) {
        is_max = false;
        break;
      }
    }
    if (!is_max) continue;
    bool normal = true;
    for (const auto g : h.generators)
      for (const auto x : group_gens)
        normal = normal && std::binary_search(h.elements.begin(), h.elements.end(), fm.mul(fm.mul(fm.inverse(x), g), x));
    maximal.push_back({h.elements, h.generators, fm.order() / h.elements.size(), normal});
  }
  std::sort(maximal.begin(), maximal.end(), [](const Subgroup& a, const Subgroup& b) {
    return std::tie(a.index, a.elements) < std::tie(b.index, b.elements);
  });
  return maximal;
}

std::map<std::size_t, std::size_t> order_profile(const FiniteModel& fm) {
  std::map<std::size_t, std::size_t> out;
  for (std::size_t x = 0; x < fm.order(); ++x) ++out[fm.element_order(x)];
  return out;
}

bool distinct_mq_witness(int q1, int q2, int p) {
  fp::require_odd_prime(p);
  if (q1 == q2) throw InputError("distinct_mq_witness needs q1 != q2");
  if (!fp::is_prime(q1) || !fp::is_prime(q2)) throw InputError("distinct_mq_witness needs prime q1, q2");

  // Extended Euclid: x q1 + y q2 = 1.
  std::int64_t r0 = q1, r1 = q2, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
  while (r1 != 0) {
    const std::int64_t k = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - k * r1);
    std::tie(x0, x1) = std::make_pair(x1, x0 - k * x1);
    std::tie(y0, y1) = std::make_pair(y1, y0 - k * y1);
  }
  if (r0 != 1) return false;

  const int d = p - 1;
  for (int k = 0; k < d; ++k) {
    IntRowVector unit = IntRowVector::Zero(d);
    unit(k) = 1;
    const IntRowVector from_q1 = q1 * unit;  // in (q1 Z)^{p-1}
    const IntRowVector from_q2 = q2 * unit;  // in (q2 Z)^{p-1}
    if (x0 * from_q1 + y0 * from_q2 != unit) return false;
  }
  return true;
}

nlohmann::json census_to_json(const FiniteModel& fm, const std::vector<Subgroup>& maximal) {
  nlohmann::json j;
  j["p"] = fm.p();
  j["q"] = fm.q();
  j["order"] = fm.order();
  j["maximal"] = nlohmann::json::array();
  for (const auto& m : maximal) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto g : m.generators) {
      const auto x = fm.element(g);
      gens.push_back({x.c, std::vector<std::int64_t>(x.v.data(), x.v.data() + x.v.size())});
    }
    j["maximal"].push_back(
        {{"order", m.elements.size()}, {"index", m.index}, {"normal", m.normal}, {"generators", gens}});
  }
  return j;
}

}  // namespace ggslab::model
