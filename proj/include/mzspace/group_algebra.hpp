#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mzspace/abelian_group.hpp"
#include "mzspace/errors.hpp"
#include "mzspace/field.hpp"
#include "mzspace/matrix.hpp"

namespace mzspace {

/// An element of K[G]: coefficients[j] is the coefficient of the j-th canonical group element.
template <ExactField F>
struct AlgebraElement {
  std::vector<typename F::Element> coefficients;

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

/// The r x n matrix (l_{i,j}) with l_{i,j} = L_i(g_j), columns in canonical group order.
template <ExactField F>
using LinearMapMatrix = Matrix<typename F::Element>;

/// Power sequence u, u^2, ... is eventually periodic: u^(s + c) = u^s with s, c minimal.
struct PowerCycle {
  std::uint64_t preperiod = 1;
  std::uint64_t period = 1;
};

/// Arithmetic in K[G]. Holds references to the field and group, which must outlive it.
template <ExactField F>
class GroupAlgebra {
 public:
  using Scalar = typename F::Element;
  using Element = AlgebraElement<F>;

  GroupAlgebra(const F& field, const AbelianGroup& group) : field_(&field), group_(&group) {}

  const F& field() const noexcept { return *field_; }
  const AbelianGroup& group() const noexcept { return *group_; }
  std::size_t dimension() const noexcept { return group_->order(); }

  Element zero() const { return Element{std::vector<Scalar>(dimension(), field_->zero())}; }
  Element one() const { return basis(group_->identity()); }
  Element basis(std::size_t j) const {
    Element out = zero();
    out.coefficients.at(j) = field_->one();
    return out;
  }

  Element add(const Element& a, const Element& b) const {
    check(a);
    check(b);
    Element out = a;
    for (std::size_t j = 0; j < dimension(); ++j) out.coefficients[j] = field_->add(a.coefficients[j], b.coefficients[j]);
    return out;
  }

  Element sub(const Element& a, const Element& b) const {
    check(a);
    check(b);
    Element out = a;
    for (std::size_t j = 0; j < dimension(); ++j) out.coefficients[j] = field_->sub(a.coefficients[j], b.coefficients[j]);
    return out;
  }

  Element scale(const Scalar& c, const Element& a) const {
    check(a);
    Element out = a;
    for (auto& x : out.coefficients) x = field_->mul(c, x);
    return out;
  }

  /// Convolution: (ab)(g) = sum over g'g'' = g of a(g') b(g'').
  Element mul(const Element& a, const Element& b) const {
    check(a);
    check(b);
    Element out = zero();
    const std::size_t n = dimension();
    for (std::size_t x = 0; x < n; ++x) {
      if (field_->is_zero(a.coefficients[x])) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (field_->is_zero(b.coefficients[y])) continue;
        auto& slot = out.coefficients[group_->op(x, y)];
        slot = field_->add(slot, field_->mul(a.coefficients[x], b.coefficients[y]));
      }
    }
    return out;
  }

  Element pow(const Element& a, std::uint64_t m) const {
    Element result = one();
    Element base = a;
    while (m > 0) {
      if (m & 1U) result = mul(result, base);
      m >>= 1U;
      if (m > 0) base = mul(base, base);
    }
    return result;
  }

  bool equal(const Element& a, const Element& b) const {
    check(a);
    check(b);
    for (std::size_t j = 0; j < dimension(); ++j) {
      if (!field_->equal(a.coefficients[j], b.coefficients[j])) return false;
    }
    return true;
  }

  bool is_zero(const Element& a) const {
    for (const auto& c : a.coefficients) {
      if (!field_->is_zero(c)) return false;
    }
    return true;
  }

  /// The trace functional: coefficient of 1_G.
  const Scalar& coeff_identity(const Element& a) const {
    check(a);
    return a.coefficients[group_->identity()];
  }

  /// alpha_i = sum_j l_{i,j} g_j^{-1}, so that L_i(beta) = coeff_identity(beta * alpha_i).
  Element build_alpha(const LinearMapMatrix<F>& map, std::size_t row) const {
    check_map(map);
    if (row >= map.rows()) throw std::out_of_range("build_alpha: row out of range");
    Element out = zero();
    for (std::size_t j = 0; j < dimension(); ++j) out.coefficients[group_->inverse(j)] = map(row, j);
    return out;
  }

  std::vector<Scalar> apply_linear_map(const LinearMapMatrix<F>& map, const Element& beta) const {
    check_map(map);
    check(beta);
    std::vector<Scalar> out(map.rows(), field_->zero());
    for (std::size_t i = 0; i < map.rows(); ++i) {
      for (std::size_t j = 0; j < dimension(); ++j) {
        if (field_->is_zero(beta.coefficients[j])) continue;
        out[i] = field_->add(out[i], field_->mul(beta.coefficients[j], map(i, j)));
      }
    }
    return out;
  }

  bool in_kernel(const LinearMapMatrix<F>& map, const Element& beta) const {
    for (const auto& v : apply_linear_map(map, beta)) {
      if (!field_->is_zero(v)) return false;
    }
    return true;
  }

  bool is_idempotent(const Element& a) const { return equal(mul(a, a), a); }

  /// Smallest (s, c) with u^(s+c) = u^s, by storing the power sequence keyed on encodings.
  PowerCycle power_cycle(const Element& u) const {
    if (field_->characteristic() == 0) throw InputError("cycle detection requires finite field");
    std::unordered_map<std::string, std::uint64_t> seen;
    Element power = u;
    for (std::uint64_t m = 1;; ++m) {
      auto [it, inserted] = seen.emplace(encode(power), m);
      if (!inserted) return PowerCycle{it->second, m - it->second};
      power = mul(power, u);
    }
  }

  /// E_H = |H|^{-1} sum_{h in H} h for a subgroup embedded in G.
  Element averaging_idempotent(const SubgroupEmbedding& subgroup) const {
    const std::uint64_t size = subgroup.into_parent.size();
    const std::uint64_t ch = field_->characteristic();
    if (ch != 0 && size % ch == 0) {
      throw InputError("|H| not invertible: characteristic " + std::to_string(ch) + " divides " + std::to_string(size));
    }
    Scalar weight = field_->inv(field_->from_integer(static_cast<long long>(size)));
    Element out = zero();
    for (auto g : subgroup.into_parent) out.coefficients.at(g) = field_->add(out.coefficients.at(g), weight);
    return out;
  }

  std::string encode(const Element& a) const {
    std::string out;
    for (const auto& c : a.coefficients) {
      out += field_->encode(c);
      if constexpr (!F::kExactLanes) out += '|';
    }
    return out;
  }

  /// "1 + (z)*g[2]": the identity coefficient bare, others as (c)*g[j] or g[j] when c = 1.
  std::string format(const Element& a) const {
    check(a);
    std::string out;
    for (std::size_t j = 0; j < dimension(); ++j) {
      const Scalar& c = a.coefficients[j];
      if (field_->is_zero(c)) continue;
      std::string term;
      std::string lit = field_->format(c);
      bool simple = lit.find_first_of(" *") == std::string::npos;
      if (j == group_->identity()) {
        term = simple ? lit : "(" + lit + ")";
      } else if (field_->equal(c, field_->one())) {
        term = AbelianGroup::label(j);
      } else {
        term = "(" + lit + ")*" + AbelianGroup::label(j);
      }
      if (!out.empty()) out += " + ";
      out += term;
    }
    return out.empty() ? "0" : out;
  }

 private:
  void check(const Element& a) const {
    if (a.coefficients.size() != dimension()) throw std::invalid_argument("algebra element has wrong dimension");
  }
  void check_map(const LinearMapMatrix<F>& map) const {
    if (map.cols() != dimension()) throw InputError("linear map has " + std::to_string(map.cols()) +
                                                    " columns, expected |G| = " + std::to_string(dimension()));
  }

  const F* field_;
  const AbelianGroup* group_;
};

}  // namespace mzspace
