#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include "mzspace/abelian_group.hpp"
#include "mzspace/cyclotomic_field.hpp"
#include "mzspace/errors.hpp"
#include "mzspace/field.hpp"
#include "mzspace/finite_field.hpp"
#include "mzspace/group_algebra.hpp"
#include "mzspace/matrix.hpp"
#include "mzspace/number_theory.hpp"

namespace mzspace {

/// Throws NotSplitError unless the field holds a primitive exponent(G)-th root of unity.
template <ExactField F>
void require_split(const F& field, const GroupSpec& group) {
  const std::uint64_t e = group_exponent(group);
  if constexpr (std::is_same_v<F, FiniteField>) {
    const std::uint64_t units = field.cardinality() - 1;
    if (units % e != 0) {
      throw NotSplitError("exponent " + std::to_string(e) + " of " + to_string(group) + " does not divide " +
                          std::to_string(field.cardinality()) + "-1 = " + std::to_string(units));
    }
  } else {
    if (field.order() % e != 0) {
      throw NotSplitError("exponent " + std::to_string(e) + " of " + to_string(group) + " does not divide " +
                          std::to_string(field.order()) + " in " + field.name());
    }
  }
}

/// Characters of a finite abelian group. Character j is indexed by the j-th group element
/// (m_1, ..., m_k) in canonical order and chi_j(g) = zeta^(sum m_i a_i e / n_i), where zeta is
/// the fixed primitive e-th root of unity, e = exponent(G). Row 0 is the trivial character.
template <ExactField F>
struct CharacterTable {
  using Scalar = typename F::Element;

  GroupSpec group;
  std::uint64_t exponent = 1;
  Scalar root;                      // zeta
  std::vector<Scalar> root_powers;  // zeta^0 .. zeta^(e-1)
  std::size_t size = 0;
  std::vector<std::uint32_t> exponents;  // size x size, chi_j(g_k) = zeta^exponents[j * size + k]

  std::uint32_t exponent_at(std::size_t j, std::size_t k) const { return exponents[j * size + k]; }
  const Scalar& value(std::size_t j, std::size_t k) const { return root_powers[exponent_at(j, k)]; }
  /// chi_j(g_k^{-1})
  const Scalar& inverse_value(std::size_t j, std::size_t k) const {
    std::uint32_t t = exponent_at(j, k);
    return root_powers[t == 0 ? 0 : exponent - t];
  }
};

template <ExactField F>
CharacterTable<F> character_table(const F& field, const GroupSpec& spec) {
  require_split(field, spec);
  CharacterTable<F> table;
  AbelianGroup group(spec);
  table.group = spec;
  table.exponent = group.exponent();
  table.root = field.primitive_root_of_unity(static_cast<std::uint32_t>(table.exponent));
  table.root_powers.reserve(table.exponent);
  typename F::Element power = field.one();
  for (std::uint64_t i = 0; i < table.exponent; ++i) {
    table.root_powers.push_back(power);
    power = field.mul(power, table.root);
  }
  table.size = group.order();
  table.exponents.resize(table.size * table.size);
  std::vector<GroupElement> elements = enumerate(spec);
  for (std::size_t j = 0; j < table.size; ++j) {
    for (std::size_t k = 0; k < table.size; ++k) {
      std::uint64_t t = 0;
      for (std::size_t i = 0; i < spec.orders.size(); ++i) {
        t += static_cast<std::uint64_t>(elements[j][i]) * elements[k][i] * (table.exponent / spec.orders[i]);
      }
      table.exponents[j * table.size + k] = static_cast<std::uint32_t>(t % table.exponent);
    }
  }
  return table;
}

/// gamma_{i,j} = sum_k values(i,k) chi_j(g_k^{-1}) for the characters of the table's group.
/// Values with the same root power are bucketed first, so each entry costs e multiplications.
template <ExactField F>
Matrix<typename F::Element> gamma_matrix(const F& field, const Matrix<typename F::Element>& values,
                                         const CharacterTable<F>& table) {
  if (values.cols() != table.size) {
    throw std::invalid_argument("gamma_matrix: value columns must match the column group order");
  }
  Matrix<typename F::Element> gamma(values.rows(), table.size, field.zero());
  std::vector<typename F::Element> buckets(table.exponent, field.zero());
  for (std::size_t i = 0; i < values.rows(); ++i) {
    for (std::size_t j = 0; j < table.size; ++j) {
      std::fill(buckets.begin(), buckets.end(), field.zero());
      for (std::size_t k = 0; k < table.size; ++k) {
        if (field.is_zero(values(i, k))) continue;
        std::uint32_t t = table.exponent_at(j, k);
        std::size_t slot = t == 0 ? 0 : table.exponent - t;
        buckets[slot] = field.add(buckets[slot], values(i, k));
      }
      typename F::Element acc = field.zero();
      for (std::size_t s = 0; s < table.exponent; ++s) {
        if (!field.is_zero(buckets[s])) acc = field.add(acc, field.mul(buckets[s], table.root_powers[s]));
      }
      gamma(i, j) = std::move(acc);
    }
  }
  return gamma;
}

/// e_j = |G|^{-1} sum_k chi_j(g_k^{-1}) g_k, pairwise orthogonal idempotents summing to 1.
template <ExactField F>
std::vector<AlgebraElement<F>> primitive_idempotents(const GroupAlgebra<F>& algebra, const CharacterTable<F>& table) {
  const F& field = algebra.field();
  const std::uint64_t n = table.size;
  const std::uint64_t ch = field.characteristic();
  if (ch != 0 && n % ch == 0) {
    throw InputError("primitive idempotents need |G| invertible: characteristic " + std::to_string(ch) +
                     " divides " + std::to_string(n));
  }
  if (algebra.dimension() != n) throw std::invalid_argument("character table does not match the algebra");
  typename F::Element inv_n = field.inv(field.from_integer(static_cast<long long>(n)));
  std::vector<AlgebraElement<F>> out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    AlgebraElement<F> e = algebra.zero();
    for (std::size_t k = 0; k < n; ++k) e.coefficients[k] = field.mul(inv_n, table.inverse_value(j, k));
    out.push_back(std::move(e));
  }
  return out;
}

/// For r = 1: mu_j = |G|^{-1} gamma_{1,j}, so that l_{1,k} = sum_j mu_j chi_j(g_k).
template <ExactField F>
std::vector<typename F::Element> character_combination(const F& field, const std::vector<typename F::Element>& row,
                                                       const CharacterTable<F>& table) {
  const std::uint64_t n = table.size;
  const std::uint64_t ch = field.characteristic();
  if (ch != 0 && n % ch == 0) {
    throw InputError("character combination needs |G| invertible: characteristic " + std::to_string(ch) +
                     " divides " + std::to_string(n));
  }
  Matrix<typename F::Element> values = Matrix<typename F::Element>::from_rows({row});
  Matrix<typename F::Element> gamma = gamma_matrix(field, values, table);
  typename F::Element inv_n = field.inv(field.from_integer(static_cast<long long>(n)));
  std::vector<typename F::Element> mu;
  mu.reserve(n);
  for (std::size_t j = 0; j < n; ++j) mu.push_back(field.mul(inv_n, gamma(0, j)));
  return mu;
}

}  // namespace mzspace
