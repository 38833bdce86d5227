#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mzspace/matrix.hpp"

namespace mzspace {

/// The interface shared by CyclotomicField and FiniteField. Elements are plain values;
/// every operation goes through the (immutable) field context.
template <class F>
concept ExactField = requires(const F& f, const typename F::Element& a, std::string_view text, std::uint64_t* lanes) {
  { f.zero() } -> std::convertible_to<typename F::Element>;
  { f.one() } -> std::convertible_to<typename F::Element>;
  { f.from_integer(1LL) } -> std::convertible_to<typename F::Element>;
  { f.add(a, a) } -> std::convertible_to<typename F::Element>;
  { f.sub(a, a) } -> std::convertible_to<typename F::Element>;
  { f.neg(a) } -> std::convertible_to<typename F::Element>;
  { f.mul(a, a) } -> std::convertible_to<typename F::Element>;
  { f.inv(a) } -> std::convertible_to<typename F::Element>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.equal(a, a) } -> std::same_as<bool>;
  { f.characteristic() } -> std::convertible_to<std::uint64_t>;
  { f.parse(text) } -> std::convertible_to<typename F::Element>;
  { f.format(a) } -> std::convertible_to<std::string>;
  { f.encode(a) } -> std::convertible_to<std::string>;
  { f.name() } -> std::convertible_to<std::string>;
  { f.lane_count() } -> std::convertible_to<std::size_t>;
  { f.lane_image(a, lanes) } -> std::same_as<bool>;
  { F::kExactLanes } -> std::convertible_to<bool>;
};

/// Indices of a maximal linearly independent subset of the rows, chosen greedily in row
/// order, by exact Gaussian elimination.
template <ExactField F>
std::vector<std::size_t> independent_rows(const F& field, const Matrix<typename F::Element>& m) {
  using E = typename F::Element;
  std::vector<std::vector<E>> basis;   // echelon rows
  std::vector<std::size_t> pivots;     // pivot column of each echelon row
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<E> v = m.row(i);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const E& c = v[pivots[b]];
      if (field.is_zero(c)) continue;
      E factor = c;  // echelon rows are normalized to pivot 1
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = field.sub(v[j], field.mul(factor, basis[b][j]));
    }
    std::size_t pivot = v.size();
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (!field.is_zero(v[j])) {
        pivot = j;
        break;
      }
    }
    if (pivot == v.size()) continue;
    E scale = field.inv(v[pivot]);
    for (auto& x : v) x = field.mul(x, scale);
    basis.push_back(std::move(v));
    pivots.push_back(pivot);
    kept.push_back(i);
  }
  return kept;
}

}  // namespace mzspace
