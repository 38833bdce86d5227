#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mzspace/cyclotomic_field.hpp"
#include "mzspace/finite_field.hpp"
#include "mzspace/group_algebra.hpp"

namespace testsupport {

using namespace mzspace;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline FiniteFieldElement random_element(const FiniteField& f, std::mt19937_64& g) {
  return f.from_code(std::uniform_int_distribution<std::uint32_t>(0, f.cardinality() - 1)(g));
}

// small rationals on each basis coordinate
inline CyclotomicNumber random_element(const CyclotomicField& f, std::mt19937_64& g) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  CyclotomicNumber out = f.zero();
  for (auto& c : out.coefficients) {
    c = Rational(num(g), den(g));
    c.canonicalize();
  }
  return out;
}

template <class F>
typename F::Element random_nonzero(const F& f, std::mt19937_64& g) {
  for (;;) {
    auto x = random_element(f, g);
    if (!f.is_zero(x)) return x;
  }
}

template <class F>
AlgebraElement<F> random_algebra_element(const GroupAlgebra<F>& a, std::mt19937_64& g) {
  AlgebraElement<F> out = a.zero();
  for (auto& c : out.coefficients) c = random_element(a.field(), g);
  return out;
}

template <class F>
LinearMapMatrix<F> random_matrix(const F& f, std::size_t rows, std::size_t cols, std::mt19937_64& g) {
  LinearMapMatrix<F> out(rows, cols, f.zero());
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = random_element(f, g);
  }
  return out;
}

template <class F>
Matrix<typename F::Element> multiply(const F& f, const Matrix<typename F::Element>& a,
                                     const Matrix<typename F::Element>& b) {
  Matrix<typename F::Element> out(a.rows(), b.cols(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      auto acc = f.zero();
      for (std::size_t k = 0; k < a.cols(); ++k) acc = f.add(acc, f.mul(a(i, k), b(k, j)));
      out(i, j) = acc;
    }
  }
  return out;
}

// Unit lower times unit upper triangular with random off-diagonal entries: always invertible.
template <class F>
Matrix<typename F::Element> random_invertible(const F& f, std::size_t r, std::mt19937_64& g) {
  Matrix<typename F::Element> lower(r, r, f.zero());
  Matrix<typename F::Element> upper(r, r, f.zero());
  for (std::size_t i = 0; i < r; ++i) {
    lower(i, i) = f.one();
    upper(i, i) = random_nonzero(f, g);
    for (std::size_t j = 0; j < i; ++j) lower(i, j) = random_element(f, g);
    for (std::size_t j = i + 1; j < r; ++j) upper(i, j) = random_element(f, g);
  }
  return multiply(f, lower, upper);
}

}  // namespace testsupport
