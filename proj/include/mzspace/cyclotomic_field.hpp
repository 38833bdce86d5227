#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mzspace/rational.hpp"

namespace mzspace {

/// Element of Q(zeta_e): a polynomial in zeta reduced modulo Phi_e, so it has exactly
/// phi(e) rational coefficients and equality is coefficient comparison.
struct CyclotomicNumber {
  std::vector<Rational> coefficients;

  friend bool operator==(const CyclotomicNumber&, const CyclotomicNumber&) = default;
};

/// The cyclotomic field Q(zeta_e). Immutable after construction.
class CyclotomicField {
 public:
  using Element = CyclotomicNumber;

  /// Lane images used by the subset search are homomorphic images mod a prime, not injective.
  static constexpr bool kExactLanes = false;

  explicit CyclotomicField(unsigned order);

  unsigned order() const noexcept { return order_; }
  unsigned degree() const noexcept { return degree_; }
  const IntPoly& modulus() const noexcept { return modulus_; }
  unsigned characteristic() const noexcept { return 0; }

  Element zero() const;
  Element one() const;
  Element from_integer(long long value) const;
  Element from_rational(const Rational& value) const;
  /// zeta^m reduced, for any integer m (taken mod e).
  const Element& zeta_power(long long m) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  /// Throws std::domain_error("division by zero") on zero.
  Element inv(const Element& a) const;
  Element pow(const Element& a, std::uint64_t exponent) const;
  bool is_zero(const Element& a) const;
  bool equal(const Element& a, const Element& b) const { return a == b; }

  /// zeta_e^(e/m); requires m | e.
  Element primitive_root_of_unity(unsigned m) const;

  Element parse(std::string_view text) const;
  std::string format(const Element& a) const;
  std::string encode(const Element& a) const { return format(a); }

  /// "Q(zeta_6)"
  std::string name() const;
  /// Name together with the minimal polynomial of zeta.
  std::string describe() const;

  std::size_t lane_count() const noexcept { return 1; }
  std::vector<std::uint64_t> lane_moduli() const { return {lane_prime_}; }
  /// Image under zeta -> omega mod P. Fails when a denominator vanishes mod P.
  bool lane_image(const Element& a, std::uint64_t* out) const;

 private:
  void reduce(std::vector<Rational>& poly) const;
  void require_shape(const Element& a) const;

  unsigned order_;
  unsigned degree_;
  IntPoly modulus_;
  std::vector<Element> powers_;
  std::uint64_t lane_prime_ = 0;
  std::vector<std::uint64_t> lane_root_powers_;
};

}  // namespace mzspace
