#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mzspace {

/// Element of GF(p^k). `code` packs the coefficients of the polynomial in the adjoined
/// root as base-p digits, constant term least significant. Codes 0 and 1 are zero and one.
struct FiniteFieldElement {
  std::uint32_t code = 0;

  friend auto operator<=>(const FiniteFieldElement&, const FiniteFieldElement&) = default;
};

/// GF(p^k) with p^k <= 2^20. The modulus is the smallest monic irreducible polynomial of
/// degree k in lexicographic order (leading non-monic coefficients most significant);
/// multiplication uses discrete log tables over the smallest full-order generator.
class FiniteField {
 public:
  using Element = FiniteFieldElement;

  static constexpr bool kExactLanes = true;
  static constexpr std::uint64_t kMaxCardinality = 1ULL << 20;

  FiniteField(std::uint32_t p, std::uint32_t k);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t k() const noexcept { return k_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t cardinality() const noexcept { return q_; }
  /// Monic modulus, ascending coefficients, length k + 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  Element generator() const noexcept { return Element{exp_[1 % (q_ - 1)]}; }

  Element zero() const { return Element{0}; }
  Element one() const { return Element{1}; }
  Element from_integer(long long value) const;
  Element from_code(std::uint32_t code) const;
  Element from_coefficients(std::span<const std::uint32_t> coefficients) const;
  std::vector<std::uint32_t> coefficients(Element a) const;

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t exponent) const;
  bool is_zero(Element a) const { return a.code == 0; }
  bool equal(Element a, Element b) const { return a.code == b.code; }

  /// Multiplicative order of a nonzero element.
  std::uint64_t order_of(Element a) const;

  /// g^((q-1)/m) for the fixed generator g; requires m | q - 1.
  Element primitive_root_of_unity(std::uint32_t m) const;

  Element parse(std::string_view text) const;
  std::string format(Element a) const;
  std::string encode(Element a) const;

  /// "GF(7)" or "GF(2^2)"
  std::string name() const;
  std::string describe() const;

  std::size_t lane_count() const noexcept { return k_; }
  std::vector<std::uint64_t> lane_moduli() const { return std::vector<std::uint64_t>(k_, p_); }
  bool lane_image(Element a, std::uint64_t* out) const;

 private:
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;  // exp_[i] = g^i, size q - 1
  std::vector<std::uint32_t> log_;  // log_[code], undefined at 0
};

}  // namespace mzspace
