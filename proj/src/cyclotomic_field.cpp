#include "mzspace/cyclotomic_field.hpp"

#include <stdexcept>

#include "mzspace/element_literal.hpp"
#include "mzspace/errors.hpp"
#include "mzspace/number_theory.hpp"

namespace mzspace {

namespace {

RatPoly to_ratpoly(const IntPoly& p) {
  RatPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.emplace_back(c);
  return out;
}

RatPoly mul_poly(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  trim(out);
  return out;
}

RatPoly sub_poly(const RatPoly& a, const RatPoly& b) {
  RatPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

std::uint64_t rational_mod(const Rational& q, std::uint64_t prime, bool& ok) {
  std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), prime);
  if (den == 0) {
    ok = false;
    return 0;
  }
  std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), prime);
  return mul_mod(num, pow_mod(den, prime - 2, prime), prime);
}

}  // namespace

CyclotomicField::CyclotomicField(unsigned order) : order_(order) {
  if (order == 0) throw InputError("cyclotomic order must be positive");
  modulus_ = cyclotomic_polynomial(order);
  degree_ = static_cast<unsigned>(modulus_.size() - 1);

  powers_.reserve(order);
  Element current = one();
  for (unsigned m = 0; m < order; ++m) {
    powers_.push_back(current);
    // Multiply by zeta: shift up one place and reduce.
    std::vector<Rational> shifted(degree_ + 1, 0);
    for (unsigned i = 0; i < degree_; ++i) shifted[i + 1] = current.coefficients[i];
    reduce(shifted);
    current.coefficients = std::move(shifted);
  }

  // A prime P = 1 mod e just above 2^61, and an element omega of exact order e mod P.
  std::uint64_t k = ((1ULL << 61) + order - 1) / order;
  while (!is_prime(k * order + 1)) ++k;
  lane_prime_ = k * order + 1;
  const auto factors = prime_factors(order);
  std::uint64_t omega = 1;
  for (std::uint64_t g = 2;; ++g) {
    omega = pow_mod(g, (lane_prime_ - 1) / order, lane_prime_);
    bool exact = true;
    for (auto f : factors) {
      if (pow_mod(omega, order / f, lane_prime_) == 1) exact = false;
    }
    if (exact) break;
  }
  lane_root_powers_.resize(degree_);
  std::uint64_t w = 1;
  for (unsigned i = 0; i < degree_; ++i) {
    lane_root_powers_[i] = w;
    w = mul_mod(w, omega, lane_prime_);
  }
}

void CyclotomicField::reduce(std::vector<Rational>& poly) const {
  for (std::size_t i = poly.size(); i-- > degree_;) {
    if (poly[i] == 0) continue;
    Rational c = poly[i];
    for (unsigned j = 0; j < degree_; ++j) {
      if (modulus_[j] != 0) poly[i - degree_ + j] -= c * modulus_[j];
    }
    poly[i] = 0;
  }
  poly.resize(degree_);
}

void CyclotomicField::require_shape(const Element& a) const {
  if (a.coefficients.size() != degree_) {
    throw std::invalid_argument("element does not belong to " + name());
  }
}

CyclotomicNumber CyclotomicField::zero() const { return Element{std::vector<Rational>(degree_, 0)}; }

CyclotomicNumber CyclotomicField::one() const { return from_integer(1); }

CyclotomicNumber CyclotomicField::from_integer(long long value) const {
  Element out = zero();
  out.coefficients[0] = Rational(Integer(std::to_string(value)));
  return out;
}

CyclotomicNumber CyclotomicField::from_rational(const Rational& value) const {
  Element out = zero();
  out.coefficients[0] = value;
  return out;
}

const CyclotomicNumber& CyclotomicField::zeta_power(long long m) const {
  long long r = m % static_cast<long long>(order_);
  if (r < 0) r += order_;
  return powers_[static_cast<std::size_t>(r)];
}

CyclotomicNumber CyclotomicField::add(const Element& a, const Element& b) const {
  require_shape(a);
  require_shape(b);
  Element out = a;
  for (unsigned i = 0; i < degree_; ++i) out.coefficients[i] += b.coefficients[i];
  return out;
}

CyclotomicNumber CyclotomicField::sub(const Element& a, const Element& b) const {
  require_shape(a);
  require_shape(b);
  Element out = a;
  for (unsigned i = 0; i < degree_; ++i) out.coefficients[i] -= b.coefficients[i];
  return out;
}

CyclotomicNumber CyclotomicField::neg(const Element& a) const {
  require_shape(a);
  Element out = a;
  for (auto& c : out.coefficients) c = -c;
  return out;
}

CyclotomicNumber CyclotomicField::mul(const Element& a, const Element& b) const {
  require_shape(a);
  require_shape(b);
  auto is_scalar = [](const Element& x) {
    for (std::size_t i = 1; i < x.coefficients.size(); ++i) {
      if (x.coefficients[i] != 0) return false;
    }
    return true;
  };
  if (is_scalar(a) || is_scalar(b)) {
    const Element& s = is_scalar(a) ? a : b;
    const Element& v = is_scalar(a) ? b : a;
    Element out = v;
    const Rational& c = s.coefficients[0];
    for (auto& x : out.coefficients) x *= c;
    return out;
  }
  std::vector<Rational> prod(2 * degree_ - 1, 0);
  for (unsigned i = 0; i < degree_; ++i) {
    if (a.coefficients[i] == 0) continue;
    for (unsigned j = 0; j < degree_; ++j) {
      if (b.coefficients[j] != 0) prod[i + j] += a.coefficients[i] * b.coefficients[j];
    }
  }
  reduce(prod);
  return Element{std::move(prod)};
}

CyclotomicNumber CyclotomicField::inv(const Element& a) const {
  require_shape(a);
  if (is_zero(a)) throw std::domain_error("division by zero");
  // Extended Euclid: track s with s * a = r (mod Phi).
  RatPoly r0 = to_ratpoly(modulus_);
  RatPoly r1(a.coefficients.begin(), a.coefficients.end());
  trim(r1);
  RatPoly s0;
  RatPoly s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divide(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly s2 = sub_poly(s0, mul_poly(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant because Phi is irreducible.
  Rational c = r0.front();
  std::vector<Rational> out(s0.begin(), s0.end());
  for (auto& x : out) x /= c;
  if (out.size() < degree_) out.resize(degree_, 0);
  reduce(out);
  return Element{std::move(out)};
}

CyclotomicNumber CyclotomicField::pow(const Element& a, std::uint64_t exponent) const {
  Element result = one();
  Element base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = mul(result, base);
    exponent >>= 1U;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

bool CyclotomicField::is_zero(const Element& a) const {
  for (const auto& c : a.coefficients) {
    if (c != 0) return false;
  }
  return true;
}

CyclotomicNumber CyclotomicField::primitive_root_of_unity(unsigned m) const {
  if (m == 0 || order_ % m != 0) {
    throw InputError("no primitive " + std::to_string(m) + "-th root in field " + name());
  }
  return zeta_power(order_ / m);
}

CyclotomicNumber CyclotomicField::parse(std::string_view text) const {
  Element out = zero();
  for (const auto& term : parse_literal(text)) {
    if (term.exponent >= order_ && term.uses_z) {
      throw ParseError("exponent " + std::to_string(term.exponent) + " out of range for " + name(), 0, term.column);
    }
    const Element& power = zeta_power(term.uses_z ? term.exponent : 0);
    for (unsigned i = 0; i < degree_; ++i) {
      if (power.coefficients[i] != 0) out.coefficients[i] += term.coefficient * power.coefficients[i];
    }
  }
  return out;
}

std::string CyclotomicField::format(const Element& a) const {
  require_shape(a);
  return format_polynomial_literal(a.coefficients);
}

std::string CyclotomicField::name() const { return "Q(zeta_" + std::to_string(order_) + ")"; }

std::string CyclotomicField::describe() const {
  return name() + ", zeta = z with minimal polynomial " + to_string(modulus_, 'z');
}

bool CyclotomicField::lane_image(const Element& a, std::uint64_t* out) const {
  bool ok = true;
  std::uint64_t acc = 0;
  for (unsigned i = 0; i < degree_; ++i) {
    if (a.coefficients[i] == 0) continue;
    std::uint64_t c = rational_mod(a.coefficients[i], lane_prime_, ok);
    acc = (acc + mul_mod(c, lane_root_powers_[i], lane_prime_)) % lane_prime_;
  }
  out[0] = acc;
  return ok;
}

}  // namespace mzspace
