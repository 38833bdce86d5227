#include "mzspace/finite_field.hpp"

#include <stdexcept>

#include "mzspace/element_literal.hpp"
#include "mzspace/errors.hpp"
#include "mzspace/number_theory.hpp"
#include "mzspace/rational.hpp"

namespace mzspace {

namespace {

using Poly = std::vector<std::uint32_t>;  // ascending, over GF(p)

void trim_poly(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

/// Remainder of a modulo a monic divisor.
Poly poly_mod(Poly a, const Poly& monic, std::uint32_t p) {
  trim_poly(a);
  const std::size_t dd = monic.size() - 1;
  for (std::size_t i = a.size(); i-- > dd;) {
    std::uint32_t c = a[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) {
      a[i - dd + j] = static_cast<std::uint32_t>((a[i - dd + j] + static_cast<std::uint64_t>(p - c) * monic[j]) % p);
    }
  }
  trim_poly(a);
  return a;
}

Poly digits_of(std::uint32_t code, std::uint32_t p, std::uint32_t k) {
  Poly out(k, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    out[i] = code % p;
    code /= p;
  }
  return out;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t k = static_cast<std::uint32_t>(f.size() - 1);
  std::uint64_t count = 1;
  for (std::uint32_t d = 1; d <= k / 2; ++d) {
    count *= p;
    for (std::uint64_t t = 0; t < count; ++t) {
      Poly divisor = digits_of(static_cast<std::uint32_t>(t), p, d);
      divisor.push_back(1);
      if (poly_mod(f, divisor, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
  if (!is_prime(p)) throw InputError("GF(p^k): " + std::to_string(p) + " is not prime");
  if (k == 0) throw InputError("GF(p^k): extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxCardinality) throw InputError("GF(p^k): field size exceeds 2^20");
  }
  q_ = static_cast<std::uint32_t>(q);

  if (k == 1) {
    modulus_ = {0, 1};
  } else {
    for (std::uint32_t t = 0; t < q_; ++t) {
      Poly candidate = digits_of(t, p, k);
      candidate.push_back(1);
      if (is_irreducible(candidate, p)) {
        modulus_ = std::move(candidate);
        break;
      }
    }
  }

  // Smallest code of full multiplicative order q - 1.
  const auto factors = prime_factors(q_ - 1);
  auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t result = 1;
    while (e > 0) {
      if (e & 1U) result = slow_mul(result, a);
      a = slow_mul(a, a);
      e >>= 1U;
    }
    return result;
  };
  std::uint32_t generator = 1;
  for (std::uint32_t c = 1; c < q_; ++c) {
    bool full = true;
    for (auto f : factors) {
      if (slow_pow(c, (q_ - 1) / f) == 1) {
        full = false;
        break;
      }
    }
    if (full) {
      generator = c;
      break;
    }
  }

  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = slow_mul(x, generator);
  }
}

std::uint32_t FiniteField::slow_mul(std::uint32_t a, std::uint32_t b) const {
  if (k_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  Poly da = digits_of(a, p_, k_);
  Poly db = digits_of(b, p_, k_);
  Poly prod(2 * k_ - 1, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    for (std::uint32_t j = 0; j < k_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
    }
  }
  Poly r = poly_mod(prod, modulus_, p_);
  std::uint32_t code = 0;
  for (std::size_t i = r.size(); i-- > 0;) code = code * p_ + r[i];
  return code;
}

FiniteFieldElement FiniteField::from_integer(long long value) const {
  long long r = value % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Element{static_cast<std::uint32_t>(r)};
}

FiniteFieldElement FiniteField::from_code(std::uint32_t code) const {
  if (code >= q_) throw std::out_of_range("element code out of range for " + name());
  return Element{code};
}

FiniteFieldElement FiniteField::from_coefficients(std::span<const std::uint32_t> coefficients) const {
  if (coefficients.size() > k_) throw std::invalid_argument("too many coefficients for " + name());
  std::uint32_t code = 0;
  for (std::size_t i = coefficients.size(); i-- > 0;) code = code * p_ + coefficients[i] % p_;
  return Element{code};
}

std::vector<std::uint32_t> FiniteField::coefficients(Element a) const { return digits_of(a.code, p_, k_); }

FiniteFieldElement FiniteField::add(Element a, Element b) const {
  if (p_ == 2) return Element{a.code ^ b.code};
  if (k_ == 1) return Element{(a.code + b.code) % p_};
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  std::uint32_t x = a.code;
  std::uint32_t y = b.code;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return Element{out};
}

FiniteFieldElement FiniteField::neg(Element a) const {
  if (p_ == 2) return a;
  if (k_ == 1) return Element{(p_ - a.code) % p_};
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  std::uint32_t x = a.code;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += ((p_ - x % p_) % p_) * scale;
    x /= p_;
    scale *= p_;
  }
  return Element{out};
}

FiniteFieldElement FiniteField::sub(Element a, Element b) const { return add(a, neg(b)); }

FiniteFieldElement FiniteField::mul(Element a, Element b) const {
  if (a.code == 0 || b.code == 0) return Element{0};
  std::uint32_t s = log_[a.code] + log_[b.code];
  if (s >= q_ - 1) s -= q_ - 1;
  return Element{exp_[s]};
}

FiniteFieldElement FiniteField::inv(Element a) const {
  if (a.code == 0) throw std::domain_error("division by zero");
  std::uint32_t l = log_[a.code];
  return Element{exp_[l == 0 ? 0 : q_ - 1 - l]};
}

FiniteFieldElement FiniteField::pow(Element a, std::uint64_t exponent) const {
  if (exponent == 0) return one();
  if (a.code == 0) return zero();
  std::uint64_t l = static_cast<std::uint64_t>(log_[a.code]) * (exponent % (q_ - 1)) % (q_ - 1);
  return Element{exp_[l]};
}

std::uint64_t FiniteField::order_of(Element a) const {
  if (a.code == 0) throw std::domain_error("zero has no multiplicative order");
  std::uint64_t n = q_ - 1;
  return n / gcd_u64(n, log_[a.code]);
}

FiniteFieldElement FiniteField::primitive_root_of_unity(std::uint32_t m) const {
  if (m == 0 || (q_ - 1) % m != 0) {
    throw InputError("no primitive " + std::to_string(m) + "-th root in field " + name());
  }
  Element root{exp_[(q_ - 1) / m % (q_ - 1)]};
  if (order_of(root) != m) throw std::logic_error("primitive root has wrong order");
  return root;
}

FiniteFieldElement FiniteField::parse(std::string_view text) const {
  Element out = zero();
  const Element z = k_ > 1 ? Element{p_} : Element{0};
  for (const auto& term : parse_literal(text)) {
    if (term.uses_z && k_ == 1) {
      throw ParseError("'z' is not allowed in the prime field " + name(), 0, term.column);
    }
    if (term.uses_z && term.exponent >= q_) {
      throw ParseError("exponent " + std::to_string(term.exponent) + " out of range for " + name(), 0, term.column);
    }
    std::uint64_t den = mpz_fdiv_ui(term.coefficient.get_den_mpz_t(), p_);
    if (den == 0) throw ParseError("denominator is divisible by " + std::to_string(p_), 0, term.column);
    std::uint64_t num = mpz_fdiv_ui(term.coefficient.get_num_mpz_t(), p_);
    Element c = mul(from_integer(static_cast<long long>(num)), inv(from_integer(static_cast<long long>(den))));
    out = add(out, term.uses_z ? mul(c, pow(z, term.exponent)) : c);
  }
  return out;
}

std::string FiniteField::format(Element a) const {
  if (k_ == 1) return std::to_string(a.code);
  std::vector<Rational> coeffs;
  for (auto d : coefficients(a)) coeffs.emplace_back(d);
  return format_polynomial_literal(coeffs);
}

std::string FiniteField::encode(Element a) const {
  std::string out(3, '\0');
  out[0] = static_cast<char>(a.code & 0xFFU);
  out[1] = static_cast<char>((a.code >> 8U) & 0xFFU);
  out[2] = static_cast<char>((a.code >> 16U) & 0xFFU);
  return out;
}

std::string FiniteField::name() const {
  if (k_ == 1) return "GF(" + std::to_string(p_) + ")";
  return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
}

std::string FiniteField::describe() const {
  IntPoly m;
  for (auto c : modulus_) m.emplace_back(c);
  std::string out = name();
  if (k_ > 1) out += ", z = root of " + to_string(m, 'z');
  out += ", generator " + format(generator());
  return out;
}

bool FiniteField::lane_image(Element a, std::uint64_t* out) const {
  std::uint32_t x = a.code;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out[i] = x % p_;
    x /= p_;
  }
  return true;
}

}  // namespace mzspace
