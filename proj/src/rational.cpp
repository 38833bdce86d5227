#include "mzspace/rational.hpp"

#include <map>
#include <stdexcept>

namespace mzspace {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const IntPoly& poly, char variable) {
  std::string out;
  for (std::size_t i = poly.size(); i-- > 0;) {
    const Integer& c = poly[i];
    if (c == 0) continue;
    Integer magnitude = abs(c);
    bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0 || magnitude != 1) {
      out += magnitude.get_str();
      if (i > 0) out += "*";
    }
    if (i > 0) {
      out += variable;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

void trim(IntPoly& poly) {
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
}

void trim(RatPoly& poly) {
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

IntPoly divide_exact(const IntPoly& numerator, const IntPoly& monic_divisor) {
  if (monic_divisor.empty() || monic_divisor.back() != 1) {
    throw std::invalid_argument("divide_exact: divisor must be monic");
  }
  IntPoly rem = numerator;
  trim(rem);
  const std::size_t dd = monic_divisor.size() - 1;
  if (rem.size() < monic_divisor.size()) {
    if (!rem.empty()) throw std::domain_error("divide_exact: nonzero remainder");
    return {};
  }
  IntPoly quot(rem.size() - dd, 0);
  for (std::size_t i = rem.size(); i-- > dd;) {
    Integer c = rem[i];
    if (c == 0) continue;
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= c * monic_divisor[j];
  }
  trim(rem);
  if (!rem.empty()) throw std::domain_error("divide_exact: nonzero remainder");
  trim(quot);
  return quot;
}

std::pair<RatPoly, RatPoly> divide(const RatPoly& numerator, const RatPoly& divisor) {
  RatPoly den = divisor;
  trim(den);
  if (den.empty()) throw std::domain_error("division by zero");
  RatPoly rem = numerator;
  trim(rem);
  if (rem.size() < den.size()) return {RatPoly{}, rem};
  const std::size_t dd = den.size() - 1;
  RatPoly quot(rem.size() - dd, 0);
  const Rational lead = den.back();
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i] == 0) continue;
    Rational c = rem[i] / lead;
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= c * den[j];
  }
  trim(rem);
  trim(quot);
  return {quot, rem};
}

namespace {

IntPoly cyclotomic_cached(unsigned e, std::map<unsigned, IntPoly>& cache) {
  if (auto it = cache.find(e); it != cache.end()) return it->second;
  IntPoly numerator(e + 1, 0);
  numerator[0] = -1;
  numerator[e] = 1;
  for (unsigned d = 1; d < e; ++d) {
    if (e % d == 0) numerator = divide_exact(numerator, cyclotomic_cached(d, cache));
  }
  cache.emplace(e, numerator);
  return numerator;
}

}  // namespace

IntPoly cyclotomic_polynomial(unsigned e) {
  if (e == 0) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
  std::map<unsigned, IntPoly> cache;
  return cyclotomic_cached(e, cache);
}

}  // namespace mzspace
