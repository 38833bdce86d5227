#include "mzspace/field_spec.hpp"

#include <cctype>
#include <charconv>

#include "mzspace/errors.hpp"
#include "mzspace/number_theory.hpp"

namespace mzspace {

namespace {

std::string normalize(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::uint64_t read_number(std::string_view digits, std::string_view original) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
    throw InputError("malformed field specification '" + std::string(original) + "'");
  }
  return value;
}

}  // namespace

FieldSpec parse_field_spec(std::string_view text) {
  const std::string s = normalize(text);
  if (s == "q") return CyclotomicSpec{1};
  if (s.starts_with("q(zeta") && s.ends_with(")")) {
    std::string_view body(s);
    body = body.substr(6, body.size() - 7);
    if (!body.empty() && body.front() == '_') body.remove_prefix(1);
    std::uint64_t e = read_number(body, text);
    if (e == 0 || e > 100000) throw InputError("cyclotomic order out of range in '" + std::string(text) + "'");
    return CyclotomicSpec{static_cast<unsigned>(e)};
  }
  if (s.starts_with("gf(") && s.ends_with(")")) {
    std::string_view body(s);
    body = body.substr(3, body.size() - 4);
    if (auto caret = body.find('^'); caret != std::string_view::npos) {
      std::uint64_t p = read_number(body.substr(0, caret), text);
      std::uint64_t k = read_number(body.substr(caret + 1), text);
      if (!is_prime(p)) throw InputError("GF(p^k): " + std::to_string(p) + " is not prime");
      if (k == 0 || k > 20) throw InputError("GF(p^k): extension degree out of range");
      return FiniteSpec{static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k)};
    }
    std::uint64_t q = read_number(body, text);
    auto pk = prime_power(q);
    if (!pk) throw InputError("GF(q): " + std::to_string(q) + " is not a prime power");
    return FiniteSpec{static_cast<std::uint32_t>(pk->first), pk->second};
  }
  throw InputError("malformed field specification '" + std::string(text) + "'");
}

std::string to_string(const FieldSpec& spec) {
  if (const auto* c = std::get_if<CyclotomicSpec>(&spec)) return "Q(zeta_" + std::to_string(c->order) + ")";
  const auto& f = std::get<FiniteSpec>(spec);
  if (f.k == 1) return "GF(" + std::to_string(f.p) + ")";
  return "GF(" + std::to_string(f.p) + "^" + std::to_string(f.k) + ")";
}

AnyField make_field(const FieldSpec& spec) {
  if (const auto* c = std::get_if<CyclotomicSpec>(&spec)) return AnyField(std::in_place_type<CyclotomicField>, c->order);
  const auto& f = std::get<FiniteSpec>(spec);
  return AnyField(std::in_place_type<FiniteField>, f.p, f.k);
}

}  // namespace mzspace
