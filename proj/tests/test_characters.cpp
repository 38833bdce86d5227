#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invariants.hpp"
#include "mzspace/errors.hpp"

using namespace mzspace;

namespace {

GroupSpec Z(std::initializer_list<std::uint32_t> orders) { return GroupSpec{orders}; }

template <class F>
std::vector<std::string> row_text(const F& f, const CharacterTable<F>& t, std::size_t j) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < t.size; ++k) out.push_back(f.format(t.value(j, k)));
  return out;
}

template <class F>
std::vector<std::string> gamma_row(const F& f, const Matrix<typename F::Element>& gamma) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < gamma.cols(); ++j) out.push_back(f.format(gamma(0, j)));
  return out;
}

}  // namespace

TEST_CASE("character tables") {
  FiniteField f3(3, 1);
  auto t = character_table(f3, Z({2}));
  CHECK(row_text(f3, t, 0) == std::vector<std::string>{"1", "1"});
  CHECK(row_text(f3, t, 1) == std::vector<std::string>{"1", "2"});

  CyclotomicField q3(3);
  auto t3 = character_table(q3, Z({3}));
  CHECK(row_text(q3, t3, 0) == std::vector<std::string>{"1", "1", "1"});
  CHECK(row_text(q3, t3, 1) == std::vector<std::string>{"1", "z", "-1 - z"});
  CHECK(row_text(q3, t3, 2) == std::vector<std::string>{"1", "-1 - z", "z"});

  CHECK_THROWS_WITH_AS(character_table(FiniteField(5, 1), Z({3})),
                       "field not split for G: exponent 3 of Z3 does not divide 5-1 = 4", NotSplitError);
  CHECK_NOTHROW(character_table(FiniteField(2, 2), Z({3})));
  CHECK_THROWS_AS(character_table(CyclotomicField(4), Z({3})), NotSplitError);
}

TEST_CASE("gamma matrix") {
  CyclotomicField q3(3);
  auto t = character_table(q3, Z({3}));
  auto row = [&](std::vector<long long> xs) {
    std::vector<CyclotomicNumber> out;
    for (auto x : xs) out.push_back(q3.from_integer(x));
    return Matrix<CyclotomicNumber>::from_rows({out});
  };
  CHECK(gamma_row(q3, gamma_matrix(q3, row({1, 0, 0}), t)) == std::vector<std::string>{"1", "1", "1"});
  CHECK(gamma_row(q3, gamma_matrix(q3, row({1, 1, 1}), t)) == std::vector<std::string>{"3", "0", "0"});
  CHECK(gamma_row(q3, gamma_matrix(q3, row({0, 0, 0}), t)) == std::vector<std::string>{"0", "0", "0"});

  // direct double sum as the reference
  auto g = testsupport::rng(5);
  CyclotomicField q12(12);
  for (auto spec : {Z({12}), Z({2, 6}), Z({3, 4})}) {
    auto table = character_table(q12, spec);
    AbelianGroup group(spec);
    auto values = testsupport::random_matrix(q12, 2, group.order(), g);
    auto gamma = gamma_matrix(q12, values, table);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < group.order(); ++j) {
        auto acc = q12.zero();
        for (std::size_t k = 0; k < group.order(); ++k)
          acc = q12.add(acc, q12.mul(values(i, k), table.value(j, group.inverse(k))));
        CHECK(acc == gamma(i, j));
      }
  }
}

TEST_CASE("primitive idempotents") {
  FiniteField f3(3, 1);
  AbelianGroup z2(Z({2}));
  GroupAlgebra a(f3, z2);
  auto es = primitive_idempotents(a, character_table(f3, Z({2})));
  CHECK(a.format(es[0]) == "2 + (2)*g[2]");  // 2(1+g)
  CHECK(a.format(es[1]) == "2 + g[2]");      // 2(1+2g)

  FiniteField gf4(2, 2);
  AbelianGroup z3(Z({3}));
  GroupAlgebra b(gf4, z3);
  auto e3 = primitive_idempotents(b, character_table(gf4, Z({3})));
  CHECK(b.format(e3[0]) == "1 + g[2] + g[3]");

  FiniteField f2(2, 1);
  GroupAlgebra c(f2, z2);
  CHECK_THROWS_AS(primitive_idempotents(c, character_table(f2, Z({1}))), std::invalid_argument);
  CHECK_THROWS_AS(primitive_idempotents(c, character_table(FiniteField(3, 1), Z({2}))), std::exception);
}

TEST_CASE("cyclic idempotent formula") {
  // e_j = d^{-1} (1 + (xi^{d-1})^{j-1} g + ... + xi^{j-1} g^{d-1}) with xi the chosen primitive root
  for (unsigned d : {2U, 3U, 5U, 6U, 8U}) {
    CyclotomicField f(d);
    AbelianGroup group(Z({d}));
    GroupAlgebra alg(f, group);
    auto table = character_table(f, Z({d}));
    auto es = primitive_idempotents(alg, table);
    auto inv_d = f.inv(f.from_integer(d));
    auto step = f.pow(table.root, d - 1);
    for (std::size_t j = 0; j < d; ++j) {
      auto want = alg.zero();
      auto coeff = f.one();
      auto ratio = f.pow(step, j);
      for (std::size_t k = 0; k < d; ++k) {
        want.coefficients[k] = f.mul(inv_d, coeff);
        coeff = f.mul(coeff, ratio);
      }
      CHECK(alg.equal(es[j], want));
    }
  }
}

TEST_CASE("character combination") {
  CyclotomicField q3(3);
  auto t = character_table(q3, Z({3}));
  auto mu = character_combination(q3, {q3.one(), q3.zero(), q3.zero()}, t);
  for (const auto& m : mu) CHECK(q3.format(m) == "1/3");
  auto mu1 = character_combination(q3, {q3.one(), q3.one(), q3.one()}, t);
  CHECK(q3.format(mu1[0]) == "1");
  CHECK(q3.is_zero(mu1[1]));
  CHECK(q3.is_zero(mu1[2]));
  for (const auto& m : character_combination(q3, {q3.zero(), q3.zero(), q3.zero()}, t)) CHECK(q3.is_zero(m));
  FiniteField f2(2, 1);
  CHECK_THROWS_AS(character_combination(f2, {f2.one(), f2.one()}, character_table(FiniteField(3, 1), Z({2}))),
                  std::exception);
}

TEST_CASE("character invariants on small groups") {
  auto g = testsupport::rng(17);
  for (const auto& spec : testsupport::abelian_groups_up_to(12)) {
    CAPTURE(to_string(spec));
    const auto e = group_exponent(spec);
    CHECK(testsupport::character_invariant_failure(CyclotomicField(static_cast<unsigned>(e)), spec, g) == "");
    for (auto [p, k] : testsupport::smallest_split_fields(e, 1)) {
      CHECK(testsupport::character_invariant_failure(FiniteField(p, k), spec, g) == "");
    }
  }
}
