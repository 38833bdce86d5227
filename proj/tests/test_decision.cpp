#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "invariants.hpp"
#include "mzspace/decision.hpp"
#include "mzspace/field_spec.hpp"

using namespace mzspace;

namespace {

GroupSpec Z(std::initializer_list<std::uint32_t> orders) { return GroupSpec{orders}; }

template <class F>
LinearMapMatrix<F> parse_map(const F& f, std::vector<std::vector<std::string>> rows) {
  std::vector<std::vector<typename F::Element>> out;
  for (const auto& row : rows) {
    std::vector<typename F::Element> r;
    for (const auto& x : row) r.push_back(f.parse(x));
    out.push_back(r);
  }
  return LinearMapMatrix<F>::from_rows(out);
}

template <class F>
LinearMapMatrix<F> vg_map(const F& f, std::size_t n) {
  LinearMapMatrix<F> m(1, n, f.zero());
  m(0, 0) = f.one();
  return m;
}

// Reference: smallest (cardinality, then lexicographic) nonempty subset of `live` whose gamma
// columns vanish in every row, by listing all subsets.
template <class F>
std::optional<std::vector<std::size_t>> brute_zero_sum(const F& f, const Matrix<typename F::Element>& gamma,
                                                       const std::vector<std::size_t>& live) {
  std::optional<std::vector<std::size_t>> best;
  const std::size_t t = live.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << t); ++mask) {
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < t; ++c)
      if ((mask >> c) & 1U) cols.push_back(live[c]);
    bool zero = true;
    for (std::size_t i = 0; i < gamma.rows() && zero; ++i) {
      auto acc = f.zero();
      for (auto j : cols) acc = f.add(acc, gamma(i, j));
      zero = f.is_zero(acc);
    }
    if (!zero) continue;
    if (!best || cols.size() < best->size() || (cols.size() == best->size() && cols < *best)) best = cols;
  }
  return best;
}

template <class F>
void check_report_consistency(const F& f, const GroupSpec& spec, const LinearMapMatrix<F>& map,
                              const DecisionReport<F>& rep) {
  if (rep.branch == Branch::TrivialZeroMap) return;
  // witness re-evaluation
  if (const auto* t = std::get_if<ZeroSumSubset>(&rep.witness)) {
    CHECK_FALSE(t->columns.empty());
    CHECK(is_zero_sum(f, rep.gamma, t->columns));
    for (auto j : t->columns) CHECK(std::find(rep.live.begin(), rep.live.end(), j) != rep.live.end());
  }
  if (const auto* e = std::get_if<CosetEquationFailure>(&rep.witness)) {
    REQUIRE(rep.split);
    auto table = character_table(f, rep.split->p_prime_part);
    auto acc = f.zero();
    for (std::size_t k = 0; k < rep.split->p_prime_part_order; ++k)
      acc = f.add(acc, f.mul(table.inverse_value(e->character, k), map(e->row, rep.split->index(k, e->offset))));
    CHECK_FALSE(f.is_zero(acc));
  }
  // sum over all characters is |column group| times the identity coefficient
  const auto d = f.from_integer(static_cast<long long>(group_order(rep.column_group)));
  for (std::size_t r = 0; r < rep.kept_rows.size(); ++r) {
    auto acc = f.zero();
    for (std::size_t j = 0; j < rep.gamma.cols(); ++j) acc = f.add(acc, rep.gamma(r, j));
    CHECK(f.equal(acc, f.mul(d, map(rep.kept_rows[r], 0))));
  }
  if (rep.verdict == Verdict::MZ) {
    bool some_identity = false;
    for (std::size_t i = 0; i < map.rows(); ++i) some_identity = some_identity || !f.is_zero(map(i, 0));
    CHECK(some_identity);
  }
  // idempotent semantics in the semisimple branch
  if (rep.branch == Branch::Semisimple && group_order(spec) <= 12) {
    AbelianGroup group(spec);
    GroupAlgebra<F> alg(f, group);
    auto es = primitive_idempotents(alg, character_table(f, spec));
    auto subset_element = [&](const std::vector<std::size_t>& cols) {
      auto e = alg.zero();
      for (auto j : cols) e = alg.add(e, es[j]);
      return e;
    };
    if (const auto* t = std::get_if<ZeroSumSubset>(&rep.witness)) {
      auto e = subset_element(t->columns);
      CHECK_FALSE(alg.is_zero(e));
      CHECK(alg.is_idempotent(e));
      CHECK(alg.in_kernel(map, e));
    } else {
      const std::size_t live_count = rep.live.size();
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << live_count); ++mask) {
        std::vector<std::size_t> cols;
        for (std::size_t c = 0; c < live_count; ++c)
          if ((mask >> c) & 1U) cols.push_back(rep.live[c]);
        CHECK_FALSE(alg.in_kernel(map, subset_element(cols)));
      }
    }
  }
}

}  // namespace

TEST_CASE("validation") {
  FiniteField f5(5, 1);
  CHECK_THROWS_WITH_AS(decide(f5, Z({3}), vg_map(f5, 3)), doctest::Contains("3 does not divide 5-1 = 4"), NotSplitError);
  FiniteField gf4(2, 2);
  CHECK_NOTHROW(decide(gf4, Z({3}), vg_map(gf4, 3)));
  CHECK_THROWS_AS(decide(gf4, Z({3}), vg_map(gf4, 4)), InputError);
  CHECK_THROWS_AS(decide(gf4, Z({3}), LinearMapMatrix<FiniteField>(0, 3, gf4.zero())), InputError);
  CyclotomicField q1(1);
  CHECK_THROWS_WITH_AS(decide(q1, Z({65}), vg_map(q1, 65)), doctest::Contains("--unsafe-large"), InputError);
  CHECK_THROWS_WITH_AS(decide(q1, Z({2}), LinearMapMatrix<CyclotomicField>(9, 2, q1.one())),
                       doctest::Contains("exceeds 8"), InputError);
  DecideOptions unsafe;
  unsafe.unsafe_large = true;
  CHECK_THROWS_AS(decide(q1, Z({2}), LinearMapMatrix<CyclotomicField>(9, 2, q1.one()), unsafe), NotSplitError);
  CHECK(decide(CyclotomicField(2), Z({2}), LinearMapMatrix<CyclotomicField>(9, 2, q1.one()), unsafe).notes.rows_kept ==
        1);

  auto twice = parse_map(gf4, {{"1", "z", "0"}, {"1", "z", "0"}});
  auto rep = decide(gf4, Z({3}), twice);
  CHECK(rep.notes.rows_in == 2);
  CHECK(rep.notes.rows_kept == 1);
  CHECK(rep.notes.rows_reduced());
  CHECK(rep.kept_rows == std::vector<std::size_t>{0});

  // F_2[Z_4]: the modular branch only needs the trivial G~ to split
  FiniteField f2(2, 1);
  CHECK_NOTHROW(decide(f2, Z({4}), vg_map(f2, 4)));
}

TEST_CASE("flags") {
  CyclotomicField q3(3);
  auto vg = decide(q3, Z({3}), vg_map(q3, 3));
  CHECK(vg.notes.is_vg);
  CHECK_FALSE(vg.notes.is_ideal);
  auto ideal = decide(q3, Z({3}), parse_map(q3, {{"2", "2", "2"}}));
  CHECK(ideal.notes.is_ideal);
  CHECK(ideal.verdict == Verdict::MZ);
  auto no_identity = decide(q3, Z({3}), parse_map(q3, {{"0", "1", "z"}}));
  CHECK(no_identity.notes.identity_coefficient_all_zero);
  CHECK(no_identity.verdict == Verdict::NotMZ);
}

TEST_CASE("dead and live columns") {
  FiniteField gf4(2, 2);
  auto row = [&](std::vector<std::string> xs) { return parse_map(gf4, {xs}); };
  auto [d1, l1] = partition_dead_live(gf4, row({"1", "1", "1"}));
  CHECK(d1.empty());
  CHECK(l1 == std::vector<std::size_t>{0, 1, 2});
  CyclotomicField q3(3);
  auto [d2, l2] = partition_dead_live(q3, parse_map(q3, {{"3", "0", "0"}}));
  CHECK(d2 == std::vector<std::size_t>{1, 2});
  CHECK(l2 == std::vector<std::size_t>{0});
  auto [d3, l3] = partition_dead_live(gf4, row({"0", "0", "0"}));
  CHECK(d3.size() == 3);
  CHECK(l3.empty());
}

TEST_CASE("zero-sum subset search") {
  FiniteField gf4(2, 2);
  auto s1 = zero_sum_subset_search(gf4, parse_map(gf4, {{"1", "1", "1"}}), {0, 1, 2});
  REQUIRE(s1.subset);
  CHECK(*s1.subset == std::vector<std::size_t>{0, 1});
  CHECK(s1.path == SearchPath::Exhaustive);
  CyclotomicField q3(3);
  CHECK_FALSE(zero_sum_subset_search(q3, parse_map(q3, {{"1", "1", "1"}}), {0, 1, 2}).subset);
  CHECK_FALSE(zero_sum_subset_search(q3, parse_map(q3, {{"1", "0"}, {"0", "1"}}), {0, 1}).subset);
  CHECK(zero_sum_subset_search(q3, Matrix<CyclotomicNumber>(1, 0, q3.zero()), {}).path == SearchPath::None);
}

TEST_CASE_TEMPLATE("subset search agrees with brute force", F, CyclotomicField, FiniteField) {
  auto g = testsupport::rng(23);
  auto make = [] {
    if constexpr (std::is_same_v<F, CyclotomicField>) {
      return F(6);
    } else {
      return F(3, 1);
    }
  };
  const F f = make();
  std::uniform_int_distribution<int> small(-1, 1);
  std::uniform_int_distribution<std::size_t> width(1, 12);
  std::uniform_int_distribution<std::size_t> height(1, 3);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t cols = width(g);
    const std::size_t rows = height(g);
    Matrix<typename F::Element> gamma(rows, cols, f.zero());
    // entries in {-1, 0, 1} times powers of a root make zero sums common
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        auto x = f.from_integer(small(g));
        if constexpr (std::is_same_v<F, CyclotomicField>) x = f.mul(x, f.zeta_power(static_cast<long long>(g() % 2) * 3));
        gamma(i, j) = x;
      }
    std::vector<std::size_t> live;
    for (std::size_t j = 0; j < cols; ++j) live.push_back(j);
    auto want = brute_zero_sum(f, gamma, live);
    auto got = zero_sum_subset_search(f, gamma, live);
    CHECK(got.subset == want);
    DecideOptions mitm;
    mitm.exhaustive_limit = 0;
    auto via_mitm = zero_sum_subset_search(f, gamma, live, mitm);
    CHECK(via_mitm.path == SearchPath::MeetInTheMiddle);
    CHECK(via_mitm.subset.has_value() == want.has_value());
    if (via_mitm.subset) CHECK(is_zero_sum(f, gamma, *via_mitm.subset));
    DecideOptions threaded;
    threaded.threads = 3;
    CHECK(zero_sum_subset_search(f, gamma, live, threaded).subset == want);
  }
}

TEST_CASE("semisimple decisions") {
  CyclotomicField q3(3);
  auto r1 = decide(q3, Z({3}), vg_map(q3, 3));
  CHECK(r1.verdict == Verdict::MZ);
  CHECK(r1.branch == Branch::Semisimple);
  CHECK(r1.notes.is_vg);

  FiniteField gf4(2, 2);
  auto r2 = decide(gf4, Z({3}), vg_map(gf4, 3));
  CHECK(r2.verdict == Verdict::NotMZ);
  CHECK(std::get<ZeroSumSubset>(r2.witness).columns == std::vector<std::size_t>{0, 1});

  FiniteField f7(7, 1);
  CHECK(decide(f7, Z({6}), vg_map(f7, 6)).verdict == Verdict::MZ);
  CHECK(decide(f7, Z({3}), vg_map(f7, 3)).verdict == Verdict::MZ);

  auto zero = decide(gf4, Z({3}), LinearMapMatrix<FiniteField>(1, 3, gf4.zero()));
  CHECK(zero.verdict == Verdict::MZ);
  CHECK(zero.branch == Branch::TrivialZeroMap);
  CHECK(zero.dead.size() == 3);
}

TEST_CASE("modular decisions") {
  FiniteField f2(2, 1);
  auto r = decide(f2, Z({2}), parse_map(f2, {{"0", "1"}}));
  CHECK(r.verdict == Verdict::NotMZ);
  CHECK(r.branch == Branch::Modular);
  CHECK(std::get<CosetEquationFailure>(r.witness) == CosetEquationFailure{0, 0, 1});

  auto r10 = decide(f2, Z({2}), parse_map(f2, {{"1", "0"}}));
  CHECK(r10.verdict == Verdict::MZ);
  CHECK(r10.live == std::vector<std::size_t>{0});
  auto r11 = decide(f2, Z({2}), parse_map(f2, {{"1", "1"}}));
  CHECK(r11.verdict == Verdict::MZ);
  CHECK(r11.dead.empty());
  CHECK(decide(f2, Z({4}), vg_map(f2, 4)).verdict == Verdict::MZ);

  FiniteField gf4(2, 2);
  auto r6 = decide(gf4, Z({6}), vg_map(gf4, 6));
  CHECK(r6.verdict == Verdict::NotMZ);
  CHECK(r6.column_group == Z({3}));
  CHECK(r6.gamma.cols() == 3);
  for (std::size_t j = 0; j < 3; ++j) CHECK(gf4.equal(r6.gamma(0, j), gf4.one()));
  CHECK(std::get<ZeroSumSubset>(r6.witness).columns.size() == 2);
}

TEST_CASE_TEMPLATE("randomized report invariants", F, CyclotomicField, FiniteField) {
  auto g = testsupport::rng(31);
  std::vector<std::pair<GroupSpec, F>> cases;
  if constexpr (std::is_same_v<F, CyclotomicField>) {
    cases = {{Z({4}), F(4)}, {Z({2, 3}), F(6)}, {Z({6}), F(6)}, {Z({2, 2}), F(2)}};
  } else {
    cases = {{Z({3}), F(2, 2)}, {Z({6}), F(2, 2)}, {Z({2, 2}), F(3, 1)}, {Z({4}), F(2, 1)}, {Z({6}), F(7, 1)},
             {Z({3, 3}), F(3, 1)}, {Z({9}), F(3, 2)}};
  }
  std::uniform_int_distribution<std::size_t> rows(1, 3);
  for (const auto& [spec, f] : cases) {
    const std::size_t n = group_order(spec);
    for (int t = 0; t < 25; ++t) {
      auto map = testsupport::random_matrix(f, rows(g), n, g);
      // sparse maps exercise dead columns
      std::bernoulli_distribution keep(0.4);
      if (t % 2 == 1)
        for (std::size_t i = 0; i < map.rows(); ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (!keep(g)) map(i, j) = f.zero();
      auto rep = decide(f, spec, map);
      CAPTURE(to_string(spec));
      check_report_consistency(f, spec, map, rep);
      if (rep.branch == Branch::Semisimple) {
        auto want = brute_zero_sum(f, rep.gamma, rep.live);
        CHECK(want.has_value() == (rep.verdict == Verdict::NotMZ));
        if (want) CHECK(std::get<ZeroSumSubset>(rep.witness).columns == *want);
      }
      // row-space invariance
      auto m = testsupport::random_invertible(f, map.rows(), g);
      auto rep2 = decide(f, spec, testsupport::multiply(f, m, map));
      CHECK(rep2.verdict == rep.verdict);
      CHECK(rep2.dead == rep.dead);
      CHECK(rep2.live == rep.live);
    }
  }
}

TEST_CASE("isomorphism robustness Z2 x Z3 vs Z6") {
  auto g = testsupport::rng(41);
  auto check_field = [&](const auto& f) {
    AbelianGroup z6(Z({6}));
    AbelianGroup z23(Z({2, 3}));
    for (int t = 0; t < 30; ++t) {
      auto map = testsupport::random_matrix(f, 1 + t % 2, 6, g);
      if (t % 3 == 0) map(0, 0) = f.zero();
      auto moved = map;
      for (std::uint32_t a = 0; a < 6; ++a) {
        for (std::size_t i = 0; i < map.rows(); ++i) moved(i, z23.index_of({a % 2, a % 3})) = map(i, a);
      }
      CHECK(decide(f, Z({6}), map).verdict == decide(f, Z({2, 3}), moved).verdict);
    }
  };
  check_field(CyclotomicField(6));
  check_field(FiniteField(7, 1));
  check_field(FiniteField(2, 2));
  check_field(FiniteField(3, 1));
}
