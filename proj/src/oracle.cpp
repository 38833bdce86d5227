#include "mzspace/oracle.hpp"

#include <limits>
#include <thread>
#include <unordered_map>

#include "mzspace/characters.hpp"

namespace mzspace {

std::string to_string(PairMode mode) { return mode == PairMode::Full ? "full" : "group-basis"; }

namespace {

std::uint64_t saturating_power(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    out *= base;
  }
  return out;
}

struct RootInfo {
  FiniteAlgebraElement u;
  PowerCycle cycle;
  std::vector<FiniteAlgebraElement> cycle_powers;  // u^s, ..., u^(s+c-1)
};

/// Walks u, u^2, ... until a repeat; nullopt as soon as a power leaves Ker L.
std::optional<RootInfo> analyze_root(const GroupAlgebra<FiniteField>& algebra, const FiniteLinearMap& map,
                                     const FiniteAlgebraElement& u) {
  std::unordered_map<std::string, std::uint64_t> seen;
  std::vector<FiniteAlgebraElement> powers;
  FiniteAlgebraElement power = u;
  for (std::uint64_t m = 1;; ++m) {
    auto [it, inserted] = seen.emplace(algebra.encode(power), m);
    if (!inserted) {
      RootInfo info;
      info.u = u;
      info.cycle = PowerCycle{it->second, m - it->second};
      info.cycle_powers.assign(powers.begin() + static_cast<std::ptrdiff_t>(it->second - 1), powers.end());
      return info;
    }
    if (!algebra.in_kernel(map, power)) return std::nullopt;
    powers.push_back(power);
    power = algebra.mul(power, u);
  }
}

}  // namespace

MzOracle::MzOracle(const FiniteField& field, const GroupSpec& group, OracleBudget budget, unsigned threads)
    : field_(&field),
      group_(group),
      algebra_(field, group_),
      budget_(budget),
      threads_(threads == 0 ? 1 : threads),
      size_(saturating_power(field.cardinality(), group_.order())) {
  if (size_ > budget_.max_algebra_size) {
    throw BudgetExceeded("|K[G]| = " + std::to_string(field.cardinality()) + "^" + std::to_string(group_.order()) +
                             " exceeds the oracle budget of " + std::to_string(budget_.max_algebra_size),
                         size_);
  }
}

FiniteAlgebraElement MzOracle::element(std::uint64_t index) const {
  const std::size_t n = group_.order();
  const std::uint32_t q = field_->cardinality();
  FiniteAlgebraElement out{std::vector<FiniteFieldElement>(n)};
  for (std::size_t j = n; j-- > 0;) {
    out.coefficients[j] = FiniteFieldElement{static_cast<std::uint32_t>(index % q)};
    index /= q;
  }
  return out;
}

std::vector<FiniteAlgebraElement> MzOracle::radical_elements(const FiniteLinearMap& map) const {
  std::vector<FiniteAlgebraElement> roots;
  for (std::uint64_t i = 0; i < size_; ++i) {
    FiniteAlgebraElement u = element(i);
    if (analyze_root(algebra_, map, u)) roots.push_back(std::move(u));
  }
  return roots;
}

OracleResult MzOracle::definitional_mz_check(const FiniteLinearMap& map) const {
  if (map.cols() != group_.order()) {
    throw InputError("linear map has " + std::to_string(map.cols()) + " columns, expected |G| = " +
                     std::to_string(group_.order()));
  }
  // Roots, found in parallel over disjoint index ranges and merged in enumeration order.
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(threads_, size_));
  std::vector<std::vector<RootInfo>> partial(workers);
  auto scan = [&](unsigned w) {
    std::uint64_t begin = size_ * w / workers;
    std::uint64_t end = size_ * (w + 1) / workers;
    for (std::uint64_t i = begin; i < end; ++i) {
      if (auto info = analyze_root(algebra_, map, element(i))) partial[w].push_back(std::move(*info));
    }
  };
  if (workers <= 1) {
    scan(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
  }

  OracleResult result;
  const std::uint64_t pairs = saturating_power(size_, 2);
  result.mode = pairs <= budget_.max_pairs ? PairMode::Full : PairMode::GroupBasis;
  for (const auto& chunk : partial) result.root_count += chunk.size();

  for (const auto& chunk : partial) {
    for (const auto& root : chunk) {
      auto check = [&](const FiniteAlgebraElement& a, const FiniteAlgebraElement& b) -> bool {
        for (std::size_t m = 0; m < root.cycle_powers.size(); ++m) {
          FiniteAlgebraElement w = algebra_.mul(algebra_.mul(a, root.cycle_powers[m]), b);
          if (!algebra_.in_kernel(map, w)) {
            result.verdict = Verdict::NotMZ;
            result.counterexample = Counterexample{root.u, a, b, root.cycle.preperiod + m, root.cycle};
            return false;
          }
        }
        return true;
      };
      if (result.mode == PairMode::Full) {
        for (std::uint64_t ai = 0; ai < size_; ++ai) {
          FiniteAlgebraElement a = element(ai);
          for (std::uint64_t bi = 0; bi < size_; ++bi) {
            if (!check(a, element(bi))) return result;
          }
        }
      } else {
        const FiniteAlgebraElement one = algebra_.one();
        for (std::size_t j = 0; j < group_.order(); ++j) {
          if (!check(algebra_.basis(j), one)) return result;
        }
      }
    }
  }
  return result;
}

std::vector<FiniteAlgebraElement> MzOracle::exhaustive_idempotents() const {
  std::vector<FiniteAlgebraElement> out;
  for (std::uint64_t i = 0; i < size_; ++i) {
    FiniteAlgebraElement e = element(i);
    if (algebra_.is_idempotent(e)) out.push_back(std::move(e));
  }
  return out;
}

std::vector<FiniteAlgebraElement> idempotent_survey(const FiniteField& field, const GroupSpec& group) {
  AbelianGroup g(group);
  GroupAlgebra<FiniteField> algebra(field, g);
  const std::uint64_t p = field.characteristic();

  std::vector<FiniteAlgebraElement> primitive;
  if (g.order() % p != 0) {
    primitive = primitive_idempotents(algebra, character_table(field, group));
  } else {
    SylowSplit split = sylow_split(group, p);
    AbelianGroup tilde(split.p_prime_part);
    GroupAlgebra<FiniteField> tilde_algebra(field, tilde);
    for (const auto& e : primitive_idempotents(tilde_algebra, character_table(field, split.p_prime_part))) {
      FiniteAlgebraElement lifted = algebra.zero();
      for (std::size_t k = 0; k < tilde.order(); ++k) lifted.coefficients[split.index(k, 0)] = e.coefficients[k];
      primitive.push_back(std::move(lifted));
    }
  }
  if (primitive.size() > 20) throw InputError("idempotent survey limited to 2^20 idempotents");

  std::vector<FiniteAlgebraElement> out;
  const std::uint64_t count = std::uint64_t{1} << primitive.size();
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    FiniteAlgebraElement sum = algebra.zero();
    for (std::size_t j = 0; j < primitive.size(); ++j) {
      if ((mask >> j) & 1U) sum = algebra.add(sum, primitive[j]);
    }
    out.push_back(std::move(sum));
  }
  return out;
}

HarnessReport harness_subgroup_restriction(const FiniteLinearMap& map, const GroupSpec& group,
                                           const GroupSpec& subgroup_orders, const FiniteField& field,
                                           const OracleBudget& budget) {
  SubgroupEmbedding emb = product_subgroup(group, subgroup_orders);
  HarnessReport report;
  report.parent = MzOracle(field, group, budget).definitional_mz_check(map).verdict;
  report.derived_group = emb.spec;
  report.derived_map = FiniteLinearMap(map.rows(), emb.into_parent.size(), field.zero());
  for (std::size_t i = 0; i < map.rows(); ++i) {
    for (std::size_t h = 0; h < emb.into_parent.size(); ++h) report.derived_map(i, h) = map(i, emb.into_parent[h]);
  }
  report.derived = MzOracle(field, emb.spec, budget).definitional_mz_check(report.derived_map).verdict;
  return report;
}

HarnessReport harness_quotient(const FiniteLinearMap& map, const GroupSpec& group, const GroupSpec& subgroup_orders,
                               const FiniteField& field, const OracleBudget& budget) {
  SubgroupEmbedding emb = product_subgroup(group, subgroup_orders);
  QuotientPresentation quotient = product_quotient(group, subgroup_orders);
  AbelianGroup g(group);
  GroupAlgebra<FiniteField> algebra(field, g);
  const FiniteAlgebraElement averaging = algebra.averaging_idempotent(emb);  // throws when p | |H|

  HarnessReport report;
  report.parent = MzOracle(field, group, budget).definitional_mz_check(map).verdict;
  report.derived_group = quotient.spec;
  report.derived_map = FiniteLinearMap(map.rows(), quotient.representative.size(), field.zero());
  for (std::size_t c = 0; c < quotient.representative.size(); ++c) {
    auto values = algebra.apply_linear_map(map, algebra.mul(averaging, algebra.basis(quotient.representative[c])));
    for (std::size_t i = 0; i < map.rows(); ++i) report.derived_map(i, c) = values[i];
  }
  report.derived = MzOracle(field, quotient.spec, budget).definitional_mz_check(report.derived_map).verdict;
  return report;
}

}  // namespace mzspace
