#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mzspace/abelian_group.hpp"
#include "mzspace/decision.hpp"
#include "mzspace/finite_field.hpp"
#include "mzspace/group_algebra.hpp"

namespace mzspace {

/// Caps on brute-force work: |K[G]| = q^n must not exceed max_algebra_size. When the number of
/// (a, b) pairs q^(2n) exceeds max_pairs, the pair scan runs over a in G and b = 1 instead,
/// which finds a violation iff the full scan does because Ker L is a subspace.
struct OracleBudget {
  std::uint64_t max_algebra_size = 1024;
  std::uint64_t max_pairs = 65536;
};

enum class PairMode { Full, GroupBasis };

std::string to_string(PairMode mode);

using FiniteAlgebraElement = AlgebraElement<FiniteField>;
using FiniteLinearMap = LinearMapMatrix<FiniteField>;

/// A root u (all powers in Ker L) and a pair (a, b) with a u^m b outside Ker L for every
/// m >= preperiod with m = exponent (mod period).
struct Counterexample {
  FiniteAlgebraElement u;
  FiniteAlgebraElement a;
  FiniteAlgebraElement b;
  std::uint64_t exponent = 1;
  PowerCycle cycle;
};

struct OracleResult {
  Verdict verdict = Verdict::MZ;
  std::optional<Counterexample> counterexample;
  std::size_t root_count = 0;
  PairMode mode = PairMode::Full;
};

/// Brute-force Mathieu-Zhao checker straight from the definition, over K[G] with K finite.
/// Elements are enumerated lexicographically in their coefficient vectors (coefficient of g_1
/// most significant), so counterexamples are reproducible.
class MzOracle {
 public:
  MzOracle(const FiniteField& field, const GroupSpec& group, OracleBudget budget = {}, unsigned threads = 1);
  MzOracle(const MzOracle&) = delete;
  MzOracle& operator=(const MzOracle&) = delete;

  const GroupAlgebra<FiniteField>& algebra() const noexcept { return algebra_; }
  std::uint64_t algebra_size() const noexcept { return size_; }
  FiniteAlgebraElement element(std::uint64_t index) const;

  /// Every u with u^m in Ker L for all m >= 1, in enumeration order.
  std::vector<FiniteAlgebraElement> radical_elements(const FiniteLinearMap& map) const;

  OracleResult definitional_mz_check(const FiniteLinearMap& map) const;

  /// Every idempotent of K[G], by scanning all q^n elements.
  std::vector<FiniteAlgebraElement> exhaustive_idempotents() const;

 private:
  const FiniteField* field_;
  AbelianGroup group_;
  GroupAlgebra<FiniteField> algebra_;
  OracleBudget budget_;
  unsigned threads_;
  std::uint64_t size_;
};

/// All idempotents of K[G] as subset sums of primitive idempotents: of G when char K does not
/// divide |G|, otherwise of G~ embedded in K[G] (the idempotents of K[G] and K[G~] coincide).
std::vector<FiniteAlgebraElement> idempotent_survey(const FiniteField& field, const GroupSpec& group);

struct HarnessReport {
  Verdict parent = Verdict::MZ;
  Verdict derived = Verdict::MZ;
  GroupSpec derived_group;
  FiniteLinearMap derived_map;

  /// MZ(parent) implies MZ(derived).
  bool implication_holds() const { return parent == Verdict::NotMZ || derived == Verdict::MZ; }
};

/// MZ(G, L) implies MZ(H, L restricted to H) for the product-form subgroup H = prod Z_{m_i}.
HarnessReport harness_subgroup_restriction(const FiniteLinearMap& map, const GroupSpec& group,
                                           const GroupSpec& subgroup_orders, const FiniteField& field,
                                           const OracleBudget& budget = {});

/// For a p'-subgroup H: MZ(G, L) implies MZ(G/H, L') where K[G/H] is realized as E_H K[G] and
/// L'(gH) = L(E_H g).
HarnessReport harness_quotient(const FiniteLinearMap& map, const GroupSpec& group, const GroupSpec& subgroup_orders,
                               const FiniteField& field, const OracleBudget& budget = {});

}  // namespace mzspace
