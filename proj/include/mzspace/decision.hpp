#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "mzspace/abelian_group.hpp"
#include "mzspace/characters.hpp"
#include "mzspace/errors.hpp"
#include "mzspace/field.hpp"
#include "mzspace/group_algebra.hpp"
#include "mzspace/matrix.hpp"
#include "mzspace/subset_search.hpp"

namespace mzspace {

inline constexpr std::size_t kMaxDecisionGroupOrder = 64;
inline constexpr std::size_t kMaxDecisionRows = 8;

enum class Verdict { MZ, NotMZ };
enum class Branch { Semisimple, Modular, TrivialZeroMap };

inline std::string to_string(Verdict v) { return v == Verdict::MZ ? "MZ" : "NotMZ"; }
inline std::string to_string(Branch b) {
  switch (b) {
    case Branch::Semisimple:
      return "semisimple";
    case Branch::Modular:
      return "modular";
    case Branch::TrivialZeroMap:
      return "trivial-zero-map";
  }
  return "unknown";
}

/// Nonempty set of live characters (0-based column indices) whose gamma columns sum to zero in
/// every row: sum_{j in T} e_j is then a nonzero idempotent inside Ker L.
struct ZeroSumSubset {
  std::vector<std::size_t> columns;
  friend bool operator==(const ZeroSumSubset&, const ZeroSumSubset&) = default;
};

/// Violated modular coset equation: row of L (0-based, original numbering), dead character of
/// G~ (0-based), offset q into H (0-based).
struct CosetEquationFailure {
  std::size_t row = 0;
  std::size_t character = 0;
  std::size_t offset = 0;
  friend bool operator==(const CosetEquationFailure&, const CosetEquationFailure&) = default;
};

using Witness = std::variant<std::monostate, ZeroSumSubset, CosetEquationFailure>;

struct DecisionNotes {
  bool is_ideal = false;                       // Ker L is the augmentation ideal
  bool is_vg = false;                          // Ker L = V_G
  bool identity_coefficient_all_zero = false;  // 1_G in Ker L, so NotMZ unless L = 0
  std::size_t rows_in = 0;
  std::size_t rows_kept = 0;

  bool rows_reduced() const { return rows_kept < rows_in; }
};

struct DecideOptions {
  unsigned threads = 1;
  bool unsafe_large = false;
  std::size_t exhaustive_limit = 28;
};

template <ExactField F>
struct DecisionReport {
  using Scalar = typename F::Element;

  Verdict verdict = Verdict::MZ;
  Branch branch = Branch::TrivialZeroMap;
  GroupSpec group;
  GroupSpec column_group;           // G (semisimple) or G~ (modular)
  std::optional<SylowSplit> split;  // modular branch only
  std::vector<std::size_t> kept_rows;
  Matrix<Scalar> gamma;             // kept_rows.size() x |column_group|
  std::optional<Scalar> root_of_unity;
  std::vector<std::size_t> dead;
  std::vector<std::size_t> live;
  Witness witness;
  SearchPath search_path = SearchPath::None;
  DecisionNotes notes;
  unsigned threads = 1;
};

struct Preprocessed {
  std::vector<std::size_t> kept_rows;
  DecisionNotes notes;
  bool modular = false;
};

/// Input checks, split-field validation, row reduction and structural flags.
template <ExactField F>
Preprocessed validate_and_preprocess(const F& field, const GroupSpec& group, const LinearMapMatrix<F>& map,
                                     const DecideOptions& options = {}) {
  const std::uint64_t n = group_order(group);
  if (map.cols() != n) {
    throw InputError("linear map has " + std::to_string(map.cols()) + " columns, expected |G| = " + std::to_string(n));
  }
  if (map.rows() == 0) throw InputError("linear map needs at least one row");
  if (!options.unsafe_large && n > kMaxDecisionGroupOrder) {
    throw InputError("|G| = " + std::to_string(n) + " exceeds " + std::to_string(kMaxDecisionGroupOrder) +
                     " (use --unsafe-large to override)");
  }
  if (!options.unsafe_large && map.rows() > kMaxDecisionRows) {
    throw InputError("r = " + std::to_string(map.rows()) + " exceeds " + std::to_string(kMaxDecisionRows) +
                     " (use --unsafe-large to override)");
  }

  Preprocessed pre;
  const std::uint64_t ch = field.characteristic();
  if (ch != 0 && n % ch == 0) {
    pre.modular = true;
    require_split(field, sylow_split(group, ch).p_prime_part);
  } else {
    require_split(field, group);
  }

  pre.kept_rows = independent_rows(field, map);
  pre.notes.rows_in = map.rows();
  pre.notes.rows_kept = pre.kept_rows.size();
  if (pre.kept_rows.empty()) return pre;

  bool identity_all_zero = true;
  for (std::size_t i = 0; i < map.rows(); ++i) {
    if (!field.is_zero(map(i, 0))) identity_all_zero = false;
  }
  pre.notes.identity_coefficient_all_zero = identity_all_zero;

  if (pre.kept_rows.size() == 1) {
    const std::size_t r = pre.kept_rows.front();
    bool constant = true;
    bool vg = !field.is_zero(map(r, 0));
    for (std::size_t j = 1; j < n; ++j) {
      if (!field.equal(map(r, j), map(r, 0))) constant = false;
      if (!field.is_zero(map(r, j))) vg = false;
    }
    pre.notes.is_ideal = constant && !field.is_zero(map(r, 0));
    pre.notes.is_vg = vg && n > 1;
    if (n == 1) pre.notes.is_vg = vg;
  }
  return pre;
}

/// Dead columns vanish in every row of gamma; the rest are live.
template <ExactField F>
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> partition_dead_live(
    const F& field, const Matrix<typename F::Element>& gamma) {
  std::vector<std::size_t> dead;
  std::vector<std::size_t> live;
  for (std::size_t j = 0; j < gamma.cols(); ++j) {
    bool all_zero = true;
    for (std::size_t i = 0; i < gamma.rows(); ++i) {
      if (!field.is_zero(gamma(i, j))) {
        all_zero = false;
        break;
      }
    }
    (all_zero ? dead : live).push_back(j);
  }
  return {dead, live};
}

/// True when the listed gamma columns sum to zero in every row.
template <ExactField F>
bool is_zero_sum(const F& field, const Matrix<typename F::Element>& gamma, const std::vector<std::size_t>& columns) {
  for (std::size_t i = 0; i < gamma.rows(); ++i) {
    typename F::Element acc = field.zero();
    for (auto j : columns) acc = field.add(acc, gamma(i, j));
    if (!field.is_zero(acc)) return false;
  }
  return true;
}

/// Searches for a nonempty subset of `live` whose gamma columns sum to zero in every row.
/// Returned indices are gamma column indices.
template <ExactField F>
SubsetSearchResult zero_sum_subset_search(const F& field, const Matrix<typename F::Element>& gamma,
                                          const std::vector<std::size_t>& live, const DecideOptions& options = {}) {
  LaneTable lanes;
  lanes.columns = live.size();
  const std::size_t per = field.lane_count();
  lanes.width = gamma.rows() * per;
  std::vector<std::uint64_t> field_moduli = field.lane_moduli();
  for (std::size_t i = 0; i < gamma.rows(); ++i) {
    lanes.moduli.insert(lanes.moduli.end(), field_moduli.begin(), field_moduli.end());
  }
  lanes.values.assign(lanes.columns * lanes.width, 0);
  bool images_ok = true;
  for (std::size_t c = 0; c < live.size() && images_ok; ++c) {
    for (std::size_t i = 0; i < gamma.rows(); ++i) {
      if (!field.lane_image(gamma(i, live[c]), lanes.values.data() + c * lanes.width + i * per)) {
        images_ok = false;
        break;
      }
    }
  }
  if (!images_ok) {
    // No usable homomorphic image: every subset becomes a candidate for the exact check.
    lanes.width = 0;
    lanes.moduli.clear();
    lanes.values.clear();
  }

  std::vector<std::size_t> scratch;
  SubsetVerifier verify = [&](const std::vector<std::size_t>& local) {
    scratch.clear();
    for (auto c : local) scratch.push_back(live[c]);
    return is_zero_sum(field, gamma, scratch);
  };
  SubsetSearchOptions search_options;
  search_options.exhaustive_limit = options.exhaustive_limit;
  search_options.threads = options.threads;
  SubsetSearchResult result = find_zero_sum_subset(lanes, verify, search_options);
  if (result.subset) {
    for (auto& c : *result.subset) c = live[c];
  }
  return result;
}

/// Modular coset equations: for each kept row i, dead character j of G~ and offset q in H,
/// sum_k chi_j(g~_k^{-1}) l_{i, index(k, q)} must vanish. Returns the first failure.
template <ExactField F>
std::optional<CosetEquationFailure> check_coset_equations(const F& field, const LinearMapMatrix<F>& map,
                                              const std::vector<std::size_t>& rows, const SylowSplit& split,
                                              const std::vector<std::size_t>& dead, const CharacterTable<F>& table) {
  for (auto i : rows) {
    for (auto j : dead) {
      for (std::size_t q = 0; q < split.p_part_order; ++q) {
        typename F::Element acc = field.zero();
        for (std::size_t k = 0; k < split.p_prime_part_order; ++k) {
          const auto& l = map(i, split.index(k, q));
          if (!field.is_zero(l)) acc = field.add(acc, field.mul(table.inverse_value(j, k), l));
        }
        if (!field.is_zero(acc)) return CosetEquationFailure{i, j, q};
      }
    }
  }
  return std::nullopt;
}

namespace detail {

template <ExactField F>
void finish_with_search(const F& field, DecisionReport<F>& report, const DecideOptions& options) {
  auto search = zero_sum_subset_search(field, report.gamma, report.live, options);
  report.search_path = search.path;
  if (search.subset) {
    report.verdict = Verdict::NotMZ;
    report.witness = ZeroSumSubset{*search.subset};
  } else {
    report.verdict = Verdict::MZ;
  }
}

}  // namespace detail

/// Product-of-fields criterion over G itself (characteristic 0, or p not dividing |G|).
template <ExactField F>
DecisionReport<F> decide_semisimple(const F& field, const GroupSpec& group, const LinearMapMatrix<F>& map,
                                    const Preprocessed& pre, const DecideOptions& options = {}) {
  DecisionReport<F> report;
  report.branch = Branch::Semisimple;
  report.group = group;
  report.column_group = group;
  report.kept_rows = pre.kept_rows;
  report.notes = pre.notes;
  report.threads = options.threads;
  auto table = character_table(field, group);
  report.root_of_unity = table.root;
  report.gamma = gamma_matrix(field, map.select_rows(pre.kept_rows), table);
  std::tie(report.dead, report.live) = partition_dead_live(field, report.gamma);
  detail::finish_with_search(field, report, options);
  return report;
}

/// Modular criterion: split G = H x G~, gamma over the characters of G~ from the values of L on
/// G~, coset equations for dead characters, then the zero-sum search over live ones.
template <ExactField F>
DecisionReport<F> decide_modular(const F& field, const GroupSpec& group, const LinearMapMatrix<F>& map,
                                 const Preprocessed& pre, const DecideOptions& options = {}) {
  DecisionReport<F> report;
  report.branch = Branch::Modular;
  report.group = group;
  report.kept_rows = pre.kept_rows;
  report.notes = pre.notes;
  report.threads = options.threads;
  SylowSplit split = sylow_split(group, field.characteristic());
  report.column_group = split.p_prime_part;
  auto table = character_table(field, split.p_prime_part);
  report.root_of_unity = table.root;

  Matrix<typename F::Element> restricted(pre.kept_rows.size(), split.p_prime_part_order, field.zero());
  for (std::size_t r = 0; r < pre.kept_rows.size(); ++r) {
    for (std::size_t k = 0; k < split.p_prime_part_order; ++k) restricted(r, k) = map(pre.kept_rows[r], split.index(k, 0));
  }
  report.gamma = gamma_matrix(field, restricted, table);
  std::tie(report.dead, report.live) = partition_dead_live(field, report.gamma);
  if (auto failure = check_coset_equations(field, map, pre.kept_rows, split, report.dead, table)) {
    report.verdict = Verdict::NotMZ;
    report.witness = *failure;
  } else {
    detail::finish_with_search(field, report, options);
  }
  report.split = std::move(split);
  return report;
}

/// Decides whether Ker L is a Mathieu-Zhao space of K[G].
template <ExactField F>
DecisionReport<F> decide(const F& field, const GroupSpec& group, const LinearMapMatrix<F>& map,
                         const DecideOptions& options = {}) {
  Preprocessed pre = validate_and_preprocess(field, group, map, options);
  if (pre.kept_rows.empty()) {
    DecisionReport<F> report;
    report.branch = Branch::TrivialZeroMap;
    report.verdict = Verdict::MZ;
    report.group = group;
    report.column_group = group;
    report.notes = pre.notes;
    report.threads = options.threads;
    report.gamma = Matrix<typename F::Element>(0, group_order(group), field.zero());
    for (std::size_t j = 0; j < group_order(group); ++j) report.dead.push_back(j);
    return report;
  }
  DecisionReport<F> report = pre.modular ? decide_modular(field, group, map, pre, options)
                                         : decide_semisimple(field, group, map, pre, options);
  if (report.notes.identity_coefficient_all_zero && report.verdict == Verdict::MZ) {
    throw std::logic_error("inconsistent decision: 1_G lies in Ker L but the criterion reported MZ");
  }
  return report;
}

}  // namespace mzspace
