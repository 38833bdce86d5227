#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace mzspace {

enum class SearchPath { None, Exhaustive, MeetInTheMiddle };

std::string to_string(SearchPath path);

/// Additive images of the candidate columns: each column is a vector of `width` residues,
/// lane w taken modulo moduli[w]. A subset whose lane sums all vanish is a candidate; the
/// verifier decides whether it is a genuine zero sum.
struct LaneTable {
  std::size_t columns = 0;
  std::size_t width = 0;
  std::vector<std::uint64_t> moduli;  // width
  std::vector<std::uint64_t> values;  // columns x width, each value < its modulus

  const std::uint64_t* column(std::size_t j) const { return values.data() + j * width; }
};

/// Exact check of a candidate subset (sorted local column indices).
using SubsetVerifier = std::function<bool(const std::vector<std::size_t>&)>;

struct SubsetSearchOptions {
  std::size_t exhaustive_limit = 28;
  unsigned threads = 1;
};

struct SubsetSearchResult {
  std::optional<std::vector<std::size_t>> subset;
  SearchPath path = SearchPath::None;
};

/// Finds a nonempty subset T of columns with zero sum in every lane (and accepted by `verify`).
///
/// Up to `exhaustive_limit` columns the search is exhaustive and returns the minimum-cardinality
/// subset, ties broken lexicographically: pairs are tried first, then every subset is visited in
/// Gray-code order with the lane sums updated by one column per step. Above the limit the columns
/// are split in halves and the sums of one half are matched against the negated sums of the
/// other (meet in the middle); the reported subset is then not necessarily minimal.
SubsetSearchResult find_zero_sum_subset(const LaneTable& table, const SubsetVerifier& verify,
                                        const SubsetSearchOptions& options = {});

}  // namespace mzspace
