#include "mzspace/subset_search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace mzspace {

std::string to_string(SearchPath path) {
  switch (path) {
    case SearchPath::None:
      return "none";
    case SearchPath::Exhaustive:
      return "exhaustive";
    case SearchPath::MeetInTheMiddle:
      return "meet-in-the-middle";
  }
  return "unknown";
}

namespace {

using Mask = std::uint64_t;

std::vector<std::size_t> indices_of(Mask mask) {
  std::vector<std::size_t> out;
  while (mask != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

/// Smaller cardinality first, then lexicographic on the sorted index lists.
bool better(Mask a, Mask b) {
  int pa = std::popcount(a);
  int pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  Mask diff = a ^ b;
  return diff != 0 && (a & diff & (~diff + 1)) != 0;
}

/// Running lane sums with a count of nonzero lanes.
class LaneAccumulator {
 public:
  explicit LaneAccumulator(const LaneTable& table) : table_(table), sums_(table.width, 0) {}

  void add(std::size_t column) {
    const std::uint64_t* v = table_.column(column);
    for (std::size_t w = 0; w < table_.width; ++w) {
      std::uint64_t m = table_.moduli[w];
      std::uint64_t before = sums_[w];
      std::uint64_t s = before + v[w];
      if (s >= m) s -= m;
      sums_[w] = s;
      nonzero_ += static_cast<long>(s != 0) - static_cast<long>(before != 0);
    }
  }

  void remove(std::size_t column) {
    const std::uint64_t* v = table_.column(column);
    for (std::size_t w = 0; w < table_.width; ++w) {
      std::uint64_t m = table_.moduli[w];
      std::uint64_t before = sums_[w];
      std::uint64_t s = before >= v[w] ? before - v[w] : before + m - v[w];
      sums_[w] = s;
      nonzero_ += static_cast<long>(s != 0) - static_cast<long>(before != 0);
    }
  }

  bool zero() const { return nonzero_ == 0; }
  const std::vector<std::uint64_t>& sums() const { return sums_; }

 private:
  const LaneTable& table_;
  std::vector<std::uint64_t> sums_;
  long nonzero_ = 0;
};

std::string lane_key(const std::vector<std::uint64_t>& sums) {
  return std::string(reinterpret_cast<const char*>(sums.data()), sums.size() * sizeof(std::uint64_t));
}

std::optional<Mask> small_subsets(const LaneTable& table, const SubsetVerifier& verify) {
  const std::size_t t = table.columns;
  for (std::size_t a = 0; a < t; ++a) {
    LaneAccumulator acc(table);
    acc.add(a);
    if (acc.zero() && verify({a})) return Mask{1} << a;
  }
  for (std::size_t a = 0; a < t; ++a) {
    LaneAccumulator acc(table);
    acc.add(a);
    for (std::size_t b = a + 1; b < t; ++b) {
      acc.add(b);
      if (acc.zero() && verify({a, b})) return (Mask{1} << a) | (Mask{1} << b);
      acc.remove(b);
    }
  }
  return std::nullopt;
}

/// Visits every subset whose high columns (index >= low_bits) equal `prefix`, in Gray order
/// over the low columns. Returns the best verified zero-sum mask of the chunk.
std::optional<Mask> gray_chunk(const LaneTable& table, const SubsetVerifier& verify, std::size_t low_bits, Mask prefix,
                               std::mutex& verify_mutex) {
  LaneAccumulator acc(table);
  for (std::size_t j = low_bits; j < table.columns; ++j) {
    if ((prefix >> j) & 1U) acc.add(j);
  }
  std::optional<Mask> best;
  auto consider = [&](Mask mask) {
    if (mask == 0 || (best && !better(mask, *best))) return;
    std::lock_guard lock(verify_mutex);
    if (verify(indices_of(mask))) best = mask;
  };
  Mask gray = 0;
  if (acc.zero()) consider(prefix);
  const Mask steps = Mask{1} << low_bits;
  for (Mask i = 1; i < steps; ++i) {
    std::size_t bit = static_cast<std::size_t>(std::countr_zero(i));
    Mask flip = Mask{1} << bit;
    if (gray & flip) {
      acc.remove(bit);
    } else {
      acc.add(bit);
    }
    gray ^= flip;
    if (acc.zero()) consider(prefix | gray);
  }
  return best;
}

std::optional<Mask> exhaustive(const LaneTable& table, const SubsetVerifier& verify, unsigned threads) {
  if (auto small = small_subsets(table, verify)) return small;
  const std::size_t t = table.columns;
  if (t < 3) return std::nullopt;

  std::size_t prefix_bits = 0;
  if (threads > 1) {
    while (prefix_bits < t && (std::size_t{1} << prefix_bits) < 8 * static_cast<std::size_t>(threads)) ++prefix_bits;
  }
  const std::size_t low_bits = t - prefix_bits;
  const std::size_t chunks = std::size_t{1} << prefix_bits;

  std::mutex verify_mutex;
  std::vector<std::optional<Mask>> results(chunks);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t c = next++; c < chunks; c = next++) {
      results[c] = gray_chunk(table, verify, low_bits, static_cast<Mask>(c) << low_bits, verify_mutex);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  std::optional<Mask> best;
  for (const auto& r : results) {
    if (r && (!best || better(*r, *best))) best = r;
  }
  return best;
}

std::optional<Mask> meet_in_the_middle(const LaneTable& table, const SubsetVerifier& verify) {
  const std::size_t t = table.columns;
  const std::size_t half = t / 2;
  const std::size_t other = t - half;

  std::unordered_map<std::string, std::vector<Mask>> left;
  {
    LaneAccumulator acc(table);
    Mask gray = 0;
    left[lane_key(acc.sums())].push_back(0);
    for (Mask i = 1; i < (Mask{1} << half); ++i) {
      std::size_t bit = static_cast<std::size_t>(std::countr_zero(i));
      Mask flip = Mask{1} << bit;
      if (gray & flip) {
        acc.remove(bit);
      } else {
        acc.add(bit);
      }
      gray ^= flip;
      left[lane_key(acc.sums())].push_back(gray);
    }
  }
  for (auto& [key, masks] : left) std::sort(masks.begin(), masks.end(), better);

  LaneAccumulator acc(table);
  std::vector<std::uint64_t> target(table.width);
  Mask gray = 0;
  auto probe = [&]() -> std::optional<Mask> {
    const auto& sums = acc.sums();
    for (std::size_t w = 0; w < table.width; ++w) target[w] = sums[w] == 0 ? 0 : table.moduli[w] - sums[w];
    auto it = left.find(lane_key(target));
    if (it == left.end()) return std::nullopt;
    for (Mask a : it->second) {
      Mask mask = a | (gray << half);
      if (mask != 0 && verify(indices_of(mask))) return mask;
    }
    return std::nullopt;
  };
  if (auto hit = probe()) return hit;
  for (Mask i = 1; i < (Mask{1} << other); ++i) {
    std::size_t bit = static_cast<std::size_t>(std::countr_zero(i));
    Mask flip = Mask{1} << bit;
    if (gray & flip) {
      acc.remove(half + bit);
    } else {
      acc.add(half + bit);
    }
    gray ^= flip;
    if (auto hit = probe()) return hit;
  }
  return std::nullopt;
}

}  // namespace

SubsetSearchResult find_zero_sum_subset(const LaneTable& table, const SubsetVerifier& verify,
                                        const SubsetSearchOptions& options) {
  if (table.columns > 64) throw std::invalid_argument("subset search supports at most 64 columns");
  if (table.moduli.size() != table.width || table.values.size() != table.columns * table.width) {
    throw std::invalid_argument("malformed lane table");
  }
  SubsetSearchResult result;
  if (table.columns == 0) return result;
  std::optional<Mask> found;
  if (table.columns <= options.exhaustive_limit) {
    result.path = SearchPath::Exhaustive;
    found = exhaustive(table, verify, std::max(1U, options.threads));
  } else {
    result.path = SearchPath::MeetInTheMiddle;
    found = meet_in_the_middle(table, verify);
  }
  if (found) result.subset = indices_of(*found);
  return result;
}

}  // namespace mzspace
