#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "mzspace/abelian_group.hpp"
#include "mzspace/field_spec.hpp"
#include "mzspace/group_algebra.hpp"

namespace mzspace {

/// One decision problem. Map entries are kept as canonical literals of the declared field.
///
///   # comment
///   group: Z2 x Z3
///   field: GF(2^2)
///   map:
///     1, 0, z, 1 + z, 0, 0
///   budget: 4096
///   pairs: 65536
struct Instance {
  GroupSpec group;
  FieldSpec field;
  std::vector<std::vector<std::string>> map;
  std::optional<std::uint64_t> budget;
  std::optional<std::uint64_t> pairs;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Throws ParseError with line/column, or InputError for semantic problems (row length,
/// unsplit or unknown field).
Instance parse_instance(std::string_view text);
Instance read_instance(const std::filesystem::path& path);

/// Canonical text form; parse_instance(emit_instance(x)) == x.
std::string emit_instance(const Instance& instance);

template <ExactField F>
LinearMapMatrix<F> instance_map(const F& field, const Instance& instance) {
  const std::size_t rows = instance.map.size();
  const std::size_t cols = rows == 0 ? 0 : instance.map.front().size();
  LinearMapMatrix<F> out(rows, cols, field.zero());
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = field.parse(instance.map[i][j]);
  }
  return out;
}

template <ExactField F>
Instance make_instance(const F& field, const FieldSpec& spec, const GroupSpec& group, const LinearMapMatrix<F>& map) {
  Instance out;
  out.group = group;
  out.field = spec;
  for (std::size_t i = 0; i < map.rows(); ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < map.cols(); ++j) row.push_back(field.format(map(i, j)));
    out.map.push_back(std::move(row));
  }
  return out;
}

/// Uniform entries over a finite field; small integer combinations of powers of zeta in
/// characteristic 0. Zero rows are possible.
LinearMapMatrix<FiniteField> random_map(const FiniteField& field, std::size_t rows, std::size_t cols,
                                        std::mt19937_64& rng);
LinearMapMatrix<CyclotomicField> random_map(const CyclotomicField& field, std::size_t rows, std::size_t cols,
                                            std::mt19937_64& rng);

/// Writes `count` random instances (1..max_rows rows each) into `dir` as inst_0000.mz, ...
/// plus a MANIFEST recording the seed and parameters.
void write_random_corpus(const std::filesystem::path& dir, const FieldSpec& field, const GroupSpec& group,
                         std::size_t count, std::size_t max_rows, std::uint64_t seed);

}  // namespace mzspace
