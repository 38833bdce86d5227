#include "mzspace/instance_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mzspace/errors.hpp"

namespace mzspace {

namespace {

struct RawEntry {
  std::string text;
  std::size_t line;
  std::size_t column;
};

struct RawRow {
  std::vector<RawEntry> entries;
  std::size_t line;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

/// [begin, end) with surrounding blanks removed.
std::pair<std::size_t, std::size_t> trim_range(std::string_view s, std::size_t begin, std::size_t end) {
  while (begin < end && is_space(s[begin])) ++begin;
  while (end > begin && is_space(s[end - 1])) --end;
  return {begin, end};
}

RawRow split_row(std::string_view line, std::size_t begin, std::size_t end, std::size_t line_no) {
  RawRow row{{}, line_no};
  std::size_t start = begin;
  for (std::size_t i = begin; i <= end; ++i) {
    if (i == end || line[i] == ',') {
      auto [b, e] = trim_range(line, start, i);
      if (b == e) throw ParseError("empty map entry", line_no, b + 1);
      row.entries.push_back(RawEntry{std::string(line.substr(b, e - b)), line_no, b + 1});
      start = i + 1;
    }
  }
  return row;
}

std::uint64_t parse_positive(std::string_view text, std::size_t line_no, std::size_t column) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    throw ParseError("expected a positive integer", line_no, column);
  }
  return value;
}

template <class F>
std::vector<std::vector<std::string>> canonical_rows(const F& field, const std::vector<RawRow>& rows) {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : rows) {
    std::vector<std::string> canon;
    for (const auto& entry : row.entries) {
      try {
        canon.push_back(field.format(field.parse(entry.text)));
      } catch (const ParseError& e) {
        throw ParseError(e.message(), entry.line, entry.column + e.column() - 1);
      } catch (const InputError& e) {
        throw ParseError(e.what(), entry.line, entry.column);
      }
    }
    out.push_back(std::move(canon));
  }
  return out;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  Instance out;
  std::optional<std::size_t> group_line;
  std::optional<std::size_t> field_line;
  std::optional<std::size_t> map_line;
  bool in_map = false;
  std::vector<RawRow> rows;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

    std::size_t end = line.find('#');
    if (end == std::string_view::npos) end = line.size();
    auto [b, e] = trim_range(line, 0, end);
    if (b == e) continue;

    std::size_t colon = line.find(':', b);
    if (colon == std::string_view::npos || colon >= e) {
      if (!in_map) throw ParseError("expected 'key: value'", line_no, b + 1);
      rows.push_back(split_row(line, b, e, line_no));
      continue;
    }
    in_map = false;
    auto [kb, ke] = trim_range(line, b, colon);
    std::string_view key = line.substr(kb, ke - kb);
    auto [vb, ve] = trim_range(line, colon + 1, e);
    std::string_view value = line.substr(vb, ve - vb);

    auto once = [&](std::optional<std::size_t>& seen) {
      if (seen) throw ParseError("duplicate '" + std::string(key) + "' section", line_no, kb + 1);
      seen = line_no;
    };
    if (key == "group") {
      once(group_line);
      try {
        out.group = parse_group_spec(value);
      } catch (const InputError& ex) {
        throw ParseError(ex.what(), line_no, vb + 1);
      }
    } else if (key == "field") {
      once(field_line);
      try {
        out.field = parse_field_spec(value);
      } catch (const InputError& ex) {
        throw ParseError(ex.what(), line_no, vb + 1);
      }
    } else if (key == "map") {
      once(map_line);
      in_map = true;
      if (!value.empty()) rows.push_back(split_row(line, vb, ve, line_no));
    } else if (key == "budget") {
      if (out.budget) throw ParseError("duplicate 'budget' section", line_no, kb + 1);
      out.budget = parse_positive(value, line_no, vb + 1);
    } else if (key == "pairs") {
      if (out.pairs) throw ParseError("duplicate 'pairs' section", line_no, kb + 1);
      out.pairs = parse_positive(value, line_no, vb + 1);
    } else {
      throw ParseError("unknown section '" + std::string(key) + "'", line_no, kb + 1);
    }
  }

  if (!group_line) throw ParseError("missing 'group' section", line_no, 1);
  if (!field_line) throw ParseError("missing 'field' section", line_no, 1);
  if (!map_line) throw ParseError("missing 'map' section", line_no, 1);
  if (rows.empty()) throw ParseError("map has no rows", *map_line, 1);

  const std::uint64_t n = group_order(out.group);
  for (const auto& row : rows) {
    if (row.entries.size() != n) {
      throw ParseError("row has " + std::to_string(row.entries.size()) + " entries, expected |G| = " +
                           std::to_string(n),
                       row.line, 1);
    }
  }
  AnyField field = make_field(out.field);
  out.map = std::visit([&](const auto& f) { return canonical_rows(f, rows); }, field);
  return out;
}

Instance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

std::string emit_instance(const Instance& instance) {
  std::ostringstream out;
  out << "group: " << to_string(instance.group) << "\n";
  out << "field: " << to_string(instance.field) << "\n";
  out << "map:\n";
  for (const auto& row : instance.map) {
    out << " ";
    for (std::size_t j = 0; j < row.size(); ++j) out << (j == 0 ? " " : ", ") << row[j];
    out << "\n";
  }
  if (instance.budget) out << "budget: " << *instance.budget << "\n";
  if (instance.pairs) out << "pairs: " << *instance.pairs << "\n";
  return out.str();
}

LinearMapMatrix<FiniteField> random_map(const FiniteField& field, std::size_t rows, std::size_t cols,
                                        std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, field.cardinality() - 1);
  LinearMapMatrix<FiniteField> out(rows, cols, field.zero());
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = field.from_code(pick(rng));
  }
  return out;
}

LinearMapMatrix<CyclotomicField> random_map(const CyclotomicField& field, std::size_t rows, std::size_t cols,
                                            std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<long long> power(0, field.order() - 1);
  std::uniform_int_distribution<int> terms(0, 2);
  LinearMapMatrix<CyclotomicField> out(rows, cols, field.zero());
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      auto x = field.zero();
      for (int t = terms(rng); t > 0; --t) {
        x = field.add(x, field.mul(field.from_integer(coeff(rng)), field.zeta_power(power(rng))));
      }
      out(i, j) = x;
    }
  }
  return out;
}

void write_random_corpus(const std::filesystem::path& dir, const FieldSpec& spec, const GroupSpec& group,
                         std::size_t count, std::size_t max_rows, std::uint64_t seed) {
  std::filesystem::create_directories(dir);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> row_count(1, std::max<std::size_t>(1, max_rows));
  AnyField field = make_field(spec);
  const std::size_t n = group_order(group);
  for (std::size_t c = 0; c < count; ++c) {
    const std::size_t r = row_count(rng);
    Instance inst = std::visit(
        [&](const auto& f) { return make_instance(f, spec, group, random_map(f, r, n, rng)); }, field);
    char name[32];
    std::snprintf(name, sizeof name, "inst_%04zu.mz", c);
    std::ofstream(dir / name) << emit_instance(inst);
  }
  std::ofstream manifest(dir / "MANIFEST");
  manifest << "generator: mt19937_64\n"
           << "seed: " << seed << "\n"
           << "field: " << to_string(spec) << "\n"
           << "group: " << to_string(group) << "\n"
           << "count: " << count << "\n"
           << "max_rows: " << max_rows << "\n";
}

}  // namespace mzspace
