#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mzspace/characters.hpp"
#include "mzspace/decision.hpp"
#include "mzspace/oracle.hpp"

namespace mzspace {

inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::ordered_json;

namespace detail {

inline Json one_based(const std::vector<std::size_t>& xs) {
  Json out = Json::array();
  for (auto x : xs) out.push_back(x + 1);
  return out;
}

inline std::string chi_list(const std::vector<std::size_t>& xs) {
  if (xs.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", chi[" : "chi[") + std::to_string(xs[i] + 1) + "]";
  return out;
}

template <ExactField F>
Json matrix_json(const F& field, const Matrix<typename F::Element>& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(field.format(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

template <ExactField F>
void matrix_text(std::ostream& out, const F& field, const Matrix<typename F::Element>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? ", " : "") << field.format(m(i, j));
    out << "]\n";
  }
}

}  // namespace detail

inline Json witness_json(const Witness& w) {
  if (const auto* t = std::get_if<ZeroSumSubset>(&w)) {
    return Json{{"kind", "zero-sum-subset"}, {"columns", detail::one_based(t->columns)}};
  }
  if (const auto* f = std::get_if<CosetEquationFailure>(&w)) {
    return Json{{"kind", "coset-equation"}, {"row", f->row + 1}, {"character", f->character + 1}, {"offset", f->offset + 1}};
  }
  return nullptr;
}

/// One line: "subset 2 3", "coset-equation row 1 character 1 offset 2" or "none".
inline std::string witness_text(const Witness& w) {
  if (const auto* t = std::get_if<ZeroSumSubset>(&w)) {
    std::string out = "subset";
    for (auto c : t->columns) out += " " + std::to_string(c + 1);
    return out;
  }
  if (const auto* f = std::get_if<CosetEquationFailure>(&w)) {
    return "coset-equation row " + std::to_string(f->row + 1) + " character " + std::to_string(f->character + 1) +
           " offset " + std::to_string(f->offset + 1);
  }
  return "none";
}

template <ExactField F>
Json report_json(const F& field, const DecisionReport<F>& r) {
  Json doc;
  doc["engine"] = Json{{"name", "mzspace"}, {"version", kVersion}, {"threads", r.threads}, {"deterministic", r.threads <= 1}};
  doc["field"] = Json{{"name", field.name()}, {"description", field.describe()}, {"characteristic", field.characteristic()}};
  doc["group"] = Json{{"spec", to_string(r.group)},
                      {"order", group_order(r.group)},
                      {"enumeration", "mixed radix, last factor fastest, g[1] = identity"}};
  doc["root_of_unity"] = r.root_of_unity ? Json(field.format(*r.root_of_unity)) : Json(nullptr);
  doc["root_order"] = group_exponent(r.column_group);
  doc["branch"] = to_string(r.branch);
  doc["column_group"] = to_string(r.column_group);
  if (r.split) {
    doc["split"] = Json{{"p", r.split->p}, {"H", to_string(r.split->p_part)}, {"G~", to_string(r.split->p_prime_part)}};
  } else {
    doc["split"] = nullptr;
  }
  doc["rows"] = Json{{"input", r.notes.rows_in}, {"kept", detail::one_based(r.kept_rows)}, {"reduced", r.notes.rows_reduced()}};
  doc["flags"] = Json{{"ideal", r.notes.is_ideal},
                      {"vg", r.notes.is_vg},
                      {"identity_coefficients_zero", r.notes.identity_coefficient_all_zero}};
  doc["gamma"] = detail::matrix_json(field, r.gamma);
  doc["dead"] = detail::one_based(r.dead);
  doc["live"] = detail::one_based(r.live);
  doc["search_path"] = to_string(r.search_path);
  doc["verdict"] = to_string(r.verdict);
  doc["witness"] = witness_json(r.witness);
  return doc;
}

template <ExactField F>
std::string report_text(const F& field, const DecisionReport<F>& r) {
  std::ostringstream out;
  out << "mzspace " << kVersion << ", threads " << r.threads << (r.threads <= 1 ? " (deterministic)" : "") << "\n";
  out << "field: " << field.describe() << "\n";
  out << "group: " << to_string(r.group) << ", n = " << group_order(r.group)
      << ", elements g[1..n] in mixed radix order, last factor fastest\n";
  if (r.root_of_unity) {
    out << "root of unity: " << field.format(*r.root_of_unity) << " of order " << group_exponent(r.column_group) << "\n";
  }
  out << "branch: " << to_string(r.branch) << "\n";
  if (r.split) {
    out << "split: H = " << to_string(r.split->p_part) << ", G~ = " << to_string(r.split->p_prime_part) << "\n";
  }
  out << "rows: " << r.notes.rows_kept << " kept of " << r.notes.rows_in;
  if (r.notes.rows_reduced()) out << " (dependent rows dropped)";
  out << "\n";
  if (r.notes.is_vg) out << "note: Ker L = V_G\n";
  if (r.notes.is_ideal) out << "note: Ker L is the augmentation ideal\n";
  if (r.notes.identity_coefficient_all_zero && r.branch != Branch::TrivialZeroMap) {
    out << "note: 1 lies in Ker L\n";
  }
  out << "gamma over " << to_string(r.column_group) << ":\n";
  detail::matrix_text(out, field, r.gamma);
  out << "dead: " << detail::chi_list(r.dead) << "\n";
  out << "live: " << detail::chi_list(r.live) << "\n";
  out << "search: " << to_string(r.search_path) << "\n";
  out << "verdict: " << to_string(r.verdict) << "\n";
  out << "witness: " << witness_text(r.witness) << "\n";
  return out.str();
}

template <ExactField F>
Json characters_json(const F& field, const CharacterTable<F>& t) {
  Json rows = Json::array();
  for (std::size_t j = 0; j < t.size; ++j) {
    Json row = Json::array();
    for (std::size_t k = 0; k < t.size; ++k) row.push_back(field.format(t.value(j, k)));
    rows.push_back(std::move(row));
  }
  return Json{{"group", to_string(t.group)}, {"field", field.name()}, {"root_of_unity", field.format(t.root)},
              {"characters", std::move(rows)}};
}

template <ExactField F>
std::string characters_text(const F& field, const CharacterTable<F>& t) {
  std::ostringstream out;
  out << "characters of " << to_string(t.group) << " over " << field.name() << ", root " << field.format(t.root) << "\n";
  for (std::size_t j = 0; j < t.size; ++j) {
    out << "chi[" << j + 1 << "]: (";
    for (std::size_t k = 0; k < t.size; ++k) out << (k ? ", " : "") << field.format(t.value(j, k));
    out << ")\n";
  }
  return out.str();
}

template <ExactField F>
Json idempotents_json(const GroupAlgebra<F>& algebra, const std::vector<AlgebraElement<F>>& es) {
  Json list = Json::array();
  for (const auto& e : es) list.push_back(algebra.format(e));
  return Json{{"group", to_string(algebra.group().spec())}, {"field", algebra.field().name()}, {"idempotents", std::move(list)}};
}

template <ExactField F>
std::string idempotents_text(const GroupAlgebra<F>& algebra, const std::vector<AlgebraElement<F>>& es) {
  std::ostringstream out;
  out << "primitive idempotents of " << algebra.field().name() << "[" << to_string(algebra.group().spec()) << "]\n";
  for (std::size_t j = 0; j < es.size(); ++j) out << "e[" << j + 1 << "] = " << algebra.format(es[j]) << "\n";
  return out.str();
}

template <ExactField F>
Json gamma_json(const F& field, const DecisionReport<F>& r) {
  return Json{{"column_group", to_string(r.column_group)}, {"rows", detail::one_based(r.kept_rows)},
              {"gamma", detail::matrix_json(field, r.gamma)}};
}

template <ExactField F>
std::string gamma_text(const F& field, const DecisionReport<F>& r) {
  std::ostringstream out;
  out << "gamma over " << to_string(r.column_group) << ", rows";
  for (auto i : r.kept_rows) out << " " << i + 1;
  out << "\n";
  detail::matrix_text(out, field, r.gamma);
  return out.str();
}

inline Json oracle_json(const GroupAlgebra<FiniteField>& algebra, const OracleResult& r) {
  Json doc{{"verdict", to_string(r.verdict)}, {"roots", r.root_count}, {"pair_mode", to_string(r.mode)}};
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    doc["counterexample"] = Json{{"u", algebra.format(c.u)},
                                 {"a", algebra.format(c.a)},
                                 {"b", algebra.format(c.b)},
                                 {"exponent", c.exponent},
                                 {"preperiod", c.cycle.preperiod},
                                 {"period", c.cycle.period}};
  } else {
    doc["counterexample"] = nullptr;
  }
  return doc;
}

inline std::string oracle_text(const GroupAlgebra<FiniteField>& algebra, const OracleResult& r) {
  std::ostringstream out;
  out << "roots: " << r.root_count << "\n";
  out << "pairs: " << to_string(r.mode) << "\n";
  out << "verdict: " << to_string(r.verdict) << "\n";
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    out << "counterexample: u = " << algebra.format(c.u) << ", a = " << algebra.format(c.a)
        << ", b = " << algebra.format(c.b) << ", m = " << c.exponent << " (mod " << c.cycle.period << ", m >= "
        << c.cycle.preperiod << ")\n";
  }
  return out.str();
}

}  // namespace mzspace
