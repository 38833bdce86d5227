// mzspace: decide whether Ker L is a Mathieu-Zhao space of K[G].
//   exit 0 = MZ, 1 = NotMZ (or crosscheck disagreement), 2 = input/validation error

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "mzspace/decision.hpp"
#include "mzspace/instance_io.hpp"
#include "mzspace/oracle.hpp"
#include "mzspace/report.hpp"

namespace fs = std::filesystem;
using namespace mzspace;

namespace {

struct Flags {
  bool json = false;
  bool witness_only = false;
  unsigned threads = 1;
  std::uint64_t budget = 0;  // 0: instance value or default
  bool unsafe_large = false;
  std::uint64_t seed = 1;
};

int exit_code(Verdict v) { return v == Verdict::MZ ? 0 : 1; }

DecideOptions decide_options(const Flags& flags) {
  DecideOptions o;
  o.threads = flags.threads;
  o.unsafe_large = flags.unsafe_large;
  return o;
}

OracleBudget oracle_budget(const Flags& flags, const Instance& inst) {
  OracleBudget b;
  if (inst.budget) b.max_algebra_size = *inst.budget;
  if (flags.budget) b.max_algebra_size = flags.budget;
  if (inst.pairs) b.max_pairs = *inst.pairs;
  return b;
}

void print_json(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

int cmd_decide(const fs::path& path, const Flags& flags) {
  Instance inst = read_instance(path);
  AnyField any = make_field(inst.field);
  return std::visit(
      [&](const auto& field) {
        auto report = decide(field, inst.group, instance_map(field, inst), decide_options(flags));
        if (flags.witness_only) {
          if (flags.json) {
            print_json(witness_json(report.witness));
          } else {
            std::cout << witness_text(report.witness) << "\n";
          }
        } else if (flags.json) {
          print_json(report_json(field, report));
        } else {
          std::cout << report_text(field, report);
        }
        return exit_code(report.verdict);
      },
      any);
}

/// Characters and idempotents live on G, or on G~ when char K divides |G|.
GroupSpec table_group(std::uint64_t characteristic, const GroupSpec& group) {
  if (characteristic != 0 && group_order(group) % characteristic == 0) return sylow_split(group, characteristic).p_prime_part;
  return group;
}

int cmd_characters(const fs::path& path, const Flags& flags) {
  Instance inst = read_instance(path);
  AnyField any = make_field(inst.field);
  std::visit(
      [&](const auto& field) {
        auto table = character_table(field, table_group(field.characteristic(), inst.group));
        if (flags.json) {
          print_json(characters_json(field, table));
        } else {
          std::cout << characters_text(field, table);
        }
      },
      any);
  return 0;
}

int cmd_idempotents(const fs::path& path, const Flags& flags) {
  Instance inst = read_instance(path);
  AnyField any = make_field(inst.field);
  std::visit(
      [&](const auto& field) {
        GroupSpec spec = table_group(field.characteristic(), inst.group);
        AbelianGroup group(spec);
        GroupAlgebra algebra(field, group);
        auto es = primitive_idempotents(algebra, character_table(field, spec));
        if (flags.json) {
          print_json(idempotents_json(algebra, es));
        } else {
          std::cout << idempotents_text(algebra, es);
        }
      },
      any);
  return 0;
}

int cmd_gamma(const fs::path& path, const Flags& flags) {
  Instance inst = read_instance(path);
  AnyField any = make_field(inst.field);
  std::visit(
      [&](const auto& field) {
        auto report = decide(field, inst.group, instance_map(field, inst), decide_options(flags));
        if (flags.json) {
          print_json(gamma_json(field, report));
        } else {
          std::cout << gamma_text(field, report);
        }
      },
      any);
  return 0;
}

const FiniteField& require_finite(const AnyField& any) {
  const auto* f = std::get_if<FiniteField>(&any);
  if (f == nullptr) throw InputError("the oracle needs a finite field");
  return *f;
}

int cmd_oracle(const fs::path& path, const Flags& flags) {
  Instance inst = read_instance(path);
  AnyField any = make_field(inst.field);
  const FiniteField& field = require_finite(any);
  MzOracle oracle(field, inst.group, oracle_budget(flags, inst), flags.threads);
  OracleResult result = oracle.definitional_mz_check(instance_map(field, inst));
  if (flags.json) {
    print_json(oracle_json(oracle.algebra(), result));
  } else {
    std::cout << oracle_text(oracle.algebra(), result);
  }
  return exit_code(result.verdict);
}

int cmd_crosscheck(const fs::path& dir, const Flags& flags) {
  if (!fs::is_directory(dir)) throw InputError(dir.string() + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".mz") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::size_t disagreements = 0;
  std::size_t mz = 0;
  for (const auto& file : files) {
    Instance inst;
    try {
      inst = read_instance(file);
    } catch (const InputError& e) {
      throw InputError(file.string() + ": " + e.what());
    }
    AnyField any = make_field(inst.field);
    const FiniteField& field = require_finite(any);
    auto map = instance_map(field, inst);
    Verdict engine = decide(field, inst.group, map, decide_options(flags)).verdict;
    MzOracle oracle(field, inst.group, oracle_budget(flags, inst), flags.threads);
    Verdict truth = oracle.definitional_mz_check(map).verdict;
    if (engine != truth) {
      ++disagreements;
      std::cout << "DISAGREE " << file.string() << ": decide " << to_string(engine) << ", oracle " << to_string(truth)
                << "\n";
    }
    if (truth == Verdict::MZ) ++mz;
  }
  std::cout << files.size() << " instances, " << mz << " MZ, " << files.size() - mz << " NotMZ, " << disagreements
            << " disagreements\n";
  return disagreements == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mathieu-Zhao space decision for kernels of linear maps on abelian group algebras"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Flags flags;
  fs::path path;
  auto common = [&](CLI::App* sub, bool with_witness) {
    sub->add_option("path", path, "instance file")->required();
    sub->add_flag("--json", flags.json, "machine-readable output");
    sub->add_option("--threads", flags.threads, "worker threads")->check(CLI::Range(1U, 256U));
    sub->add_flag("--unsafe-large", flags.unsafe_large, "lift the n <= 64, r <= 8 limits");
    if (with_witness) sub->add_flag("--witness-only", flags.witness_only, "print only the witness");
  };

  auto* decide_cmd = app.add_subcommand("decide", "decide the MZ property");
  common(decide_cmd, true);
  auto* characters_cmd = app.add_subcommand("characters", "character table");
  common(characters_cmd, false);
  auto* idempotents_cmd = app.add_subcommand("idempotents", "primitive idempotents");
  common(idempotents_cmd, false);
  auto* gamma_cmd = app.add_subcommand("gamma", "gamma matrix");
  common(gamma_cmd, false);

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force check from the definition");
  common(oracle_cmd, false);
  oracle_cmd->add_option("--budget", flags.budget, "cap on |K[G]|")->check(CLI::PositiveNumber);

  auto* cross_cmd = app.add_subcommand("crosscheck", "decide vs oracle over a directory of .mz files");
  common(cross_cmd, false);
  cross_cmd->add_option("--budget", flags.budget, "cap on |K[G]|")->check(CLI::PositiveNumber);

  auto* emit_cmd = app.add_subcommand("emit-instance", "canonical instance text, or random instances with --seed");
  std::string group_text;
  std::string field_text;
  std::size_t rows = 1;
  std::size_t count = 0;
  fs::path out_dir;
  emit_cmd->add_option("path", path, "instance file to canonicalize");
  emit_cmd->add_option("--seed", flags.seed, "generator seed");
  emit_cmd->add_option("--group", group_text, "group for random instances, e.g. Z2xZ3");
  emit_cmd->add_option("--field", field_text, "field for random instances, e.g. GF(4)");
  emit_cmd->add_option("--rows", rows, "maximum rows")->check(CLI::Range(1, 64));
  emit_cmd->add_option("--count", count, "write this many instances to --out");
  emit_cmd->add_option("--out", out_dir, "corpus directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*decide_cmd) return cmd_decide(path, flags);
    if (*characters_cmd) return cmd_characters(path, flags);
    if (*idempotents_cmd) return cmd_idempotents(path, flags);
    if (*gamma_cmd) return cmd_gamma(path, flags);
    if (*oracle_cmd) return cmd_oracle(path, flags);
    if (*cross_cmd) return cmd_crosscheck(path, flags);
    if (*emit_cmd) {
      if (!path.empty()) {
        std::cout << emit_instance(read_instance(path));
        return 0;
      }
      if (group_text.empty() || field_text.empty()) throw InputError("emit-instance needs a path or --group and --field");
      FieldSpec spec = parse_field_spec(field_text);
      GroupSpec group = parse_group_spec(group_text);
      if (count > 0) {
        if (out_dir.empty()) throw InputError("--count needs --out");
        write_random_corpus(out_dir, spec, group, count, rows, flags.seed);
        std::cout << "wrote " << count << " instances to " << out_dir.string() << "\n";
        return 0;
      }
      std::mt19937_64 rng(flags.seed);
      AnyField any = make_field(spec);
      std::visit(
          [&](const auto& f) {
            std::cout << emit_instance(make_instance(f, spec, group, random_map(f, rows, group_order(group), rng)));
          },
          any);
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
