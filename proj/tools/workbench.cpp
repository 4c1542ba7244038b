// Command-line front end: scenario runner, operator comparison, postulate
// verification driver, and counteracts queries.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "rev/counteracts.hpp"
#include "rev/formula.hpp"
#include "rev/operators.hpp"
#include "rev/postulates.hpp"
#include "rev/scenario.hpp"

namespace {

constexpr const char* kDefaultAtomNames = "pqrstuvwxyzabcde";

rev::Language default_language(int atoms) {
  std::vector<std::string> names;
  for (int i = 0; i < atoms; ++i) names.push_back(std::string(1, kDefaultAtomNames[i]));
  return rev::Language(names);
}

std::vector<rev::Operator> parse_ops(const std::string& csv) {
  std::vector<rev::Operator> ops;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    auto op = rev::operator_by_name(tok);
    if (!op) throw CLI::ValidationError("unknown operator '" + tok + "'");
    ops.push_back(*op);
  }
  return ops;
}

std::vector<rev::Postulate> parse_postulates(const std::string& csv) {
  if (csv == "all") return rev::all_postulates();
  std::vector<rev::Postulate> ps;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    auto p = rev::postulate_by_name(tok);
    if (!p) throw CLI::ValidationError("unknown postulate '" + tok + "'");
    ps.push_back(*p);
  }
  return ps;
}

void write_out(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

int cmd_verify(int atoms, const std::string& op_name, const std::string& postulates,
               const std::string& mode_name, std::uint64_t samples, std::uint64_t seed,
               int max_seq_len, const std::string& oracle_name, const std::string& format,
               const std::string& out_path) {
  rev::Language lang = default_language(atoms);
  auto op = rev::operator_by_name(op_name);
  if (!op) {
    std::cerr << "unknown operator '" << op_name << "'\n";
    return 2;
  }
  rev::VerifyMode mode =
      mode_name == "sample" ? rev::VerifyMode::Sample : rev::VerifyMode::Exhaustive;
  rev::VerifyBudget budget{samples, seed, max_seq_len};
  rev::OperatorFn fn = rev::operator_fn(*op);

  bool any_violation = false;
  nlohmann::json jout = nlohmann::json::array();
  std::ostringstream text;

  if (!postulates.empty()) {
    auto reports =
        rev::verify(fn, op_name, parse_postulates(postulates), lang, mode, budget);
    for (const auto& r : reports) {
      if (r.violations > 0) any_violation = true;
      if (format == "json")
        jout.push_back(rev::report_json(r, lang));
      else
        text << rev::report_text(r, lang) << '\n';
    }
  }

  if (!oracle_name.empty()) {
    auto oracle = rev::operator_by_name(oracle_name);
    if (!oracle) {
      std::cerr << "unknown oracle operator '" << oracle_name << "'\n";
      return 2;
    }
    rev::OperatorFn oracle_fn = rev::operator_fn(*oracle);
    std::uint64_t pairs = 0, mismatches = 0;
    std::string first_mismatch;
    auto probe = [&](const rev::TotalPreorder& state, const rev::ModelSet& input) {
      ++pairs;
      if (!(fn(state, input) == oracle_fn(state, input))) {
        ++mismatches;
        if (first_mismatch.empty())
          first_mismatch = state.to_text(lang);
      }
    };
    if (mode == rev::VerifyMode::Exhaustive) {
      std::uint64_t top = (std::uint64_t{1} << lang.universe_size()) - 1;
      rev::for_each_preorder(lang.atom_count(), [&](const rev::TotalPreorder& state) {
        for (std::uint64_t m = 1; m <= top; ++m)
          probe(state, rev::ModelSet::from_mask(lang.atom_count(), m));
        return true;
      });
    } else {
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<int> bit(0, 1);
      for (std::uint64_t i = 0; i < samples; ++i) {
        rev::TotalPreorder state = rev::sample_preorder(lang, rng());
        rev::ModelSet input(lang.atom_count());
        do {
          input = rev::ModelSet(lang.atom_count());
          for (rev::Valuation v = 0; v < lang.universe_size(); ++v)
            if (bit(rng)) input.insert(v);
        } while (input.empty());
        probe(state, input);
      }
    }
    if (mismatches > 0) any_violation = true;
    if (format == "json") {
      nlohmann::json j;
      j["operator"] = op_name;
      j["oracle"] = oracle_name;
      j["mode"] = mode == rev::VerifyMode::Exhaustive ? "exhaustive" : "sample";
      j["pairs_checked"] = pairs;
      j["mismatches"] = mismatches;
      if (!first_mismatch.empty()) j["first_mismatch_state"] = first_mismatch;
      jout.push_back(j);
    } else {
      text << op_name << " vs-oracle " << oracle_name << ' '
           << (mode == rev::VerifyMode::Exhaustive ? "exhaustive" : "sample")
           << " pairs=" << pairs << " mismatches=" << mismatches;
      if (!first_mismatch.empty()) text << " first_mismatch_state=" << first_mismatch;
      text << '\n';
    }
  }

  write_out(out_path, format == "json" ? jout.dump(2) + "\n" : text.str());
  return any_violation ? 1 : 0;
}

// Emits a classroom scenario: n boys, m girls, unique competition winner,
// initially one of the boys is believed to have won, then each boy testifies
// "either a girl won or I did".
std::string classroom_scenario(int boys, int girls) {
  std::ostringstream out;
  out << "# classroom template: " << boys << " boys, " << girls << " girls\n";
  out << "atoms";
  for (int i = 1; i <= boys; ++i) out << " p" << i;
  for (int j = 1; j <= girls; ++j) out << " q" << j;
  out << '\n';
  std::vector<std::string> all;
  for (int i = 1; i <= boys; ++i) all.push_back("p" + std::to_string(i));
  for (int j = 1; j <= girls; ++j) all.push_back("q" + std::to_string(j));
  // one of the boys won, and winners are pairwise exclusive
  std::ostringstream kb;
  kb << '(';
  for (int i = 1; i <= boys; ++i) kb << (i > 1 ? " | " : "") << 'p' << i;
  kb << ')';
  kb << " & (";
  for (std::size_t a = 0; a < all.size(); ++a) {
    if (a) kb << " | ";
    kb << '(' << all[a];
    for (std::size_t b = 0; b < all.size(); ++b)
      if (b != a) kb << " & ~" << all[b];
    kb << ')';
  }
  kb << ')';
  out << "op restrained\n";
  out << "kb \"" << kb.str() << "\"\n";
  std::ostringstream phi;
  for (int i = 1; i <= boys; ++i) phi << (i > 1 ? " | " : "") << 'p' << i;
  for (int i = 1; i <= boys; ++i)
    out << "revise \"~(" << phi.str() << ") | p" << i << "\"\n";
  out << "show\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"belief revision workbench"};
  app.require_subcommand(1);

  std::string scenario_path, ops_csv;
  auto* run = app.add_subcommand("run", "run a scenario script");
  run->add_option("file", scenario_path, "scenario file")->required();

  auto* cmp = app.add_subcommand("compare", "replay a scenario under several operators");
  cmp->add_option("--ops", ops_csv, "comma-separated operator list")->required();
  std::string cmp_path;
  cmp->add_option("file", cmp_path, "scenario file")->required();

  int atoms = 2;
  std::string op_name, postulates, mode_name = "exhaustive", oracle_name;
  std::string format = "text", out_path;
  std::uint64_t samples = 10000, seed = 0;
  int max_seq_len = 3;
  auto* ver = app.add_subcommand("verify", "sweep postulates over the state space");
  ver->add_option("--atoms", atoms, "number of atoms (default 2)");
  ver->add_option("--operator", op_name, "operator under test")->required();
  ver->add_option("--postulates", postulates, "comma-separated list or 'all'");
  ver->add_option("--mode", mode_name, "exhaustive|sample")
      ->check(CLI::IsMember({"exhaustive", "sample"}));
  ver->add_option("--samples", samples, "sample count (sample mode)");
  ver->add_option("--seed", seed, "sampling seed");
  ver->add_option("--max-seq-len", max_seq_len, "sequence postulate length cap");
  ver->add_option("--oracle", oracle_name, "compare bit-exactly against this operator");
  ver->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  ver->add_option("--out", out_path, "write the report here instead of stdout");

  int c_atoms = 2;
  std::string state_text, alpha_text, beta_text;
  auto* cnt = app.add_subcommand("counteracts", "evaluate the counteracts relation");
  cnt->add_option("--atoms", c_atoms, "number of atoms")->required();
  cnt->add_option("--state", state_text, "state as levels of bitstrings")->required();
  cnt->add_option("--alpha", alpha_text, "first formula")->required();
  cnt->add_option("--beta", beta_text, "second formula")->required();

  int boys = 2, girls = 2;
  auto* cls = app.add_subcommand("classroom", "emit the classroom scenario template");
  cls->add_option("--boys", boys, "number of boys");
  cls->add_option("--girls", girls, "number of girls");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) {
      rev::RunResult r = rev::run_scenario(rev::load_scenario(scenario_path));
      std::cout << r.transcript;
      return r.exit_status;
    }
    if (cmp->parsed()) {
      rev::CompareResult r = rev::compare(parse_ops(ops_csv), rev::load_scenario(cmp_path));
      std::cout << r.table;
      return r.exit_status;
    }
    if (ver->parsed()) {
      if (postulates.empty() && oracle_name.empty()) {
        std::cerr << "verify needs --postulates and/or --oracle\n";
        return 2;
      }
      return cmd_verify(atoms, op_name, postulates, mode_name, samples, seed, max_seq_len,
                        oracle_name, format, out_path);
    }
    if (cnt->parsed()) {
      rev::Language lang = default_language(c_atoms);
      rev::TotalPreorder state = rev::TotalPreorder::parse_text(lang, state_text);
      rev::ModelSet alpha = rev::models(alpha_text, lang);
      rev::ModelSet beta = rev::models(beta_text, lang);
      std::cout << (rev::counteracts(state, alpha, beta) ? "true" : "false") << '\n';
      return 0;
    }
    if (cls->parsed()) {
      if (boys < 1 || girls < 0 || boys + girls > rev::Language::kMaxAtoms) {
        std::cerr << "class size out of range (at most 16 atoms)\n";
        return 2;
      }
      std::cout << classroom_scenario(boys, girls);
      return 0;
    }
  } catch (const rev::ScenarioError& e) {
    std::cerr << "scenario error (line " << e.line() << "): " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
