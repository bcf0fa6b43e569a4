// pal: command-line front end for posets, poset algebras and the verification suites.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pal/algebra.hpp"
#include "pal/error.hpp"
#include "pal/io.hpp"
#include "pal/lattice.hpp"
#include "pal/wqo.hpp"
#include "pal/stone.hpp"
#include "pal/suites.hpp"

namespace {

using pal::io::Json;

struct Output {
  bool human = false;

  void emit(const Json& j, const std::string& human_text) const {
    if (human)
      std::cout << human_text << (human_text.empty() || human_text.back() != '\n' ? "\n" : "");
    else
      std::cout << j.dump() << "\n";
  }
};

int report_error(const pal::Error& e, int code) {
  Json j{{"error", pal::to_string(e.kind())}, {"message", e.what()}};
  if (!e.witness().empty()) j["witness"] = e.witness();
  std::cout << j.dump() << "\n";
  return code;
}

// Only an order that fails the partial-order axioms is a verified failure;
// everything else about a bad input file is a usage error.
int exit_code_for(const pal::Error& e) { return e.kind() == pal::ErrorKind::Cycle ? 1 : 2; }

int cmd_poset(const std::string& action, const std::string& file, const std::string& out_file, const Output& out) {
  auto p = pal::io::load_poset(file);
  if (action == "check") {
    Json j{{"elements", p->size()}, {"relationPairs", p->strict_pairs()}};
    out.emit(j, p->name() + ": " + std::to_string(p->size()) + " elements, " + std::to_string(p->strict_pairs()) +
                    " strict pairs");
  } else if (action == "show") {
    Json j = pal::io::poset_to_json(*p);
    j["minimal"] = p->names_of(p->minimals(p->all()));
    j["maximal"] = p->names_of(p->maximals(p->all()));
    j["width"] = pal::narrowness_probe(*p);
    j["height"] = pal::wellfoundedness_probe(*p);
    std::string text = p->name() + "\n";
    for (auto [a, b] : p->hasse_edges()) text += "  " + p->element_name(a) + " < " + p->element_name(b) + "\n";
    out.emit(j, text);
  } else {
    const std::string dot = pal::io::hasse_dot(*p);
    if (!out_file.empty()) {
      std::ofstream f(out_file);
      f << dot;
      if (!f) throw pal::Error(pal::ErrorKind::Parse, "cannot write " + out_file);
    } else {
      std::cout << dot;
    }
  }
  return 0;
}

int cmd_alg(const std::string& action, const std::string& file, const std::vector<std::string>& exprs, bool oracle,
            const Output& out) {
  auto p = pal::io::load_poset(file);
  const std::size_t want = (action == "eq" || action == "leq") ? 2 : 1;
  if (exprs.size() != want)
    throw pal::Error(pal::ErrorKind::Parse, action + " takes " + std::to_string(want) + " expression(s)");
  std::vector<pal::Expr> parsed;
  std::vector<pal::AlgebraElem> elems;
  for (const auto& text : exprs) {
    parsed.push_back(pal::parse_expr(*p, text));
    elems.push_back(pal::evaluate(p, parsed.back()));
  }

  Json j;
  std::string text;
  bool agree = true;
  std::optional<pal::StoneSpace> space;
  if (oracle) space.emplace(p);

  if (want == 2) {
    const bool result = action == "eq" ? pal::equals(elems[0], elems[1]) : pal::leq(elems[0], elems[1]);
    j["result"] = result;
    text = result ? "true" : "false";
    if (oracle) {
      auto a = pal::denote(*space, parsed[0]);
      auto b = pal::denote(*space, parsed[1]);
      const bool by_oracle = action == "eq" ? a == b : a.subset_of(b);
      agree = by_oracle == result;
      j["oracle"] = by_oracle;
      j["agree"] = agree;
      text += agree ? " (oracle agrees)" : " (ORACLE DISAGREES)";
    }
  } else {
    const auto& e = elems[0];
    const auto dnf = pal::to_dnf(e);
    const std::string dnf_text = pal::format_dnf(*p, dnf);
    Json products = Json::array();
    for (const auto& prod : dnf)
      products.push_back({{"pos", p->names_of(prod.pos)}, {"neg", p->names_of(prod.neg)}});
    j["dnf"] = dnf_text;
    j["products"] = products;
    text = dnf_text;
    if (action == "normalize") {
      auto reduced = pal::support_reduce(e);
      j["support"] = p->names_of(reduced.support());
      auto lat = pal::to_lattice(e);
      j["lattice"] = lat ? Json(pal::format_lattice(*p, *lat)) : Json(nullptr);
      pal::StoneSpace s(p);
      j["denotation"] = pal::io::clopen_to_json(s, pal::denote(s, e));
      text = "dnf: " + dnf_text + "\nsupport: " + std::to_string(reduced.support().count()) + " element(s)\n" +
             "lattice: " + (lat ? pal::format_lattice(*p, *lat) : std::string("not in L(P)"));
    }
    if (oracle) {
      agree = pal::denote(*space, parsed[0]) == pal::denote(*space, e) &&
              pal::denote(*space, pal::from_dnf(p, dnf)) == pal::denote(*space, parsed[0]);
      j["agree"] = agree;
      text += agree ? "\n(oracle agrees)" : "\n(ORACLE DISAGREES)";
    }
  }
  out.emit(j, text);
  return agree ? 0 : 1;
}

int cmd_verify(const pal::suites::SuiteConfig& config, const std::string& out_file, const Output& out) {
  auto report = pal::suites::run_suite(config);
  const Json j = report.to_json();
  if (!out_file.empty()) {
    std::ofstream f(out_file);
    f << j.dump(2) << "\n";
    if (!f) throw pal::Error(pal::ErrorKind::Parse, "cannot write " + out_file);
  }
  if (out.human) {
    std::cout << report.to_human();
  } else {
    Json summary = j;
    if (!out_file.empty()) summary.erase("records");
    std::cout << summary.dump() << "\n";
  }
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pal: free Boolean algebras over finite posets"};
  app.require_subcommand(1);
  app.fallthrough();

  Output out;
  bool json = false;
  auto* human_flag = app.add_flag("--human", out.human, "Human-readable output");
  app.add_flag("--json", json, "JSON output (default)")->excludes(human_flag);

  std::string poset_action, poset_file, out_file;
  auto* poset_cmd = app.add_subcommand("poset", "Check, show or export a poset file");
  poset_cmd->add_option("action", poset_action, "check | show | export-dot")
      ->required()
      ->check(CLI::IsMember({"check", "show", "export-dot"}));
  poset_cmd->add_option("file", poset_file, "Poset JSON file")->required();
  poset_cmd->add_option("--out", out_file, "Write output to FILE");

  std::string alg_action, alg_file;
  std::vector<std::string> exprs;
  bool oracle = false;
  auto* alg_cmd = app.add_subcommand("alg", "Decide and normalize terms of F(P)");
  alg_cmd->add_option("action", alg_action, "eq | leq | normalize | dnf")
      ->required()
      ->check(CLI::IsMember({"eq", "leq", "normalize", "dnf"}));
  alg_cmd->add_option("-p,--poset", alg_file, "Poset JSON file")->required();
  alg_cmd->add_option("exprs", exprs, "Terms such as \"x(a) & !x(b)\"")->required();
  alg_cmd->add_flag("--oracle", oracle, "Cross-check against the final-segment semantics");

  pal::suites::SuiteConfig config;
  std::size_t samples = 0;
  bool strict = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> suite_choices = pal::suites::suite_names();
  suite_choices.push_back("all");
  verify_cmd->add_option("--suite", config.suite, "Suite id")->check(CLI::IsMember(suite_choices));
  verify_cmd->add_option("--max-size", config.max_size, "Largest exhaustive corpus poset")
      ->check(CLI::Range(1, 6));
  verify_cmd->add_option("--seed", config.seed, "Seed for randomized cases");
  auto* samples_opt = verify_cmd->add_option("--samples", samples, "Random cases (suite default when omitted)")
                          ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--horizon", config.horizon, "Front horizon N for the Rado labeling")
      ->check(CLI::Range(3, 40));
  verify_cmd->add_flag("--strict-lattice", strict, "Exclude 1 from Pi(P) and L(P)");
  verify_cmd->add_option("--out", out_file, "Write the full JSON report to FILE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*poset_cmd) return cmd_poset(poset_action, poset_file, out_file, out);
    if (*alg_cmd) return cmd_alg(alg_action, alg_file, exprs, oracle, out);
    if (samples_opt->count() > 0) config.samples = samples;
    config.strictness = strict ? pal::Strictness::Strict : pal::Strictness::Inclusive;
    return cmd_verify(config, out_file, out);
  } catch (const pal::Error& e) {
    return report_error(e, exit_code_for(e));
  }
}
