#include "gvz/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "gvz/analysis.hpp"
#include "gvz/constructions.hpp"
#include "gvz/errors.hpp"
#include "gvz/group_spec.hpp"
#include "gvz/report.hpp"

namespace gvz::cli {

namespace {

using Json = nlohmann::json;

struct Options {
  std::string group;
  std::string format = "text";
  int parallel = 1;
  std::size_t max_order = 1'000'000;
  bool decimal = false;
  bool timing = false;
  std::string kind;
  std::string target;
  std::string normal = "center";
  std::string family;
  int p = 0;
  int n = 0;
  std::string out_file;
  bool as_perm = false;
};

struct Outcome {
  int code = kPass;
  std::string status = "pass";
  Json result;
  std::string text;
};

std::string read_group_argument(const std::string& arg) {
  if (arg.empty()) throw InputError("--group is required");
  if (arg.front() != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw InputError("cannot read group spec file '" + arg.substr(1) + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Words such as "a1*b2^2*a^-1" over the group's generator names; "1" is the identity.
Element parse_word(const GroupPtr& g, const std::string& word) {
  Element result = g->identity();
  if (word == "1") return result;
  std::stringstream factors(word);
  std::string factor;
  while (std::getline(factors, factor, '*')) {
    std::string name = factor;
    long exponent = 1;
    if (const auto caret = factor.find('^'); caret != std::string::npos) {
      name = factor.substr(0, caret);
      try {
        std::size_t used = 0;
        exponent = std::stol(factor.substr(caret + 1), &used);
        if (used != factor.size() - caret - 1) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw InputError("bad exponent in word factor '" + factor + "'");
      }
    }
    const auto& names = g->generator_names();
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw InputError("unknown generator '" + name + "' in word '" + word + "'");
    Element gen = g->generators()[static_cast<std::size_t>(it - names.begin())];
    const long order = g->element_order(gen);
    exponent = ((exponent % order) + order) % order;
    result = g->multiply(result, g->power(gen, static_cast<int>(exponent)));
  }
  return result;
}

Subgroup parse_normal(const Analysis& a, const std::string& text) {
  if (text == "center" || text == "centre") return a.center();
  if (text == "derived") return a.derived();
  std::vector<Element> gens;
  std::stringstream words(text);
  std::string word;
  while (std::getline(words, word, ',')) {
    if (word.empty()) continue;
    gens.push_back(parse_word(a.group(), word));
  }
  return generated_by(a.group(), gens);
}

struct Loaded {
  Json spec;
  GroupPtr group;
  std::unique_ptr<Analysis> analysis;
};

Loaded load(const Options& o, std::ostream& err) {
  Loaded l;
  l.spec = spec::parse(read_group_argument(o.group));
  EnumerationOptions eo;
  eo.max_order = o.max_order;
  const auto t0 = std::chrono::steady_clock::now();
  l.group = spec::build(l.spec, eo);
  DixonOptions dixon;
  dixon.threads = o.parallel;
  CharacterTable table = character_table(l.group, dixon);
  if (o.timing) {
    err << "timing: group and table built in "
        << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s\n";
  }
  l.analysis = std::make_unique<Analysis>(std::move(table), spec::canonical(l.spec));
  return l;
}

Outcome cmd_table(const Options& o, std::ostream& err) {
  Loaded l = load(o, err);
  Outcome out;
  out.result = report::table_json(l.analysis->table(), o.decimal);
  out.text = report::table_text(l.analysis->table(), o.decimal);
  return out;
}

Outcome cmd_check(const Options& o, std::ostream& err) {
  Loaded l = load(o, err);
  const Analysis& a = *l.analysis;
  Outcome out;
  if (o.kind == "gvz") {
    const GvzReport& r = a.gvz();
    out.result = report::gvz_json(r);
    out.text = report::gvz_text(r);
    if (!r.criteria_agree()) throw InternalError("GVZ criteria disagree");
    out.code = r.is_gvz ? kPass : kPropertyFails;
  } else if (o.kind == "gcp") {
    const Subgroup n = parse_normal(a, o.normal);
    const std::string description = a.describe(n);
    const GcpResult r = is_gcp(a, n);
    out.result = report::gcp_json(r, description);
    std::ostringstream text;
    text << "GCP (G, N), N = " << description << ": " << (r.holds ? "yes" : "no") << "\n"
         << "  nonlinear characters vanish outside N: " << (r.vanishing_criterion ? "yes" : "no") << "\n"
         << "  Cl(g) = gG' for every g outside N: " << (r.class_criterion ? "yes" : "no") << "\n";
    if (r.witness) text << "witness: " << *r.witness << "\n";
    out.text = text.str();
    out.code = r.holds ? kPass : kPropertyFails;
  } else {
    const auto& degrees = a.degrees();
    out.result = Json{{"degree_set", degrees}, {"two_degrees", a.two_degrees()}};
    std::ostringstream text;
    text << "cd(G) = {";
    for (std::size_t i = 0; i < degrees.size(); ++i) text << (i ? ", " : "") << degrees[i];
    text << "}\ntwo character degrees: " << (a.two_degrees() ? "yes" : "no") << "\n";
    out.text = text.str();
    out.code = a.two_degrees() ? kPass : kPropertyFails;
  }
  if (out.code != kPass) out.status = "fail";
  return out;
}

TheoremReport run_verifier(const std::string& target, const Loaded& l) {
  const Analysis& a = *l.analysis;
  if (target == "thm1.1") return verify_thm_1_1(a);
  if (target == "thm1.2") return verify_thm_1_2(a);
  if (target == "lemmas") return verify_lemma_suite(a);
  if (target == "prop2.11") return verify_prop_2_11(a);
  std::optional<std::vector<Subgroup>> listed;
  if (const auto pn = spec::gn_parameters(l.spec)) listed = gn_listed_centres(l.group, pn->second);
  return verify_centres(a, listed);
}

Outcome cmd_verify(const Options& o, std::ostream& err) {
  Loaded l = load(o, err);
  Outcome out;
  const std::vector<std::string> targets =
      o.target == "all" ? std::vector<std::string>{"thm1.1", "thm1.2", "lemmas", "prop2.11", "centres"}
                        : std::vector<std::string>{o.target};
  Json reports = Json::array();
  Json skipped = Json::array();
  std::ostringstream text;
  bool failed = false;
  for (const auto& t : targets) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const TheoremReport r = run_verifier(t, l);
      reports.push_back(report::theorem_json(r));
      text << report::theorem_text(r);
      failed = failed || !r.passed();
    } catch (const HypothesisError& e) {
      if (targets.size() == 1) throw;
      skipped.push_back({{"theorem", t}, {"reason", e.what()}});
      text << "[" << t << "] SKIP  " << e.what() << "\n";
    }
    if (o.timing) {
      err << "timing: " << t << " took "
          << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s\n";
    }
  }
  out.result = Json{{"reports", std::move(reports)}, {"skipped", std::move(skipped)}};
  out.text = text.str();
  if (failed) {
    out.code = kPropertyFails;
    out.status = "fail";
  }
  return out;
}

void cmd_gen(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.family != "gn") throw InputError("gen supports only the 'gn' family");
  Json document = spec::gn(o.p, o.n);
  spec::validate(document);
  EnumerationOptions eo;
  eo.max_order = o.max_order;
  GroupPtr group = spec::build(document, eo);
  if (o.as_perm) document = spec::regular_permutation(group);
  const std::string text = spec::canonical(document) + "\n";
  if (o.out_file.empty() || o.out_file == "-") {
    out << text;
    return;
  }
  std::ofstream file(o.out_file, std::ios::binary);
  if (!file) throw InputError("cannot write '" + o.out_file + "'");
  file << text;
  if (!file) throw InputError("failed writing '" + o.out_file + "'");
  err << "wrote group of order " << group->order() << " to " << o.out_file << "\n";
}

void add_group_options(CLI::App* cmd, Options& o, bool with_decimal) {
  cmd->add_option("--group", o.group, "group spec as JSON text, or @FILE")->required();
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--parallel", o.parallel, "worker threads for class coefficients")->check(CLI::Range(1, 256));
  cmd->add_option("--max-order", o.max_order, "largest group order to enumerate")->check(CLI::PositiveNumber);
  cmd->add_flag("--timing", o.timing, "print timings on stderr");
  if (with_decimal) cmd->add_flag("--decimal", o.decimal, "also print approximate decimal values");
}

std::string status_for(int code) {
  switch (code) {
    case kPass: return "pass";
    case kPropertyFails: return "fail";
    case kInputError: return "input-error";
    case kResourceError: return "resource-error";
    case kHypothesisNotMet: return "hypothesis-not-met";
    default: return "internal-error";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact character tables and GVZ / generalized Camina pair checks for finite groups", "gvzchar"};
  app.require_subcommand(1);

  CLI::App* table = app.add_subcommand("table", "print the character table");
  add_group_options(table, o, true);

  CLI::App* check = app.add_subcommand("check", "test a group property");
  check->add_option("kind", o.kind, "gvz | gcp | two-degree")
      ->required()
      ->check(CLI::IsMember({"gvz", "gcp", "two-degree"}));
  check->add_option("--normal", o.normal, "for gcp: center, derived, or comma-separated generator words");
  add_group_options(check, o, false);

  CLI::App* verify = app.add_subcommand("verify", "verify theorem statements on the group");
  verify->add_option("target", o.target, "thm1.1 | thm1.2 | lemmas | prop2.11 | centres | all")
      ->required()
      ->check(CLI::IsMember({"thm1.1", "thm1.2", "lemmas", "prop2.11", "centres", "all"}));
  add_group_options(verify, o, false);

  CLI::App* gen = app.add_subcommand("gen", "write a group spec");
  gen->add_option("family", o.family, "gn")->required()->check(CLI::IsMember({"gn"}));
  gen->add_option("-p", o.p, "odd prime")->required();
  gen->add_option("-n", o.n, "rank")->required();
  gen->add_option("--out", o.out_file, "output file (default stdout)");
  gen->add_flag("--perm", o.as_perm, "write the regular permutation representation instead");
  gen->add_option("--max-order", o.max_order, "largest group order to enumerate")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  if (gen->parsed()) {
    try {
      cmd_gen(o, out, err);
      return kPass;
    } catch (const InputError& e) {
      err << "input error: " << e.what() << "\n";
      return kInputError;
    } catch (const ResourceError& e) {
      err << "resource limit: " << e.what() << "\n";
      return kResourceError;
    }
  }

  std::string command;
  Json target = nullptr;
  if (table->parsed()) command = "table";
  if (check->parsed()) {
    command = "check";
    target = o.kind;
  }
  if (verify->parsed()) {
    command = "verify";
    target = o.target;
  }

  Outcome outcome;
  std::string error;
  try {
    if (command == "table") outcome = cmd_table(o, err);
    if (command == "check") outcome = cmd_check(o, err);
    if (command == "verify") outcome = cmd_verify(o, err);
  } catch (const InputError& e) {
    outcome.code = kInputError;
    error = std::string("input error: ") + e.what();
  } catch (const ResourceError& e) {
    outcome.code = kResourceError;
    error = std::string("resource limit: ") + e.what();
  } catch (const HypothesisError& e) {
    outcome.code = kHypothesisNotMet;
    error = e.what();
  } catch (const TheoremViolation& e) {
    outcome.code = kPropertyFails;
    error = std::string("theorem violation: ") + e.what();
  } catch (const std::exception& e) {
    outcome.code = kInternalError;
    error = std::string("internal error: ") + e.what();
  }
  outcome.status = status_for(outcome.code);

  if (o.format == "json") {
    Json doc{{"schema", report::kSchema}, {"command", command}, {"target", target}, {"status", outcome.status},
             {"exit_code", outcome.code}};
    try {
      doc["group"] = spec::parse(read_group_argument(o.group));
    } catch (const InputError&) {
      doc["group"] = nullptr;
    }
    if (error.empty()) {
      doc["result"] = std::move(outcome.result);
    } else {
      doc["error"] = error;
    }
    out << doc.dump(2) << "\n";
  } else if (error.empty()) {
    out << outcome.text;
  }
  if (!error.empty()) err << error << "\n";
  return outcome.code;
}

}  // namespace gvz::cli
