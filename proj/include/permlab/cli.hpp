#pragma once

/// @file cli.hpp
/// @brief Command-line surface: group inspection, suite execution over a
///        corpus manifest, report emission.  Human-readable tables go to
///        stdout; JSON only ever goes to --out (written atomically).

#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permlab/chartab.hpp"
#include "permlab/corpus.hpp"
#include "permlab/errors.hpp"
#include "permlab/series.hpp"
#include "permlab/verify.hpp"

namespace permlab {

class UsageError : public Error {
public:
  explicit UsageError(const std::string& msg) : Error(msg) {}
};

struct CommandPlan {
  std::string command; // inspect | classes | chartab | check | explore | remarks | help
  std::string group;
  std::string corpus = "builtin";
  std::vector<std::string> suites;
  std::string out;
  std::size_t cap = kDefaultCap;
  int threads = 1;
  std::string help_text; // filled for command == "help"
};

namespace detail {

inline void add_common_options(CLI::App* sub, CommandPlan& plan,
                               bool with_group, bool with_corpus,
                               bool with_suites) {
  if (with_group) {
    sub->add_option("--group", plan.group,
                    "catalog name, product like S4xA5, or a group-spec "
                    ".json file")
        ->required();
  }
  if (with_corpus) {
    sub->add_option("--corpus", plan.corpus,
                    "'builtin' or a corpus manifest path");
  }
  if (with_suites) {
    sub->add_option("--suite", plan.suites,
                    "suite id (repeatable); 'all' expands to every "
                    "assertion suite");
  }
  sub->add_option("--out", plan.out, "write JSON to this path");
  sub->add_option("--cap", plan.cap, "element cap for group generation");
  sub->add_option("--threads", plan.threads, "worker threads across groups");
}

} // namespace detail

/// Parses argv (without the program name) into a validated plan.
/// Throws UsageError on unknown commands, suites or flags.
inline CommandPlan parse_args(const std::vector<std::string>& args) {
  CommandPlan plan;
  CLI::App app{"finite permutation group engine and verification harness",
               "permlab"};
  app.require_subcommand(1);
  auto* inspect = app.add_subcommand("inspect", "structural summary of a group");
  detail::add_common_options(inspect, plan, true, false, false);
  auto* classes = app.add_subcommand("classes", "conjugacy class table");
  detail::add_common_options(classes, plan, true, false, false);
  auto* chartab = app.add_subcommand("chartab", "exact character table");
  detail::add_common_options(chartab, plan, true, false, false);
  auto* check =
      app.add_subcommand("check", "run assertion suites over a corpus");
  detail::add_common_options(check, plan, false, true, true);
  auto* explore =
      app.add_subcommand("explore", "run exploration suites over a corpus");
  detail::add_common_options(explore, plan, false, true, true);
  auto* remarks =
      app.add_subcommand("remarks", "run the two counterexample fact bundles");
  detail::add_common_options(remarks, plan, false, false, false);

  std::vector<const char*> argv;
  argv.push_back("permlab");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    plan.command = "help";
    plan.help_text = app.help();
    return plan;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (inspect->parsed()) plan.command = "inspect";
  else if (classes->parsed()) plan.command = "classes";
  else if (chartab->parsed()) plan.command = "chartab";
  else if (check->parsed()) plan.command = "check";
  else if (explore->parsed()) plan.command = "explore";
  else if (remarks->parsed()) plan.command = "remarks";

  if (plan.command == "check") {
    if (plan.suites.empty()) plan.suites = {"all"};
    std::vector<std::string> expanded;
    for (const auto& id : plan.suites) {
      if (id == "all") {
        for (const auto& s : suite_registry()) {
          if (s.assertion) expanded.push_back(s.id);
        }
      } else {
        expanded.push_back(id);
      }
    }
    plan.suites = std::move(expanded);
  } else if (plan.command == "explore") {
    if (plan.suites.empty()) {
      for (const auto& s : suite_registry()) {
        if (!s.assertion) plan.suites.push_back(s.id);
      }
    }
    for (const auto& id : plan.suites) {
      try {
        if (suite_spec(id).assertion) {
          throw UsageError("suite " + id +
                           " is an assertion suite; use the check command");
        }
      } catch (const ArgumentError& e) {
        throw UsageError(e.what());
      }
    }
  }
  if (plan.command == "check") {
    for (const auto& id : plan.suites) {
      try {
        suite_spec(id);
      } catch (const ArgumentError& e) {
        throw UsageError(e.what());
      }
    }
  }
  if (plan.threads < 1) throw UsageError("--threads must be >= 1");
  return plan;
}

namespace detail {

/// Resolves --group: a builtin name, an x-joined product of builtin names,
/// or a path to a group-spec JSON file.
inline std::pair<std::string, FiniteGroup> resolve_group(
    const std::string& selector, std::size_t cap) {
  if (selector.size() > 5 &&
      selector.substr(selector.size() - 5) == ".json") {
    std::ifstream in(selector);
    if (!in) throw Error("cannot read group spec " + selector);
    nlohmann::json doc;
    in >> doc;
    return group_from_spec_json(doc, cap);
  }
  try {
    return {selector, make_named_group(selector, cap)};
  } catch (const UnknownGroupError&) {
  }
  std::vector<std::string> parts;
  std::string cur;
  for (char c : selector) {
    if (c == 'x') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() < 2) {
    throw UnknownGroupError("unknown group " + selector);
  }
  FiniteGroup acc = make_named_group(parts[0], cap);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    acc = direct_product(acc, make_named_group(parts[i], cap), cap);
  }
  return {selector, acc};
}

inline void atomic_write(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << content;
    if (!out) throw Error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

inline std::string render_cyclotomic(const Cyclotomic& v) {
  if (auto n = v.as_integer()) return std::to_string(*n);
  std::string out;
  const auto& c = v.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!out.empty() && c[i] > 0) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
    } else {
      if (c[i] == -1) out += "-";
      else if (c[i] != 1) out += std::to_string(c[i]) + "*";
      out += "z";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

inline nlohmann::json chartab_json(const CharacterTable& T) {
  nlohmann::json j;
  j["group_order"] = T.group_order;
  j["conductor"] = T.exponent;
  j["class_sizes"] = T.class_sizes;
  nlohmann::json reps = nlohmann::json::array();
  for (const Perm& p : T.class_reps) reps.push_back(cycles_to_json(p));
  j["class_representatives"] = reps;
  j["degrees"] = T.degrees;
  nlohmann::json values = nlohmann::json::array();
  for (const auto& row : T.values) {
    nlohmann::json jr = nlohmann::json::array();
    for (const auto& v : row) jr.push_back(v.coefficients());
    values.push_back(jr);
  }
  j["values"] = values;
  return j;
}

} // namespace detail

/// Serializes reports as a JSON array with stable key order, atomically.
inline void emit_report(const std::vector<CheckReport>& reports,
                        const std::string& path) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r));
  detail::atomic_write(path, arr.dump(2) + "\n");
}

inline int execute_plan(const CommandPlan& plan) {
  std::ostream& out = std::cout;
  if (plan.command == "help") {
    out << plan.help_text;
    return 0;
  }
  if (plan.command == "inspect") {
    auto [name, G] = detail::resolve_group(plan.group, plan.cap);
    ClassPartition part = conjugacy_classes(G);
    FiniteGroup Z = center(G);
    FiniteGroup D = derived_subgroup(G);
    FiniteGroup F = fitting(G);
    FiniteGroup R = solvable_radical(G);
    StructureFlags flags = structure_predicates(G);
    nlohmann::json j;
    j["name"] = name;
    j["degree"] = G.degree();
    j["order"] = G.order();
    j["num_classes"] = part.classes.size();
    j["center_order"] = Z.order();
    j["derived_order"] = D.order();
    j["fitting_order"] = F.order();
    j["radical_order"] = R.order();
    j["solvable"] = flags.is_solvable;
    j["nilpotent"] = flags.is_nilpotent;
    nlohmann::json cores;
    for (std::uint64_t p : prime_divisors(G.order())) {
      cores["O_" + std::to_string(p)] = o_p(G, static_cast<int>(p)).order();
    }
    j["p_cores"] = cores;
    if (G.order() > 1) {
      SimplicityFlags s = simplicity_predicates(G);
      j["simple"] = s.is_simple;
      j["quasisimple"] = s.is_quasisimple;
    }
    out << "group " << name << "\n";
    out << "  degree " << G.degree() << ", order " << G.order() << "\n";
    out << "  conjugacy classes: " << part.classes.size() << " (sizes";
    for (const auto& c : part.classes) out << " " << c.size();
    out << ")\n";
    out << "  center " << Z.order() << ", derived " << D.order()
        << ", fitting " << F.order() << ", radical " << R.order() << "\n";
    out << "  solvable " << (flags.is_solvable ? "yes" : "no") << ", nilpotent "
        << (flags.is_nilpotent ? "yes" : "no");
    if (j.contains("simple")) {
      out << ", simple " << (j["simple"].get<bool>() ? "yes" : "no")
          << ", quasisimple " << (j["quasisimple"].get<bool>() ? "yes" : "no");
    }
    out << "\n  p-cores:";
    for (auto& [key, val] : cores.items()) {
      out << " " << key << "=" << val.get<std::uint64_t>();
    }
    out << "\n";
    if (!plan.out.empty()) detail::atomic_write(plan.out, j.dump(2) + "\n");
    return 0;
  }
  if (plan.command == "classes") {
    auto [name, G] = detail::resolve_group(plan.group, plan.cap);
    ClassPartition part = conjugacy_classes(G);
    nlohmann::json arr = nlohmann::json::array();
    out << "conjugacy classes of " << name << " (order " << G.order() << ")\n";
    out << "  idx  size  rep_order  real  inverse  representative\n";
    for (std::uint32_t k = 0; k < part.classes.size(); ++k) {
      const auto& cls = part.classes[k];
      std::uint32_t invk = inverse_class_index(G, part, k);
      bool real = invk == k;
      out << "  " << k << "  " << cls.size() << "  "
          << order_of(cls.representative) << "  " << (real ? "yes" : "no")
          << "  " << invk << "  " << cls.representative.cycle_string() << "\n";
      arr.push_back({{"index", k},
                     {"size", cls.size()},
                     {"rep_order", order_of(cls.representative)},
                     {"real", real},
                     {"inverse_class", invk},
                     {"representative", cycles_to_json(cls.representative)}});
    }
    if (!plan.out.empty()) detail::atomic_write(plan.out, arr.dump(2) + "\n");
    return 0;
  }
  if (plan.command == "chartab") {
    auto [name, G] = detail::resolve_group(plan.group, plan.cap);
    CharacterTable T = character_table(G);
    out << "character table of " << name << " (order " << G.order()
        << ", conductor " << T.exponent << ")\n";
    out << "  class sizes:";
    for (auto s : T.class_sizes) out << " " << s;
    out << "\n  degrees:";
    for (auto d : T.degrees) out << " " << d;
    out << "\n";
    for (std::size_t c = 0; c < T.values.size(); ++c) {
      out << "  X" << c << ":";
      for (const auto& v : T.values[c]) {
        out << " " << detail::render_cyclotomic(v);
      }
      out << "\n";
    }
    if (!plan.out.empty()) {
      detail::atomic_write(plan.out, detail::chartab_json(T).dump(2) + "\n");
    }
    return 0;
  }
  if (plan.command == "check" || plan.command == "explore") {
    auto entries = load_corpus_manifest(plan.corpus);
    auto corpus = build_corpus(entries, plan.cap);
    auto reports = run_suites(plan.suites, corpus, plan.threads);
    std::uint64_t violations = 0;
    for (const auto& r : reports) {
      bool assertion = suite_spec(r.suite).assertion;
      if (assertion) violations += r.violations.size();
      out << r.suite << "  " << r.group_name << "  instances="
          << r.instances_checked << "  violations=" << r.violations.size()
          << (assertion ? "" : "  [exploration]") << "\n";
    }
    out << (plan.command == "check"
                ? "total assertion violations: " + std::to_string(violations)
                : "exploration complete")
        << "\n";
    if (!plan.out.empty()) emit_report(reports, plan.out);
    if (plan.command == "explore") return 0;
    return violations == 0 ? 0 : 1;
  }
  if (plan.command == "remarks") {
    CheckReport r = reproduce_remarks(plan.cap);
    out << "remarks  " << r.group_name << "  violations="
        << r.violations.size() << "\n";
    for (const auto& w : r.witnesses) out << "  " << w.dump() << "\n";
    for (const auto& v : r.violations) out << "  MISMATCH " << v.dump() << "\n";
    if (!plan.out.empty()) emit_report({r}, plan.out);
    return r.violations.empty() ? 0 : 1;
  }
  throw UsageError("no command given");
}

inline int run_cli(int argc, char** argv) {
#ifdef SIGPIPE
  // keep --out intact when stdout is a pipe that closes early
  std::signal(SIGPIPE, SIG_IGN);
#endif
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  try {
    CommandPlan plan = parse_args(args);
    return execute_plan(plan);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace permlab
