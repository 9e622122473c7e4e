#pragma once

/// @file corpus.hpp
/// @brief Corpus manifests: the shipped default corpus and user-supplied
///        manifest files.  A manifest is a JSON list of entries
///        {"name", "expected_order", "construction"} where construction is
///        one of {"builtin": name}, {"product": [names...]} or
///        {"degree": n, "generators": [cycles...]}.

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "permlab/catalog.hpp"
#include "permlab/classalg.hpp"
#include "permlab/errors.hpp"
#include "permlab/group.hpp"

namespace permlab {

struct GroupSpecEntry {
  std::string name;
  std::uint64_t expected_order = 0;
  nlohmann::json construction;
};

struct CorpusGroup {
  std::string name;
  FiniteGroup group;
  GroupMeta meta;
  std::uint64_t expected_order = 0;
};

inline std::vector<std::vector<int>> cycles_from_json(const nlohmann::json& j) {
  std::vector<std::vector<int>> cycles;
  for (const auto& cyc : j) {
    std::vector<int> pts;
    for (const auto& p : cyc) pts.push_back(p.get<int>());
    cycles.push_back(std::move(pts));
  }
  return cycles;
}

inline nlohmann::json cycles_to_json(const Perm& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& cyc : p.cycles()) out.push_back(cyc);
  return out;
}

/// {"left": idx, "right": idx, "terms": [[idx, mult]...]}
inline nlohmann::json decomposition_to_json(
    const ClassProductDecomposition& dec) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [cls, mult] : dec.terms) {
    terms.push_back(nlohmann::json::array({cls, mult}));
  }
  nlohmann::json j;
  j["left"] = dec.left;
  j["right"] = dec.right;
  j["terms"] = terms;
  return j;
}

inline ClassProductDecomposition decomposition_from_json(
    const nlohmann::json& j) {
  ClassProductDecomposition dec;
  dec.left = j.at("left").get<std::uint32_t>();
  dec.right = j.at("right").get<std::uint32_t>();
  for (const auto& t : j.at("terms")) {
    dec.terms.emplace_back(t.at(0).get<std::uint32_t>(),
                           t.at(1).get<std::uint64_t>());
  }
  return dec;
}

/// Group-spec JSON: {"name": string, "degree": int, "generators": [cycles...]}.
inline std::pair<std::string, FiniteGroup> group_from_spec_json(
    const nlohmann::json& doc, std::size_t cap = kDefaultCap) {
  std::string name = doc.at("name").get<std::string>();
  unsigned degree = doc.at("degree").get<unsigned>();
  std::vector<Perm> gens;
  for (const auto& g : doc.at("generators")) {
    gens.push_back(Perm::from_cycles(degree, cycles_from_json(g)));
  }
  return {name, generate(degree, std::move(gens), cap)};
}

inline std::vector<GroupSpecEntry> parse_corpus_manifest(
    const nlohmann::json& doc) {
  if (!doc.is_array()) throw ArgumentError("corpus manifest must be a JSON array");
  std::vector<GroupSpecEntry> out;
  for (const auto& e : doc) {
    GroupSpecEntry entry;
    entry.name = e.at("name").get<std::string>();
    entry.expected_order = e.at("expected_order").get<std::uint64_t>();
    entry.construction = e.at("construction");
    out.push_back(std::move(entry));
  }
  return out;
}

/// Builds one manifest entry and checks the generated order against
/// expected_order.
inline CorpusGroup build_corpus_entry(const GroupSpecEntry& entry,
                                      std::size_t cap = kDefaultCap) {
  CorpusGroup out;
  out.name = entry.name;
  out.expected_order = entry.expected_order;
  const nlohmann::json& c = entry.construction;
  if (c.contains("builtin")) {
    std::string name = c.at("builtin").get<std::string>();
    out.group = make_named_group(name, cap);
    out.meta = builtin_meta(name);
  } else if (c.contains("product")) {
    std::vector<std::string> names =
        c.at("product").get<std::vector<std::string>>();
    if (names.size() < 2) {
      throw ArgumentError("product construction needs at least two factors");
    }
    FiniteGroup acc = make_named_group(names[0], cap);
    for (std::size_t i = 1; i < names.size(); ++i) {
      acc = direct_product(acc, make_named_group(names[i], cap), cap);
    }
    out.group = acc;
  } else if (c.contains("degree")) {
    unsigned degree = c.at("degree").get<unsigned>();
    std::vector<Perm> gens;
    for (const auto& g : c.at("generators")) {
      gens.push_back(Perm::from_cycles(degree, cycles_from_json(g)));
    }
    out.group = generate(degree, std::move(gens), cap);
  } else {
    throw ArgumentError("unknown construction for corpus entry " + entry.name);
  }
  if (out.group.order() != entry.expected_order) {
    throw ArgumentError("corpus entry " + entry.name + " generated order " +
                        std::to_string(out.group.order()) + ", expected " +
                        std::to_string(entry.expected_order));
  }
  return out;
}

inline std::vector<CorpusGroup> build_corpus(
    const std::vector<GroupSpecEntry>& entries, std::size_t cap = kDefaultCap) {
  std::vector<CorpusGroup> out;
  out.reserve(entries.size());
  for (const auto& e : entries) {
    try {
      out.push_back(build_corpus_entry(e, cap));
    } catch (const CapExceededError& err) {
      throw Error("corpus entry " + e.name + ": " + err.what());
    }
  }
  return out;
}

/// The shipped default corpus (also installed as data/corpus_builtin.json).
inline const std::string& builtin_corpus_json() {
  static const std::string text = R"JSON([
{"name":"C2","expected_order":2,"construction":{"builtin":"C2"}},
{"name":"C3","expected_order":3,"construction":{"builtin":"C3"}},
{"name":"C4","expected_order":4,"construction":{"builtin":"C4"}},
{"name":"C5","expected_order":5,"construction":{"builtin":"C5"}},
{"name":"C6","expected_order":6,"construction":{"builtin":"C6"}},
{"name":"C8","expected_order":8,"construction":{"builtin":"C8"}},
{"name":"C9","expected_order":9,"construction":{"builtin":"C9"}},
{"name":"C12","expected_order":12,"construction":{"builtin":"C12"}},
{"name":"C24","expected_order":24,"construction":{"builtin":"C24"}},
{"name":"C36","expected_order":36,"construction":{"builtin":"C36"}},
{"name":"D6","expected_order":6,"construction":{"builtin":"D6"}},
{"name":"D8","expected_order":8,"construction":{"builtin":"D8"}},
{"name":"D10","expected_order":10,"construction":{"builtin":"D10"}},
{"name":"D12","expected_order":12,"construction":{"builtin":"D12"}},
{"name":"D16","expected_order":16,"construction":{"builtin":"D16"}},
{"name":"D18","expected_order":18,"construction":{"builtin":"D18"}},
{"name":"D24","expected_order":24,"construction":{"builtin":"D24"}},
{"name":"D36","expected_order":36,"construction":{"builtin":"D36"}},
{"name":"Q8","expected_order":8,"construction":{"builtin":"Q8"}},
{"name":"Q16","expected_order":16,"construction":{"builtin":"Q16"}},
{"name":"SD16","expected_order":16,"construction":{"builtin":"SD16"}},
{"name":"S3","expected_order":6,"construction":{"builtin":"S3"}},
{"name":"S4","expected_order":24,"construction":{"builtin":"S4"}},
{"name":"S5","expected_order":120,"construction":{"builtin":"S5"}},
{"name":"S6","expected_order":720,"construction":{"builtin":"S6"}},
{"name":"S7","expected_order":5040,"construction":{"builtin":"S7"}},
{"name":"A4","expected_order":12,"construction":{"builtin":"A4"}},
{"name":"A5","expected_order":60,"construction":{"builtin":"A5"}},
{"name":"A6","expected_order":360,"construction":{"builtin":"A6"}},
{"name":"A7","expected_order":2520,"construction":{"builtin":"A7"}},
{"name":"SL(2,3)","expected_order":24,"construction":{"builtin":"SL(2,3)"}},
{"name":"GL(2,3)","expected_order":48,"construction":{"builtin":"GL(2,3)"}},
{"name":"SL(2,5)","expected_order":120,"construction":{"builtin":"SL(2,5)"}},
{"name":"PSL(2,7)","expected_order":168,"construction":{"builtin":"PSL(2,7)"}},
{"name":"PGL(2,7)","expected_order":336,"construction":{"builtin":"PGL(2,7)"}},
{"name":"PSL(2,8)","expected_order":504,"construction":{"builtin":"PSL(2,8)"}},
{"name":"PSL(2,11)","expected_order":660,"construction":{"builtin":"PSL(2,11)"}},
{"name":"PSL(2,13)","expected_order":1092,"construction":{"builtin":"PSL(2,13)"}},
{"name":"F20","expected_order":20,"construction":{"builtin":"F20"}},
{"name":"F21","expected_order":21,"construction":{"builtin":"F21"}},
{"name":"C3:Q8","expected_order":24,"construction":{"builtin":"C3:Q8"}},
{"name":"C2xC2","expected_order":4,"construction":{"product":["C2","C2"]}},
{"name":"C2xC4","expected_order":8,"construction":{"product":["C2","C4"]}},
{"name":"C3xC3","expected_order":9,"construction":{"product":["C3","C3"]}},
{"name":"C2xC6","expected_order":12,"construction":{"product":["C2","C6"]}},
{"name":"C2xS3","expected_order":12,"construction":{"product":["C2","S3"]}},
{"name":"C2xD8","expected_order":16,"construction":{"product":["C2","D8"]}},
{"name":"C3xS3","expected_order":18,"construction":{"product":["C3","S3"]}},
{"name":"C3xQ8","expected_order":24,"construction":{"product":["C3","Q8"]}},
{"name":"C4xQ8","expected_order":32,"construction":{"product":["C4","Q8"]}},
{"name":"C6xC6","expected_order":36,"construction":{"product":["C6","C6"]}},
{"name":"S3xS3","expected_order":36,"construction":{"product":["S3","S3"]}},
{"name":"C7xS3","expected_order":42,"construction":{"product":["C7","S3"]}},
{"name":"S3xQ8","expected_order":48,"construction":{"product":["S3","Q8"]}},
{"name":"C2xSL(2,3)","expected_order":48,"construction":{"product":["C2","SL(2,3)"]}},
{"name":"C5xA4","expected_order":60,"construction":{"product":["C5","A4"]}},
{"name":"Q8xQ8","expected_order":64,"construction":{"product":["Q8","Q8"]}},
{"name":"A5xC2","expected_order":120,"construction":{"product":["A5","C2"]}},
{"name":"A4xA4","expected_order":144,"construction":{"product":["A4","A4"]}},
{"name":"S4xS3","expected_order":144,"construction":{"product":["S4","S3"]}},
{"name":"C2xPSL(2,7)","expected_order":336,"construction":{"product":["C2","PSL(2,7)"]}},
{"name":"S3xPSL(2,7)","expected_order":1008,"construction":{"product":["S3","PSL(2,7)"]}},
{"name":"C3xA6","expected_order":1080,"construction":{"product":["C3","A6"]}},
{"name":"S4xA5","expected_order":1440,"construction":{"product":["S4","A5"]}},
{"name":"C2xS6","expected_order":1440,"construction":{"product":["C2","S6"]}},
{"name":"S5xS4","expected_order":2880,"construction":{"product":["S5","S4"]}},
{"name":"A5xA5","expected_order":3600,"construction":{"product":["A5","A5"]}},
{"name":"A7xC2","expected_order":5040,"construction":{"product":["A7","C2"]}}
]
)JSON";
  return text;
}

/// Resolves `--corpus builtin` or a manifest path.
inline std::vector<GroupSpecEntry> load_corpus_manifest(
    const std::string& selector) {
  if (selector == "builtin") {
    return parse_corpus_manifest(nlohmann::json::parse(builtin_corpus_json()));
  }
  std::ifstream in(selector);
  if (!in) throw Error("cannot read corpus manifest " + selector);
  nlohmann::json doc;
  in >> doc;
  return parse_corpus_manifest(doc);
}

} // namespace permlab
