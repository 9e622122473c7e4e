#pragma once

/// @file verify.hpp
/// @brief Checkers that quantify commutator-order and class-product criteria
///        over concrete groups and produce machine-readable reports.
///
/// Everything checked here is conjugation-invariant in x (profiles, normal
/// closures, membership in normal subgroups), so each suite quantifies over
/// conjugacy class representatives while instance counts cover the whole
/// group.  Violations and witnesses are self-contained records that replay
/// through the public operations.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "permlab/catalog.hpp"
#include "permlab/chartab.hpp"
#include "permlab/classalg.hpp"
#include "permlab/corpus.hpp"
#include "permlab/errors.hpp"
#include "permlab/group.hpp"
#include "permlab/series.hpp"

namespace permlab {

struct CheckReport {
  std::string suite;
  std::string group_name;
  std::uint64_t group_order = 0;
  std::uint64_t instances_checked = 0;
  std::vector<nlohmann::json> violations;
  std::vector<nlohmann::json> witnesses;
  std::int64_t elapsed_ms = 0;

  bool passed() const { return violations.empty(); }
};

inline nlohmann::json report_to_json(const CheckReport& r) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["group_name"] = r.group_name;
  j["group_order"] = r.group_order;
  j["instances_checked"] = r.instances_checked;
  j["violations"] = r.violations;
  j["witnesses"] = r.witnesses;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

inline CheckReport report_from_json(const nlohmann::json& j) {
  CheckReport r;
  r.suite = j.at("suite").get<std::string>();
  r.group_name = j.at("group_name").get<std::string>();
  r.group_order = j.at("group_order").get<std::uint64_t>();
  r.instances_checked = j.at("instances_checked").get<std::uint64_t>();
  for (const auto& v : j.at("violations")) r.violations.push_back(v);
  for (const auto& w : j.at("witnesses")) r.witnesses.push_back(w);
  r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  return r;
}

namespace detail {

class Stopwatch {
public:
  Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point t0_;
};

inline nlohmann::json perm_json(const Perm& p) { return cycles_to_json(p); }

inline nlohmann::json support_json(const std::vector<std::uint64_t>& s) {
  return nlohmann::json(s);
}

// Sylow r-subgroup by growth: repeatedly adjoin an r-element that normalizes
// the current r-subgroup until the full r-part of |G| is reached.
inline FiniteGroup sylow_subgroup(const FiniteGroup& G, int r) {
  require_prime(static_cast<std::uint64_t>(r));
  std::uint64_t target = p_part_of(G.order(), static_cast<std::uint64_t>(r));
  FiniteGroup R = subgroup_from(G, {});
  while (R.order() < target) {
    bool grown = false;
    for (std::uint32_t i = 0; i < G.order() && !grown; ++i) {
      const Perm& x = G.element(i);
      if (R.contains(x)) continue;
      if (!is_power_of(order_of(x), static_cast<std::uint64_t>(r))) continue;
      bool normalizes = true;
      for (const Perm& s : R.generators()) {
        if (!R.contains(conjugate(s, x))) {
          normalizes = false;
          break;
        }
      }
      if (!normalizes) continue;
      std::vector<Perm> gens = R.generators();
      gens.push_back(x);
      R = subgroup_from(G, gens);
      grown = true;
    }
    if (!grown) {
      throw Error("sylow construction stalled below the full r-part");
    }
  }
  if (R.order() != target) {
    throw Error("sylow construction overshot the r-part");
  }
  return R;
}

} // namespace detail

/// Every nonidentity commutator order of x is a power of p  <=>  x is central
/// modulo O_p(G).  Both directions, every x (via class representatives).
inline CheckReport check_thm_commutators_p(const FiniteGroup& G, int p) {
  detail::Stopwatch timer;
  CheckReport r;
  r.suite = "thm1_1";
  r.group_order = G.order();
  ClassPartition part = conjugacy_classes(G);
  FiniteGroup Op = o_p(G, p);
  for (std::uint32_t k = 0; k < part.classes.size(); ++k) {
    const Perm& x = part.classes[k].representative;
    CommutatorProfile prof = commutator_profile_of_class(G, part, k);
    auto support = prof.support();
    bool all_p = true;
    for (std::uint64_t m : support) {
      if (!is_power_of(m, static_cast<std::uint64_t>(p))) {
        all_p = false;
        break;
      }
    }
    bool central = is_central_modulo(G, x, Op);
    r.instances_checked += part.classes[k].size();
    if (all_p != central) {
      r.violations.push_back({{"x", detail::perm_json(x)},
                              {"p", p},
                              {"commutator_support", detail::support_json(support)},
                              {"all_commutators_p_elements", all_p},
                              {"central_mod_p_core", central}});
    } else if (all_p && !support.empty()) {
      r.witnesses.push_back({{"x", detail::perm_json(x)},
                             {"p", p},
                             {"commutator_support", detail::support_json(support)}});
    }
  }
  r.elapsed_ms = timer.elapsed_ms();
  return r;
}

/// For p-elements x:  x^G intersect C_G(x) = {x}  <=>  x in Z_p^*(G),
/// and  <x, x^g> a p-group for all g  <=>  x in O_p(G).
inline CheckReport check_glauberman_baer_suzuki(const FiniteGroup& G, int p) {
  detail::Stopwatch timer;
  CheckReport r;
  r.suite = "glauberman_bs";
  r.group_order = G.order();
  ClassPartition part = conjugacy_classes(G);
  FiniteGroup Zp = z_p_star(G, p);
  FiniteGroup Op = o_p(G, p);
  std::uint64_t gp = p_part_of(G.order(), static_cast<std::uint64_t>(p));
  for (std::uint32_t k = 0; k < part.classes.size(); ++k) {
    const Perm& x = part.classes[k].representative;
    if (!is_power_of(order_of(x), static_cast<std::uint64_t>(p))) continue;
    std::uint64_t commuting = 0;
    for (std::uint32_t yi : part.classes[k].members) {
      const Perm& y = G.element(yi);
      if (compose(x, y) == compose(y, x)) ++commuting;
    }
    bool lhs_g = commuting == 1;
    bool rhs_g = Zp.contains(x);
    if (lhs_g != rhs_g) {
      r.violations.push_back({{"x", detail::perm_json(x)},
                              {"p", p},
                              {"side", "glauberman"},
                              {"class_fixed_point", lhs_g},
                              {"in_z_p_star", rhs_g}});
    } else if (lhs_g && !x.is_identity()) {
      r.witnesses.push_back(
          {{"x", detail::perm_json(x)}, {"p", p}, {"side", "glauberman"}});
    }
    bool lhs_b = true;
    for (std::uint32_t yi : part.classes[k].members) {
      auto size = detail::bounded_closure_size(
          G.degree(), {x, G.element(yi)}, gp);
      if (!size || !is_power_of(*size, static_cast<std::uint64_t>(p))) {
        lhs_b = false;
        break;
      }
    }
    bool rhs_b = Op.contains(x);
    if (lhs_b != rhs_b) {
      r.violations.push_back({{"x", detail::perm_json(x)},
                              {"p", p},
                              {"side", "baer_suzuki"},
                              {"all_pairs_p_groups", lhs_b},
                              {"in_p_core", rhs_b}});
    }
    r.instances_checked += 2 * part.classes[k].size();
  }
  r.elapsed_ms = timer.elapsed_ms();
  return r;
}

/// Almost simple G: every nontrivial x has a witness g with [x, g] a
/// nontrivial p'-element.
inline CheckReport check_almost_simple_witness(const FiniteGroup& G, int p) {
  detail::Stopwatch timer;
  CheckReport r;
  r.suite = "thm1_2";
  r.group_order = G.order();
  ClassPartition part = conjugacy_classes(G);
  for (std::uint32_t k = 0; k < part.classes.size(); ++k) {
    const Perm& x = part.classes[k].representative;
    if (x.is_identity()) continue;
    auto orbit = conjugation_orbit_with_transversal(G, x);
    Perm xinv = inverse(x);
    bool found = false;
    for (std::size_t i = 0; i < orbit.members.size(); ++i) {
      Perm c = compose(xinv, G.element(orbit.members[i]));
      if (c.is_identity()) continue;
      std::uint64_t ord = order_of(c);
      if (ord % static_cast<std::uint64_t>(p) != 0) {
        r.witnesses.push_back({{"x", detail::perm_json(x)},
                               {"p", p},
                               {"g", detail::perm_json(orbit.conjugators[i])},
                               {"commutator", detail::perm_json(c)},
                               {"commutator_order", ord}});
        found = true;
        break;
      }
    }
    if (!found) {
      r.violations.push_back({{"x", detail::perm_json(x)},
                              {"p", p},
                              {"reason", "no nontrivial p'-commutator"}});
    }
    r.instances_checked += part.classes[k].size();
  }
  r.elapsed_ms = timer.elapsed_ms();
  return r;
}

/// Flags classes K with K^{-1}K = 1 u D u D^{-1} and asserts <K> solvable.
inline CheckReport search_three_class_products(const FiniteGroup& G) {
  detail::Stopwatch timer;
  CheckReport r;
  r.suite = "thm1_3";
  r.group_order = G.order();
  ClassPartition part = conjugacy_classes(G);
  for (std::uint32_t k = 0; k < part.classes.size(); ++k) {
    r.instances_checked += 1;
    auto support = inverse_product_support(G, part, k);
    support.erase(0);
    bool flagged = false;
    std::uint32_t d = 0;
    if (support.size() == 1) {
      d = *support.begin();
      flagged = inverse_class_index(G, part, d) == d;
    } else if (support.size() == 2) {
      d = *support.begin();
      flagged = inverse_class_index(G, part, d) == *std::next(support.begin());
    }
    if (!flagged) continue;
    const Perm& x = part.classes[k].representative;
    FiniteGroup H = normal_closure(G, {x});
    bool solvable = is_solvable(H);
    nlohmann::json record = {
        {"k_class", k},
        {"k_rep", detail::perm_json(x)},
        {"k_size", part.classes[k].size()},
        {"d_class", d},
        {"d_rep", detail::perm_json(part.classes[d].representative)},
        {"d_inverse_class", inverse_class_index(G, part, d)},
        {"closure_order", H.order()},
        {"closure_solvable", solvable}};
    if (solvable) {
      r.witnesses.push_back(std::move(record));
    } else {
      r.violations.push_back(std::move(record));
    }
  }
  r.elapsed_ms = timer.elapsed_ms();
  return r;
}

/// If every nonidentity commutator order of x is divisible by two distinct
/// primes r, s then x lies in F(G); if x additionally has prime power order
/// it lies in Z(G).  Quantified over all prime pairs dividing |G|.
inline CheckReport check_two_prime_conditions(const FiniteGroup& G) {
  detail::Stopwatch timer;
  CheckReport r;
  r.suite = "thm1_4_5";
  r.group_order = G.order();
  ClassPartition part = conjugacy_classes(G);
  FiniteGroup F = fitting(G);
  FiniteGroup Z = center(G);
  auto primes = prime_divisors(G.order());
  for (std::uint32_t k = 0; k < part.classes.size(); ++k) {
    const Perm& x = part.classes[k].representative;
    auto support = commutator_profile_of_class(G, part, k).support();
    bool p_element = prime_divisors(order_of(x)).size() <= 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      for (std::size_t j = i + 1; j < primes.size(); ++j) {
        std::uint64_t rs = primes[i] * primes[j];
        bool hyp = true;
        for (std::uint64_t m : support) {
          if (m % primes[i] != 0 || m % primes[j] != 0) {
            hyp = false;
            break;
          }
        }
        r.instances_checked += part.classes[k].size();
        if (!hyp) continue;
        bool in_f = F.contains(x);
        bool in_z = Z.contains(x);
        if (!in_f || (p_element && !in_z)) {
          r.violations.push_back({{"x", detail::perm_json(x)},
                                  {"r", primes[i]},
                                  {"s", primes[j]},
                                  {"commutator_support", detail::support_json(support)},
                                  {"p_element", p_element},
                                  {"in_fitting", in_f},
                                  {"in_center", in_z}});
        } else if (!support.empty()) {
          r.witnesses.push_back({{"x", detail::perm_json(x)},
                                 {"r", primes[i]},
                                 {"s", primes[j]},
                                 {"rs", rs},
                                 {"commutator_support", detail::support_json(support)},
                                 {"p_element", p_element},
                                 {"in_fitting", in_f},
                                 {"in_center", in_z}});
        }
      }
    }
  }
  r.elapsed_ms = timer.elapsed_ms();
  return r;
}

/// If the nonidentity commutator orders of x take a single value m then
/// <x^G> is solvable.  Central x (empty support) is included.
inline CheckReport check_equal_order(const FiniteGroup& G) {
  detail::Stopwatch timer;
  CheckReport r;
  r.suite = "cor1_6";
  r.group_order = G.order();
  ClassPartition part = conjugacy_classes(G);
  for (std::uint32_t k = 0; k < part.classes.size(); ++k) {
    const Perm& x = part.classes[k].representative;
    auto support = commutator_profile_of_class(G, part, k).support();
    r.instances_checked += part.classes[k].size();
    if (support.size() > 1) continue;
    FiniteGroup H = normal_closure(G, {x});
    bool solvable = is_solvable(H);
    if (!solvable) {
      r.violations.push_back({{"x", detail::perm_json(x)},
                              {"m", support.empty() ? 1 : support[0]},
                              {"closure_order", H.order()}});
    } else if (support.size() == 1) {
      r.witnesses.push_back({{"x", detail::perm_json(x)},
                             {"m", support[0]},
                             {"closure_order", H.order()},
                             {"closure_solvable", true}});
    }
  }
  r.elapsed_ms = timer.elapsed_ms();
  return r;
}

/// Auxiliary facts: prime-power class sizes force solvable closures; simple
/// Lie-type entries have defect-zero characters of degree coprime to the
/// defining characteristic; Sylow subgroups in the defining characteristic
/// are self-centralizing in almost simple groups; quasisimple centers only
/// involve primes of the simple quotient.
inline CheckReport check_lemma_suite(const FiniteGroup& G,
                                     const GroupMeta& meta) {
  detail::Stopwatch timer;
  CheckReport r;
  r.suite = "lemmas";
  r.group_order = G.order();
  ClassPartition part = conjugacy_classes(G);
  for (std::uint32_t k = 0; k < part.classes.size(); ++k) {
    if (prime_divisors(part.classes[k].size()).size() > 1) continue;
    const Perm& x = part.classes[k].representative;
    FiniteGroup H = normal_closure(G, {x});
    r.instances_checked += 1;
    if (!is_solvable(H)) {
      r.violations.push_back({{"lemma", "2.1"},
                              {"x", detail::perm_json(x)},
                              {"class_size", part.classes[k].size()},
                              {"closure_order", H.order()}});
    }
  }
  if (meta.lie_simple && meta.lie_characteristic) {
    int rc = *meta.lie_characteristic;
    CharacterTable T = character_table(G);
    for (std::uint64_t p : prime_divisors(G.order())) {
      if (p == static_cast<std::uint64_t>(rc)) continue;
      r.instances_checked += 1;
      bool found = false;
      for (std::size_t chi : defect_zero_characters(T, static_cast<int>(p))) {
        if (T.degrees[chi] % static_cast<std::uint64_t>(rc) != 0) {
          r.witnesses.push_back({{"lemma", "2.3"},
                                 {"p", p},
                                 {"r", rc},
                                 {"character_degree", T.degrees[chi]}});
          found = true;
          break;
        }
      }
      if (!found) {
        r.violations.push_back({{"lemma", "2.3"}, {"p", p}, {"r", rc}});
      }
    }
  }
  if (meta.almost_simple && meta.lie_characteristic) {
    int rc = *meta.lie_characteristic;
    FiniteGroup R = detail::sylow_subgroup(G, rc);
    std::vector<std::uint32_t> centralizing;
    for (std::uint32_t i = 0; i < G.order(); ++i) {
      const Perm& g = G.element(i);
      bool commutes = true;
      for (const Perm& s : R.generators()) {
        if (compose(g, s) != compose(s, g)) {
          commutes = false;
          break;
        }
      }
      if (commutes) centralizing.push_back(i);
    }
    bool contained = true;
    for (std::uint32_t i : centralizing) {
      if (!R.contains(G.element(i))) {
        contained = false;
        break;
      }
    }
    r.instances_checked += 1;
    if (!contained) {
      r.violations.push_back({{"lemma", "2.4"},
                              {"r", rc},
                              {"sylow_order", R.order()},
                              {"centralizer_order", centralizing.size()}});
    } else {
      r.witnesses.push_back({{"lemma", "2.4"},
                             {"r", rc},
                             {"sylow_order", R.order()},
                             {"centralizer_order", centralizing.size()}});
    }
  }
  if (G.order() > 1) {
    SimplicityFlags flags = simplicity_predicates(G);
    r.instances_checked += 1;
    if (flags.is_quasisimple) {
      FiniteGroup Z = center(G);
      std::uint64_t quotient = G.order() / Z.order();
      for (std::uint64_t p : prime_divisors(Z.order())) {
        if (quotient % p != 0) {
          r.violations.push_back({{"lemma", "2.5"},
                                  {"p", p},
                                  {"center_order", Z.order()},
                                  {"quotient_order", quotient}});
        }
      }
      r.witnesses.push_back({{"lemma", "2.5"},
                             {"center_order", Z.order()},
                             {"quotient_order", quotient}});
    }
  }
  r.elapsed_ms = timer.elapsed_ms();
  return r;
}

/// Exploration only: reports every x whose commutator orders are all 1 or
/// p-singular together with the solvability of <x^G>.  Never asserts.
inline CheckReport explore_question_5_1(const FiniteGroup& G, int p) {
  detail::Stopwatch timer;
  CheckReport r;
  r.suite = "question5_1";
  r.group_order = G.order();
  ClassPartition part = conjugacy_classes(G);
  FiniteGroup Op = o_p(G, p);
  for (std::uint32_t k = 0; k < part.classes.size(); ++k) {
    const Perm& x = part.classes[k].representative;
    auto support = commutator_profile_of_class(G, part, k).support();
    r.instances_checked += part.classes[k].size();
    bool hyp = true;
    for (std::uint64_t m : support) {
      if (m % static_cast<std::uint64_t>(p) != 0) {
        hyp = false;
        break;
      }
    }
    if (!hyp) continue;
    FiniteGroup H = normal_closure(G, {x});
    r.witnesses.push_back({{"x", detail::perm_json(x)},
                           {"p", p},
                           {"x_order", order_of(x)},
                           {"commutator_support", detail::support_json(support)},
                           {"closure_order", H.order()},
                           {"closure_solvable", is_solvable(H)},
                           {"x_in_p_core", Op.contains(x)}});
  }
  r.elapsed_ms = timer.elapsed_ms();
  return r;
}

/// Fact bundle for GL(2,3): the 2-core has order 8 with nonabelian quotient
/// of order 6, and every order-8 element has commutator orders exactly
/// {1,4,6} without being central modulo the 2-core.
inline std::vector<nlohmann::json> remark_violations_gl23(const FiniteGroup& G) {
  std::vector<nlohmann::json> out;
  auto fail = [&](const std::string& fact, const nlohmann::json& observed) {
    out.push_back({{"group", "GL(2,3)"}, {"fact", fact}, {"observed", observed}});
  };
  if (G.order() != 48) {
    fail("order 48", G.order());
    return out;
  }
  FiniteGroup Op = o_p(G, 2);
  if (Op.order() != 8) fail("2-core of order 8", Op.order());
  if (G.order() / Op.order() != 6) {
    fail("quotient of order 6", G.order() / Op.order());
  }
  FiniteGroup D = derived_subgroup(G);
  bool quotient_abelian = true;
  for (const Perm& d : D.generators()) {
    if (!Op.contains(d)) {
      quotient_abelian = false;
      break;
    }
  }
  if (quotient_abelian) fail("nonabelian quotient", true);
  ClassPartition part = conjugacy_classes(G);
  bool any_order8 = false;
  for (std::uint32_t k = 0; k < part.classes.size(); ++k) {
    const Perm& x = part.classes[k].representative;
    if (order_of(x) != 8) continue;
    any_order8 = true;
    auto profile = commutator_profile_of_class(G, part, k);
    std::vector<std::uint64_t> orders;
    for (const auto& [ord, cnt] : profile.order_multiset) orders.push_back(ord);
    if (orders != std::vector<std::uint64_t>{1, 4, 6}) {
      fail("order-8 commutator orders {1,4,6}", orders);
    }
    if (is_central_modulo(G, x, Op)) {
      fail("order-8 element not central mod 2-core", true);
    }
  }
  if (!any_order8) fail("contains an element of order 8", false);
  return out;
}

/// Fact bundle for the order-24 C3:Q8 entry: center of order 2, cyclic
/// Fitting subgroup of order 12 generated by an order-12 element whose
/// commutator orders are exactly {1,6}, inside F(G) but outside Z(G).
inline std::vector<nlohmann::json> remark_violations_c3q8(const FiniteGroup& G) {
  std::vector<nlohmann::json> out;
  auto fail = [&](const std::string& fact, const nlohmann::json& observed) {
    out.push_back({{"group", "C3:Q8"}, {"fact", fact}, {"observed", observed}});
  };
  if (G.order() != 24) {
    fail("order 24", G.order());
    return out;
  }
  FiniteGroup Z = center(G);
  if (Z.order() != 2) fail("center of order 2", Z.order());
  FiniteGroup F = fitting(G);
  if (F.order() != 12) fail("Fitting subgroup of order 12", F.order());
  ClassPartition part = conjugacy_classes(G);
  bool any_order12 = false;
  for (std::uint32_t k = 0; k < part.classes.size(); ++k) {
    const Perm& x = part.classes[k].representative;
    if (order_of(x) != 12) continue;
    any_order12 = true;
    if (!F.contains(x)) fail("order-12 element in F(G)", false);
    if (subgroup_from(G, {x}).order() != F.order()) {
      fail("F(G) cyclic, generated by an order-12 element", false);
    }
    auto profile = commutator_profile_of_class(G, part, k);
    std::vector<std::uint64_t> orders;
    for (const auto& [ord, cnt] : profile.order_multiset) orders.push_back(ord);
    if (orders != std::vector<std::uint64_t>{1, 6}) {
      fail("order-12 commutator orders {1,6}", orders);
    }
    if (Z.contains(x)) fail("order-12 element outside Z(G)", true);
  }
  if (!any_order12) fail("contains an element of order 12", false);
  return out;
}

/// Runs both fixture bundles; any mismatch is a hard failure.
inline CheckReport reproduce_remarks(std::size_t cap = kDefaultCap) {
  detail::Stopwatch timer;
  CheckReport r;
  r.suite = "remarks";
  r.group_name = "GL(2,3),C3:Q8";
  r.group_order = 0;
  FiniteGroup gl23 = make_named_group("GL(2,3)", cap);
  FiniteGroup c3q8 = make_named_group("C3:Q8", cap);
  auto v1 = remark_violations_gl23(gl23);
  auto v2 = remark_violations_c3q8(c3q8);
  r.instances_checked = 2;
  for (auto& v : v1) r.violations.push_back(std::move(v));
  for (auto& v : v2) r.violations.push_back(std::move(v));
  if (v1.empty()) {
    r.witnesses.push_back({{"group", "GL(2,3)"},
                           {"order", 48},
                           {"p_core_order", 8},
                           {"quotient_order", 6},
                           {"order8_commutator_orders", {1, 4, 6}},
                           {"order8_central_mod_p_core", false}});
  }
  if (v2.empty()) {
    r.witnesses.push_back({{"group", "C3:Q8"},
                           {"order", 24},
                           {"center_order", 2},
                           {"fitting_order", 12},
                           {"order12_commutator_orders", {1, 6}},
                           {"order12_in_fitting", true},
                           {"order12_in_center", false}});
  }
  r.elapsed_ms = timer.elapsed_ms();
  return r;
}

// ---------------------------------------------------------------------------
// suite registry and corpus runner
// ---------------------------------------------------------------------------

struct SuiteSpec {
  std::string id;
  std::string description;
  bool assertion; // exploration suites never affect exit codes
};

inline const std::vector<SuiteSpec>& suite_registry() {
  static const std::vector<SuiteSpec> suites{
      {"thm1_1",
       "commutators all p-elements iff central modulo the p-core (all p)",
       true},
      {"thm1_2",
       "almost simple groups: nontrivial p'-commutator witnesses (all p)",
       true},
      {"thm1_3", "K^{-1}K = 1 u D u D^{-1} implies <K> solvable", true},
      {"thm1_4_5",
       "commutator orders divisible by rs force x into F(G), Z(G) for "
       "prime-power x",
       true},
      {"cor1_6", "constant commutator order implies <x^G> solvable", true},
      {"glauberman_bs",
       "class fixed-point criterion for Z_p^* and pairwise p-group criterion "
       "for the p-core",
       true},
      {"lemmas",
       "prime-power classes, defect-zero characters, Sylow centralizers, "
       "quasisimple centers",
       true},
      {"question5_1",
       "exploration: x whose commutators are 1 or p-singular, with closure "
       "solvability",
       false},
      {"remarks", "GL(2,3) and C3:Q8 fixture bundles", true},
  };
  return suites;
}

inline const SuiteSpec& suite_spec(const std::string& id) {
  for (const auto& s : suite_registry()) {
    if (s.id == id) return s;
  }
  throw ArgumentError("unknown suite " + id);
}

namespace detail {

inline CheckReport merge_reports(const std::string& suite,
                                 const CorpusGroup& cg,
                                 std::vector<CheckReport> parts) {
  CheckReport out;
  out.suite = suite;
  out.group_name = cg.name;
  out.group_order = cg.group.order();
  for (auto& p : parts) {
    out.instances_checked += p.instances_checked;
    for (auto& v : p.violations) out.violations.push_back(std::move(v));
    for (auto& w : p.witnesses) out.witnesses.push_back(std::move(w));
    out.elapsed_ms += p.elapsed_ms;
  }
  return out;
}

} // namespace detail

/// Runs one suite on one corpus group; nullopt when the suite does not apply
/// (thm1_2 outside the almost simple sublist).  The "remarks" suite is
/// handled by run_suites, not here.
inline std::optional<CheckReport> run_suite_on_group(const std::string& id,
                                                     const CorpusGroup& cg) {
  const FiniteGroup& G = cg.group;
  auto primes = prime_divisors(G.order());
  std::vector<CheckReport> parts;
  if (id == "thm1_1") {
    for (std::uint64_t p : primes) {
      parts.push_back(check_thm_commutators_p(G, static_cast<int>(p)));
    }
    return detail::merge_reports(id, cg, std::move(parts));
  }
  if (id == "thm1_2") {
    if (!cg.meta.almost_simple) return std::nullopt;
    for (std::uint64_t p : primes) {
      parts.push_back(check_almost_simple_witness(G, static_cast<int>(p)));
    }
    return detail::merge_reports(id, cg, std::move(parts));
  }
  if (id == "thm1_3") {
    parts.push_back(search_three_class_products(G));
    return detail::merge_reports(id, cg, std::move(parts));
  }
  if (id == "thm1_4_5") {
    parts.push_back(check_two_prime_conditions(G));
    return detail::merge_reports(id, cg, std::move(parts));
  }
  if (id == "cor1_6") {
    parts.push_back(check_equal_order(G));
    return detail::merge_reports(id, cg, std::move(parts));
  }
  if (id == "glauberman_bs") {
    for (std::uint64_t p : primes) {
      parts.push_back(check_glauberman_baer_suzuki(G, static_cast<int>(p)));
    }
    return detail::merge_reports(id, cg, std::move(parts));
  }
  if (id == "lemmas") {
    parts.push_back(check_lemma_suite(G, cg.meta));
    return detail::merge_reports(id, cg, std::move(parts));
  }
  if (id == "question5_1") {
    for (std::uint64_t p : primes) {
      parts.push_back(explore_question_5_1(G, static_cast<int>(p)));
    }
    return detail::merge_reports(id, cg, std::move(parts));
  }
  throw ArgumentError("unknown suite " + id);
}

/// Runs suites over a corpus.  Reports come in (suite, corpus) order and are
/// byte-identical across runs modulo elapsed_ms; groups may be processed by
/// several worker threads.
inline std::vector<CheckReport> run_suites(
    const std::vector<std::string>& suite_ids,
    const std::vector<CorpusGroup>& corpus, int threads = 1) {
  std::vector<CheckReport> out;
  for (const std::string& id : suite_ids) {
    suite_spec(id);
    if (id == "remarks") {
      out.push_back(reproduce_remarks());
      continue;
    }
    std::vector<std::optional<CheckReport>> slots(corpus.size());
    if (threads <= 1) {
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        slots[i] = run_suite_on_group(id, corpus[i]);
      }
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errors(corpus.size());
      unsigned n = static_cast<unsigned>(threads);
      for (unsigned t = 0; t < n; ++t) {
        pool.emplace_back([&]() {
          for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= corpus.size()) break;
            try {
              slots[i] = run_suite_on_group(id, corpus[i]);
            } catch (...) {
              errors[i] = std::current_exception();
            }
          }
        });
      }
      for (auto& th : pool) th.join();
      for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }
    for (auto& s : slots) {
      if (s) out.push_back(std::move(*s));
    }
  }
  return out;
}

inline std::uint64_t total_violations(const std::vector<CheckReport>& reports) {
  std::uint64_t n = 0;
  for (const auto& r : reports) {
    if (suite_spec(r.suite).assertion) n += r.violations.size();
  }
  return n;
}

} // namespace permlab
