#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

#include "permlab/catalog.hpp"
#include "permlab/classalg.hpp"
#include "permlab/corpus.hpp"

using namespace permlab;

namespace {

// Brute-force oracle: count pairs (a, b) in K x L with a*b = c over the full
// member sets, independent of the bucketed counting in the library.
std::uint64_t brute_structure_constant(const FiniteGroup& G,
                                       const ClassPartition& part,
                                       std::uint32_t k, std::uint32_t l,
                                       const Perm& c) {
  std::uint64_t count = 0;
  for (std::uint32_t ai : part.classes[k].members) {
    for (std::uint32_t bi : part.classes[l].members) {
      if (compose(G.element(ai), G.element(bi)) == c) ++count;
    }
  }
  return count;
}

// Brute-force commutator profile over every g in G.
std::map<std::uint64_t, std::uint64_t> brute_profile(const FiniteGroup& G,
                                                     const Perm& x) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (const Perm& g : G.elements()) {
    ++out[order_of(commutator(x, g))];
  }
  return out;
}

std::uint32_t class_of_order(const FiniteGroup&, const ClassPartition& part,
                             std::uint64_t ord) {
  for (std::uint32_t k = 0; k < part.classes.size(); ++k) {
    if (order_of(part.classes[k].representative) == ord) return k;
  }
  FAIL("no class of the requested element order");
  return 0;
}

} // namespace

TEST_CASE("inverse classes", "[classalg]") {
  FiniteGroup s3 = make_named_group("S3");
  auto part = conjugacy_classes(s3);
  for (std::uint32_t k = 0; k < part.classes.size(); ++k) {
    CHECK(inverse_class_index(s3, part, k) == k); // all classes of S3 are real
  }

  FiniteGroup psl = make_named_group("PSL(2,7)");
  auto pp = conjugacy_classes(psl);
  std::vector<std::uint32_t> seven_classes;
  for (std::uint32_t k = 0; k < pp.classes.size(); ++k) {
    if (order_of(pp.classes[k].representative) == 7) seven_classes.push_back(k);
  }
  REQUIRE(seven_classes.size() == 2);
  CHECK(inverse_class_index(psl, pp, seven_classes[0]) == seven_classes[1]);
  CHECK(inverse_class_index(psl, pp, seven_classes[1]) == seven_classes[0]);
}

TEST_CASE("real classes", "[classalg]") {
  for (const char* name : {"S3", "S4", "S5", "S6"}) {
    FiniteGroup G = make_named_group(name);
    auto part = conjugacy_classes(G);
    CHECK(real_classes(G, part).size() == part.classes.size());
  }
  FiniteGroup a4 = make_named_group("A4");
  auto part = conjugacy_classes(a4);
  std::uint32_t three = class_of_order(a4, part, 3);
  auto reals = real_classes(a4, part);
  CHECK_FALSE(std::count(reals.begin(), reals.end(), three));
  CHECK(std::count(reals.begin(), reals.end(), 0u)); // identity class
}

TEST_CASE("structure constant fixtures against the brute-force oracle",
          "[classalg]") {
  FiniteGroup s4 = make_named_group("S4");
  auto part = conjugacy_classes(s4);
  std::uint32_t transp = 0, double_transp = 0;
  for (std::uint32_t k = 0; k < part.classes.size(); ++k) {
    const Perm& rep = part.classes[k].representative;
    auto ct = order_and_cycle_type(rep).cycle_type;
    if (ct == std::vector<unsigned>{1, 1, 2}) transp = k;
    if (ct == std::vector<unsigned>{2, 2}) double_transp = k;
  }
  const Perm& c = part.classes[double_transp].representative;
  std::uint64_t oracle = brute_structure_constant(s4, part, transp, transp, c);
  CHECK(oracle == 2); // frozen: 36 pairs of transpositions, 2 hit (1 2)(3 4)
  CHECK(structure_constant_count(s4, part, transp, transp, double_transp) ==
        oracle);
}

TEST_CASE("S3 class product decomposition", "[classalg]") {
  FiniteGroup s3 = make_named_group("S3");
  auto part = conjugacy_classes(s3);
  std::uint32_t transp = class_of_order(s3, part, 2);
  std::uint32_t rot = class_of_order(s3, part, 3);
  // K^{-1} = K for transpositions; brute force over all 9 pairs gives
  // identity three times and each 3-cycle three times
  auto dec = class_product_decomposition(s3, part, transp, transp);
  REQUIRE(dec.terms.size() == 2);
  CHECK(dec.terms[0] == std::make_pair(std::uint32_t{0}, std::uint64_t{3}));
  CHECK(dec.terms[1] == std::make_pair(rot, std::uint64_t{3}));
  for (const auto& [cls, mult] : dec.terms) {
    CHECK(mult == brute_structure_constant(s3, part, transp, transp,
                                           part.classes[cls].representative));
  }
}

TEST_CASE("Q8 class product decomposition", "[classalg]") {
  FiniteGroup q8 = make_named_group("Q8");
  auto part = conjugacy_classes(q8);
  // class {i, -i} is the first size-2 class; K^{-1}K = 1 (x2) u {-1} (x2)
  std::uint32_t iclass = 2;
  REQUIRE(part.classes[iclass].size() == 2);
  std::uint32_t minus_one = 1;
  REQUIRE(part.classes[minus_one].size() == 1);
  std::uint32_t inv = inverse_class_index(q8, part, iclass);
  auto dec = class_product_decomposition(q8, part, inv, iclass);
  REQUIRE(dec.terms.size() == 2);
  CHECK(dec.terms[0] == std::make_pair(std::uint32_t{0}, std::uint64_t{2}));
  CHECK(dec.terms[1] == std::make_pair(minus_one, std::uint64_t{2}));
}

TEST_CASE("identity class acts as the unit", "[classalg]") {
  FiniteGroup g = make_named_group("F20");
  auto part = conjugacy_classes(g);
  for (std::uint32_t l = 0; l < part.classes.size(); ++l) {
    auto dec = class_product_decomposition(g, part, 0, l);
    REQUIRE(dec.terms.size() == 1);
    CHECK(dec.terms[0] == std::make_pair(l, std::uint64_t{1}));
  }
}

TEST_CASE("n(K^{-1}, K, identity) = |K|", "[classalg]") {
  for (const char* name : {"S4", "Q8", "F21", "SL(2,3)", "A5"}) {
    FiniteGroup G = make_named_group(name);
    auto part = conjugacy_classes(G);
    for (std::uint32_t k = 0; k < part.classes.size(); ++k) {
      std::uint32_t kinv = inverse_class_index(G, part, k);
      CHECK(structure_constant_count(G, part, kinv, k, 0) ==
            part.classes[k].size());
    }
  }
}

TEST_CASE("mass balance over all class pairs of the small corpus",
          "[classalg]") {
  auto entries =
      parse_corpus_manifest(nlohmann::json::parse(builtin_corpus_json()));
  for (const auto& e : entries) {
    if (e.expected_order > 500) continue;
    FiniteGroup G = build_corpus_entry(e).group;
    auto part = conjugacy_classes(G);
    for (std::uint32_t k = 0; k < part.classes.size(); ++k) {
      for (std::uint32_t l = 0; l < part.classes.size(); ++l) {
        auto dec = class_product_decomposition(G, part, k, l);
        std::uint64_t mass = 0;
        for (const auto& [cls, mult] : dec.terms) {
          mass += mult * part.classes[cls].size();
        }
        CHECK(mass == static_cast<std::uint64_t>(part.classes[k].size()) *
                          part.classes[l].size());
      }
    }
  }
}

TEST_CASE("decomposition json round trip", "[classalg]") {
  FiniteGroup s3 = make_named_group("S3");
  auto part = conjugacy_classes(s3);
  auto dec = class_product_decomposition(s3, part, 2, 2);
  nlohmann::json j = decomposition_to_json(dec);
  CHECK(j.at("left") == 2);
  CHECK(j.at("right") == 2);
  CHECK(j.at("terms") == nlohmann::json::parse("[[0,3],[1,3]]"));
  auto back = decomposition_from_json(j);
  CHECK(back.left == dec.left);
  CHECK(back.right == dec.right);
  CHECK(back.terms == dec.terms);
}

TEST_CASE("structure constants do not depend on the representative",
          "[classalg]") {
  std::mt19937 gen(2024);
  for (const char* name : {"S4", "SL(2,3)", "F21", "A5"}) {
    FiniteGroup G = make_named_group(name);
    auto part = conjugacy_classes(G);
    for (int trial = 0; trial < 12; ++trial) {
      std::uint32_t k = gen() % part.classes.size();
      std::uint32_t l = gen() % part.classes.size();
      std::uint32_t c = gen() % part.classes.size();
      std::uint64_t canonical =
          structure_constant_count(G, part, k, l, c);
      for (int pick = 0; pick < 3; ++pick) {
        const auto& members = part.classes[c].members;
        const Perm& target = G.element(members[gen() % members.size()]);
        CHECK(brute_structure_constant(G, part, k, l, target) == canonical);
      }
    }
  }
}

TEST_CASE("commutator profile fixtures", "[classalg]") {
  FiniteGroup c12 = make_named_group("C12");
  auto prof = commutator_profile(c12, c12.element(3));
  CHECK(prof.order_multiset ==
        std::map<std::uint64_t, std::uint64_t>{{1, 12}});

  FiniteGroup gl23 = make_named_group("GL(2,3)");
  auto part = conjugacy_classes(gl23);
  bool seen8 = false;
  for (std::uint32_t k = 0; k < part.classes.size(); ++k) {
    if (order_of(part.classes[k].representative) != 8) continue;
    seen8 = true;
    auto p = commutator_profile_of_class(gl23, part, k);
    CHECK(p.support() == std::vector<std::uint64_t>{4, 6});
  }
  CHECK(seen8);

  FiniteGroup c3q8 = make_named_group("C3:Q8");
  auto cpart = conjugacy_classes(c3q8);
  bool seen12 = false;
  for (std::uint32_t k = 0; k < cpart.classes.size(); ++k) {
    if (order_of(cpart.classes[k].representative) != 12) continue;
    seen12 = true;
    auto p = commutator_profile_of_class(c3q8, cpart, k);
    CHECK(p.support() == std::vector<std::uint64_t>{6});
  }
  CHECK(seen12);
}

TEST_CASE("profile equals the brute-force double loop", "[classalg]") {
  for (const char* name : {"S4", "SL(2,3)", "D12", "C3:Q8"}) {
    FiniteGroup G = make_named_group(name);
    auto part = conjugacy_classes(G);
    for (const auto& cls : part.classes) {
      auto fast = commutator_profile(G, cls.representative).order_multiset;
      CHECK(fast == brute_profile(G, cls.representative));
    }
  }
}

TEST_CASE("profile counts sum to the group order with centralizer at 1",
          "[classalg]") {
  FiniteGroup G = make_named_group("S5");
  auto part = conjugacy_classes(G);
  for (const auto& cls : part.classes) {
    auto prof = commutator_profile(G, cls.representative);
    std::uint64_t total = 0;
    for (const auto& [ord, cnt] : prof.order_multiset) total += cnt;
    CHECK(total == G.order());
    CHECK(prof.order_multiset.at(1) ==
          centralizer(G, cls.representative).order());
  }
}

TEST_CASE("profile support matches the K^{-1}K support", "[classalg]") {
  for (const char* name : {"S4", "Q8", "F20", "GL(2,3)"}) {
    FiniteGroup G = make_named_group(name);
    auto part = conjugacy_classes(G);
    for (std::uint32_t k = 0; k < part.classes.size(); ++k) {
      auto profile_support =
          commutator_profile_of_class(G, part, k).support();
      std::set<std::uint64_t> product_orders;
      for (std::uint32_t cls : inverse_product_support(G, part, k)) {
        if (cls == 0) continue;
        product_orders.insert(order_of(part.classes[cls].representative));
      }
      CHECK(std::set<std::uint64_t>(profile_support.begin(),
                                    profile_support.end()) == product_orders);
    }
  }
}

TEST_CASE("positive constants detect containment in K^{-1}K", "[classalg]") {
  FiniteGroup G = make_named_group("S4");
  auto part = conjugacy_classes(G);
  for (std::uint32_t k = 0; k < part.classes.size(); ++k) {
    std::uint32_t kinv = inverse_class_index(G, part, k);
    // brute product set
    std::set<std::uint32_t> product_classes;
    for (std::uint32_t ai : part.classes[kinv].members) {
      for (std::uint32_t bi : part.classes[k].members) {
        product_classes.insert(
            part.class_of[G.index_of(compose(G.element(ai), G.element(bi)))]);
      }
    }
    for (std::uint32_t c = 0; c < part.classes.size(); ++c) {
      bool positive = structure_constant_count(G, part, kinv, k, c) > 0;
      CHECK(positive == (product_classes.count(c) > 0));
    }
  }
}
