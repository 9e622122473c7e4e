#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

#include "permlab/catalog.hpp"
#include "permlab/classalg.hpp"
#include "permlab/corpus.hpp"
#include "permlab/group.hpp"
#include "permlab/series.hpp"

using namespace permlab;

namespace {

std::vector<std::size_t> class_sizes(const ClassPartition& part) {
  std::vector<std::size_t> out;
  for (const auto& c : part.classes) out.push_back(c.size());
  return out;
}

// Independent oracle: conjugation orbits computed with every group element,
// not just generators.
std::vector<std::size_t> brute_class_sizes(const FiniteGroup& G) {
  std::vector<bool> seen(G.order(), false);
  std::vector<std::size_t> sizes;
  for (std::uint32_t i = 0; i < G.order(); ++i) {
    if (seen[i]) continue;
    std::set<std::uint32_t> orbit;
    for (const Perm& g : G.elements()) {
      orbit.insert(G.index_of(conjugate(G.element(i), g)));
    }
    for (std::uint32_t j : orbit) seen[j] = true;
    sizes.push_back(orbit.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

} // namespace

TEST_CASE("generate closes S3", "[group]") {
  FiniteGroup G = generate(3,
                           {Perm::from_cycles(3, {{1, 2}}),
                            Perm::from_cycles(3, {{1, 2, 3}})});
  CHECK(G.order() == 6);
  CHECK(G.identity().is_identity());
  CHECK(G.contains(Perm::from_cycles(3, {{1, 3}})));
}

TEST_CASE("generate matches the GL(2,3) order formula", "[group]") {
  FiniteGroup G = make_named_group("GL(2,3)");
  CHECK(G.degree() == 8);
  CHECK(G.order() == (9 - 1) * (9 - 3));
}

TEST_CASE("cap breach carries the partial count", "[group]") {
  std::vector<Perm> gens{Perm::from_cycles(5, {{1, 2}}),
                         Perm::from_cycles(5, {{1, 2, 3, 4, 5}})};
  try {
    generate(5, gens, 10);
    FAIL("expected CapExceededError");
  } catch (const CapExceededError& e) {
    CHECK(e.partial_count() > 10);
    CHECK(e.cap() == 10);
  }
}

TEST_CASE("commutator special cases", "[group]") {
  Perm x = Perm::from_cycles(3, {{1, 2}});
  CHECK(commutator(x, x).is_identity());
  Perm a = Perm::from_cycles(5, {{1, 2}});
  Perm b = Perm::from_cycles(5, {{3, 4, 5}});
  CHECK(commutator(a, b).is_identity()); // disjoint supports commute
  Perm g = Perm::from_cycles(3, {{1, 2, 3}});
  CHECK(order_of(commutator(x, g)) == 3);
  CHECK_THROWS_AS(commutator(Perm(3), Perm(4)), DegreeMismatchError);
}

TEST_CASE("conjugacy classes of fixtures", "[group]") {
  auto s3 = conjugacy_classes(make_named_group("S3"));
  CHECK(class_sizes(s3) == std::vector<std::size_t>{1, 2, 3});
  CHECK(s3.classes[0].representative.is_identity());

  auto q8 = conjugacy_classes(make_named_group("Q8"));
  CHECK(class_sizes(q8) == std::vector<std::size_t>{1, 1, 2, 2, 2});

  FiniteGroup c12 = make_named_group("C12");
  CHECK(conjugacy_classes(c12).classes.size() == 12);
}

TEST_CASE("class partition agrees with the all-element oracle", "[group]") {
  for (const char* name : {"S4", "D12", "SL(2,3)", "F20"}) {
    FiniteGroup G = make_named_group(name);
    auto part = conjugacy_classes(G);
    auto sizes = class_sizes(part);
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == brute_class_sizes(G));
    // partition and divisibility invariants
    std::size_t total = 0;
    for (const auto& c : part.classes) {
      total += c.size();
      CHECK(G.order() % c.size() == 0);
      CHECK(c.representative == G.element(c.members[0]));
    }
    CHECK(total == G.order());
    for (std::uint32_t i = 0; i < G.order(); ++i) {
      const auto& cls = part.classes[part.class_of[i]];
      CHECK(std::binary_search(cls.members.begin(), cls.members.end(), i));
    }
  }
}

TEST_CASE("orbit transversal conjugates correctly", "[group]") {
  FiniteGroup G = make_named_group("S5");
  Perm x = Perm::from_cycles(5, {{1, 2, 3}});
  auto orbit = conjugation_orbit_with_transversal(G, x);
  CHECK(orbit.members.size() == 20);
  for (std::size_t i = 0; i < orbit.members.size(); ++i) {
    CHECK(conjugate(x, orbit.conjugators[i]) == G.element(orbit.members[i]));
  }
}

TEST_CASE("centralizer fixtures and orbit-stabilizer", "[group]") {
  FiniteGroup s3 = make_named_group("S3");
  CHECK(centralizer(s3, s3.identity()).order() == 6);
  CHECK(centralizer(s3, Perm::from_cycles(3, {{1, 2}})).order() == 2);

  FiniteGroup q8 = make_named_group("Q8");
  Perm minus_one = Perm::from_cycles(8, {{1, 3}, {2, 4}, {5, 7}, {6, 8}});
  CHECK(centralizer(q8, minus_one).order() == 8);

  // |C_G(x)| * |x^G| = |G| across the whole default corpus; centralizer
  // orders are constant on classes, so representatives cover every x
  auto entries =
      parse_corpus_manifest(nlohmann::json::parse(builtin_corpus_json()));
  for (const auto& e : entries) {
    FiniteGroup G = build_corpus_entry(e).group;
    auto part = conjugacy_classes(G);
    for (const auto& cls : part.classes) {
      CHECK(centralizer(G, cls.representative).order() * cls.size() ==
            G.order());
    }
  }
  CHECK_THROWS_AS(centralizer(s3, Perm(4)), NotInGroupError);
  FiniteGroup c3 = generate(3, {Perm::from_cycles(3, {{1, 2, 3}})});
  CHECK_THROWS_AS(centralizer(c3, Perm::from_cycles(3, {{1, 2}})),
                  NotInGroupError);
}

TEST_CASE("center fixtures", "[group]") {
  CHECK(center(make_named_group("C12")).order() == 12);
  CHECK(center(make_named_group("S3")).order() == 1);
  CHECK(center(make_named_group("Q8")).order() == 2);
  CHECK(center(make_named_group("C3:Q8")).order() == 2);
  FiniteGroup G = make_named_group("D12");
  FiniteGroup Z = center(G);
  for (const Perm& z : Z.elements()) {
    for (const Perm& g : G.elements()) {
      CHECK(compose(z, g) == compose(g, z));
    }
  }
}

TEST_CASE("normal closure fixtures", "[group]") {
  FiniteGroup s3 = make_named_group("S3");
  CHECK(normal_closure(s3, {s3.identity()}).order() == 1);
  FiniteGroup a3 = normal_closure(s3, {Perm::from_cycles(3, {{1, 2, 3}})});
  CHECK(a3.order() == 3);

  FiniteGroup a5 = make_named_group("A5");
  for (const auto& cls : conjugacy_classes(a5).classes) {
    if (cls.representative.is_identity()) continue;
    CHECK(normal_closure(a5, {cls.representative}).order() == 60);
  }

  CHECK_THROWS_AS(normal_closure(s3, {Perm(4)}), NotInGroupError);
}

TEST_CASE("normal closures are normal", "[group]") {
  std::mt19937 gen(42);
  for (const char* name : {"S4", "SL(2,3)", "D18", "C3:Q8"}) {
    FiniteGroup G = make_named_group(name);
    for (int trial = 0; trial < 5; ++trial) {
      const Perm& seed = G.element(gen() % G.order());
      FiniteGroup N = normal_closure(G, {seed});
      CHECK(is_normal_in(N, G));
      for (const Perm& n : N.generators()) {
        for (const Perm& g : G.generators()) {
          CHECK(N.contains(conjugate(n, g)));
        }
      }
    }
  }
}

TEST_CASE("derived subgroup fixtures and contract", "[group]") {
  CHECK(derived_subgroup(make_named_group("C24")).order() == 1);
  CHECK(derived_subgroup(make_named_group("S3")).order() == 3);
  FiniteGroup q8 = make_named_group("Q8");
  FiniteGroup d = derived_subgroup(q8);
  CHECK(d.order() == 2);
  CHECK(d.order() == center(q8).order());

  std::mt19937 gen(11);
  for (const char* name : {"S4", "SL(2,3)", "GL(2,3)"}) {
    FiniteGroup G = make_named_group(name);
    FiniteGroup D = derived_subgroup(G);
    for (int trial = 0; trial < 30; ++trial) {
      const Perm& a = G.element(gen() % G.order());
      const Perm& b = G.element(gen() % G.order());
      CHECK(D.contains(commutator(a, b)));
    }
  }
}

TEST_CASE("subgroup_from fixtures", "[group]") {
  FiniteGroup s4 = make_named_group("S4");
  CHECK(subgroup_from(s4, {}).order() == 1);
  CHECK(subgroup_from(s4, {Perm::from_cycles(4, {{1, 2}})}).order() == 2);
  CHECK(subgroup_from(s4, {Perm::from_cycles(4, {{1, 2}}),
                           Perm::from_cycles(4, {{3, 4}})})
            .order() == 4);
  CHECK_THROWS_AS(subgroup_from(s4, {Perm(5)}), NotInGroupError);
}

TEST_CASE("commutator vanishes exactly on commuting pairs", "[group]") {
  std::mt19937 gen(3);
  FiniteGroup G = make_named_group("D16");
  for (int trial = 0; trial < 100; ++trial) {
    const Perm& a = G.element(gen() % G.order());
    const Perm& b = G.element(gen() % G.order());
    CHECK(commutator(a, b).is_identity() == (compose(a, b) == compose(b, a)));
  }
}

TEST_CASE("random generated groups satisfy the structural invariants",
          "[group]") {
  std::mt19937 gen(60901);
  auto random_perm = [&](unsigned degree) {
    std::vector<Perm::point> img(degree);
    for (unsigned i = 0; i < degree; ++i) img[i] = static_cast<Perm::point>(i);
    for (unsigned i = degree; i > 1; --i) std::swap(img[i - 1], img[gen() % i]);
    return Perm::from_images(std::move(img));
  };
  int built = 0;
  while (built < 15) {
    unsigned degree = 4 + gen() % 5;
    std::vector<Perm> gens{random_perm(degree), random_perm(degree)};
    FiniteGroup G;
    try {
      G = generate(degree, gens, 2000);
    } catch (const CapExceededError&) {
      continue;
    }
    ++built;
    auto part = conjugacy_classes(G);
    std::size_t total = 0;
    for (const auto& cls : part.classes) {
      total += cls.size();
      CHECK(G.order() % cls.size() == 0);
      CHECK(centralizer(G, cls.representative).order() * cls.size() ==
            G.order());
      CHECK(G.order() % order_of(cls.representative) == 0); // Lagrange
    }
    CHECK(total == G.order());
    FiniteGroup D = derived_subgroup(G);
    for (int t = 0; t < 10; ++t) {
      const Perm& a = G.element(gen() % G.order());
      const Perm& b = G.element(gen() % G.order());
      CHECK(D.contains(commutator(a, b)));
    }
    if (G.order() <= 300) {
      for (int t = 0; t < 3; ++t) {
        const Perm& x = G.element(gen() % G.order());
        std::map<std::uint64_t, std::uint64_t> brute;
        for (const Perm& g : G.elements()) {
          ++brute[order_of(commutator(x, g))];
        }
        CHECK(commutator_profile(G, x).order_multiset == brute);
      }
    }
  }
}

TEST_CASE("generator check suffices for centrality modulo a normal subgroup",
          "[group]") {
  // [x, gh] = [x,h] [x,g]^h makes the generator check equivalent to the
  // full check; verified exhaustively on small corpus groups.
  for (const char* name :
       {"S3", "D12", "Q8", "A4", "SL(2,3)", "C3:Q8", "S4", "GL(2,3)", "F20"}) {
    FiniteGroup G = make_named_group(name);
    std::vector<FiniteGroup> normals{center(G), derived_subgroup(G)};
    for (std::uint64_t p : prime_divisors(G.order())) {
      normals.push_back(o_p(G, static_cast<int>(p)));
    }
    for (const FiniteGroup& N : normals) {
      for (const Perm& x : G.elements()) {
        bool gen_check = true;
        for (const Perm& g : G.generators()) {
          if (!N.contains(commutator(x, g))) {
            gen_check = false;
            break;
          }
        }
        bool full_check = true;
        for (const Perm& g : G.elements()) {
          if (!N.contains(commutator(x, g))) {
            full_check = false;
            break;
          }
        }
        CHECK(gen_check == full_check);
      }
    }
  }
}
