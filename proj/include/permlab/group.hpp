#pragma once

/// @file group.hpp
/// @brief Fully enumerated permutation groups: breadth-first closure,
///        conjugacy classes, centralizers, normal closures, derived subgroups.
///
/// A FiniteGroup is an immutable value (cheap to copy, safe to share across
/// threads).  Elements carry a stable total order: lexicographic on image
/// tables.  All subgroups are full FiniteGroup values over the same degree.

#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "permlab/errors.hpp"
#include "permlab/perm.hpp"

namespace permlab {

inline constexpr std::size_t kDefaultCap = 100000;

/// g^{-1} x g
inline Perm conjugate(const Perm& x, const Perm& g) {
  return compose(compose(inverse(g), x), g);
}

/// x^{-1} g^{-1} x g, evaluated left to right.
inline Perm commutator(const Perm& x, const Perm& g) {
  if (x.degree() != g.degree()) {
    throw DegreeMismatchError("commutator: degrees " +
                              std::to_string(x.degree()) + " vs " +
                              std::to_string(g.degree()));
  }
  return compose(compose(compose(inverse(x), inverse(g)), x), g);
}

namespace detail {

// Closure of `gens` under multiplication, as a breadth-first search from the
// identity.  Throws CapExceededError as soon as the element count passes cap.
inline std::vector<Perm> bfs_closure(unsigned degree,
                                     const std::vector<Perm>& gens,
                                     std::size_t cap) {
  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> todo;
  Perm id(degree);
  seen.insert(id);
  todo.push_back(id);
  while (!todo.empty()) {
    Perm cur = std::move(todo.front());
    todo.pop_front();
    for (const Perm& g : gens) {
      Perm next = compose(cur, g);
      if (seen.insert(next).second) {
        if (seen.size() > cap) throw CapExceededError(seen.size(), cap);
        todo.push_back(std::move(next));
      }
    }
  }
  std::vector<Perm> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

// Variant that stops quietly once the closure grows past cap; returns the
// element count if the closure stayed within cap, nullopt otherwise.  Used
// for "is <x, y> a p-group" style questions where only smallness matters.
inline std::optional<std::size_t> bounded_closure_size(
    unsigned degree, const std::vector<Perm>& gens, std::size_t cap) {
  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> todo;
  Perm id(degree);
  seen.insert(id);
  todo.push_back(id);
  while (!todo.empty()) {
    Perm cur = std::move(todo.front());
    todo.pop_front();
    for (const Perm& g : gens) {
      Perm next = compose(cur, g);
      if (seen.insert(next).second) {
        if (seen.size() > cap) return std::nullopt;
        todo.push_back(std::move(next));
      }
    }
  }
  return seen.size();
}

} // namespace detail

class FiniteGroup {
public:
  FiniteGroup() = default;

  unsigned degree() const { return data_->degree; }
  std::size_t order() const { return data_->elements.size(); }

  /// Elements in the stable total order (lexicographic on image tables).
  const std::vector<Perm>& elements() const { return data_->elements; }
  const std::vector<Perm>& generators() const { return data_->generators; }
  const Perm& element(std::uint32_t i) const { return data_->elements[i]; }

  /// The identity always sits at index 0 of the element list.
  const Perm& identity() const { return data_->elements[0]; }

  bool contains(const Perm& p) const {
    return data_->index.find(p) != data_->index.end();
  }

  std::optional<std::uint32_t> find(const Perm& p) const {
    auto it = data_->index.find(p);
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
  }

  std::uint32_t index_of(const Perm& p) const {
    auto it = data_->index.find(p);
    if (it == data_->index.end()) {
      throw NotInGroupError("element " + p.cycle_string() +
                            " is not in the group");
    }
    return it->second;
  }

  bool valid() const { return static_cast<bool>(data_); }

  /// Wraps an element list that is already known to be closed.  The list is
  /// sorted here; generators default to {identity} when empty.
  static FiniteGroup from_closed_elements(unsigned degree,
                                          std::vector<Perm> elements,
                                          std::vector<Perm> generators) {
    auto data = std::make_shared<Data>();
    data->degree = degree;
    std::sort(elements.begin(), elements.end());
    data->elements = std::move(elements);
    if (generators.empty()) generators.push_back(Perm(degree));
    data->generators = std::move(generators);
    data->index.reserve(data->elements.size() * 2);
    for (std::uint32_t i = 0; i < data->elements.size(); ++i) {
      data->index.emplace(data->elements[i], i);
    }
    FiniteGroup g;
    g.data_ = std::move(data);
    return g;
  }

private:
  struct Data {
    unsigned degree = 0;
    std::vector<Perm> generators;
    std::vector<Perm> elements;
    std::unordered_map<Perm, std::uint32_t, PermHash> index;
  };
  std::shared_ptr<const Data> data_;
};

/// Breadth-first closure of the generators.  Throws CapExceededError with the
/// partial count when the closure passes `cap`.
inline FiniteGroup generate(unsigned degree, std::vector<Perm> generators,
                            std::size_t cap = kDefaultCap) {
  if (generators.empty()) {
    throw ArgumentError("generate: need at least one generator");
  }
  if (cap < 1) throw ArgumentError("generate: cap must be >= 1");
  for (const Perm& g : generators) {
    if (g.degree() != degree) {
      throw DegreeMismatchError("generate: generator degree " +
                                std::to_string(g.degree()) +
                                " does not match " + std::to_string(degree));
    }
  }
  auto elements = detail::bfs_closure(degree, generators, cap);
  return FiniteGroup::from_closed_elements(degree, std::move(elements),
                                           std::move(generators));
}

struct ConjugacyClass {
  Perm representative;                 // minimal member in the stable order
  std::vector<std::uint32_t> members;  // element indices, ascending
  std::size_t size() const { return members.size(); }
};

struct ClassPartition {
  std::vector<ConjugacyClass> classes;   // identity class first, then (size, rep)
  std::vector<std::uint32_t> class_of;   // element index -> class index
};

namespace detail {

inline std::vector<Perm> generator_inverses(const FiniteGroup& G) {
  std::vector<Perm> out;
  out.reserve(G.generators().size());
  for (const Perm& g : G.generators()) out.push_back(inverse(g));
  return out;
}

} // namespace detail

/// Conjugation orbit of x under G, as sorted element indices.
inline std::vector<std::uint32_t> conjugation_orbit(const FiniteGroup& G,
                                                    const Perm& x) {
  std::uint32_t start = G.index_of(x);
  std::vector<std::uint32_t> orbit{start};
  std::unordered_set<std::uint32_t> seen{start};
  auto inv = detail::generator_inverses(G);
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    const Perm& y = G.element(orbit[head]);
    for (std::size_t gi = 0; gi < G.generators().size(); ++gi) {
      Perm z = compose(compose(inv[gi], y), G.generators()[gi]);
      std::uint32_t zi = G.index_of(z);
      if (seen.insert(zi).second) orbit.push_back(zi);
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

/// Conjugation orbit together with conjugators: members[i] = x^{conjugators[i]}.
/// Members come in breadth-first order (deterministic), not sorted.
struct OrbitTransversal {
  std::vector<std::uint32_t> members;
  std::vector<Perm> conjugators;
};

inline OrbitTransversal conjugation_orbit_with_transversal(
    const FiniteGroup& G, const Perm& x) {
  OrbitTransversal out;
  std::uint32_t start = G.index_of(x);
  out.members.push_back(start);
  out.conjugators.push_back(Perm(G.degree()));
  std::unordered_set<std::uint32_t> seen{start};
  auto inv = detail::generator_inverses(G);
  for (std::size_t head = 0; head < out.members.size(); ++head) {
    Perm y = G.element(out.members[head]);
    Perm u = out.conjugators[head];
    for (std::size_t gi = 0; gi < G.generators().size(); ++gi) {
      Perm z = compose(compose(inv[gi], y), G.generators()[gi]);
      std::uint32_t zi = G.index_of(z);
      if (seen.insert(zi).second) {
        out.members.push_back(zi);
        out.conjugators.push_back(compose(u, G.generators()[gi]));
      }
    }
  }
  return out;
}

/// Partition of G into conjugacy classes.  Classes are ordered by
/// (size, representative index); the identity class comes first.
inline ClassPartition conjugacy_classes(const FiniteGroup& G) {
  ClassPartition out;
  out.class_of.assign(G.order(), 0);
  std::vector<bool> seen(G.order(), false);
  auto inv = detail::generator_inverses(G);
  for (std::uint32_t i = 0; i < G.order(); ++i) {
    if (seen[i]) continue;
    std::vector<std::uint32_t> orbit{i};
    seen[i] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const Perm& y = G.element(orbit[head]);
      for (std::size_t gi = 0; gi < G.generators().size(); ++gi) {
        Perm z = compose(compose(inv[gi], y), G.generators()[gi]);
        std::uint32_t zi = G.index_of(z);
        if (!seen[zi]) {
          seen[zi] = true;
          orbit.push_back(zi);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    ConjugacyClass cls;
    cls.representative = G.element(orbit[0]);
    cls.members = std::move(orbit);
    out.classes.push_back(std::move(cls));
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const ConjugacyClass& a, const ConjugacyClass& b) {
              if (a.members.size() != b.members.size()) {
                return a.members.size() < b.members.size();
              }
              return a.members[0] < b.members[0];
            });
  for (std::uint32_t c = 0; c < out.classes.size(); ++c) {
    for (std::uint32_t m : out.classes[c].members) out.class_of[m] = c;
  }
  return out;
}

/// Subgroup generated by a subset of G given as element indices.  The
/// generating set is reduced greedily in the stable element order, so the
/// result is deterministic.
inline FiniteGroup subgroup_from_indices(const FiniteGroup& G,
                                         std::vector<std::uint32_t> idxs) {
  std::sort(idxs.begin(), idxs.end());
  idxs.erase(std::unique(idxs.begin(), idxs.end()), idxs.end());
  std::vector<Perm> gens;
  std::unordered_set<std::uint32_t> have;
  have.insert(G.index_of(Perm(G.degree())));
  std::vector<std::uint32_t> closure_list{*have.begin()};
  auto grow = [&](const Perm& g) {
    gens.push_back(g);
    // rebuild closure over element indices with the enlarged generator set
    have.clear();
    closure_list.clear();
    std::uint32_t id = G.index_of(Perm(G.degree()));
    have.insert(id);
    closure_list.push_back(id);
    for (std::size_t head = 0; head < closure_list.size(); ++head) {
      const Perm& cur = G.element(closure_list[head]);
      for (const Perm& s : gens) {
        std::uint32_t ni = G.index_of(compose(cur, s));
        if (have.insert(ni).second) closure_list.push_back(ni);
      }
    }
  };
  for (std::uint32_t i : idxs) {
    if (!have.count(i)) grow(G.element(i));
  }
  std::vector<Perm> elements;
  elements.reserve(closure_list.size());
  for (std::uint32_t i : closure_list) elements.push_back(G.element(i));
  return FiniteGroup::from_closed_elements(G.degree(), std::move(elements),
                                           std::move(gens));
}

/// Smallest subgroup of G containing the seeds (no conjugation).
/// Empty seed set yields the trivial subgroup.
inline FiniteGroup subgroup_from(const FiniteGroup& G,
                                 const std::vector<Perm>& seeds) {
  std::vector<std::uint32_t> idxs;
  for (const Perm& s : seeds) idxs.push_back(G.index_of(s));
  return subgroup_from_indices(G, std::move(idxs));
}

/// {g in G : gx = xg}
inline FiniteGroup centralizer(const FiniteGroup& G, const Perm& x) {
  G.index_of(x); // membership precondition
  std::vector<std::uint32_t> idxs;
  for (std::uint32_t i = 0; i < G.order(); ++i) {
    const Perm& g = G.element(i);
    if (compose(g, x) == compose(x, g)) idxs.push_back(i);
  }
  return subgroup_from_indices(G, std::move(idxs));
}

/// Intersection of the centralizers of the generators.
inline FiniteGroup center(const FiniteGroup& G) {
  std::vector<std::uint32_t> idxs;
  for (std::uint32_t i = 0; i < G.order(); ++i) {
    const Perm& g = G.element(i);
    bool central = true;
    for (const Perm& s : G.generators()) {
      if (compose(g, s) != compose(s, g)) {
        central = false;
        break;
      }
    }
    if (central) idxs.push_back(i);
  }
  return subgroup_from_indices(G, std::move(idxs));
}

/// Smallest normal subgroup of G containing the seeds: the subgroup generated
/// by all G-conjugates of the seeds.
inline FiniteGroup normal_closure(const FiniteGroup& G,
                                  const std::vector<Perm>& seeds) {
  std::vector<Perm> gens;
  for (const Perm& s : seeds) {
    G.index_of(s);
    if (!s.is_identity()) gens.push_back(s);
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  FiniteGroup H = subgroup_from(G, gens);
  for (;;) {
    bool added = false;
    std::vector<Perm> current = gens;
    for (const Perm& s : current) {
      for (const Perm& g : G.generators()) {
        Perm c = conjugate(s, g);
        if (!H.contains(c)) {
          gens.push_back(c);
          added = true;
        }
      }
    }
    if (!added) break;
    H = subgroup_from(G, gens);
  }
  return H;
}

/// Normal closure of the commutators of all generator pairs; equals [G, G].
inline FiniteGroup derived_subgroup(const FiniteGroup& G) {
  std::vector<Perm> seeds;
  for (const Perm& a : G.generators()) {
    for (const Perm& b : G.generators()) {
      Perm c = commutator(a, b);
      if (!c.is_identity()) seeds.push_back(c);
    }
  }
  return normal_closure(G, seeds);
}

/// True when every G-conjugate of every generator of N stays inside N.
inline bool is_normal_in(const FiniteGroup& N, const FiniteGroup& G) {
  for (const Perm& n : N.generators()) {
    for (const Perm& g : G.generators()) {
      if (!N.contains(conjugate(n, g))) return false;
    }
  }
  return true;
}

} // namespace permlab
