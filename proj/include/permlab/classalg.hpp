#pragma once

/// @file classalg.hpp
/// @brief Class-algebra combinatorics: inverse classes, products of classes,
///        structure constants by direct counting, commutator order profiles,
///        real classes.

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "permlab/group.hpp"
#include "permlab/perm.hpp"

namespace permlab {

/// Index of the class containing the inverses of class k's members.
inline std::uint32_t inverse_class_index(const FiniteGroup& G,
                                         const ClassPartition& part,
                                         std::uint32_t k) {
  const Perm& rep = part.classes[k].representative;
  return part.class_of[G.index_of(inverse(rep))];
}

/// n(K, L, C) for the canonical representative c of C: the number of pairs
/// (a, b) in K x L with a*b = c.  Counted as |{a in K : a^{-1} c in L}|.
inline std::uint64_t structure_constant_count(const FiniteGroup& G,
                                              const ClassPartition& part,
                                              std::uint32_t k, std::uint32_t l,
                                              std::uint32_t c) {
  const Perm& target = part.classes[c].representative;
  std::uint64_t count = 0;
  for (std::uint32_t ai : part.classes[k].members) {
    Perm b = compose(inverse(G.element(ai)), target);
    auto bi = G.find(b);
    if (bi && part.class_of[*bi] == l) ++count;
  }
  return count;
}

struct ClassProductDecomposition {
  std::uint32_t left;
  std::uint32_t right;
  // (class index, multiplicity), ascending by class index, zero terms omitted
  std::vector<std::pair<std::uint32_t, std::uint64_t>> terms;
};

/// Decomposition of the normal set K*L into classes with multiplicities:
/// one sweep of K per target class.
inline ClassProductDecomposition class_product_decomposition(
    const FiniteGroup& G, const ClassPartition& part, std::uint32_t k,
    std::uint32_t l) {
  ClassProductDecomposition out{k, l, {}};
  std::vector<Perm> k_inverses;
  k_inverses.reserve(part.classes[k].size());
  for (std::uint32_t ai : part.classes[k].members) {
    k_inverses.push_back(inverse(G.element(ai)));
  }
  for (std::uint32_t c = 0; c < part.classes.size(); ++c) {
    const Perm& target = part.classes[c].representative;
    std::uint64_t count = 0;
    for (const Perm& ainv : k_inverses) {
      Perm b = compose(ainv, target);
      auto bi = G.find(b);
      if (bi && part.class_of[*bi] == l) ++count;
    }
    if (count > 0) out.terms.emplace_back(c, count);
  }
  return out;
}

struct CommutatorProfile {
  Perm element;
  // order of [x, g] -> number of g in G attaining it; counts sum to |G|
  std::map<std::uint64_t, std::uint64_t> order_multiset;

  // orders other than 1, ascending
  std::vector<std::uint64_t> support() const {
    std::vector<std::uint64_t> out;
    for (const auto& [ord, cnt] : order_multiset) {
      if (ord != 1) out.push_back(ord);
    }
    return out;
  }
};

namespace detail {

// [x, g] = x^{-1} * x^g, and every value x^g = y is attained by exactly
// |C_G(x)| = |G| / |x^G| choices of g, so the profile over all of G follows
// from one pass over the class of x.
inline CommutatorProfile profile_from_class_members(
    const FiniteGroup& G, const Perm& x,
    const std::vector<std::uint32_t>& members) {
  CommutatorProfile out;
  out.element = x;
  Perm xinv = inverse(x);
  std::uint64_t weight = G.order() / members.size();
  for (std::uint32_t yi : members) {
    std::uint64_t ord = order_of(compose(xinv, G.element(yi)));
    out.order_multiset[ord] += weight;
  }
  return out;
}

} // namespace detail

/// Exact multiset of orders of [x, g] over all g in G.
inline CommutatorProfile commutator_profile(const FiniteGroup& G,
                                            const Perm& x) {
  auto members = conjugation_orbit(G, x);
  return detail::profile_from_class_members(G, x, members);
}

/// Same profile computed from an already-known class of x.
inline CommutatorProfile commutator_profile_of_class(const FiniteGroup& G,
                                                     const ClassPartition& part,
                                                     std::uint32_t k) {
  return detail::profile_from_class_members(G, part.classes[k].representative,
                                            part.classes[k].members);
}

/// Indices of the classes C with C = C^{-1}.
inline std::vector<std::uint32_t> real_classes(const FiniteGroup& G,
                                               const ClassPartition& part) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t k = 0; k < part.classes.size(); ++k) {
    if (inverse_class_index(G, part, k) == k) out.push_back(k);
  }
  return out;
}

/// Class indices in the support of K^{-1} K.  Everything in K^{-1} K is
/// conjugate to x^{-1} y for some y in the class K of x, so one sweep of K
/// suffices.
inline std::set<std::uint32_t> inverse_product_support(
    const FiniteGroup& G, const ClassPartition& part, std::uint32_t k) {
  std::set<std::uint32_t> out;
  const Perm xinv = inverse(part.classes[k].representative);
  for (std::uint32_t yi : part.classes[k].members) {
    out.insert(part.class_of[G.index_of(compose(xinv, G.element(yi)))]);
  }
  return out;
}

} // namespace permlab
