#pragma once

/// @file series.hpp
/// @brief Characteristic subgroups and arithmetic predicates: p-parts,
///        O_pi, Fitting subgroup, solvable radical, Z_p^*, solvability and
///        simplicity tests, Zsigmondy primes.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "permlab/errors.hpp"
#include "permlab/group.hpp"
#include "permlab/numth.hpp"
#include "permlab/perm.hpp"

namespace permlab {

struct PrimeSet {
  std::vector<int> primes; // sorted, deduplicated, all prime

  static PrimeSet of(std::vector<int> ps) {
    if (ps.empty()) throw ArgumentError("PrimeSet: must be nonempty");
    for (int p : ps) require_prime(static_cast<std::uint64_t>(p));
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    return PrimeSet{std::move(ps)};
  }

  bool contains(std::uint64_t p) const {
    return std::binary_search(primes.begin(), primes.end(),
                              static_cast<int>(p));
  }
};

struct PProfile {
  bool is_p_element;  // order is a power of p (order 1 counts)
  bool is_p_singular; // p divides the order
  bool is_p_regular;  // p does not divide the order
};

inline PProfile element_p_profile(const Perm& x, int p) {
  require_prime(static_cast<std::uint64_t>(p));
  std::uint64_t n = order_of(x);
  PProfile out{};
  out.is_p_singular = n % static_cast<std::uint64_t>(p) == 0;
  out.is_p_regular = !out.is_p_singular;
  out.is_p_element = is_power_of(n, static_cast<std::uint64_t>(p));
  return out;
}

struct PPartDecomposition {
  int p;
  Perm p_part;
  Perm p_prime_part;
};

/// Unique decomposition x = x_p * x_{p'} with commuting factors that are both
/// powers of x: x_p of p-power order, x_{p'} of order coprime to p.
inline PPartDecomposition p_part_decomposition(const Perm& x, int p) {
  require_prime(static_cast<std::uint64_t>(p));
  std::uint64_t n = order_of(x);
  std::uint64_t np = p_part_of(n, static_cast<std::uint64_t>(p));
  std::uint64_t npp = n / np;
  // 1 = a*np + b*npp; then x_p = x^(b*npp), x_{p'} = x^(a*np)
  std::int64_t a = 0, b = 0;
  extended_gcd(static_cast<std::int64_t>(np), static_cast<std::int64_t>(npp),
               a, b);
  auto reduce = [&](std::int64_t e) {
    std::int64_t m = static_cast<std::int64_t>(n);
    return ((e % m) + m) % m;
  };
  PPartDecomposition out{p, power(x, reduce(b * static_cast<std::int64_t>(npp))),
                         power(x, reduce(a * static_cast<std::int64_t>(np)))};
  return out;
}

namespace detail {

// Normal closure of each conjugacy class representative; the workhorse
// behind O_pi and the solvable radical.  `keep` filters which classes are
// worth closing at all (cheap pregate on the representative).
template <typename KeepRep, typename KeepClosure>
inline std::vector<Perm> qualifying_closure_generators(
    const FiniteGroup& G, const ClassPartition& part, KeepRep keep_rep,
    KeepClosure keep_closure) {
  std::vector<Perm> gens;
  for (const ConjugacyClass& cls : part.classes) {
    if (!keep_rep(cls.representative)) continue;
    FiniteGroup N = normal_closure(G, {cls.representative});
    if (!keep_closure(N)) continue;
    for (const Perm& g : N.generators()) gens.push_back(g);
  }
  return gens;
}

inline bool order_has_prime_divisors_within(std::uint64_t n,
                                            const PrimeSet& pi) {
  for (std::uint64_t p : prime_divisors(n)) {
    if (!pi.contains(p)) return false;
  }
  return true;
}

} // namespace detail

/// Largest normal pi-subgroup: generated by the elements whose normal closure
/// is a pi-group.  Membership of an element is decided per conjugacy class
/// (the closure of x and of any conjugate of x coincide).
inline FiniteGroup o_pi(const FiniteGroup& G, const PrimeSet& pi) {
  ClassPartition part = conjugacy_classes(G);
  auto gens = detail::qualifying_closure_generators(
      G, part,
      [&](const Perm& rep) {
        return detail::order_has_prime_divisors_within(order_of(rep), pi);
      },
      [&](const FiniteGroup& N) {
        return detail::order_has_prime_divisors_within(N.order(), pi);
      });
  return subgroup_from(G, gens);
}

inline FiniteGroup o_p(const FiniteGroup& G, int p) {
  return o_pi(G, PrimeSet::of({p}));
}

/// O_{p'}(G): largest normal subgroup of order coprime to p.
inline FiniteGroup o_p_prime(const FiniteGroup& G, int p) {
  require_prime(static_cast<std::uint64_t>(p));
  std::vector<int> pi;
  for (std::uint64_t q : prime_divisors(G.order())) {
    if (q != static_cast<std::uint64_t>(p)) pi.push_back(static_cast<int>(q));
  }
  if (pi.empty()) {
    return subgroup_from(G, {});
  }
  return o_pi(G, PrimeSet::of(pi));
}

/// Fitting subgroup: generated by O_p(G) over the primes dividing |G|.
inline FiniteGroup fitting(const FiniteGroup& G) {
  std::vector<Perm> gens;
  for (std::uint64_t p : prime_divisors(G.order())) {
    FiniteGroup op = o_p(G, static_cast<int>(p));
    for (const Perm& g : op.generators()) gens.push_back(g);
  }
  return subgroup_from(G, gens);
}

inline bool is_solvable(const FiniteGroup& G) {
  FiniteGroup H = G;
  for (;;) {
    if (H.order() == 1) return true;
    FiniteGroup D = derived_subgroup(H);
    if (D.order() == H.order()) return false;
    H = D;
  }
}

/// Largest normal solvable subgroup: generated by the elements whose normal
/// closure is solvable.
inline FiniteGroup solvable_radical(const FiniteGroup& G) {
  ClassPartition part = conjugacy_classes(G);
  auto gens = detail::qualifying_closure_generators(
      G, part, [](const Perm&) { return true; },
      [](const FiniteGroup& N) { return is_solvable(N); });
  return subgroup_from(G, gens);
}

struct StructureFlags {
  bool is_solvable;
  bool is_nilpotent;
  std::optional<int> p_group_prime;
};

inline StructureFlags structure_predicates(const FiniteGroup& G) {
  StructureFlags out{};
  out.is_solvable = is_solvable(G);
  out.is_nilpotent = fitting(G).order() == G.order();
  auto ps = prime_divisors(G.order());
  if (ps.size() == 1) out.p_group_prime = static_cast<int>(ps[0]);
  return out;
}

struct SimplicityFlags {
  bool is_simple;
  bool is_quasisimple;
};

/// is_simple: every nontrivial element normally generates G.
/// is_quasisimple: G is perfect and every noncentral element normally
/// generates G (equivalent to G/Z(G) simple, without building a quotient).
inline SimplicityFlags simplicity_predicates(const FiniteGroup& G) {
  if (G.order() <= 1) {
    throw ArgumentError("simplicity_predicates: group must be nontrivial");
  }
  ClassPartition part = conjugacy_classes(G);
  SimplicityFlags out{true, false};
  for (const ConjugacyClass& cls : part.classes) {
    if (cls.representative.is_identity()) continue;
    if (normal_closure(G, {cls.representative}).order() != G.order()) {
      out.is_simple = false;
      break;
    }
  }
  if (derived_subgroup(G).order() == G.order()) {
    out.is_quasisimple = true;
    for (const ConjugacyClass& cls : part.classes) {
      if (cls.size() == 1) continue; // singleton class = central element
      if (normal_closure(G, {cls.representative}).order() != G.order()) {
        out.is_quasisimple = false;
        break;
      }
    }
  }
  return out;
}

/// Full preimage in G of the center of G/O_{p'}(G), computed as the set of
/// x with [x, g] in O_{p'}(G) for every generator g (generator checking
/// suffices for normal targets).
inline FiniteGroup z_p_star(const FiniteGroup& G, int p) {
  FiniteGroup N = o_p_prime(G, p);
  std::vector<std::uint32_t> idxs;
  for (std::uint32_t i = 0; i < G.order(); ++i) {
    const Perm& x = G.element(i);
    bool central_mod = true;
    for (const Perm& g : G.generators()) {
      if (!N.contains(commutator(x, g))) {
        central_mod = false;
        break;
      }
    }
    if (central_mod) idxs.push_back(i);
  }
  return subgroup_from_indices(G, std::move(idxs));
}

/// True iff [x, g] lies in N for every generator g of G.  N must be normal
/// in G (checked by conjugating N's generators); otherwise NotNormalError.
inline bool is_central_modulo(const FiniteGroup& G, const Perm& x,
                              const FiniteGroup& N) {
  G.index_of(x);
  for (const Perm& n : N.generators()) {
    G.index_of(n);
    for (const Perm& g : G.generators()) {
      if (!N.contains(conjugate(n, g))) {
        throw NotNormalError("is_central_modulo: subgroup is not normal");
      }
    }
  }
  for (const Perm& g : G.generators()) {
    if (!N.contains(commutator(x, g))) return false;
  }
  return true;
}

/// Primes p with p | q^n - 1 and p not dividing q^m - 1 for 1 <= m < n.
/// Empty exactly at the Zsigmondy exceptions; always p >= n + 1.
inline std::vector<std::uint64_t> primitive_prime_divisors(std::uint64_t q,
                                                           unsigned n) {
  if (q < 2 || n < 3) {
    throw ArgumentError("primitive_prime_divisors: need q >= 2, n >= 3");
  }
  std::uint64_t qn = checked_pow(q, n);
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : prime_divisors(qn - 1)) {
    bool primitive = true;
    for (unsigned m = 1; m < n; ++m) {
      if ((checked_pow(q, m) - 1) % p == 0) {
        primitive = false;
        break;
      }
    }
    if (primitive) out.push_back(p);
  }
  return out;
}

} // namespace permlab
