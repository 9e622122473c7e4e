#pragma once

/// @file chartab.hpp
/// @brief Exact character tables by eigenspace splitting over a finite field.
///
/// The table of G is computed from the class matrices M_i, whose entries are
/// the counting structure constants a_{ijl} = n(C_i, C_j, C_l).  For each
/// irreducible character chi the vector u with u_l = omega_chi(C_l-hat) is a
/// common eigenvector of every M_i, so splitting the common eigenspaces of
/// the M_i over a prime field F_l with l = 1 (mod exponent(G)) and
/// l > 2*sqrt(|G|) recovers all omega values mod l.  Degrees follow from the
/// first orthogonality relation mod l (the bound on l makes the square root
/// unambiguous), and exact cyclotomic values are lifted by the discrete
/// Fourier multiplicity formula over F_l.  No floating point is involved;
/// both orthogonality relations are then asserted exactly.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "permlab/classalg.hpp"
#include "permlab/cyclotomic.hpp"
#include "permlab/errors.hpp"
#include "permlab/group.hpp"
#include "permlab/numth.hpp"

namespace permlab {

struct CharacterTable {
  std::uint64_t group_order = 0;
  unsigned exponent = 1; // conductor of every value
  std::shared_ptr<const Cyclotomy> cyclotomy;
  ClassPartition classes;
  std::vector<Perm> class_reps;
  std::vector<std::uint64_t> class_sizes;
  std::vector<std::uint32_t> inverse_classes;
  std::vector<std::uint64_t> degrees;            // values at the identity class
  std::vector<std::vector<Cyclotomic>> values;   // [character][class]

  std::size_t num_characters() const { return values.size(); }
  std::size_t num_classes() const { return class_reps.size(); }
};

namespace detail {

using ModRow = std::vector<std::uint64_t>;
using ModMatrix = std::vector<ModRow>;

struct ModSubspace {
  ModMatrix basis; // rows in reduced row echelon form
  std::vector<unsigned> pivots;
};

inline void mod_rref(ModMatrix& rows, std::vector<unsigned>& pivots,
                     std::uint64_t l) {
  pivots.clear();
  std::size_t r = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (unsigned c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    std::uint64_t inv = inv_mod(rows[r][c], l);
    for (auto& v : rows[r]) v = mul_mod(v, inv, l);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      std::uint64_t f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) {
        rows[i][j] = (rows[i][j] + l - mul_mod(f, rows[r][j], l)) % l;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
}

// Characteristic polynomial over F_l via similarity reduction to upper
// Hessenberg form followed by the leading-minor recurrence.
inline std::vector<std::uint64_t> mod_charpoly(ModMatrix H, std::uint64_t l) {
  std::size_t d = H.size();
  for (std::size_t j = 0; j + 2 < d; ++j) {
    std::size_t piv = j + 1;
    while (piv < d && H[piv][j] == 0) ++piv;
    if (piv == d) continue;
    if (piv != j + 1) {
      std::swap(H[piv], H[j + 1]);
      for (std::size_t r = 0; r < d; ++r) std::swap(H[r][piv], H[r][j + 1]);
    }
    std::uint64_t inv = inv_mod(H[j + 1][j], l);
    for (std::size_t i = j + 2; i < d; ++i) {
      if (H[i][j] == 0) continue;
      std::uint64_t f = mul_mod(H[i][j], inv, l);
      for (std::size_t c = 0; c < d; ++c) {
        H[i][c] = (H[i][c] + l - mul_mod(f, H[j + 1][c], l)) % l;
      }
      for (std::size_t r = 0; r < d; ++r) {
        H[r][j + 1] = (H[r][j + 1] + mul_mod(f, H[r][i], l)) % l;
      }
    }
  }
  // p_k = (x - H[k-1][k-1]) p_{k-1}
  //       - sum_m H[k-1-m][k-1] * (prod of m subdiagonal entries) * p_{k-1-m}
  std::vector<std::vector<std::uint64_t>> p(d + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= d; ++k) {
    std::vector<std::uint64_t> cur(k + 1, 0);
    std::uint64_t diag = H[k - 1][k - 1];
    for (std::size_t i = 0; i < p[k - 1].size(); ++i) {
      cur[i + 1] = (cur[i + 1] + p[k - 1][i]) % l;
      cur[i] = (cur[i] + l - mul_mod(diag, p[k - 1][i], l)) % l;
    }
    std::uint64_t sub = 1;
    for (std::size_t m = 1; m < k; ++m) {
      sub = mul_mod(sub, H[k - m][k - m - 1], l);
      if (sub == 0) break;
      std::uint64_t coef = mul_mod(H[k - 1 - m][k - 1], sub, l);
      if (coef == 0) continue;
      for (std::size_t i = 0; i < p[k - 1 - m].size(); ++i) {
        cur[i] = (cur[i] + l - mul_mod(coef, p[k - 1 - m][i], l)) % l;
      }
    }
    p[k] = std::move(cur);
  }
  return p[d];
}

inline std::uint64_t mod_poly_eval(const std::vector<std::uint64_t>& poly,
                                   std::uint64_t x, std::uint64_t l) {
  std::uint64_t r = 0;
  for (std::size_t i = poly.size(); i-- > 0;) {
    r = (mul_mod(r, x, l) + poly[i]) % l;
  }
  return r;
}

inline ModMatrix mod_kernel(ModMatrix A, std::uint64_t l) {
  std::size_t d = A.size();
  std::vector<unsigned> pivots;
  mod_rref(A, pivots, l);
  std::vector<bool> is_pivot(d, false);
  for (unsigned c : pivots) is_pivot[c] = true;
  ModMatrix kernel;
  for (unsigned fc = 0; fc < d; ++fc) {
    if (is_pivot[fc]) continue;
    ModRow v(d, 0);
    v[fc] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = (l - A[r][fc]) % l;
    }
    kernel.push_back(std::move(v));
  }
  return kernel;
}

// Class matrix M_i with entries M[j][l] = a_{ijl} = n(C_i, C_j, C_l),
// computed by one sweep of C_i per target class.
inline ModMatrix class_matrix(const FiniteGroup& G, const ClassPartition& part,
                              std::size_t i) {
  std::size_t k = part.classes.size();
  ModMatrix M(k, ModRow(k, 0));
  std::vector<Perm> inverses;
  inverses.reserve(part.classes[i].size());
  for (std::uint32_t ai : part.classes[i].members) {
    inverses.push_back(inverse(G.element(ai)));
  }
  for (std::size_t t = 0; t < k; ++t) {
    const Perm& target = part.classes[t].representative;
    for (const Perm& ainv : inverses) {
      std::uint32_t bi = G.index_of(compose(ainv, target));
      M[part.class_of[bi]][t] += 1;
    }
  }
  return M;
}

// Smallest prime l with l = 1 (mod m) and l > 2*sqrt(n).
inline std::uint64_t splitting_prime(unsigned m, std::uint64_t n) {
  for (std::uint64_t t = 1;; ++t) {
    std::uint64_t l = static_cast<std::uint64_t>(m) * t + 1;
    if (l * l <= 4 * n) continue;
    if (!is_prime(l)) continue;
    if (n % l == 0) continue; // cannot occur for l > exponent, kept as a guard
    return l;
  }
}

// Smallest primitive m-th root of unity mod l (requires m | l - 1).
inline std::uint64_t primitive_root_of_unity(unsigned m, std::uint64_t l) {
  if (m == 1) return 1;
  auto factors = prime_divisors(m);
  for (std::uint64_t a = 2; a < l; ++a) {
    if (pow_mod(a, m, l) != 1) continue;
    bool primitive = true;
    for (std::uint64_t q : factors) {
      if (pow_mod(a, m / q, l) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return a;
  }
  throw TableError("no primitive root of unity mod " + std::to_string(l));
}

} // namespace detail

/// Exact character table of G; deterministic character order
/// (degree, then lexicographic on the coefficient tuples in class order).
inline CharacterTable character_table(const FiniteGroup& G) {
  CharacterTable T;
  T.group_order = G.order();
  T.classes = conjugacy_classes(G);
  const ClassPartition& part = T.classes;
  std::size_t k = part.classes.size();
  for (const ConjugacyClass& cls : part.classes) {
    T.class_reps.push_back(cls.representative);
    T.class_sizes.push_back(cls.size());
  }
  std::vector<std::uint64_t> rep_orders(k);
  unsigned m = 1;
  for (std::size_t j = 0; j < k; ++j) {
    rep_orders[j] = order_of(T.class_reps[j]);
    m = static_cast<unsigned>(std::lcm<std::uint64_t>(m, rep_orders[j]));
  }
  T.exponent = m;
  T.cyclotomy = Cyclotomy::make(m);
  for (std::uint32_t j = 0; j < k; ++j) {
    T.inverse_classes.push_back(inverse_class_index(G, part, j));
  }
  // power map: class of rep_j^s
  std::vector<std::vector<std::uint32_t>> power_class(k);
  for (std::size_t j = 0; j < k; ++j) {
    Perm cur(G.degree());
    for (std::uint64_t s = 0; s < rep_orders[j]; ++s) {
      power_class[j].push_back(part.class_of[G.index_of(cur)]);
      cur = compose(cur, T.class_reps[j]);
    }
  }

  const std::uint64_t l = detail::splitting_prime(m, G.order());

  // --- split the common eigenspaces of the class matrices over F_l ---
  std::vector<detail::ModSubspace> spaces;
  {
    detail::ModSubspace whole;
    whole.basis.assign(k, detail::ModRow(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
      whole.basis[i][i] = 1;
      whole.pivots.push_back(static_cast<unsigned>(i));
    }
    spaces.push_back(std::move(whole));
  }
  auto all_split = [&]() {
    for (const auto& s : spaces) {
      if (s.basis.size() > 1) return false;
    }
    return true;
  };
  for (std::size_t mi = 1; mi < k && !all_split(); ++mi) {
    detail::ModMatrix M = detail::class_matrix(G, part, mi);
    for (auto& row : M) {
      for (auto& v : row) v %= l;
    }
    std::vector<detail::ModSubspace> next;
    for (auto& S : spaces) {
      std::size_t d = S.basis.size();
      if (d == 1) {
        next.push_back(std::move(S));
        continue;
      }
      // restriction of M to the subspace, in basis coordinates
      detail::ModMatrix A(d, detail::ModRow(d, 0));
      std::vector<detail::ModRow> images(d, detail::ModRow(k, 0));
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t row = 0; row < k; ++row) {
          std::uint64_t acc = 0;
          for (std::size_t col = 0; col < k; ++col) {
            if (M[row][col] == 0 || S.basis[r][col] == 0) continue;
            acc = (acc + mul_mod(M[row][col], S.basis[r][col], l)) % l;
          }
          images[r][row] = acc;
        }
        for (std::size_t s = 0; s < d; ++s) A[s][r] = images[r][S.pivots[s]];
      }
      // invariance check: the image must reconstruct from the coordinates
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t col = 0; col < k; ++col) {
          std::uint64_t acc = 0;
          for (std::size_t s = 0; s < d; ++s) {
            acc = (acc + mul_mod(A[s][r], S.basis[s][col], l)) % l;
          }
          if (acc != images[r][col]) {
            throw TableError("class matrix " + std::to_string(mi) +
                             " does not stabilize a common eigenspace");
          }
        }
      }
      auto poly = detail::mod_charpoly(A, l);
      std::size_t found = 0;
      for (std::uint64_t lambda = 0; lambda < l; ++lambda) {
        if (detail::mod_poly_eval(poly, lambda, l) != 0) continue;
        detail::ModMatrix shifted = A;
        for (std::size_t i = 0; i < d; ++i) {
          shifted[i][i] = (shifted[i][i] + l - lambda) % l;
        }
        detail::ModMatrix ker = detail::mod_kernel(std::move(shifted), l);
        if (ker.empty()) continue;
        detail::ModSubspace sub;
        for (const auto& kv : ker) {
          detail::ModRow vec(k, 0);
          for (std::size_t s = 0; s < d; ++s) {
            if (kv[s] == 0) continue;
            for (std::size_t col = 0; col < k; ++col) {
              vec[col] = (vec[col] + mul_mod(kv[s], S.basis[s][col], l)) % l;
            }
          }
          sub.basis.push_back(std::move(vec));
        }
        detail::mod_rref(sub.basis, sub.pivots, l);
        found += sub.basis.size();
        next.push_back(std::move(sub));
      }
      if (found != d) {
        throw TableError("class matrix " + std::to_string(mi) +
                         " failed to diagonalize on a subspace of dimension " +
                         std::to_string(d));
      }
    }
    spaces = std::move(next);
  }
  if (!all_split()) {
    std::string dims;
    for (const auto& s : spaces) {
      if (s.basis.size() > 1) {
        if (!dims.empty()) dims += ",";
        dims += std::to_string(s.basis.size());
      }
    }
    throw TableError(
        "common eigenspaces not fully split by class matrices 1.." +
        std::to_string(k - 1) + " (stuck dimensions " + dims + ")");
  }

  // --- recover omega vectors, degrees and character values mod l ---
  std::vector<detail::ModRow> omegas;
  for (const auto& S : spaces) {
    detail::ModRow u = S.basis[0];
    if (u[0] == 0) throw TableError("eigenvector vanishes at the identity class");
    std::uint64_t inv = inv_mod(u[0], l);
    for (auto& v : u) v = mul_mod(v, inv, l);
    omegas.push_back(std::move(u));
  }
  std::vector<std::uint64_t> size_inv(k);
  for (std::size_t j = 0; j < k; ++j) size_inv[j] = inv_mod(T.class_sizes[j] % l, l);
  std::vector<std::uint64_t> smallest_sqrt(l, 0);
  for (std::uint64_t r = (l - 1) / 2; r >= 1; --r) {
    smallest_sqrt[mul_mod(r, r, l)] = r;
  }
  std::vector<std::uint64_t> deg(omegas.size());
  std::vector<detail::ModRow> wvals(omegas.size(), detail::ModRow(k, 0));
  for (std::size_t c = 0; c < omegas.size(); ++c) {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < k; ++j) {
      s = (s + mul_mod(mul_mod(omegas[c][j], omegas[c][T.inverse_classes[j]], l),
                       size_inv[j], l)) %
          l;
    }
    if (s == 0) throw TableError("degenerate omega vector");
    std::uint64_t d2 = mul_mod(G.order() % l, inv_mod(s, l), l);
    std::uint64_t d = smallest_sqrt[d2];
    if (d == 0 || d * d > G.order()) {
      throw TableError("degree recovery failed");
    }
    deg[c] = d;
    for (std::size_t j = 0; j < k; ++j) {
      wvals[c][j] = mul_mod(mul_mod(d % l, omegas[c][j], l), size_inv[j], l);
    }
  }
  {
    std::uint64_t total = 0;
    for (std::uint64_t d : deg) total += d * d;
    if (total != G.order()) {
      throw TableError("degree squares do not sum to the group order");
    }
  }

  // --- lift values to exact cyclotomic integers ---
  const std::uint64_t z = detail::primitive_root_of_unity(m, l);
  std::vector<std::vector<Cyclotomic>> rows(omegas.size());
  for (std::size_t c = 0; c < omegas.size(); ++c) {
    rows[c].reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
      std::uint64_t o = rep_orders[j];
      std::uint64_t zo_inv = inv_mod(pow_mod(z, m / o, l), l);
      std::uint64_t o_inv = inv_mod(o % l, l);
      Cyclotomic val = Cyclotomic::zero(T.cyclotomy);
      std::uint64_t mult_sum = 0;
      for (std::uint64_t t = 0; t < o; ++t) {
        std::uint64_t ct = 0;
        for (std::uint64_t s = 0; s < o; ++s) {
          ct = (ct + mul_mod(wvals[c][power_class[j][s]],
                             pow_mod(zo_inv, s * t, l), l)) %
               l;
        }
        ct = mul_mod(ct, o_inv, l);
        if (ct == 0) continue;
        mult_sum += ct;
        val = val + Cyclotomic::root(T.cyclotomy,
                                     static_cast<unsigned>((m / o) * t)) *
                        static_cast<std::int64_t>(ct);
      }
      if (mult_sum != deg[c]) {
        throw TableError("eigenvalue multiplicities do not sum to the degree");
      }
      rows[c].push_back(std::move(val));
    }
  }

  // deterministic character order
  std::vector<std::size_t> order(omegas.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (deg[a] != deg[b]) return deg[a] < deg[b];
    for (std::size_t j = 0; j < k; ++j) {
      const auto& ca = rows[a][j].coefficients();
      const auto& cb = rows[b][j].coefficients();
      if (ca != cb) return ca < cb;
    }
    return false;
  });
  for (std::size_t c : order) {
    T.degrees.push_back(deg[c]);
    T.values.push_back(std::move(rows[c]));
  }

  // --- exact verification of both orthogonality relations ---
  auto big = [&](std::uint64_t v) { return static_cast<std::int64_t>(v); };
  for (std::size_t a = 0; a < T.values.size(); ++a) {
    for (std::size_t b = a; b < T.values.size(); ++b) {
      Cyclotomic acc = Cyclotomic::zero(T.cyclotomy);
      for (std::size_t j = 0; j < k; ++j) {
        acc = acc + T.values[a][j] * T.values[b][j].conj() *
                        big(T.class_sizes[j]);
      }
      auto expect = Cyclotomic::integer(
          T.cyclotomy, a == b ? big(T.group_order) : 0);
      if (!(acc == expect)) {
        throw TableError("row orthogonality fails for characters " +
                         std::to_string(a) + "," + std::to_string(b));
      }
    }
  }
  for (std::size_t j1 = 0; j1 < k; ++j1) {
    for (std::size_t j2 = j1; j2 < k; ++j2) {
      Cyclotomic acc = Cyclotomic::zero(T.cyclotomy);
      for (std::size_t c = 0; c < T.values.size(); ++c) {
        acc = acc + T.values[c][j1] * T.values[c][j2].conj();
      }
      auto expect = Cyclotomic::integer(
          T.cyclotomy,
          j1 == j2 ? big(T.group_order / T.class_sizes[j1]) : 0);
      if (!(acc == expect)) {
        throw TableError("column orthogonality fails for classes " +
                         std::to_string(j1) + "," + std::to_string(j2));
      }
    }
  }
  return T;
}

/// omega_chi(C-hat) = |C| chi(g) / chi(1); exact in Z[zeta_m], and the
/// division must come out exact or the table is corrupt.
inline Cyclotomic omega_value(const CharacterTable& T, std::size_t chi,
                              std::size_t cls) {
  if (chi >= T.num_characters() || cls >= T.num_classes()) {
    throw ArgumentError("omega_value: index out of range");
  }
  Cyclotomic num =
      T.values[chi][cls] * static_cast<std::int64_t>(T.class_sizes[cls]);
  auto q = num.divide_exact(static_cast<std::int64_t>(T.degrees[chi]));
  if (!q) {
    throw TableError("omega value is not an algebraic integer; corrupted table");
  }
  return *q;
}

/// n(K^{-1}, K, C) through the character formula
///   |K|^2 / |G| * sum_phi |phi(x)|^2 conj(phi(y)) / phi(1),
/// evaluated exactly in cyclotomic arithmetic; the result must reduce to a
/// nonnegative rational integer.
inline std::int64_t structure_constant_char(const CharacterTable& T,
                                            std::size_t K, std::size_t C) {
  if (K >= T.num_classes() || C >= T.num_classes()) {
    throw ArgumentError("structure_constant_char: index out of range");
  }
  std::int64_t degree_lcm = 1;
  for (std::uint64_t d : T.degrees) {
    degree_lcm = std::lcm<std::int64_t>(degree_lcm, static_cast<std::int64_t>(d));
  }
  Cyclotomic acc = Cyclotomic::zero(T.cyclotomy);
  for (std::size_t chi = 0; chi < T.num_characters(); ++chi) {
    Cyclotomic term = T.values[chi][K].abs_squared() * T.values[chi][C].conj();
    acc = acc + term * (degree_lcm / static_cast<std::int64_t>(T.degrees[chi]));
  }
  std::int64_t ksize = static_cast<std::int64_t>(T.class_sizes[K]);
  Cyclotomic num = acc * (ksize * ksize);
  auto q = num.divide_exact(static_cast<std::int64_t>(T.group_order) *
                            degree_lcm);
  if (!q) throw TableError("structure constant is not integral");
  auto n = q->as_integer();
  if (!n || *n < 0) {
    throw TableError("structure constant is not a nonnegative rational integer");
  }
  return *n;
}

/// Characters chi with chi(1)_p = |G|_p.
inline std::vector<std::size_t> defect_zero_characters(const CharacterTable& T,
                                                       int p) {
  require_prime(static_cast<std::uint64_t>(p));
  std::uint64_t gp = p_part_of(T.group_order, static_cast<std::uint64_t>(p));
  std::vector<std::size_t> out;
  for (std::size_t chi = 0; chi < T.num_characters(); ++chi) {
    if (p_part_of(T.degrees[chi], static_cast<std::uint64_t>(p)) == gp) {
      out.push_back(chi);
    }
  }
  return out;
}

} // namespace permlab
