#pragma once

/// @file catalog.hpp
/// @brief Built-in desk-scale groups: cyclic, dihedral, quaternion and
///        semidihedral 2-groups, symmetric and alternating groups, rank-1
///        matrix groups over small fields, Frobenius groups, direct products.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permlab/errors.hpp"
#include "permlab/group.hpp"
#include "permlab/numth.hpp"
#include "permlab/perm.hpp"

namespace permlab {

namespace detail {

// Arithmetic tables for F_q, q in {2,3,4,5,7,8,11,13}.  Elements are indexed
// 0..q-1; for q = 4 and q = 8 the index is the bit pattern of the polynomial
// representative (F_2[t]/(t^2+t+1) resp. t^3+t+1).
struct SmallField {
  int q = 0;
  std::vector<std::vector<int>> add, mul;
  std::vector<int> inv; // inv[0] unused
  int primitive = 1;    // generator of the multiplicative group

  static SmallField make(int q) {
    static const std::array<int, 8> supported{2, 3, 4, 5, 7, 8, 11, 13};
    bool ok = false;
    for (int s : supported) ok = ok || s == q;
    if (!ok) {
      throw ArgumentError("unsupported field size " + std::to_string(q));
    }
    SmallField F;
    F.q = q;
    F.add.assign(q, std::vector<int>(q, 0));
    F.mul.assign(q, std::vector<int>(q, 0));
    F.inv.assign(q, 0);
    bool binary_ext = (q == 4 || q == 8);
    int reduction = (q == 4) ? 0b111 : 0b1011; // t^2+t+1, t^3+t+1
    int bits = (q == 4) ? 2 : 3;
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        if (!binary_ext) {
          F.add[a][b] = (a + b) % q;
          F.mul[a][b] = (a * b) % q;
        } else {
          F.add[a][b] = a ^ b;
          int prod = 0, x = a;
          for (int i = 0; i < bits; ++i) {
            if (b & (1 << i)) prod ^= x << i;
          }
          for (int d = 2 * bits - 2; d >= bits; --d) {
            if (prod & (1 << d)) prod ^= reduction << (d - bits);
          }
          F.mul[a][b] = prod;
        }
      }
    }
    for (int a = 1; a < q; ++a) {
      for (int b = 1; b < q; ++b) {
        if (F.mul[a][b] == 1) F.inv[a] = b;
      }
    }
    for (int a = 2; a < q; ++a) {
      int x = a, ord = 1;
      while (x != 1) {
        x = F.mul[x][a];
        ++ord;
      }
      if (ord == q - 1) {
        F.primitive = a;
        break;
      }
    }
    return F;
  }
};

} // namespace detail

enum class MatrixKind { GL, SL, PSL, PGL };

/// 2x2 matrix over F_q, entries as field element indices, row-major.
struct Mat2 {
  int a, b, c, d;
};

/// Permutation image of the matrix group generated by `generators`.
/// GL and SL act on the q^2-1 nonzero column vectors (ordered
/// lexicographically); PSL and PGL act on the q+1 projective points
/// ([x:1] for x in F_q, then [1:0]).
inline FiniteGroup matrix_to_permutation(int q, MatrixKind kind,
                                         const std::vector<Mat2>& generators,
                                         std::size_t cap = kDefaultCap) {
  detail::SmallField F = detail::SmallField::make(q);
  bool projective = kind == MatrixKind::PSL || kind == MatrixKind::PGL;
  bool special = kind == MatrixKind::SL || kind == MatrixKind::PSL;
  unsigned degree = projective ? static_cast<unsigned>(q + 1)
                               : static_cast<unsigned>(q * q - 1);
  std::vector<Perm> perm_gens;
  for (const Mat2& M : generators) {
    for (int v : {M.a, M.b, M.c, M.d}) {
      if (v < 0 || v >= q) {
        throw ArgumentError("matrix entry out of field range");
      }
    }
    int minus_bc = (F.q == 4 || F.q == 8) ? F.mul[M.b][M.c]
                                          : (q - F.mul[M.b][M.c]) % q;
    int det = F.add[F.mul[M.a][M.d]][minus_bc];
    if (det == 0) throw ArgumentError("singular generator matrix");
    if (special && det != 1) {
      throw ArgumentError("determinant must be 1 for SL/PSL generators");
    }
    std::vector<Perm::point> img(degree);
    if (!projective) {
      for (int u = 0; u < q; ++u) {
        for (int v = 0; v < q; ++v) {
          if (u == 0 && v == 0) continue;
          int nu = F.add[F.mul[M.a][u]][F.mul[M.b][v]];
          int nv = F.add[F.mul[M.c][u]][F.mul[M.d][v]];
          img[u * q + v - 1] = static_cast<Perm::point>(nu * q + nv - 1);
        }
      }
    } else {
      auto point_of = [&](int u, int v) -> int {
        if (v != 0) return F.mul[u][F.inv[v]]; // [x:1]
        return q;                              // [1:0]
      };
      for (int x = 0; x <= q; ++x) {
        int u = (x < q) ? x : 1;
        int v = (x < q) ? 1 : 0;
        int nu = F.add[F.mul[M.a][u]][F.mul[M.b][v]];
        int nv = F.add[F.mul[M.c][u]][F.mul[M.d][v]];
        img[x] = static_cast<Perm::point>(point_of(nu, nv));
      }
    }
    perm_gens.push_back(Perm::from_images(std::move(img)));
  }
  return generate(degree, std::move(perm_gens), cap);
}

namespace detail {

inline std::vector<Mat2> sl2_standard_generators(const SmallField& F) {
  int ai = F.primitive;
  return {Mat2{1, 1, 0, 1}, Mat2{1, 0, 1, 1}, Mat2{ai, 0, 0, F.inv[ai]}};
}

inline std::vector<Mat2> gl2_standard_generators(const SmallField& F) {
  auto gens = sl2_standard_generators(F);
  gens.push_back(Mat2{F.primitive, 0, 0, 1});
  return gens;
}

/// p embedded into a larger point set, acting on [offset, offset + deg(p)).
inline Perm embed(const Perm& p, unsigned new_degree, unsigned offset) {
  Perm r(new_degree);
  std::vector<Perm::point> img = r.images();
  for (unsigned i = 0; i < p.degree(); ++i) {
    img[offset + i] = static_cast<Perm::point>(offset + p[static_cast<Perm::point>(i)]);
  }
  return Perm::from_images(std::move(img));
}

inline Perm cycle(unsigned degree, const std::vector<int>& pts) {
  return Perm::from_cycles(degree, {pts});
}

} // namespace detail

/// Explicit degree extension: p acting on [offset+1, offset+deg(p)] inside a
/// larger point set, identity elsewhere.  Degrees never change implicitly.
inline Perm embed_permutation(const Perm& p, unsigned new_degree,
                              unsigned offset = 0) {
  if (offset + p.degree() > new_degree) {
    throw ArgumentError("embed_permutation: target degree too small");
  }
  return detail::embed(p, new_degree, offset);
}

/// Direct product acting on disjoint point sets of size deg(A) + deg(B).
inline FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B,
                                  std::size_t cap = kDefaultCap) {
  if (A.order() * B.order() > cap) {
    throw CapExceededError(A.order() * B.order(), cap);
  }
  unsigned degree = A.degree() + B.degree();
  std::vector<Perm> elements;
  elements.reserve(A.order() * B.order());
  for (const Perm& a : A.elements()) {
    for (const Perm& b : B.elements()) {
      std::vector<Perm::point> img(degree);
      for (unsigned i = 0; i < A.degree(); ++i) {
        img[i] = a[static_cast<Perm::point>(i)];
      }
      for (unsigned i = 0; i < B.degree(); ++i) {
        img[A.degree() + i] =
            static_cast<Perm::point>(A.degree() + b[static_cast<Perm::point>(i)]);
      }
      elements.push_back(Perm::from_images(std::move(img)));
    }
  }
  std::vector<Perm> gens;
  for (const Perm& a : A.generators()) gens.push_back(detail::embed(a, degree, 0));
  for (const Perm& b : B.generators()) {
    gens.push_back(detail::embed(b, degree, A.degree()));
  }
  return FiniteGroup::from_closed_elements(degree, std::move(elements),
                                           std::move(gens));
}

namespace detail {

inline std::optional<int> parse_family(const std::string& name, char prefix) {
  if (name.size() < 2 || name[0] != prefix) return std::nullopt;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
  }
  return std::stoi(name.substr(1));
}

// "KIND(2,q)"
inline std::optional<std::pair<MatrixKind, int>> parse_matrix_name(
    const std::string& name) {
  auto paren = name.find('(');
  if (paren == std::string::npos || name.back() != ')') return std::nullopt;
  std::string kind_str = name.substr(0, paren);
  std::string args = name.substr(paren + 1, name.size() - paren - 2);
  auto comma = args.find(',');
  if (comma == std::string::npos) return std::nullopt;
  if (args.substr(0, comma) != "2") return std::nullopt;
  int q = 0;
  try {
    q = std::stoi(args.substr(comma + 1));
  } catch (...) {
    return std::nullopt;
  }
  MatrixKind kind;
  if (kind_str == "GL") kind = MatrixKind::GL;
  else if (kind_str == "SL") kind = MatrixKind::SL;
  else if (kind_str == "PSL") kind = MatrixKind::PSL;
  else if (kind_str == "PGL") kind = MatrixKind::PGL;
  else return std::nullopt;
  return std::make_pair(kind, q);
}

} // namespace detail

/// Builds a catalog group by name.  Throws UnknownGroupError for names
/// outside the shipped list.
inline FiniteGroup make_named_group(const std::string& name,
                                    std::size_t cap = kDefaultCap) {
  using detail::cycle;
  if (name == "Q8") {
    return generate(8,
                    {Perm::from_cycles(8, {{1, 2, 3, 4}, {5, 6, 7, 8}}),
                     Perm::from_cycles(8, {{1, 5, 3, 7}, {2, 8, 4, 6}})},
                    cap);
  }
  if (name == "Q16" || name == "SD16") {
    // <a, b | a^8 = 1, b^2 = a^4, a^b = a^-1> resp.
    // <a, b | a^8 = b^2 = 1, a^b = a^3>, as right-translation permutations
    // of the normal forms a^i b^j (index i + 8j).
    bool quaternion = name == "Q16";
    std::vector<Perm::point> pa(16), pb(16);
    for (int i = 0; i < 8; ++i) {
      pa[i] = static_cast<Perm::point>((i + 1) % 8);
      pa[i + 8] = static_cast<Perm::point>((quaternion ? (i + 7) % 8 : (i + 3) % 8) + 8);
      pb[i] = static_cast<Perm::point>(i + 8);
      pb[i + 8] = static_cast<Perm::point>(quaternion ? (i + 4) % 8 : i);
    }
    return generate(16, {Perm::from_images(pa), Perm::from_images(pb)}, cap);
  }
  if (name == "F20") {
    return generate(
        5, {cycle(5, {1, 2, 3, 4, 5}), cycle(5, {2, 3, 5, 4})}, cap);
  }
  if (name == "F21") {
    return generate(7,
                    {cycle(7, {1, 2, 3, 4, 5, 6, 7}),
                     Perm::from_cycles(7, {{2, 3, 5}, {4, 7, 6}})},
                    cap);
  }
  if (name == "C3:Q8") {
    // C3 x Q8 with the quaternion j-generator inverting the 3-cycle; the
    // kernel of the action is the cyclic subgroup generated by i.
    return generate(11,
                    {cycle(11, {1, 2, 3}),
                     Perm::from_cycles(11, {{4, 5, 6, 7}, {8, 9, 10, 11}}),
                     Perm::from_cycles(11, {{2, 3}, {4, 8, 6, 10}, {5, 11, 7, 9}})},
                    cap);
  }
  if (auto n = detail::parse_family(name, 'C')) {
    if (*n < 1 || *n > 36) throw UnknownGroupError("unknown group " + name);
    std::vector<int> pts(*n);
    for (int i = 0; i < *n; ++i) pts[i] = i + 1;
    if (*n == 1) return generate(1, {Perm(1)}, cap);
    return generate(*n, {cycle(*n, pts)}, cap);
  }
  if (auto ord = detail::parse_family(name, 'D')) {
    if (*ord < 2 || *ord > 36 || *ord % 2 != 0) {
      throw UnknownGroupError("unknown group " + name);
    }
    int n = *ord / 2;
    if (n == 1) return generate(2, {cycle(2, {1, 2})}, cap);
    if (n == 2) {
      return generate(4, {cycle(4, {1, 2}), cycle(4, {3, 4})}, cap);
    }
    std::vector<int> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = i + 1;
    std::vector<Perm::point> refl(n);
    for (int i = 0; i < n; ++i) refl[i] = static_cast<Perm::point>((n - i) % n);
    return generate(n, {cycle(n, rot), Perm::from_images(refl)}, cap);
  }
  if (auto n = detail::parse_family(name, 'S')) {
    if (*n < 1 || *n > 7) throw UnknownGroupError("unknown group " + name);
    if (*n == 1) return generate(1, {Perm(1)}, cap);
    std::vector<int> pts(*n);
    for (int i = 0; i < *n; ++i) pts[i] = i + 1;
    if (*n == 2) return generate(2, {cycle(2, {1, 2})}, cap);
    return generate(*n, {cycle(*n, {1, 2}), cycle(*n, pts)}, cap);
  }
  if (auto n = detail::parse_family(name, 'A')) {
    if (*n < 3 || *n > 7) throw UnknownGroupError("unknown group " + name);
    if (*n == 3) return generate(3, {cycle(3, {1, 2, 3})}, cap);
    std::vector<int> long_cycle;
    if (*n % 2 == 1) {
      for (int i = 1; i <= *n; ++i) long_cycle.push_back(i);
    } else {
      for (int i = 2; i <= *n; ++i) long_cycle.push_back(i);
    }
    return generate(*n, {cycle(*n, {1, 2, 3}), cycle(*n, long_cycle)}, cap);
  }
  if (auto mk = detail::parse_matrix_name(name)) {
    detail::SmallField F = detail::SmallField::make(mk->second);
    bool special = mk->first == MatrixKind::SL || mk->first == MatrixKind::PSL;
    auto gens = special ? detail::sl2_standard_generators(F)
                        : detail::gl2_standard_generators(F);
    return matrix_to_permutation(mk->second, mk->first, gens, cap);
  }
  throw UnknownGroupError("unknown group " + name);
}

/// Catalog facts about a builtin name, used to scope verification suites.
struct GroupMeta {
  bool almost_simple = false;
  std::optional<int> lie_characteristic; // defining characteristic, if Lie type
  bool lie_simple = false;               // simple group of Lie type
};

inline GroupMeta builtin_meta(const std::string& name) {
  GroupMeta meta;
  if (auto n = detail::parse_family(name, 'A')) {
    meta.almost_simple = *n >= 5;
    return meta;
  }
  if (auto n = detail::parse_family(name, 'S')) {
    meta.almost_simple = *n >= 5;
    return meta;
  }
  if (auto mk = detail::parse_matrix_name(name)) {
    int q = mk->second;
    int characteristic = (q == 4 || q == 8) ? 2 : q;
    meta.lie_characteristic = characteristic;
    if (mk->first == MatrixKind::PSL && q >= 4) {
      meta.almost_simple = true;
      meta.lie_simple = true;
    }
    if (mk->first == MatrixKind::PGL && q >= 5) {
      meta.almost_simple = true;
    }
    return meta;
  }
  return meta;
}

} // namespace permlab
