#pragma once

/// @file perm.hpp
/// @brief Permutations of {1..n}: composition, inversion, order, cycle
///        structure and cycle-notation I/O.
///
/// Products read left to right: compose(a, b) applies a first, then b.
/// Points are 1-based in all I/O; the in-memory image table is 0-based.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "permlab/errors.hpp"

namespace permlab {

class Perm {
public:
  using point = std::uint16_t;

  Perm() = default;

  /// Identity permutation on `degree` points.
  explicit Perm(unsigned degree) : img_(degree) {
    check_degree(degree);
    std::iota(img_.begin(), img_.end(), point{0});
  }

  /// Builds a permutation from a 0-based image table, validating bijectivity.
  static Perm from_images(std::vector<point> images) {
    Perm p;
    check_degree(static_cast<unsigned>(images.size()));
    std::vector<bool> seen(images.size(), false);
    for (point v : images) {
      if (v >= images.size() || seen[v]) {
        throw ArgumentError("image table is not a bijection");
      }
      seen[v] = true;
    }
    p.img_ = std::move(images);
    return p;
  }

  /// Builds a permutation from a list of cycles of 1-based points, fixed
  /// points omitted, e.g. {{1,2,3},{4,5}}.  Points must be distinct and lie
  /// in [1, degree].
  static Perm from_cycles(unsigned degree,
                          const std::vector<std::vector<int>>& cycles) {
    Perm p(degree);
    std::vector<bool> used(degree, false);
    for (const auto& cyc : cycles) {
      if (cyc.empty()) throw ArgumentError("empty cycle");
      for (int v : cyc) {
        if (v < 1 || v > static_cast<int>(degree)) {
          throw ArgumentError("cycle point " + std::to_string(v) +
                              " out of range 1.." + std::to_string(degree));
        }
        if (used[v - 1]) {
          throw ArgumentError("cycle point " + std::to_string(v) + " repeated");
        }
        used[v - 1] = true;
      }
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        p.img_[cyc[i] - 1] =
            static_cast<point>(cyc[(i + 1) % cyc.size()] - 1);
      }
    }
    return p;
  }

  unsigned degree() const { return static_cast<unsigned>(img_.size()); }

  /// Image of the 0-based point i.
  point operator[](point i) const { return img_[i]; }

  const std::vector<point>& images() const { return img_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (img_[i] != i) return false;
    }
    return true;
  }

  friend bool operator==(const Perm& a, const Perm& b) = default;

  /// Lexicographic order on image tables; this is the stable total order
  /// used for canonical representatives throughout the library.
  friend auto operator<=>(const Perm& a, const Perm& b) {
    return std::lexicographical_compare_three_way(
        a.img_.begin(), a.img_.end(), b.img_.begin(), b.img_.end());
  }

  /// Cycles of 1-based points, fixed points omitted.  Each cycle starts at
  /// its smallest point; cycles are ordered by first point.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t s = 0; s < img_.size(); ++s) {
      if (seen[s] || img_[s] == s) continue;
      std::vector<int> cyc;
      std::size_t i = s;
      while (!seen[i]) {
        seen[i] = true;
        cyc.push_back(static_cast<int>(i + 1));
        i = img_[i];
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  /// "(1 2 3)(4 5)", or "()" for the identity.
  std::string cycle_string() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::string out;
    for (const auto& cyc : cs) {
      out += '(';
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(cyc[i]);
      }
      out += ')';
    }
    return out;
  }

private:
  static void check_degree(unsigned degree) {
    if (degree > 65535) {
      throw ArgumentError("degree " + std::to_string(degree) +
                          " exceeds the supported point range");
    }
  }

  std::vector<point> img_;
};

/// Apply a, then b.
inline Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) {
    throw DegreeMismatchError("compose: degrees " +
                              std::to_string(a.degree()) + " vs " +
                              std::to_string(b.degree()));
  }
  std::vector<Perm::point> img(a.degree());
  for (unsigned i = 0; i < a.degree(); ++i) {
    img[i] = b[a[static_cast<Perm::point>(i)]];
  }
  Perm r;
  r = Perm::from_images(std::move(img));
  return r;
}

inline Perm operator*(const Perm& a, const Perm& b) { return compose(a, b); }

inline Perm inverse(const Perm& a) {
  std::vector<Perm::point> img(a.degree());
  for (unsigned i = 0; i < a.degree(); ++i) {
    img[a[static_cast<Perm::point>(i)]] = static_cast<Perm::point>(i);
  }
  return Perm::from_images(std::move(img));
}

struct OrderCycleType {
  std::uint64_t order;
  std::vector<unsigned> cycle_type; // ascending, includes length-1 cycles
};

inline OrderCycleType order_and_cycle_type(const Perm& a) {
  OrderCycleType out{1, {}};
  std::vector<bool> seen(a.degree(), false);
  for (unsigned s = 0; s < a.degree(); ++s) {
    if (seen[s]) continue;
    unsigned len = 0;
    unsigned i = s;
    while (!seen[i]) {
      seen[i] = true;
      ++len;
      i = a[static_cast<Perm::point>(i)];
    }
    out.cycle_type.push_back(len);
    out.order = std::lcm(out.order, static_cast<std::uint64_t>(len));
  }
  std::sort(out.cycle_type.begin(), out.cycle_type.end());
  return out;
}

inline std::uint64_t order_of(const Perm& a) {
  return order_and_cycle_type(a).order;
}

/// a^e for any integer e (negative exponents via the inverse).
inline Perm power(const Perm& a, std::int64_t e) {
  Perm base = e < 0 ? inverse(a) : a;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e)
                          : static_cast<std::uint64_t>(e);
  Perm r(a.degree());
  while (n > 0) {
    if (n & 1) r = compose(r, base);
    base = compose(base, base);
    n >>= 1;
  }
  return r;
}

inline bool is_even(const Perm& a) {
  auto ct = order_and_cycle_type(a).cycle_type;
  unsigned transpositions = 0;
  for (unsigned len : ct) transpositions += len - 1;
  return transpositions % 2 == 0;
}

inline std::uint64_t hash_value(const Perm& a) {
  // FNV-1a over the image words, fixed so output never depends on platform.
  std::uint64_t h = 1469598103934665603ULL;
  for (Perm::point v : a.images()) {
    h ^= static_cast<std::uint64_t>(v) & 0xffu;
    h *= 1099511628211ULL;
    h ^= static_cast<std::uint64_t>(v) >> 8;
    h *= 1099511628211ULL;
  }
  return h;
}

struct PermHash {
  std::size_t operator()(const Perm& a) const {
    return static_cast<std::size_t>(hash_value(a));
  }
};

} // namespace permlab
