#pragma once

/// @file cyclotomic.hpp
/// @brief Exact arithmetic in Z[zeta_m]: values are integer vectors in the
///        power basis of the m-th cyclotomic field, reduced modulo the m-th
///        cyclotomic polynomial.  All operations are exact; a value is a
///        rational integer iff its non-constant coordinates vanish.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "permlab/errors.hpp"

namespace permlab {

namespace detail {

using IPoly = std::vector<std::int64_t>; // ascending coefficients

inline void ipoly_trim(IPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials; the divisor must be monic here
// (every cyclotomic polynomial is).
inline IPoly ipoly_divide_exact(IPoly num, const IPoly& den) {
  IPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
  while (num.size() >= den.size()) {
    std::int64_t c = num.back();
    std::size_t shift = num.size() - den.size();
    quot[shift] = c;
    for (std::size_t i = 0; i < den.size(); ++i) {
      num[shift + i] -= c * den[i];
    }
    ipoly_trim(num);
    if (num.empty()) break;
  }
  if (!num.empty()) throw TableError("cyclotomic polynomial division failed");
  return quot;
}

// Cyclotomic polynomials Phi_1 .. Phi_m for the divisors of m.
inline IPoly cyclotomic_polynomial(unsigned m) {
  std::map<unsigned, IPoly> cache;
  for (unsigned k = 1; k <= m; ++k) {
    if (m % k != 0) continue;
    IPoly xk1(k + 1, 0); // x^k - 1
    xk1[0] = -1;
    xk1[k] = 1;
    for (unsigned d = 1; d < k; ++d) {
      if (k % d == 0) xk1 = ipoly_divide_exact(std::move(xk1), cache[d]);
    }
    cache[k] = std::move(xk1);
  }
  return cache[m];
}

} // namespace detail

/// Shared immutable context for one conductor: the cyclotomic polynomial and
/// the reduced powers x^t for every t in [0, m).
class Cyclotomy {
public:
  explicit Cyclotomy(unsigned m) : m_(m) {
    if (m < 1) throw ArgumentError("Cyclotomy: conductor must be >= 1");
    poly_ = detail::cyclotomic_polynomial(m);
    phi_ = static_cast<unsigned>(poly_.size() - 1);
    // x^{t+1} = shift(x^t), folding the leading term through
    // x^phi = -(low part of Phi_m).
    root_powers_.reserve(m_);
    std::vector<std::int64_t> cur(phi_, 0);
    cur[0] = 1;
    root_powers_.push_back(cur);
    for (unsigned t = 1; t < m_; ++t) {
      std::vector<std::int64_t> next(phi_, 0);
      std::int64_t top = cur[phi_ - 1];
      for (unsigned i = phi_ - 1; i >= 1; --i) next[i] = cur[i - 1];
      next[0] = 0;
      if (top != 0) {
        for (unsigned i = 0; i < phi_; ++i) next[i] -= top * poly_[i];
      }
      root_powers_.push_back(next);
      cur = std::move(next);
    }
  }

  unsigned conductor() const { return m_; }
  unsigned phi() const { return phi_; }

  /// Coordinates of x^t mod Phi_m, 0 <= t < m.
  const std::vector<std::int64_t>& root_power(unsigned t) const {
    return root_powers_[t];
  }

  const detail::IPoly& polynomial() const { return poly_; }

  static std::shared_ptr<const Cyclotomy> make(unsigned m) {
    return std::make_shared<const Cyclotomy>(m);
  }

private:
  unsigned m_;
  unsigned phi_;
  detail::IPoly poly_;
  std::vector<std::vector<std::int64_t>> root_powers_;
};

class Cyclotomic {
public:
  Cyclotomic() = default;

  static Cyclotomic zero(std::shared_ptr<const Cyclotomy> ctx) {
    Cyclotomic v;
    v.ctx_ = std::move(ctx);
    v.c_.assign(v.ctx_->phi(), 0);
    return v;
  }

  static Cyclotomic integer(std::shared_ptr<const Cyclotomy> ctx,
                            std::int64_t n) {
    Cyclotomic v = zero(std::move(ctx));
    v.c_[0] = n;
    return v;
  }

  /// zeta_m^t
  static Cyclotomic root(std::shared_ptr<const Cyclotomy> ctx, unsigned t) {
    Cyclotomic v = zero(ctx);
    const auto& row = ctx->root_power(t % ctx->conductor());
    v.c_ = row;
    return v;
  }

  static Cyclotomic from_coefficients(std::shared_ptr<const Cyclotomy> ctx,
                                      std::vector<std::int64_t> coeffs) {
    if (coeffs.size() != ctx->phi()) {
      throw ArgumentError("cyclotomic coefficient vector has wrong length");
    }
    Cyclotomic v;
    v.ctx_ = std::move(ctx);
    v.c_ = std::move(coeffs);
    return v;
  }

  const std::shared_ptr<const Cyclotomy>& context() const { return ctx_; }
  unsigned conductor() const { return ctx_->conductor(); }
  const std::vector<std::int64_t>& coefficients() const { return c_; }

  bool is_zero() const {
    for (std::int64_t v : c_) {
      if (v != 0) return false;
    }
    return true;
  }

  /// The rational integer this value equals, if it is one.
  std::optional<std::int64_t> as_integer() const {
    for (std::size_t i = 1; i < c_.size(); ++i) {
      if (c_[i] != 0) return std::nullopt;
    }
    return c_[0];
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.conductor() == b.conductor() && a.c_ == b.c_;
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
  }

  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
  }

  friend Cyclotomic operator*(const Cyclotomic& a, std::int64_t n) {
    Cyclotomic r = a;
    for (auto& v : r.c_) v *= n;
    return r;
  }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    const Cyclotomy& ctx = *a.ctx_;
    unsigned phi = ctx.phi();
    unsigned m = ctx.conductor();
    std::vector<__int128> conv(2 * phi - 1, 0);
    for (unsigned i = 0; i < phi; ++i) {
      if (a.c_[i] == 0) continue;
      for (unsigned j = 0; j < phi; ++j) {
        conv[i + j] += static_cast<__int128>(a.c_[i]) * b.c_[j];
      }
    }
    std::vector<__int128> acc(phi, 0);
    for (unsigned e = 0; e < 2 * phi - 1; ++e) {
      if (conv[e] == 0) continue;
      if (e < phi) {
        acc[e] += conv[e];
      } else {
        // x^m = 1, so fold high powers through the precomputed table
        const auto& row = ctx.root_power(e % m);
        for (unsigned i = 0; i < phi; ++i) {
          acc[i] += conv[e] * static_cast<__int128>(row[i]);
        }
      }
    }
    Cyclotomic r = zero(a.ctx_);
    constexpr __int128 kLimit = static_cast<__int128>(1) << 62;
    for (unsigned i = 0; i < phi; ++i) {
      if (acc[i] >= kLimit || acc[i] <= -kLimit) {
        throw TableError("cyclotomic coefficient overflow");
      }
      r.c_[i] = static_cast<std::int64_t>(acc[i]);
    }
    return r;
  }

  /// Complex conjugate: zeta^t -> zeta^{m-t}.
  Cyclotomic conj() const {
    const Cyclotomy& ctx = *ctx_;
    unsigned m = ctx.conductor();
    Cyclotomic r = zero(ctx_);
    for (unsigned t = 0; t < ctx.phi(); ++t) {
      if (c_[t] == 0) continue;
      const auto& row = ctx.root_power(t == 0 ? 0 : m - t);
      for (unsigned i = 0; i < ctx.phi(); ++i) r.c_[i] += c_[t] * row[i];
    }
    return r;
  }

  /// value * conj(value); always a nonnegative real algebraic integer.
  Cyclotomic abs_squared() const { return *this * conj(); }

  /// Exact division by a nonzero rational integer; in Z[zeta_m] this holds
  /// iff every coordinate is divisible.
  std::optional<Cyclotomic> divide_exact(std::int64_t n) const {
    Cyclotomic r = *this;
    for (auto& v : r.c_) {
      if (v % n != 0) return std::nullopt;
      v /= n;
    }
    return r;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(c_[i]);
    }
    out += "]";
    return out;
  }

private:
  std::shared_ptr<const Cyclotomy> ctx_;
  std::vector<std::int64_t> c_;
};

} // namespace permlab
