#pragma once

// Reference computations for tests. Everything here works on plain
// coefficient vectors and mpq_class, not on the library's classes.

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <vector>

#include "chiy/polynomial.hpp"

namespace oracle {

using Coeffs = std::vector<mpq_class>;

inline void trim(Coeffs& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Coeffs mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

inline Coeffs add(Coeffs a, const Coeffs& b) {
  if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

inline Coeffs scale(Coeffs a, const mpq_class& s) {
  for (auto& c : a) c *= s;
  trim(a);
  return a;
}

/// (-y)^n.
inline Coeffs neg_y_pow(long n) {
  Coeffs p(static_cast<std::size_t>(n) + 1, mpq_class(0));
  p.back() = (n % 2 == 0) ? 1 : -1;
  return p;
}

inline mpq_class qpow(const mpq_class& x, long e) {
  mpq_class base = e < 0 ? mpq_class(1) / x : x;
  mpq_class r = 1;
  for (long i = 0; i < std::labs(e); ++i) r *= base;
  return r;
}

inline chiy::Polynomial to_poly(const Coeffs& c) {
  std::vector<chiy::Rational> v;
  for (const auto& x : c) v.emplace_back(x);
  return chiy::Polynomial(std::move(v));
}

inline Coeffs ints(std::initializer_list<long> xs) {
  Coeffs c;
  for (long x : xs) c.emplace_back(x);
  trim(c);
  return c;
}

/// Gaussian binomial [n choose 2]_q at q = -y by brute force: each 2-subset
/// {i < j} of {0..n-1} contributes q^{(i - 0) + (j - 1)}.
inline Coeffs gaussian_binomial_2(long n) {
  Coeffs out;
  for (long i = 0; i < n; ++i) {
    for (long j = i + 1; j < n; ++j) out = add(out, neg_y_pow(i + (j - 1)));
  }
  return out;
}

/// Sum_{i=0}^n (-y)^i.
inline Coeffs projective_genus(long n) {
  Coeffs out;
  for (long i = 0; i <= n; ++i) out = add(out, neg_y_pow(i));
  return out;
}

/// prod_w ((theta0^w + y) / (theta0^w - 1))^{n_w} as a polynomial in y.
inline Coeffs delta_at(const std::map<long, long>& ws, const mpq_class& theta0) {
  Coeffs out{mpq_class(1)};
  for (const auto& [w, n] : ws) {
    const mpq_class t = qpow(theta0, w);
    const Coeffs factor{t / (t - 1), mpq_class(1) / (t - 1)};
    for (long i = 0; i < n; ++i) out = mul(out, factor);
  }
  return out;
}

/// A_k = sum over w with k | |w| of n_w.
inline std::map<long, long> pole_orders(const std::map<long, long>& ws) {
  long w_max = 0;
  for (const auto& [w, n] : ws) w_max = std::max(w_max, std::labs(w));
  std::map<long, long> out;
  for (long k = 1; k <= w_max; ++k) {
    long a = 0;
    for (const auto& [w, n] : ws) {
      if (std::labs(w) % k == 0) a += n;
    }
    if (a > 0) out[k] = a;
  }
  return out;
}

/// B_k = sum over w > 0 with w | k of (n_{-w} - n_w), for k = 1..w_max.
inline std::vector<long> series_coefficients(const std::map<long, long>& ws, long w_max) {
  std::vector<long> out;
  for (long k = 1; k <= w_max; ++k) {
    long b = 0;
    for (long w = 1; w <= k; ++w) {
      if (k % w != 0) continue;
      auto neg = ws.find(-w);
      auto pos = ws.find(w);
      b += (neg == ws.end() ? 0 : neg->second) - (pos == ws.end() ? 0 : pos->second);
    }
    out.push_back(b);
  }
  return out;
}

/// Taylor coefficients 0..order of num(theta) / den(theta) with den(0) != 0,
/// by long division of power series.
inline Coeffs series_quotient(const Coeffs& num, const Coeffs& den, std::size_t order) {
  Coeffs out(order + 1, mpq_class(0));
  for (std::size_t i = 0; i <= order; ++i) {
    mpq_class v = i < num.size() ? num[i] : mpq_class(0);
    for (std::size_t j = 1; j <= i && j < den.size(); ++j) v -= den[j] * out[i - j];
    out[i] = v / den[0];
  }
  return out;
}

/// theta^w - 1 for w > 0.
inline Coeffs theta_power_minus_one(long w) {
  Coeffs p(static_cast<std::size_t>(w) + 1, mpq_class(0));
  p[0] = -1;
  p.back() = 1;
  return p;
}

}  // namespace oracle
