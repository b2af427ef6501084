#pragma once

// Exact integer and rational helpers shared by the geometric modules.
// Nothing in this library touches floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace catalan {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;  // row-major

class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("int64 addition overflow");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("int64 subtraction overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("int64 multiplication overflow");
  return r;
}

inline std::int64_t narrow_checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw ArithmeticOverflow("int128 narrowing overflow");
  return static_cast<std::int64_t>(v);
}

inline std::int64_t gcd_of(const IntVector& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g;
}

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
inline IntVector make_primitive(IntVector v) {
  const std::int64_t g = gcd_of(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

inline bool is_zero(const IntVector& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

inline std::int64_t dot(const IntVector& a, const IntVector& b) {
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
  return narrow_checked(s);
}

inline IntVector add(const IntVector& a, const IntVector& b) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

inline IntVector sub(const IntVector& a, const IntVector& b) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
  return r;
}

inline IntVector negate(IntVector a) {
  for (auto& x : a) x = checked_sub(0, x);
  return a;
}

inline IntMatrix transpose(const IntMatrix& m) {
  if (m.empty()) return {};
  IntMatrix t(m[0].size(), IntVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

inline IntVector mat_vec(const IntMatrix& m, const IntVector& x) {
  IntVector r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], x);
  return r;
}

inline IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t rows = a.size(), inner = b.size(), cols = inner ? b[0].size() : 0;
  IntMatrix r(rows, IntVector(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      __int128 s = 0;
      for (std::size_t k = 0; k < inner; ++k) s += static_cast<__int128>(a[i][k]) * b[k][j];
      r[i][j] = narrow_checked(s);
    }
  return r;
}

/// Bareiss fraction-free elimination; exact for square integer matrices.
inline std::int64_t determinant(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        const __int128 num = static_cast<__int128>(a[i][j]) * a[k][k] -
                             static_cast<__int128>(a[i][k]) * a[k][j];
        a[i][j] = narrow_checked(num / prev);
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// Rank over the rationals via row reduction with gcd normalisation.
inline std::size_t rank(IntMatrix rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const std::int64_t g = std::gcd(rows[i][c], rows[r][c]);
      const std::int64_t fi = rows[r][c] / g, fr = rows[i][c] / g;
      for (std::size_t j = c; j < cols; ++j)
        rows[i][j] = checked_sub(checked_mul(rows[i][j], fi), checked_mul(rows[r][j], fr));
      rows[i] = make_primitive(std::move(rows[i]));
    }
    ++r;
  }
  return r;
}

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Gauss-Jordan inverse over Q; nullopt when singular.
inline std::optional<RationalMatrix> inverse(const IntMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[c], a[p]);
    const Rational piv = a[c][c];
    for (auto& x : a[c]) x /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  RationalMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

/// Adjugate-style integer inverse: returns (D, adj) with m * adj = D * I and D = |det m|.
struct ScaledInverse {
  std::int64_t scale = 0;
  IntMatrix matrix;
};

inline std::optional<ScaledInverse> scaled_inverse(const IntMatrix& m) {
  auto inv = inverse(m);
  if (!inv) return std::nullopt;
  const std::int64_t d = determinant(m);
  ScaledInverse out{d < 0 ? -d : d, IntMatrix(m.size(), IntVector(m.size()))};
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      const Rational v = (*inv)[i][j] * out.scale;
      if (denominator(v) != 1) throw std::logic_error("scaled_inverse: non-integral adjugate entry");
      out.matrix[i][j] = static_cast<std::int64_t>(numerator(v));
    }
  return out;
}

/// Exact solution of m x = b for square invertible m.
inline std::optional<std::vector<Rational>> solve(const IntMatrix& m, const IntVector& b) {
  auto inv = inverse(m);
  if (!inv) return std::nullopt;
  std::vector<Rational> x(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) x[i] += (*inv)[i][j] * b[j];
  return x;
}

inline std::string to_string(const Rational& q) {
  return q.str();
}

}  // namespace catalan
