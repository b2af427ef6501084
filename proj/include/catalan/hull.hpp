#pragma once

// Exact facet enumeration for integer point sets of small affine dimension.
//
// The points are projected onto d coordinates on which their affine hull
// maps injectively, homogenised to rows (y, 1), and the extreme rays of the
// cone {x : (y_i, 1) . x >= 0 for all i} are computed by the double
// description method with combinatorial adjacency. Each extreme ray is a
// facet inequality. Integer arithmetic throughout, overflow-checked.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "catalan/exact.hpp"

namespace catalan {

/// a . x >= offset on every input point; equality exactly on `points`.
struct HullFacet {
  IntVector functional;  // ambient coordinates, lies in the direction space, primitive
  std::int64_t offset = 0;
  std::vector<std::size_t> points;
};

struct AffineFrame {
  std::size_t dim = 0;
  std::vector<std::size_t> basis_points;  // p_0 plus dim affinely independent points
  IntMatrix directions;                   // rows p_i - p_0
};

inline AffineFrame affine_frame(const std::vector<IntVector>& pts) {
  AffineFrame f;
  if (pts.empty()) throw std::invalid_argument("affine_frame: no points");
  f.basis_points.push_back(0);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    auto rows = f.directions;
    rows.push_back(sub(pts[i], pts[0]));
    if (rank(rows) > f.directions.size()) {
      f.directions = std::move(rows);
      f.basis_points.push_back(i);
    }
  }
  f.dim = f.directions.size();
  return f;
}

inline std::size_t affine_dimension(const std::vector<IntVector>& pts) { return affine_frame(pts).dim; }

namespace detail {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  Bits operator&(const Bits& o) const {
    Bits r;
    r.words_.resize(words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct DDRay {
  IntVector x;
  Bits zeros;
};

// Orthogonal projection of a onto the row space of basis, scaled to a primitive integer vector.
inline IntVector project_primitive(const IntVector& a, const IntMatrix& basis) {
  const std::size_t d = basis.size(), m = a.size();
  IntMatrix gram(d, IntVector(d));
  IntVector rhs(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) gram[i][j] = dot(basis[i], basis[j]);
    rhs[i] = dot(basis[i], a);
  }
  const auto y = solve(gram, rhs);
  if (!y) throw std::logic_error("project_primitive: singular Gram matrix");
  std::vector<Rational> proj(m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < d; ++i) proj[j] += (*y)[i] * basis[i][j];
  BigInt l = 1;
  for (const auto& q : proj) l = boost::multiprecision::lcm(l, BigInt(denominator(q)));
  std::vector<BigInt> ints(m);
  BigInt g = 0;
  for (std::size_t j = 0; j < m; ++j) {
    ints[j] = numerator(proj[j]) * (l / denominator(proj[j]));
    g = boost::multiprecision::gcd(g, ints[j]);
  }
  IntVector out(m);
  for (std::size_t j = 0; j < m; ++j) {
    const BigInt v = g == 0 ? BigInt(0) : BigInt(ints[j] / g);
    if (v > INT64_MAX || v < INT64_MIN) throw ArithmeticOverflow("project_primitive: entry overflow");
    out[j] = static_cast<std::int64_t>(v);
  }
  return out;
}

}  // namespace detail

/// Irredundant facet inequalities of conv(pts), sorted by functional.
inline std::vector<HullFacet> hull_facets(const std::vector<IntVector>& pts) {
  const auto frame = affine_frame(pts);
  const std::size_t d = frame.dim;
  if (d == 0) return {};
  const std::size_t m = pts[0].size();

  // Coordinates on which the direction space projects injectively.
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < m && cols.size() < d; ++j) {
    IntMatrix restricted(d, IntVector(cols.size() + 1));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t c = 0; c < cols.size(); ++c) restricted[i][c] = frame.directions[i][cols[c]];
      restricted[i][cols.size()] = frame.directions[i][j];
    }
    if (rank(restricted) == cols.size() + 1) cols.push_back(j);
  }

  const std::size_t N = pts.size(), D = d + 1;
  IntMatrix rows(N, IntVector(D, 1));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t c = 0; c < d; ++c) rows[i][c] = pts[i][cols[c]];

  // Initial simplicial cone from d+1 affinely independent points.
  IntMatrix r0;
  for (auto i : frame.basis_points) r0.push_back(rows[i]);
  const auto inv = scaled_inverse(r0);
  if (!inv) throw std::logic_error("hull_facets: initial simplex is degenerate");
  std::vector<bool> processed(N, false);
  for (auto i : frame.basis_points) processed[i] = true;
  std::vector<detail::DDRay> rays;
  for (std::size_t c = 0; c < D; ++c) {
    detail::DDRay r{IntVector(D), detail::Bits(N)};
    for (std::size_t i = 0; i < D; ++i) r.x[i] = inv->matrix[i][c];
    r.x = make_primitive(std::move(r.x));
    for (std::size_t b = 0; b < D; ++b)
      if (b != c) r.zeros.set(frame.basis_points[b]);
    rays.push_back(std::move(r));
  }

  for (std::size_t h = 0; h < N; ++h) {
    if (processed[h]) continue;
    processed[h] = true;
    std::vector<std::int64_t> s(rays.size());
    bool any_negative = false;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      s[r] = dot(rows[h], rays[r].x);
      any_negative = any_negative || s[r] < 0;
    }
    if (!any_negative) {
      for (std::size_t r = 0; r < rays.size(); ++r)
        if (s[r] == 0) rays[r].zeros.set(h);
      continue;
    }
    std::vector<detail::DDRay> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (s[r] < 0) continue;
      auto kept = rays[r];
      if (s[r] == 0) kept.zeros.set(h);
      next.push_back(std::move(kept));
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (s[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (s[q] >= 0) continue;
        const auto common = rays[p].zeros & rays[q].zeros;
        if (common.count() + 2 < D) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != q && common.subset_of(rays[r].zeros)) adjacent = false;
        if (!adjacent) continue;
        detail::DDRay fresh{IntVector(D), common};
        for (std::size_t i = 0; i < D; ++i)
          fresh.x[i] = checked_sub(checked_mul(s[p], rays[q].x[i]), checked_mul(s[q], rays[p].x[i]));
        fresh.x = make_primitive(std::move(fresh.x));
        fresh.zeros.set(h);
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
  }

  std::vector<HullFacet> out;
  for (const auto& r : rays) {
    IntVector lifted(m, 0);
    for (std::size_t c = 0; c < d; ++c) lifted[cols[c]] = r.x[c];
    HullFacet f;
    f.functional = detail::project_primitive(lifted, frame.directions);
    f.offset = dot(f.functional, pts[0]);
    for (const auto& p : pts) f.offset = std::min(f.offset, dot(f.functional, p));
    for (std::size_t i = 0; i < N; ++i)
      if (dot(f.functional, pts[i]) == f.offset) f.points.push_back(i);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const HullFacet& a, const HullFacet& b) { return a.functional < b.functional; });
  return out;
}

}  // namespace catalan
