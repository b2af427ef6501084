#pragma once

// Complete simplicial fans whose rays come in pairs {v_k, w_k} and whose
// maximal cones pick one ray from each pair. The fans of triangulations
// (CatalanFan) and the normal fans of combinatorial cubes are both of this
// form.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "catalan/binary_tree.hpp"
#include "catalan/exact.hpp"
#include "catalan/permutation.hpp"
#include "catalan/triangulation.hpp"

namespace catalan {

enum class Side { v, w };

inline Side opposite(Side s) { return s == Side::v ? Side::w : Side::v; }

struct RelationTerm {
  int pair;  // 1-based
  Side side;
  std::int64_t coeff;
  friend bool operator==(const RelationTerm&, const RelationTerm&) = default;
  friend auto operator<=>(const RelationTerm&, const RelationTerm&) = default;
};

/// v_k + w_k = sum of coeff * ray over rhs; empty rhs means the sum is zero.
struct PrimitiveRelation {
  int k = 0;
  std::vector<RelationTerm> rhs;

  bool is_zero() const { return rhs.empty(); }
  bool is_single_ray() const { return rhs.size() == 1 && rhs[0].coeff == 1; }
  std::int64_t degree() const {
    std::int64_t d = 2;
    for (const auto& t : rhs) d -= t.coeff;
    return d;
  }
  friend bool operator==(const PrimitiveRelation&, const PrimitiveRelation&) = default;
};

struct SimplicialFan {
  int dim = 0;
  std::vector<LatticeVectorN> rays;
  std::vector<std::vector<int>> maximal_cones;  // sorted ray indices
};

class PairedFan {
 public:
  PairedFan() = default;
  PairedFan(std::vector<LatticeVectorN> v, std::vector<LatticeVectorN> w) : v_(std::move(v)), w_(std::move(w)) {
    if (v_.size() != w_.size()) throw std::invalid_argument("PairedFan: unequal ray lists");
    for (const auto* list : {&v_, &w_})
      for (const auto& r : *list)
        if (r.coords.size() != v_.size()) throw std::invalid_argument("PairedFan: ray dimension mismatch");
  }

  int n() const { return static_cast<int>(v_.size()); }
  const LatticeVectorN& v(int k) const { return v_.at(k - 1); }
  const LatticeVectorN& w(int k) const { return w_.at(k - 1); }
  const LatticeVectorN& ray(int k, Side s) const { return s == Side::v ? v(k) : w(k); }
  const std::vector<LatticeVectorN>& rays_v() const { return v_; }
  const std::vector<LatticeVectorN>& rays_w() const { return w_; }

  /// Ray index 2(k-1) for v_k, 2(k-1)+1 for w_k.
  SimplicialFan simplicial() const {
    SimplicialFan f{n(), {}, {}};
    for (int k = 1; k <= n(); ++k) {
      f.rays.push_back(v(k));
      f.rays.push_back(w(k));
    }
    for (std::uint32_t mask = 0; mask < (1u << n()); ++mask) {
      std::vector<int> cone;
      for (int k = 0; k < n(); ++k) cone.push_back(2 * k + ((mask >> k) & 1u));
      f.maximal_cones.push_back(std::move(cone));
    }
    return f;
  }

  /// Column matrix of the cone selecting w_k where bit k-1 of mask is set.
  IntMatrix cone_matrix(std::uint32_t mask) const {
    IntMatrix m(n(), IntVector(n()));
    for (int k = 0; k < n(); ++k) {
      const auto& r = ((mask >> k) & 1u) ? w_[k] : v_[k];
      for (int i = 0; i < n(); ++i) m[i][k] = r.coords[i];
    }
    return m;
  }

 private:
  std::vector<LatticeVectorN> v_, w_;
};

/// The fan of a triangulation: rays v_k, w_k; a ray set spans a cone iff it contains no full pair.
struct CatalanFan {
  Triangulation source;
  PairedFan rays;

  int n() const { return source.n(); }
  const LatticeVectorN& v(int k) const { return rays.v(k); }
  const LatticeVectorN& w(int k) const { return rays.w(k); }
};

inline CatalanFan build_fan(const Triangulation& t) {
  auto vw = vectors_vw(t);
  return {t, PairedFan(std::move(vw.v), std::move(vw.w))};
}

inline std::vector<std::pair<int, int>> primitive_collections(const PairedFan& f) {
  std::vector<std::pair<int, int>> out;
  for (int k = 1; k <= f.n(); ++k) out.emplace_back(2 * (k - 1), 2 * (k - 1) + 1);
  return out;
}

/// Minimal ray subsets that span no cone although every proper subset does. Exponential; small fans only.
inline std::vector<std::vector<int>> primitive_collections_by_definition(const SimplicialFan& f) {
  const int r = static_cast<int>(f.rays.size());
  if (r > 20) throw std::invalid_argument("primitive_collections_by_definition: too many rays");
  std::vector<std::uint32_t> cone_masks;
  for (const auto& c : f.maximal_cones) {
    std::uint32_t m = 0;
    for (int i : c) m |= 1u << i;
    cone_masks.push_back(m);
  }
  auto is_cone = [&](std::uint32_t s) {
    return std::any_of(cone_masks.begin(), cone_masks.end(), [&](std::uint32_t c) { return (s & ~c) == 0; });
  };
  std::vector<std::vector<int>> out;
  for (std::uint32_t s = 1; s < (1u << r); ++s) {
    if (is_cone(s)) continue;
    bool minimal = true;
    for (int i = 0; i < r && minimal; ++i)
      if ((s >> i) & 1u) minimal = is_cone(s & ~(1u << i));
    if (!minimal) continue;
    std::vector<int> idx;
    for (int i = 0; i < r; ++i)
      if ((s >> i) & 1u) idx.push_back(i);
    out.push_back(std::move(idx));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Expresses v_k + w_k in the unique cone containing it in its relative interior.
inline PrimitiveRelation primitive_relation(const PairedFan& f, int k) {
  PrimitiveRelation rel{k, {}};
  const LatticeVectorN sum = f.v(k) + f.w(k);
  if (is_zero(sum.coords)) return rel;
  for (int j = 1; j <= f.n(); ++j)
    for (Side s : {Side::v, Side::w})
      if (f.ray(j, s) == sum) {
        rel.rhs.push_back({j, s, 1});
        return rel;
      }
  for (std::uint32_t mask = 0; mask < (1u << f.n()); ++mask) {
    const auto coords = solve(f.cone_matrix(mask), sum.coords);
    if (!coords) continue;
    if (std::any_of(coords->begin(), coords->end(), [](const Rational& c) { return c < 0; })) continue;
    for (int j = 0; j < f.n(); ++j) {
      const Rational& c = (*coords)[j];
      if (c == 0) continue;
      if (denominator(c) != 1) throw std::logic_error("primitive_relation: non-integral coefficient (fan not smooth)");
      rel.rhs.push_back({j + 1, ((mask >> j) & 1u) ? Side::w : Side::v, static_cast<std::int64_t>(numerator(c))});
    }
    std::sort(rel.rhs.begin(), rel.rhs.end());
    return rel;
  }
  throw std::logic_error("primitive_relation: sum lies in no cone (fan not complete)");
}

inline std::vector<PrimitiveRelation> primitive_relations(const PairedFan& f) {
  std::vector<PrimitiveRelation> out;
  for (int k = 1; k <= f.n(); ++k) out.push_back(primitive_relation(f, k));
  return out;
}

struct FanoReport {
  bool fano = false;
  std::vector<std::int64_t> degrees;  // entry k-1
};

/// Batyrev: smooth projective toric variety is Fano iff every primitive collection has positive degree.
inline FanoReport is_fano(const PairedFan& f) {
  FanoReport r{true, {}};
  for (const auto& rel : primitive_relations(f)) {
    r.degrees.push_back(rel.degree());
    if (rel.degree() <= 0) r.fano = false;
  }
  return r;
}

inline bool is_smooth(const SimplicialFan& f) {
  for (const auto& cone : f.maximal_cones) {
    if (static_cast<int>(cone.size()) != f.dim) return false;
    IntMatrix m(f.dim, IntVector(f.dim));
    for (int c = 0; c < f.dim; ++c)
      for (int i = 0; i < f.dim; ++i) m[i][c] = f.rays[cone[c]].coords[i];
    const auto d = determinant(m);
    if (d != 1 && d != -1) return false;
  }
  return true;
}

inline bool is_smooth(const PairedFan& f) { return is_smooth(f.simplicial()); }

struct ProbeResult {
  bool ok = true;
  std::size_t samples = 0;
  std::optional<IntVector> witness;
  std::string detail;
};

/// Seeded sampling of integer vectors in [-range, range]^dim: each must lie in some maximal cone
/// and in the interior of at most one.
inline ProbeResult completeness_probe(const SimplicialFan& f, std::size_t sample_count, std::uint64_t seed,
                                      std::int64_t range = 1000) {
  std::vector<ScaledInverse> inverses;
  for (const auto& cone : f.maximal_cones) {
    if (static_cast<int>(cone.size()) != f.dim) continue;
    IntMatrix m(f.dim, IntVector(f.dim));
    for (int c = 0; c < f.dim; ++c)
      for (int i = 0; i < f.dim; ++i) m[i][c] = f.rays[cone[c]].coords[i];
    if (auto inv = scaled_inverse(m)) inverses.push_back(std::move(*inv));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(-range, range);
  ProbeResult res{true, 0, std::nullopt, ""};
  IntVector x(f.dim), c(f.dim);
  for (std::size_t s = 0; s < sample_count; ++s) {
    for (auto& xi : x) xi = dist(rng);
    ++res.samples;
    int containing = 0, interior = 0;
    for (const auto& inv : inverses) {
      bool nonneg = true, positive = true;
      for (int i = 0; i < f.dim && nonneg; ++i) {
        const std::int64_t ci = dot(inv.matrix[i], x);
        nonneg = ci >= 0;
        positive = positive && ci > 0;
      }
      if (nonneg) ++containing;
      if (nonneg && positive) ++interior;
    }
    if (containing == 0 || interior > 1) {
      res.ok = false;
      res.witness = x;
      res.detail = containing == 0 ? "vector lies in no maximal cone" : "vector lies in the interior of two cones";
      return res;
    }
  }
  return res;
}

/// A with (w_{u^-1(1)}, ..., w_{u^-1(n)}) = (v_{u^-1(1)}, ..., v_{u^-1(n)}) A.
/// u must satisfy u(k0) = 1 and u(phi(k)) < u(k).
inline IntMatrix transition_matrix(const Triangulation& t, const Permutation& u) {
  const int n = t.n();
  if (u.size() != n) throw std::invalid_argument("transition_matrix: ordering has wrong size");
  const auto ps = phi_sigma(t);
  if (u(ps.k0) != 1) throw std::invalid_argument("transition_matrix: u(k0) must be 1");
  for (int k = 1; k <= n; ++k)
    if (k != ps.k0 && u(ps.phi[k - 1]) >= u(k))
      throw std::invalid_argument("transition_matrix: u(phi(k)) < u(k) fails at k=" + std::to_string(k));
  const auto vw = vectors_vw(t);
  const auto uinv = u.inverse();
  IntMatrix V(n, IntVector(n)), W(n, IntVector(n));
  for (int c = 0; c < n; ++c)
    for (int i = 0; i < n; ++i) {
      V[i][c] = vw.v[uinv(c + 1) - 1].coords[i];
      W[i][c] = vw.w[uinv(c + 1) - 1].coords[i];
    }
  const auto inv = inverse(V);
  if (!inv) throw std::logic_error("transition_matrix: v-vectors are not a basis");
  IntMatrix A(n, IntVector(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational s = 0;
      for (int k = 0; k < n; ++k) s += (*inv)[i][k] * W[k][j];
      if (denominator(s) != 1) throw std::logic_error("transition_matrix: non-integral entry");
      A[i][j] = static_cast<std::int64_t>(numerator(s));
    }
  return A;
}

inline std::string fan_code(const CatalanFan& f) { return canonical_code(tree_of_triangulation(f.source)); }

inline bool fan_iso_by_tree(const CatalanFan& a, const CatalanFan& b) {
  return a.n() == b.n() && fan_code(a) == fan_code(b);
}

struct FanIsoWitness {
  std::vector<int> eta;    // entry k-1 holds eta(k)
  std::vector<bool> swap;  // v_k maps to w_{eta(k)} when set
  IntMatrix matrix;        // lattice map in varpi-coordinates
};

/// Exhaustive search for a lattice automorphism carrying pairs to pairs. Intended for n <= 6.
inline std::optional<FanIsoWitness> fan_iso_bruteforce(const PairedFan& a, const PairedFan& b) {
  const int n = a.n();
  if (n != b.n()) return std::nullopt;
  if (n > 8) throw std::invalid_argument("fan_iso_bruteforce: n too large");
  const auto rel_a = primitive_relations(a);
  const auto rel_b = primitive_relations(b);

  auto shape = [](const PrimitiveRelation& r) {
    std::vector<std::int64_t> c;
    for (const auto& t : r.rhs) c.push_back(t.coeff);
    std::sort(c.begin(), c.end());
    return c;
  };
  std::vector<std::vector<std::int64_t>> shape_a, shape_b;
  for (int k = 0; k < n; ++k) {
    shape_a.push_back(shape(rel_a[k]));
    shape_b.push_back(shape(rel_b[k]));
  }

  const IntMatrix base = a.cone_matrix(0);
  const auto base_inv = scaled_inverse(base);
  if (!base_inv) throw std::invalid_argument("fan_iso_bruteforce: v-rays are not a basis");

  std::vector<int> eta(n);
  std::iota(eta.begin(), eta.end(), 1);
  do {
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) {
      ok = shape_a[k] == shape_b[eta[k] - 1];
      if (!ok) break;
      std::vector<int> mapped, target;
      for (const auto& t : rel_a[k].rhs) mapped.push_back(eta[t.pair - 1]);
      for (const auto& t : rel_b[eta[k] - 1].rhs) target.push_back(t.pair);
      std::sort(mapped.begin(), mapped.end());
      std::sort(target.begin(), target.end());
      ok = mapped == target;
    }
    if (!ok) continue;

    for (std::uint32_t flips = 0; flips < (1u << n); ++flips) {
      auto image_side = [&](int pair, Side s) { return ((flips >> (pair - 1)) & 1u) ? opposite(s) : s; };
      bool rel_ok = true;
      for (int k = 0; k < n && rel_ok; ++k) {
        std::vector<RelationTerm> mapped;
        for (const auto& t : rel_a[k].rhs) mapped.push_back({eta[t.pair - 1], image_side(t.pair, t.side), t.coeff});
        std::sort(mapped.begin(), mapped.end());
        rel_ok = mapped == rel_b[eta[k] - 1].rhs;
      }
      if (!rel_ok) continue;

      // A = Img * base^{-1}, with Img the images of v_1..v_n as columns.
      IntMatrix img(n, IntVector(n));
      for (int k = 0; k < n; ++k) {
        const auto& r = b.ray(eta[k], image_side(k + 1, Side::v));
        for (int i = 0; i < n; ++i) img[i][k] = r.coords[i];
      }
      IntMatrix A = mat_mul(img, base_inv->matrix);
      bool integral = true;
      for (auto& row : A)
        for (auto& x : row) {
          if (x % base_inv->scale != 0) integral = false;
          x /= base_inv->scale;
        }
      if (!integral) continue;
      const auto d = determinant(A);
      if (d != 1 && d != -1) continue;
      bool maps = true;
      for (int k = 1; k <= n && maps; ++k)
        maps = mat_vec(A, a.w(k).coords) == b.ray(eta[k - 1], image_side(k, Side::w)).coords;
      if (!maps) continue;
      FanIsoWitness wit{eta, std::vector<bool>(n), std::move(A)};
      for (int k = 0; k < n; ++k) wit.swap[k] = (flips >> k) & 1u;
      return wit;
    }
  } while (std::next_permutation(eta.begin(), eta.end()));
  return std::nullopt;
}

struct FanClass {
  std::string code;
  Triangulation representative;  // lexicographically least member
  std::size_t members = 0;
};

/// Isomorphism classes of the C_n fans, keyed by the unordered tree code; sorted by representative.
inline std::vector<FanClass> classify(int n) {
  std::map<std::string, FanClass> by_code;
  for (const auto& t : enumerate_triangulations(n)) {
    const auto code = canonical_code(tree_of_triangulation(t));
    auto it = by_code.find(code);
    if (it == by_code.end()) {
      by_code.emplace(code, FanClass{code, t, 1});
    } else {
      ++it->second.members;
      if (t < it->second.representative) it->second.representative = t;
    }
  }
  std::vector<FanClass> out;
  for (auto& [code, cls] : by_code) out.push_back(std::move(cls));
  std::sort(out.begin(), out.end(),
            [](const FanClass& x, const FanClass& y) { return x.representative < y.representative; });
  return out;
}

}  // namespace catalan
