#pragma once

// Bruhat interval polytopes Q_{v,w} = conv{(z(1),...,z(m)) : v <= z <= w}.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "catalan/exact.hpp"
#include "catalan/fan.hpp"
#include "catalan/hull.hpp"
#include "catalan/permutation.hpp"
#include "catalan/triangulation.hpp"

namespace catalan {

inline constexpr std::size_t default_max_interval = 5000;
inline constexpr std::size_t max_hull_dimension = 6;

class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct BruhatPolytope {
  Permutation v;
  Permutation w;
  std::vector<Permutation> elements;
  std::vector<IntVector> points;  // points[i] is the one-line notation of elements[i]
  std::size_t affine_dim = 0;

  int ambient() const { return v.size(); }
};

inline IntVector point_of(const Permutation& z) { return {z.values().begin(), z.values().end()}; }

inline BruhatPolytope build_bip(const Permutation& v, const Permutation& w,
                                std::size_t max_points = default_max_interval) {
  if (v.size() != w.size()) throw std::invalid_argument("build_bip: size mismatch");
  auto iv = interval(v, w);
  if (iv.elements.size() > max_points)
    throw CapExceeded("build_bip: interval has " + std::to_string(iv.elements.size()) + " elements, cap is " +
                      std::to_string(max_points));
  BruhatPolytope p{v, w, std::move(iv.elements), {}, 0};
  for (const auto& z : p.elements) p.points.push_back(point_of(z));
  p.affine_dim = affine_dimension(p.points);
  return p;
}

inline bool is_toric(const BruhatPolytope& p) {
  return static_cast<int>(p.affine_dim) == length(p.w) - length(p.v);
}

/// pairing(normal, x) >= offset on the polytope, with equality on `points`.
struct Facet {
  LatticeVectorN normal;
  Rational offset;
  std::vector<std::size_t> points;
  IntVector functional;  // representative on Z^m lying in the direction space
};

/// Unique representative of an ambient functional: projected to the direction space, in varpi-coordinates, primitive.
inline LatticeVectorN canonical_normal(const IntVector& functional, const IntMatrix& directions) {
  return {make_primitive(to_varpi(detail::project_primitive(functional, directions)).coords)};
}

inline std::vector<Facet> convex_hull_facets(const BruhatPolytope& p) {
  if (p.affine_dim > max_hull_dimension)
    throw std::invalid_argument("convex_hull_facets: dimension " + std::to_string(p.affine_dim) + " above " +
                                std::to_string(max_hull_dimension));
  std::vector<Facet> out;
  for (auto& h : hull_facets(p.points)) {
    Facet f;
    f.normal = {make_primitive(to_varpi(h.functional).coords)};
    std::optional<std::int64_t> lo;
    for (const auto& x : p.points) {
      const auto val = pairing(f.normal, LatticeVectorM{x});
      lo = lo ? std::min(*lo, val) : val;
    }
    f.offset = *lo;
    f.points = std::move(h.points);
    f.functional = std::move(h.functional);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const Facet& a, const Facet& b) { return a.normal < b.normal; });
  return out;
}

struct VertexEdgeGraph {
  std::vector<std::size_t> vertices;               // indices into points
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // positions in `vertices`
  std::vector<std::vector<std::size_t>> incident;  // facet indices per vertex
};

inline VertexEdgeGraph vertices_and_edges(const BruhatPolytope& p, const std::vector<Facet>& facets) {
  VertexEdgeGraph g;
  const std::size_t d = p.affine_dim;
  if (d == 0) {
    g.vertices = {0};
    g.incident = {{}};
    return g;
  }
  std::vector<std::vector<std::size_t>> on(p.points.size());
  for (std::size_t f = 0; f < facets.size(); ++f)
    for (auto i : facets[f].points) on[i].push_back(f);
  auto rank_of = [&](const std::vector<std::size_t>& fs) {
    IntMatrix rows;
    for (auto f : fs) rows.push_back(facets[f].functional);
    return rank(rows);
  };
  for (std::size_t i = 0; i < p.points.size(); ++i) {
    if (on[i].size() >= d && rank_of(on[i]) == d) {
      g.vertices.push_back(i);
      g.incident.push_back(on[i]);
    }
  }
  for (std::size_t a = 0; a < g.vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < g.vertices.size(); ++b) {
      std::vector<std::size_t> common;
      std::set_intersection(g.incident[a].begin(), g.incident[a].end(), g.incident[b].begin(), g.incident[b].end(),
                            std::back_inserter(common));
      if (common.size() + 1 >= d && rank_of(common) + 1 == d) g.edges.emplace_back(a, b);
    }
  }
  return g;
}

/// Primitive directions of the edges leaving the vertex at point index `point`.
inline std::vector<IntVector> edge_directions(const BruhatPolytope& p, const VertexEdgeGraph& g, std::size_t point) {
  std::vector<IntVector> out;
  for (const auto& [a, b] : g.edges) {
    const auto pa = g.vertices[a], pb = g.vertices[b];
    if (pa == point) out.push_back(make_primitive(sub(p.points[pb], p.points[pa])));
    if (pb == point) out.push_back(make_primitive(sub(p.points[pa], p.points[pb])));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct CombinatorialCubeCertificate {
  std::size_t dim = 0;
  std::size_t vertex_count = 0;
  bool vertex_count_ok = false;
  bool simple = false;
  bool graph_iso_to_hypercube = false;
  std::vector<std::pair<std::size_t, std::size_t>> opposite_pairs;

  bool valid() const {
    return vertex_count_ok && simple && graph_iso_to_hypercube && opposite_pairs.size() == dim;
  }
};

namespace detail {

// Labels vertex 0 by 0 and its neighbours by unit bits; every further vertex gets
// the union of the labels of its BFS parents. Succeeds iff the graph is a d-cube.
inline bool hypercube_labeling(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                               std::size_t d) {
  if (n != (std::size_t{1} << d)) return false;
  if (edges.size() != d * n / 2) return false;
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  if (d == 0) return true;
  if (adj[0].size() != d) return false;
  std::vector<int> dist(n, -1);
  std::vector<std::uint32_t> label(n, 0);
  dist[0] = 0;
  std::queue<std::size_t> q;
  for (std::size_t i = 0; i < d; ++i) {
    dist[adj[0][i]] = 1;
    label[adj[0][i]] = 1u << i;
    q.push(adj[0][i]);
  }
  while (!q.empty()) {
    const auto x = q.front();
    q.pop();
    for (auto y : adj[x]) {
      if (dist[y] == -1) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
      if (dist[y] == dist[x] + 1) label[y] |= label[x];
    }
  }
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i] < 0 || label[i] >= n || seen[label[i]]) return false;
    if (std::popcount(label[i]) != dist[i]) return false;
    seen[label[i]] = true;
  }
  for (const auto& [a, b] : edges)
    if (std::popcount(label[a] ^ label[b]) != 1) return false;
  return true;
}

}  // namespace detail

inline CombinatorialCubeCertificate is_combinatorial_cube(const BruhatPolytope& p, const std::vector<Facet>& facets,
                                                          const VertexEdgeGraph& g) {
  CombinatorialCubeCertificate c;
  c.dim = p.affine_dim;
  c.vertex_count = g.vertices.size();
  c.vertex_count_ok = c.vertex_count == (std::size_t{1} << c.dim);
  c.simple = std::all_of(g.incident.begin(), g.incident.end(), [&](const auto& inc) { return inc.size() == c.dim; });
  c.graph_iso_to_hypercube = c.dim <= max_hull_dimension && detail::hypercube_labeling(c.vertex_count, g.edges, c.dim);
  if (facets.size() == 2 * c.dim) {
    std::vector<bool> used(facets.size(), false);
    for (std::size_t a = 0; a < facets.size(); ++a) {
      if (used[a]) continue;
      for (std::size_t b = a + 1; b < facets.size(); ++b) {
        if (used[b]) continue;
        std::vector<std::size_t> both;
        std::set_intersection(facets[a].points.begin(), facets[a].points.end(), facets[b].points.begin(),
                              facets[b].points.end(), std::back_inserter(both));
        if (both.empty() && facets[a].points.size() + facets[b].points.size() == p.points.size()) {
          c.opposite_pairs.emplace_back(a, b);
          used[a] = used[b] = true;
          break;
        }
      }
    }
  }
  return c;
}

inline CombinatorialCubeCertificate is_combinatorial_cube(const BruhatPolytope& p) {
  const auto facets = convex_hull_facets(p);
  return is_combinatorial_cube(p, facets, vertices_and_edges(p, facets));
}

/// Rays are the facet normals (in facet order); one maximal cone per vertex.
inline SimplicialFan normal_fan_of(const BruhatPolytope& p, const std::vector<Facet>& facets,
                                   const VertexEdgeGraph& g) {
  SimplicialFan f;
  f.dim = static_cast<int>(p.affine_dim);
  if (p.affine_dim == 0) return f;
  for (const auto& fc : facets) f.rays.push_back(fc.normal);
  for (const auto& inc : g.incident) f.maximal_cones.emplace_back(inc.begin(), inc.end());
  std::sort(f.maximal_cones.begin(), f.maximal_cones.end());
  return f;
}

inline SimplicialFan normal_fan_of(const BruhatPolytope& p) {
  const auto facets = convex_hull_facets(p);
  return normal_fan_of(p, facets, vertices_and_edges(p, facets));
}

/// The normal fan of a certified cube, with v_k, w_k the normals of the k-th opposite facet pair.
inline PairedFan paired_normal_fan(const std::vector<Facet>& facets, const CombinatorialCubeCertificate& c) {
  if (!c.valid()) throw std::invalid_argument("paired_normal_fan: not a combinatorial cube");
  std::vector<LatticeVectorN> v, w;
  for (const auto& [a, b] : c.opposite_pairs) {
    v.push_back(facets[a].normal);
    w.push_back(facets[b].normal);
  }
  if (!v.empty() && v[0].coords.size() != v.size())
    throw std::invalid_argument("paired_normal_fan: polytope is not full-dimensional; pass the polytope and graph");
  return PairedFan(std::move(v), std::move(w));
}

/// Z-basis of the lattice of integer directions of Q. Edges of a Bruhat interval polytope are
/// parallel to roots e_i - e_j, and a spanning forest of those roots is a basis.
inline IntMatrix direction_lattice_basis(const BruhatPolytope& p, const VertexEdgeGraph& g) {
  const std::size_t m = p.ambient();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  IntMatrix basis;
  for (const auto& [a, b] : g.edges) {
    const auto d = make_primitive(sub(p.points[g.vertices[b]], p.points[g.vertices[a]]));
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < m; ++i)
      if (d[i] != 0) support.push_back(i);
    if (support.size() != 2 || d[support[0]] + d[support[1]] != 0 || std::abs(d[support[0]]) != 1)
      throw std::logic_error("direction_lattice_basis: edge is not parallel to a root");
    const auto x = find(support[0]), y = find(support[1]);
    if (x == y) continue;
    parent[x] = y;
    basis.push_back(d);
  }
  if (basis.size() != p.affine_dim) throw std::logic_error("direction_lattice_basis: edges do not span");
  return basis;
}

/// As above, for a cube of any dimension: rays in coordinates dual to a basis of the direction lattice
/// (the ambient varpi coordinates when Q is full-dimensional).
inline PairedFan paired_normal_fan(const BruhatPolytope& p, const std::vector<Facet>& facets, const VertexEdgeGraph& g,
                                   const CombinatorialCubeCertificate& c) {
  if (p.affine_dim + 1 == static_cast<std::size_t>(p.ambient())) return paired_normal_fan(facets, c);
  if (!c.valid()) throw std::invalid_argument("paired_normal_fan: not a combinatorial cube");
  const auto basis = direction_lattice_basis(p, g);
  auto local = [&](const Facet& f) {
    IntVector y;
    for (const auto& b : basis) y.push_back(pairing(f.normal, LatticeVectorM{b}));
    return LatticeVectorN{make_primitive(std::move(y))};
  };
  std::vector<LatticeVectorN> v, w;
  for (const auto& [a, b] : c.opposite_pairs) {
    v.push_back(local(facets[a]));
    w.push_back(local(facets[b]));
  }
  return PairedFan(std::move(v), std::move(w));
}

using RaySet = std::set<LatticeVectorN>;
using ConeSet = std::set<std::set<LatticeVectorN>>;

inline RaySet ray_set(const SimplicialFan& f) { return {f.rays.begin(), f.rays.end()}; }

inline ConeSet cone_set(const SimplicialFan& f) {
  ConeSet out;
  for (const auto& c : f.maximal_cones) {
    std::set<LatticeVectorN> s;
    for (int i : c) s.insert(f.rays[i]);
    out.insert(std::move(s));
  }
  return out;
}

/// (x_1,...,x_m) -> (m+1-x_m, ..., m+1-x_1).
inline std::vector<IntVector> w0_polytope_map(const std::vector<IntVector>& points) {
  std::vector<IntVector> out;
  for (const auto& x : points) {
    const auto m = static_cast<std::int64_t>(x.size());
    IntVector y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = m + 1 - x[x.size() - 1 - i];
    out.push_back(std::move(y));
  }
  return out;
}

struct ProductFactor {
  int lo = 0;  // window of positions lo..hi+1
  int hi = 0;
  Permutation v;
  Permutation w;
};

struct ProductDecomposition {
  std::vector<int> word;
  SweepDecomposition sweep;
  std::vector<ProductFactor> factors;
};

class NotProper : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Factors (pi_[p,q](v), pi_[p,q](w)) over the blocks of the minimal sweep expression of v^{-1}w.
inline ProductDecomposition product_decomposition(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size()) throw std::invalid_argument("product_decomposition: size mismatch");
  const auto x = v.inverse() * w;
  ProductDecomposition out;
  out.word = reduced_word(x);
  if (length(w) - length(v) != static_cast<int>(out.word.size()))
    throw NotProper("product_decomposition: l(w) - l(v) differs from l(v^-1 w)");
  std::set<int> letters(out.word.begin(), out.word.end());
  if (letters.size() != out.word.size())
    throw NotProper("product_decomposition: v^-1 w = " + x.str() + " repeats a simple reflection");
  out.sweep = sweep_decomposition(out.word);
  if (!out.sweep.found || !out.sweep.proper)
    throw NotProper("product_decomposition: minimal expression of " + x.str() + " is not proper");
  auto blocks = out.sweep.blocks;
  std::sort(blocks.begin(), blocks.end(), [](const SweepBlock& a, const SweepBlock& b) { return a.lo() < b.lo(); });
  for (const auto& b : blocks)
    out.factors.push_back({b.lo(), b.hi(), pattern_projection(v, b.lo(), b.hi()), pattern_projection(w, b.lo(), b.hi())});
  return out;
}

struct ProductValidation {
  std::size_t interval_size = 0;
  std::size_t factor_vertex_product = 0;
  bool counts_match = false;
  bool normals_match = false;
  bool ok() const { return counts_match && normals_match; }
};

/// Compares vertex counts and facet normals of Q_{v,w} with those of the embedded factors.
inline ProductValidation validate_product(const BruhatPolytope& p, const std::vector<Facet>& facets,
                                          const ProductDecomposition& d) {
  ProductValidation r;
  r.interval_size = p.points.size();
  r.factor_vertex_product = 1;
  std::multiset<LatticeVectorN> embedded;
  const auto frame = affine_frame(p.points);
  for (const auto& f : d.factors) {
    const auto q = build_bip(f.v, f.w);
    r.factor_vertex_product *= q.points.size();
    for (const auto& fc : convex_hull_facets(q)) {
      IntVector a(p.ambient(), 0);
      for (std::size_t i = 0; i < fc.functional.size(); ++i) a[f.lo - 1 + i] = fc.functional[i];
      embedded.insert(canonical_normal(a, frame.directions));
    }
  }
  std::multiset<LatticeVectorN> own;
  for (const auto& fc : facets) own.insert(canonical_normal(fc.functional, frame.directions));
  r.counts_match = r.interval_size == r.factor_vertex_product;
  r.normals_match = own == embedded;
  return r;
}

/// f_0, ..., f_d: number of faces by dimension, from closing facet vertex sets under intersection.
inline std::vector<std::size_t> face_vector(const BruhatPolytope& p, const std::vector<Facet>& facets,
                                            const VertexEdgeGraph& g) {
  std::vector<std::size_t> out(p.affine_dim + 1, 0);
  if (p.affine_dim == 0) {
    out[0] = 1;
    return out;
  }
  std::set<std::size_t> vertex_points(g.vertices.begin(), g.vertices.end());
  std::set<std::vector<std::size_t>> faces;
  std::vector<std::vector<std::size_t>> frontier;
  for (const auto& f : facets) {
    std::vector<std::size_t> s;
    for (auto i : f.points)
      if (vertex_points.count(i)) s.push_back(i);
    if (faces.insert(s).second) frontier.push_back(std::move(s));
  }
  std::vector<std::vector<std::size_t>> facet_sets(faces.begin(), faces.end());
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& a : frontier) {
      for (const auto& b : facet_sets) {
        std::vector<std::size_t> c;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
        if (!c.empty() && faces.insert(c).second) next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }
  for (const auto& s : faces) {
    std::vector<IntVector> pts;
    for (auto i : s) pts.push_back(p.points[i]);
    ++out[affine_dimension(pts)];
  }
  ++out[p.affine_dim];
  return out;
}

}  // namespace catalan
