#include <gtest/gtest.h>

#include <set>

#include "catalan/fan.hpp"
#include "catalan/hull.hpp"
#include "catalan/polytope.hpp"
#include "catalan/verify.hpp"

using namespace catalan;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

LatticeVectorN W(std::initializer_list<std::pair<int, int>> terms, int n) {
  LatticeVectorN v{IntVector(n, 0)};
  for (auto [i, c] : terms)
    if (i >= 1 && i <= n) v.coords[i - 1] += c;
  return v;
}

std::set<LatticeVectorN> normals(const std::vector<Facet>& fs) {
  std::set<LatticeVectorN> out;
  for (const auto& f : fs) out.insert(f.normal);
  return out;
}

}  // namespace

TEST(Hull, UnitCube) {
  std::vector<IntVector> pts;
  for (int m = 0; m < 8; ++m) pts.push_back({m & 1, (m >> 1) & 1, (m >> 2) & 1});
  pts.push_back({0, 0, 0});  // repeated point
  const auto fs = hull_facets(pts);
  ASSERT_EQ(fs.size(), 6u);
  for (const auto& f : fs) {
    EXPECT_GE(f.points.size(), 4u);
    for (const auto& p : pts) EXPECT_GE(dot(f.functional, p), f.offset);
  }
}

TEST(Hull, SimplexInsideHigherSpace) {
  // a triangle in R^4
  const std::vector<IntVector> pts{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 1, 0}};
  EXPECT_EQ(affine_dimension(pts), 2u);
  EXPECT_EQ(hull_facets(pts).size(), 3u);
}

TEST(Hull, InteriorPointsAreNotOnFacets) {
  std::vector<IntVector> pts{{0, 0}, {4, 0}, {0, 4}, {4, 4}, {1, 2}, {2, 2}, {3, 1}};
  const auto fs = hull_facets(pts);
  ASSERT_EQ(fs.size(), 4u);
  for (const auto& f : fs) EXPECT_EQ(f.points.size(), 2u);
}

TEST(Bip, BasicExamples) {
  const auto cube = build_bip(P("1243"), P("2431"));
  EXPECT_EQ(cube.points.size(), 8u);
  EXPECT_EQ(cube.affine_dim, 3u);
  EXPECT_TRUE(is_toric(cube));
  const auto point = build_bip(P("1234"), P("1234"));
  EXPECT_EQ(point.points.size(), 1u);
  EXPECT_EQ(point.affine_dim, 0u);
  EXPECT_TRUE(is_toric(point));
  const auto perm = build_bip(P("1234"), P("4321"));
  EXPECT_EQ(perm.points.size(), 24u);
  EXPECT_EQ(perm.affine_dim, 3u);
  EXPECT_FALSE(is_toric(perm));
  for (const auto& x : perm.points) EXPECT_EQ(x[0] + x[1] + x[2] + x[3], 10);
  EXPECT_THROW(build_bip(P("2431"), P("1243")), std::invalid_argument);
  EXPECT_THROW(build_bip(P("1234"), P("4321"), 10), CapExceeded);
}

TEST(Bip, DimensionBoundedByLengthGap) {
  for (const auto& v : all_permutations(4))
    for (const auto& w : all_permutations(4))
      if (bruhat_leq(v, w)) EXPECT_LE(static_cast<int>(build_bip(v, w).affine_dim), length(w) - length(v));
}

TEST(Bip, SectionTwoFacets) {
  const auto p = build_bip(P("1243"), P("2431"));
  const auto fs = convex_hull_facets(p);
  ASSERT_EQ(fs.size(), 6u);
  const std::set<LatticeVectorN> expected{W({{1, 1}}, 3),         W({{2, 1}, {3, -1}}, 3), W({{3, 1}, {4, -1}}, 3),
                                          W({{1, -1}}, 3),        W({{1, 1}, {2, -1}}, 3), W({{1, 1}, {3, -1}}, 3)};
  EXPECT_EQ(normals(fs), expected);
  for (const auto& f : fs) {
    std::vector<IntVector> on;
    for (auto i : f.points) on.push_back(p.points[i]);
    EXPECT_EQ(affine_dimension(on), 2u);
    for (const auto& x : p.points) EXPECT_GE(Rational(pairing(f.normal, LatticeVectorM{x})), f.offset);
    for (auto i : f.points) EXPECT_EQ(Rational(pairing(f.normal, LatticeVectorM{p.points[i]})), f.offset);
  }
}

TEST(Bip, SegmentAndPoint) {
  const auto seg = build_bip(P("123"), P("213"));
  EXPECT_EQ(seg.affine_dim, 1u);
  const auto fs = convex_hull_facets(seg);
  EXPECT_EQ(fs.size(), 2u);
  const auto g = vertices_and_edges(seg, fs);
  EXPECT_EQ(g.vertices.size(), 2u);
  EXPECT_EQ(g.edges.size(), 1u);
  const auto pt = build_bip(P("123"), P("123"));
  EXPECT_TRUE(convex_hull_facets(pt).empty());
  EXPECT_TRUE(normal_fan_of(pt).rays.empty());
}

TEST(Bip, ChainFacetsMatchConstruction) {
  const auto u = P("1234");
  const auto v = u_head(u);
  const auto p = build_bip(v, v * s_range(1, 4, 5));
  const auto fs = convex_hull_facets(p);
  EXPECT_EQ(fs.size(), 8u);
  const auto vw = vectors_vw(triangulation_of_tree(psi(u)));
  std::set<LatticeVectorN> expected(vw.v.begin(), vw.v.end());
  expected.insert(vw.w.begin(), vw.w.end());
  EXPECT_EQ(normals(fs), expected);
}

TEST(Bip, VerticesEdgesAndDirections) {
  const auto p = build_bip(P("1243"), P("2431"));
  const auto fs = convex_hull_facets(p);
  const auto g = vertices_and_edges(p, fs);
  EXPECT_EQ(g.vertices.size(), 8u);
  EXPECT_EQ(g.edges.size(), 12u);
  const auto low = std::find(p.elements.begin(), p.elements.end(), P("1243")) - p.elements.begin();
  const auto high = std::find(p.elements.begin(), p.elements.end(), P("2431")) - p.elements.begin();
  const auto lo = edge_directions(p, g, low), hi = edge_directions(p, g, high);
  EXPECT_EQ(std::set<IntVector>(lo.begin(), lo.end()),
            (std::set<IntVector>{{1, -1, 0, 0}, {0, 1, -1, 0}, {0, 1, 0, -1}}));
  EXPECT_EQ(std::set<IntVector>(hi.begin(), hi.end()),
            (std::set<IntVector>{{-1, 0, 0, 1}, {0, -1, 1, 0}, {0, 0, -1, 1}}));
}

TEST(Bip, PermutohedronGraph) {
  const auto p = build_bip(P("1234"), P("4321"));
  const auto fs = convex_hull_facets(p);
  EXPECT_EQ(fs.size(), 14u);
  const auto g = vertices_and_edges(p, fs);
  EXPECT_EQ(g.vertices.size(), 24u);
  EXPECT_EQ(g.edges.size(), 36u);
  EXPECT_EQ(face_vector(p, fs, g), (std::vector<std::size_t>{24, 36, 14, 1}));
  const auto c = is_combinatorial_cube(p, fs, g);
  EXPECT_FALSE(c.valid());
  EXPECT_FALSE(c.vertex_count_ok);
}

TEST(Cube, Certificates) {
  const auto c = is_combinatorial_cube(build_bip(P("1243"), P("2431")));
  EXPECT_TRUE(c.valid());
  EXPECT_EQ(c.dim, 3u);
  EXPECT_EQ(c.opposite_pairs.size(), 3u);
  EXPECT_TRUE(is_combinatorial_cube(build_bip(P("1234"), P("2413"))).valid());
}

TEST(Cube, HypercubeLabelingRejectsOtherGraphs) {
  // 8-cycle
  std::vector<std::pair<std::size_t, std::size_t>> cycle;
  for (std::size_t i = 0; i < 8; ++i) cycle.emplace_back(i, (i + 1) % 8);
  EXPECT_FALSE(detail::hypercube_labeling(8, cycle, 3));
  // 4-cycle is the 2-cube
  std::vector<std::pair<std::size_t, std::size_t>> square{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  EXPECT_TRUE(detail::hypercube_labeling(4, square, 2));
  // Moebius ladder: 3-regular on 8 vertices with 12 edges, not a cube
  std::vector<std::pair<std::size_t, std::size_t>> moebius;
  for (std::size_t i = 0; i < 8; ++i) moebius.emplace_back(i, (i + 1) % 8);
  for (std::size_t i = 0; i < 4; ++i) moebius.emplace_back(i, i + 4);
  EXPECT_FALSE(detail::hypercube_labeling(8, moebius, 3));
}

TEST(NormalFan, SectionTwoCube) {
  const auto p = build_bip(P("1243"), P("2431"));
  const auto nf = normal_fan_of(p);
  const auto expected = build_fan(triangulation_of_tree(psi(P("132")))).rays.simplicial();
  EXPECT_EQ(ray_set(nf), ray_set(expected));
  EXPECT_EQ(cone_set(nf), cone_set(expected));
}

TEST(NormalFan, TailFormIsIsomorphic) {
  const auto u = P("21");
  const auto v = u_tail(u), w = v * s_range(2, 1, 3);
  const auto p = build_bip(v, w);
  const auto fs = convex_hull_facets(p);
  const auto c = is_combinatorial_cube(p, fs, vertices_and_edges(p, fs));
  ASSERT_TRUE(c.valid());
  const auto target = build_fan(triangulation_of_tree(psi(w0_conjugate(u))));
  EXPECT_TRUE(fan_iso_bruteforce(paired_normal_fan(fs, c), target.rays).has_value());
}

TEST(NormalFan, NegativeControl) {
  const auto p = build_bip(P("1234"), P("2413"));
  const auto fs = convex_hull_facets(p);
  const auto c = is_combinatorial_cube(p, fs, vertices_and_edges(p, fs));
  ASSERT_TRUE(c.valid());
  const std::set<LatticeVectorN> expected{W({{1, 1}}, 3),  W({{2, 1}}, 3), W({{3, 1}}, 3),
                                          W({{1, -1}}, 3), W({{1, 1}, {2, -1}, {3, 1}}, 3), W({{3, -1}}, 3)};
  EXPECT_EQ(normals(fs), expected);
  const auto fan = paired_normal_fan(fs, c);
  EXPECT_TRUE(is_smooth(fan));
  const auto fano = is_fano(fan);
  EXPECT_FALSE(fano.fano);
  bool degree_zero = false;
  for (const auto& r : primitive_relations(fan)) degree_zero = degree_zero || r.degree() == 0;
  EXPECT_TRUE(degree_zero);
}

TEST(NormalFan, LowerDimensionalCubes) {
  const auto seg = build_bip(P("123"), P("213"));
  auto fs = convex_hull_facets(seg);
  auto g = vertices_and_edges(seg, fs);
  const auto line = paired_normal_fan(seg, fs, g, is_combinatorial_cube(seg, fs, g));
  ASSERT_EQ(line.n(), 1);
  EXPECT_EQ(line.v(1).coords[0], -line.w(1).coords[0]);
  EXPECT_EQ(std::abs(line.v(1).coords[0]), 1);
  EXPECT_THROW(paired_normal_fan(fs, is_combinatorial_cube(seg, fs, g)), std::invalid_argument);

  // product of a segment, a square and a 3-cube, each with a smooth Fano fan
  const auto p = build_bip(P("173254689"), P("715326894"));
  fs = convex_hull_facets(p);
  g = vertices_and_edges(p, fs);
  const auto c = is_combinatorial_cube(p, fs, g);
  ASSERT_TRUE(c.valid());
  const auto fan = paired_normal_fan(p, fs, g, c);
  EXPECT_EQ(fan.n(), 6);
  EXPECT_TRUE(is_smooth(fan));
  EXPECT_TRUE(is_fano(fan).fano);
}

TEST(W0Map, CarriesIntervalToConjugate) {
  const auto p = build_bip(P("1243"), P("2431"));
  auto mapped = w0_polytope_map(p.points);
  auto image = build_bip(w0_conjugate(P("1243")), w0_conjugate(P("2431"))).points;
  std::sort(mapped.begin(), mapped.end());
  std::sort(image.begin(), image.end());
  EXPECT_EQ(mapped, image);
  EXPECT_EQ(w0_polytope_map(w0_polytope_map(p.points)), p.points);
  // points symmetric about the centre are fixed
  EXPECT_EQ(w0_polytope_map({{3, 2, 3, 2}}), (std::vector<IntVector>{{3, 2, 3, 2}}));
  EXPECT_EQ(w0_polytope_map({{1, 2, 3, 4}}), (std::vector<IntVector>{{1, 2, 3, 4}}));
  EXPECT_EQ(w0_polytope_map({{2, 1, 3, 4}}), (std::vector<IntVector>{{1, 2, 4, 3}}));
}

TEST(Product, ThreeFactorExample) {
  const auto v = P("173254689"), w = P("715326894");
  const auto d = product_decomposition(v, w);
  ASSERT_EQ(d.factors.size(), 3u);
  EXPECT_EQ(d.factors[0].v, P("12"));
  EXPECT_EQ(d.factors[0].w, P("21"));
  EXPECT_EQ(d.factors[1].v, P("213"));
  EXPECT_EQ(d.factors[1].w, P("321"));
  EXPECT_EQ(d.factors[2].v, P("1234"));
  EXPECT_EQ(d.factors[2].w, P("2341"));
  const auto p = build_bip(v, w);
  const auto fs = convex_hull_facets(p);
  const auto val = validate_product(p, fs, d);
  EXPECT_TRUE(val.ok());
  EXPECT_EQ(val.interval_size, 64u);
  EXPECT_EQ(val.factor_vertex_product, 2u * 4u * 8u);
  EXPECT_EQ(face_vector(p, fs, vertices_and_edges(p, fs)), (std::vector<std::size_t>{64, 192, 240, 160, 60, 12, 1}));
}

TEST(Product, SingleFactorCases) {
  const auto u = P("1234");
  const auto v = u_head(u), w = v * s_range(1, 4, 5);
  const auto d = product_decomposition(v, w);
  ASSERT_EQ(d.factors.size(), 1u);
  EXPECT_EQ(d.factors[0].v, v);
  EXPECT_EQ(d.factors[0].w, w);
  EXPECT_EQ(product_decomposition(P("12345"), P("23451")).factors.size(), 1u);
}

TEST(Product, RefusesNonProper) {
  // s1 s2 s1 s3 s4 with v = s1: s(2,1) s(3,4), adjacent
  const auto v = Permutation::simple(1, 5);
  const auto w = v * Permutation::simple(2, 5) * Permutation::simple(1, 5) * Permutation::simple(3, 5) *
                 Permutation::simple(4, 5);
  EXPECT_THROW(product_decomposition(v, w), NotProper);
  EXPECT_THROW(product_decomposition(P("1234"), P("4321")), NotProper);
}

TEST(Product, CensusRealisesEveryForest) {
  EXPECT_EQ(check_census(3), std::nullopt);
  EXPECT_EQ(check_census(4), std::nullopt);
}

TEST(Product, FaceVectorProduct) {
  EXPECT_EQ(face_vector_product({{2, 1}, {4, 4, 1}}), (std::vector<std::size_t>{8, 12, 6, 1}));
}
