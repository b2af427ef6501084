#pragma once

// Triangulations of the convex (n+2)-gon with vertices 0..n+1, their
// left/right trees, and the lattice vectors attached to each triangle.
//
// N = Z^{n+1} / Z(1,...,1) is written in the basis varpi_1..varpi_n with
// varpi_i the image of e_1 + ... + e_i (varpi_0 = varpi_{n+1} = 0).
// M is the sum-zero sublattice of Z^{n+1}.

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "catalan/binary_tree.hpp"
#include "catalan/exact.hpp"

namespace catalan {

class MalformedTriangulation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct LatticeVectorN {
  IntVector coords;  // varpi-coordinates, length n
  friend bool operator==(const LatticeVectorN&, const LatticeVectorN&) = default;
  friend auto operator<=>(const LatticeVectorN&, const LatticeVectorN&) = default;
};

struct LatticeVectorM {
  IntVector coords;  // length n+1, entries sum to zero
  friend bool operator==(const LatticeVectorM&, const LatticeVectorM&) = default;
  friend auto operator<=>(const LatticeVectorM&, const LatticeVectorM&) = default;
};

/// varpi_i in N for rank n; zero for i = 0 and i = n+1.
inline LatticeVectorN varpi(int i, int n) {
  LatticeVectorN v{IntVector(n, 0)};
  if (i >= 1 && i <= n) v.coords[i - 1] = 1;
  return v;
}

inline LatticeVectorN operator+(const LatticeVectorN& a, const LatticeVectorN& b) { return {add(a.coords, b.coords)}; }
inline LatticeVectorN operator-(const LatticeVectorN& a, const LatticeVectorN& b) { return {sub(a.coords, b.coords)}; }
inline LatticeVectorN operator-(const LatticeVectorN& a) { return {negate(a.coords)}; }

/// Quotient map Z^{n+1} -> N: c_i = x_i - x_{i+1}.
inline LatticeVectorN to_varpi(const IntVector& representative) {
  LatticeVectorN v{IntVector(representative.size() - 1)};
  for (std::size_t i = 0; i + 1 < representative.size(); ++i)
    v.coords[i] = checked_sub(representative[i], representative[i + 1]);
  return v;
}

/// Representative in Z^{n+1} with last coordinate 0.
inline IntVector from_varpi(const LatticeVectorN& v) {
  const std::size_t n = v.coords.size();
  IntVector x(n + 1, 0);
  for (std::size_t j = n; j-- > 0;) x[j] = checked_add(x[j + 1], v.coords[j]);
  return x;
}

/// e_a - e_b in Z^{m}, 1-based.
inline LatticeVectorM e_diff(int a, int b, int m) {
  LatticeVectorM v{IntVector(m, 0)};
  v.coords[a - 1] += 1;
  v.coords[b - 1] -= 1;
  return v;
}

/// Dot-product pairing N x M -> Z.
inline std::int64_t pairing(const LatticeVectorN& a, const LatticeVectorM& b) {
  if (b.coords.size() != a.coords.size() + 1) throw std::invalid_argument("pairing: incompatible ranks");
  __int128 s = 0, prefix = 0;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    prefix += b.coords[i];
    s += static_cast<__int128>(a.coords[i]) * prefix;
  }
  return narrow_checked(s);
}

using Edge = std::pair<int, int>;  // a < b

class Triangulation {
 public:
  /// Validates and sorts; throws MalformedTriangulation.
  Triangulation(int n, std::vector<Edge> diagonals) : n_(n), diagonals_(std::move(diagonals)) {
    if (n_ < 1) throw MalformedTriangulation("triangulation needs n >= 1");
    for (auto& [a, b] : diagonals_) {
      if (a > b) std::swap(a, b);
      if (a < 0 || b > n_ + 1 || b <= a + 1 || (a == 0 && b == n_ + 1))
        throw MalformedTriangulation("not a diagonal of the " + std::to_string(n_ + 2) + "-gon: {" +
                                     std::to_string(a) + "," + std::to_string(b) + "}");
    }
    std::sort(diagonals_.begin(), diagonals_.end());
    if (std::adjacent_find(diagonals_.begin(), diagonals_.end()) != diagonals_.end())
      throw MalformedTriangulation("duplicate diagonal");
    if (static_cast<int>(diagonals_.size()) != n_ - 1)
      throw MalformedTriangulation("expected " + std::to_string(n_ - 1) + " diagonals, got " +
                                   std::to_string(diagonals_.size()));
    for (std::size_t i = 0; i < diagonals_.size(); ++i)
      for (std::size_t j = i + 1; j < diagonals_.size(); ++j)
        if (cross(diagonals_[i], diagonals_[j])) throw MalformedTriangulation("crossing diagonals");
  }

  int n() const { return n_; }
  const std::vector<Edge>& diagonals() const { return diagonals_; }

  /// Boundary edge, the distinguished edge {0,n+1}, or a diagonal.
  bool has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    if (b == a + 1 || (a == 0 && b == n_ + 1)) return true;
    return std::binary_search(diagonals_.begin(), diagonals_.end(), Edge{a, b});
  }

  friend bool operator==(const Triangulation&, const Triangulation&) = default;
  friend auto operator<=>(const Triangulation&, const Triangulation&) = default;

 private:
  static bool cross(Edge x, Edge y) {
    return (x.first < y.first && y.first < x.second && x.second < y.second) ||
           (y.first < x.first && x.first < y.second && y.second < x.second);
  }

  int n_;
  std::vector<Edge> diagonals_;
};

struct MiddleTriple {
  int k_left;
  int k;
  int k_right;
  friend bool operator==(const MiddleTriple&, const MiddleTriple&) = default;
};

/// The n triangles as 3-cliques of the edge graph, indexed by middle vertex (entry k-1).
inline std::vector<MiddleTriple> triangles_of(const Triangulation& t) {
  const int n = t.n();
  std::vector<MiddleTriple> out(n, MiddleTriple{-1, -1, -1});
  int found = 0;
  for (int a = 0; a <= n + 1; ++a)
    for (int b = a + 1; b <= n + 1; ++b) {
      if (!t.has_edge(a, b)) continue;
      for (int c = b + 1; c <= n + 1; ++c) {
        if (!t.has_edge(b, c) || !t.has_edge(a, c)) continue;
        if (out[b - 1].k != -1) throw MalformedTriangulation("two triangles share a middle vertex");
        out[b - 1] = {a, b, c};
        ++found;
      }
    }
  if (found != n) throw MalformedTriangulation("expected " + std::to_string(n) + " triangles");
  return out;
}

inline std::vector<Edge> left_tree(const Triangulation& t) {
  std::vector<Edge> e;
  for (const auto& tr : triangles_of(t)) e.emplace_back(tr.k_left, tr.k);
  std::sort(e.begin(), e.end());
  return e;
}

inline std::vector<Edge> right_tree(const Triangulation& t) {
  std::vector<Edge> e;
  for (const auto& tr : triangles_of(t)) e.emplace_back(tr.k, tr.k_right);
  std::sort(e.begin(), e.end());
  return e;
}

/// Binary tree rooted at the triangle on {0, n+1}; vertices labeled by middle vertex.
inline BinaryTree tree_of_triangulation(const Triangulation& t) {
  std::map<Edge, int> middle;
  for (const auto& tr : triangles_of(t)) middle[{tr.k_left, tr.k_right}] = tr.k;
  auto build = [&](auto&& self, int lo, int hi) -> BinaryTree {
    if (hi == lo + 1) return {};
    const int k = middle.at({lo, hi});
    return BinaryTree::node(k, self(self, lo, k), self(self, k, hi));
  };
  return build(build, 0, t.n() + 1);
}

/// Inverse of tree_of_triangulation. Labels must be 1..n in in-order; use label_inorder() for shapes.
inline Triangulation triangulation_of_tree(const BinaryTree& b) {
  if (b.empty()) throw std::invalid_argument("triangulation_of_tree: empty tree");
  const int n = static_cast<int>(b.size());
  const auto labels = inorder_labels(b);
  if (static_cast<int>(labels.size()) != n) throw std::invalid_argument("triangulation_of_tree: unlabeled vertex");
  for (int i = 0; i < n; ++i)
    if (labels[i] != i + 1) throw std::invalid_argument("triangulation_of_tree: labels are not 1..n in in-order");
  std::vector<Edge> diagonals;
  auto note = [&](int a, int c) {
    if (c > a + 1 && !(a == 0 && c == n + 1)) diagonals.emplace_back(a, c);
  };
  auto build = [&](auto&& self, int lo, int hi, const BinaryTree& s) -> void {
    if (s.empty()) return;
    const int k = *s.root().label;
    note(lo, k);
    note(k, hi);
    self(self, lo, k, s.root().left);
    self(self, k, hi, s.root().right);
  };
  build(build, 0, n + 1, b);
  std::sort(diagonals.begin(), diagonals.end());
  diagonals.erase(std::unique(diagonals.begin(), diagonals.end()), diagonals.end());
  return Triangulation(n, std::move(diagonals));
}

/// All C_n triangulations, in the order of enumerate_ordered_trees(n).
inline std::vector<Triangulation> enumerate_triangulations(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_triangulations: n must be >= 1");
  std::vector<Triangulation> out;
  for (const auto& shape : enumerate_ordered_trees(n)) out.push_back(triangulation_of_tree(label_inorder(shape)));
  return out;
}

struct PQVectors {
  std::vector<LatticeVectorM> p;  // p_k = e_{k_L+1} - e_{k+1}
  std::vector<LatticeVectorM> q;  // q_k = -e_k + e_{k_R}
};

inline PQVectors vectors_pq(const Triangulation& t) {
  const int m = t.n() + 1;
  PQVectors out;
  for (const auto& tr : triangles_of(t)) {
    out.p.push_back(e_diff(tr.k_left + 1, tr.k + 1, m));
    out.q.push_back(e_diff(tr.k_right, tr.k, m));
  }
  return out;
}

struct VWVectors {
  std::vector<LatticeVectorN> v;  // v_k = varpi_k - varpi_{k_R}
  std::vector<LatticeVectorN> w;  // w_k = varpi_{k_L} - varpi_k
};

inline VWVectors vectors_vw(const Triangulation& t) {
  const int n = t.n();
  VWVectors out;
  for (const auto& tr : triangles_of(t)) {
    out.v.push_back(varpi(tr.k, n) - varpi(tr.k_right, n));
    out.w.push_back(varpi(tr.k_left, n) - varpi(tr.k, n));
  }
  return out;
}

enum class Sign { none, plus, minus };

struct PhiSigma {
  int k0 = 0;
  std::vector<int> phi;     // entry k-1; 0 at k0
  std::vector<Sign> sigma;  // entry k-1; none at k0
};

/// phi(k) = k_L with sign + when {k_L, k_R} lies in the right tree, k_R with sign - when in the left tree.
inline PhiSigma phi_sigma(const Triangulation& t) {
  const auto triples = triangles_of(t);
  const int n = t.n();
  PhiSigma out{0, std::vector<int>(n, 0), std::vector<Sign>(n, Sign::none)};
  for (const auto& tr : triples) {
    if (tr.k_left == 0 && tr.k_right == n + 1) {
      out.k0 = tr.k;
      continue;
    }
    const bool in_right = tr.k_left >= 1 && triples[tr.k_left - 1].k_right == tr.k_right;
    const bool in_left = tr.k_right <= n && triples[tr.k_right - 1].k_left == tr.k_left;
    if (in_right == in_left) throw std::logic_error("phi_sigma: edge {k_L,k_R} not in exactly one tree");
    out.phi[tr.k - 1] = in_right ? tr.k_left : tr.k_right;
    out.sigma[tr.k - 1] = in_right ? Sign::plus : Sign::minus;
  }
  return out;
}

/// Labeled tree rooted at k0: k hangs off phi(k), as the left child when sigma(k) = - and the right child when +.
inline BinaryTree tree_from_phi_sigma(const PhiSigma& ps) {
  const int n = static_cast<int>(ps.phi.size());
  std::vector<int> left(n + 1, 0), right(n + 1, 0);
  for (int k = 1; k <= n; ++k) {
    if (k == ps.k0) continue;
    auto& slot = ps.sigma[k - 1] == Sign::minus ? left[ps.phi[k - 1]] : right[ps.phi[k - 1]];
    if (slot != 0) throw std::logic_error("tree_from_phi_sigma: two children on the same side");
    slot = k;
  }
  std::size_t built = 0;
  auto build = [&](auto&& self, int k) -> BinaryTree {
    if (k == 0) return {};
    if (++built > static_cast<std::size_t>(n)) throw std::logic_error("tree_from_phi_sigma: cycle");
    return BinaryTree::node(k, self(self, left[k]), self(self, right[k]));
  };
  auto tree = build(build, ps.k0);
  if (tree.size() != static_cast<std::size_t>(n)) throw std::logic_error("tree_from_phi_sigma: not connected");
  return tree;
}

}  // namespace catalan
