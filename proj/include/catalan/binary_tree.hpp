#pragma once

// Ordered rooted binary trees with optional vertex labels, and their
// unordered isomorphism classes.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "catalan/exact.hpp"
#include "catalan/permutation.hpp"

namespace catalan {

struct TreeNode;

/// Immutable value type; subtrees are shared between copies.
class BinaryTree {
 public:
  BinaryTree() = default;

  static BinaryTree node(std::optional<int> label, BinaryTree left = {}, BinaryTree right = {});
  static BinaryTree leaf(std::optional<int> label = std::nullopt) { return node(label); }

  bool empty() const { return !root_; }
  const TreeNode& root() const;
  std::size_t size() const;

  friend bool operator==(const BinaryTree& a, const BinaryTree& b);

 private:
  std::shared_ptr<const TreeNode> root_;
};

struct TreeNode {
  std::optional<int> label;
  BinaryTree left;
  BinaryTree right;
  std::size_t size = 1;
};

inline BinaryTree BinaryTree::node(std::optional<int> label, BinaryTree left, BinaryTree right) {
  BinaryTree t;
  const std::size_t sz = 1 + left.size() + right.size();
  t.root_ = std::make_shared<const TreeNode>(TreeNode{label, std::move(left), std::move(right), sz});
  return t;
}

inline const TreeNode& BinaryTree::root() const {
  if (!root_) throw std::logic_error("root() of empty tree");
  return *root_;
}

inline std::size_t BinaryTree::size() const { return root_ ? root_->size : 0; }

inline bool operator==(const BinaryTree& a, const BinaryTree& b) {
  if (a.empty() || b.empty()) return a.empty() == b.empty();
  if (a.root_ == b.root_) return true;
  const auto& x = a.root();
  const auto& y = b.root();
  return x.size == y.size && x.label == y.label && x.left == y.left && x.right == y.right;
}

/// Labels in in-order traversal.
inline std::vector<int> inorder_labels(const BinaryTree& t) {
  std::vector<int> out;
  auto walk = [&](auto&& self, const BinaryTree& s) -> void {
    if (s.empty()) return;
    self(self, s.root().left);
    if (s.root().label) out.push_back(*s.root().label);
    self(self, s.root().right);
  };
  walk(walk, t);
  return out;
}

/// Relabels the vertices 1..n in in-order (binary-search-tree order).
inline BinaryTree label_inorder(const BinaryTree& t) {
  int next = 1;
  auto build = [&](auto&& self, const BinaryTree& s) -> BinaryTree {
    if (s.empty()) return {};
    auto left = self(self, s.root().left);
    const int label = next++;
    auto right = self(self, s.root().right);
    return BinaryTree::node(label, std::move(left), std::move(right));
  };
  return build(build, t);
}

inline BinaryTree strip_labels(const BinaryTree& t) {
  if (t.empty()) return {};
  return BinaryTree::node(std::nullopt, strip_labels(t.root().left), strip_labels(t.root().right));
}

inline BinaryTree mirror(const BinaryTree& t) {
  if (t.empty()) return {};
  return BinaryTree::node(t.root().label, mirror(t.root().right), mirror(t.root().left));
}

/// Minimum of the one-line notation is the root; entries left/right of it build the subtrees.
/// Vertex labels are positions 1..n.
inline BinaryTree psi(const Permutation& u) {
  auto build = [&](auto&& self, int lo, int hi) -> BinaryTree {
    if (lo > hi) return {};
    int pos = lo;
    for (int i = lo + 1; i <= hi; ++i)
      if (u(i) < u(pos)) pos = i;
    return BinaryTree::node(pos, self(self, lo, pos - 1), self(self, pos + 1, hi));
  };
  return build(build, 1, u.size());
}

/// "(" + sorted child codes + ")"; the empty tree encodes as "".
inline std::string canonical_code(const BinaryTree& t) {
  if (t.empty()) return "";
  std::string a = canonical_code(t.root().left);
  std::string b = canonical_code(t.root().right);
  if (b < a) std::swap(a, b);
  return "(" + a + b + ")";
}

inline bool unordered_iso(const BinaryTree& a, const BinaryTree& b) {
  return canonical_code(a) == canonical_code(b);
}

/// All C_n unlabeled ordered trees with n vertices. Order: by left-subtree size, then recursively.
inline std::vector<BinaryTree> enumerate_ordered_trees(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_ordered_trees: negative size");
  std::vector<std::vector<BinaryTree>> by_size(n + 1);
  by_size[0] = {BinaryTree{}};
  for (int s = 1; s <= n; ++s)
    for (int left = 0; left < s; ++left)
      for (const auto& l : by_size[left])
        for (const auto& r : by_size[s - 1 - left]) by_size[s].push_back(BinaryTree::node(std::nullopt, l, r));
  return by_size[n];
}

/// Canonical codes of unordered binary trees with n vertices, sorted.
inline std::vector<std::string> unordered_tree_codes(int n) {
  std::set<std::string> codes;
  for (const auto& t : enumerate_ordered_trees(n)) codes.insert(canonical_code(t));
  return {codes.begin(), codes.end()};
}

inline BigInt count_unordered(int n) { return BigInt(unordered_tree_codes(n).size()); }

/// Compact single-line rendering, e.g. "2(1,7(6(3(,5(4,)),),8))".
inline std::string to_string(const BinaryTree& t) {
  if (t.empty()) return "";
  const auto& r = t.root();
  std::string s = r.label ? std::to_string(*r.label) : "*";
  if (r.left.empty() && r.right.empty()) return s;
  return s + "(" + to_string(r.left) + "," + to_string(r.right) + ")";
}

}  // namespace catalan
