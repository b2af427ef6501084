#include <gtest/gtest.h>

#include <set>

#include "catalan/binary_tree.hpp"
#include "catalan/sequences.hpp"

using namespace catalan;

namespace {

BigInt catalan_by_product(int n) {
  // C_n = prod_{k=2}^{n} (n+k)/k
  BigInt num = 1, den = 1;
  for (int k = 2; k <= n; ++k) {
    num *= n + k;
    den *= k;
  }
  return num / den;
}

// Euler transform of c_k = b_{k+1}: a_n = (1/n) sum_{k=1}^n (sum_{d|k} d c_d) a_{n-k}.
std::vector<BigInt> euler_transform(const BigSequence& b, int max) {
  std::vector<BigInt> a(max + 1, 0), s(max + 1, 0);
  a[0] = 1;
  for (int k = 1; k <= max; ++k)
    for (int d = 1; d <= k; ++d)
      if (k % d == 0) s[k] += d * b.at(d + 1);
  for (int n = 1; n <= max; ++n) {
    BigInt t = 0;
    for (int k = 1; k <= n; ++k) t += s[k] * a[n - k];
    a[n] = t / n;
  }
  return a;
}

}  // namespace

TEST(Sequences, CatalanNumbers) {
  for (int n = 0; n <= 20; ++n) EXPECT_EQ(catalan_number(n), catalan_by_product(n)) << n;
  EXPECT_EQ(catalan_number(10), 16796);
}

TEST(Sequences, WedderburnEtheringtonTable) {
  const std::vector<int> table{1, 1, 1, 2, 3, 6, 11, 23, 46, 98, 207, 451, 983, 2179, 4850};
  const auto b = we_numbers(15);
  EXPECT_EQ(b.first_index, 1);
  for (int n = 1; n <= 15; ++n) EXPECT_EQ(b.at(n), table[n - 1]) << n;
  EXPECT_EQ(we_numbers(1).values.size(), 1u);
  EXPECT_THROW(we_numbers(0), std::invalid_argument);
}

TEST(Sequences, WedderburnEtheringtonCountsUnorderedTrees) {
  const auto b = we_numbers(11);
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(count_unordered(n), b.at(n + 1)) << n;
}

TEST(Sequences, CoatHangerTable) {
  const std::vector<int> table{1, 2, 4, 8, 16, 34, 71, 153, 332, 730, 1617, 3620, 8148, 18473};
  const auto f = coat_hanger(14);
  EXPECT_EQ(f.first_index, 0);
  EXPECT_EQ(f.at(0), 1);
  for (int m = 1; m <= 14; ++m) EXPECT_EQ(f.at(m), table[m - 1]) << m;
}

TEST(Sequences, CoatHangerMatchesEulerTransform) {
  const int max = 40;
  const auto f = coat_hanger(max);
  const auto a = euler_transform(we_numbers(max + 1), max);
  for (int m = 0; m <= max; ++m) EXPECT_EQ(f.at(m), a[m]) << m;
}

TEST(Sequences, ForestEnumerationMatchesSeries) {
  const auto f = coat_hanger(9);
  for (int m = 0; m <= 9; ++m) EXPECT_EQ(BigInt(enumerate_unordered_forests(m).size()), f.at(m)) << m;
}

TEST(Trees, OrderedCountIsCatalan) {
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(BigInt(enumerate_ordered_trees(n).size()), catalan_number(n)) << n;
}

TEST(Trees, CanonicalCodeIgnoresMirror) {
  for (int n = 0; n <= 8; ++n)
    for (const auto& t : enumerate_ordered_trees(n)) EXPECT_EQ(canonical_code(t), canonical_code(mirror(t)));
}

TEST(Trees, UnorderedIsoDistinguishesShapes) {
  const auto path = BinaryTree::node(std::nullopt, BinaryTree::leaf(), {});
  const auto path2 = BinaryTree::node(std::nullopt, {}, BinaryTree::leaf());
  const auto chain3 = BinaryTree::node(std::nullopt, path, {});
  const auto cherry = BinaryTree::node(std::nullopt, BinaryTree::leaf(), BinaryTree::leaf());
  EXPECT_TRUE(unordered_iso(path, path2));
  EXPECT_FALSE(path == path2);
  EXPECT_FALSE(unordered_iso(chain3, cherry));
  EXPECT_EQ(canonical_code(BinaryTree{}), "");
  EXPECT_EQ(canonical_code(cherry), "(()())");
}

TEST(Trees, PsiOfFigureEight) {
  const auto t = psi(Permutation::parse("31687524"));
  const auto& r = t.root();
  EXPECT_EQ(r.label, 2);
  EXPECT_EQ(r.left.root().label, 1);
  EXPECT_EQ(r.right.root().label, 7);
  const auto& seven = r.right.root();
  EXPECT_EQ(seven.left.root().label, 6);
  EXPECT_EQ(seven.right.root().label, 8);
  const auto& six = seven.left.root();
  EXPECT_EQ(six.left.root().label, 3);
  EXPECT_TRUE(six.right.empty());
  const auto& three = six.left.root();
  EXPECT_TRUE(three.left.empty());
  EXPECT_EQ(three.right.root().label, 5);
  EXPECT_EQ(three.right.root().left.root().label, 4);
  EXPECT_EQ(inorder_labels(t), (std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8}));
}

TEST(Trees, PsiSmallCases) {
  EXPECT_EQ(to_string(psi(Permutation::parse("1"))), "1");
  EXPECT_EQ(to_string(psi(Permutation::parse("132"))), "1(,3(2,))");
  EXPECT_EQ(to_string(psi(Permutation::parse("213"))), "2(1,3)");
}

TEST(Trees, PsiIsSurjective) {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::string> shapes;
    for (const auto& u : all_permutations(n)) shapes.insert(to_string(strip_labels(psi(u))));
    std::set<std::string> all;
    for (const auto& t : enumerate_ordered_trees(n)) all.insert(to_string(t));
    EXPECT_EQ(shapes, all) << n;
  }
}

TEST(Trees, LabelInorder) {
  for (const auto& t : enumerate_ordered_trees(6)) {
    const auto l = label_inorder(t);
    EXPECT_EQ(inorder_labels(l), (std::vector<int>{1, 2, 3, 4, 5, 6}));
    EXPECT_TRUE(strip_labels(l) == t);
  }
}
