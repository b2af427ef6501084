#pragma once

// Exact integer sequences: Catalan, Wedderburn-Etherington, and the
// coat-hanger series counting unordered binary forests.

#include <stdexcept>
#include <string>
#include <vector>

#include "catalan/binary_tree.hpp"
#include "catalan/exact.hpp"

namespace catalan {

/// values[i] is the term with index first_index + i.
struct BigSequence {
  int first_index = 1;
  std::vector<BigInt> values;

  const BigInt& at(int index) const {
    if (index < first_index || index - first_index >= static_cast<int>(values.size()))
      throw std::out_of_range("BigSequence index " + std::to_string(index));
    return values[index - first_index];
  }
  int last_index() const { return first_index + static_cast<int>(values.size()) - 1; }
};

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline BigInt catalan_number(int n) { return binomial(2 * n, n) / (n + 1); }

/// b_1..b_max via the split odd/even recurrence with b_1 = 1.
inline BigSequence we_numbers(int max) {
  if (max < 1) throw std::invalid_argument("we_numbers: max must be >= 1");
  std::vector<BigInt> b(max + 1);
  b[1] = 1;
  for (int n = 2; n <= max; ++n) {
    const int m = (n + 1) / 2;
    BigInt s = 0;
    if (n % 2 == 1) {
      for (int i = 1; i <= m - 1; ++i) s += b[i] * b[2 * m - i - 1];
    } else {
      s = b[m] * (b[m] + 1) / 2;
      for (int i = 1; i <= m - 1; ++i) s += b[i] * b[2 * m - i];
    }
    b[n] = s;
  }
  return {1, {b.begin() + 1, b.end()}};
}

/// f_0..f_max: coefficients of 1 / prod_{k>=1} (1 - x^k)^{b_{k+1}}, truncated at degree max.
inline BigSequence coat_hanger(int max) {
  if (max < 1) throw std::invalid_argument("coat_hanger: max must be >= 1");
  const auto b = we_numbers(max + 1);
  std::vector<BigInt> f(max + 1, 0);
  f[0] = 1;
  for (int k = 1; k <= max; ++k) {
    const BigInt c = b.at(k + 1);
    // (1 - x^k)^{-c} = sum_j binom(c+j-1, j) x^{kj}
    std::vector<BigInt> g(max / k + 1);
    g[0] = 1;
    for (int j = 1; j < static_cast<int>(g.size()); ++j) g[j] = g[j - 1] * (c + j - 1) / j;
    std::vector<BigInt> next(max + 1, 0);
    for (int d = 0; d <= max; ++d) {
      if (f[d] == 0) continue;
      for (int j = 0; d + k * j <= max; ++j) next[d + k * j] += f[d] * g[j];
    }
    f = std::move(next);
  }
  return {0, std::move(f)};
}

using Forest = std::vector<std::string>;  // canonical codes, nondecreasing

/// Every multiset of nonempty unordered binary trees with m vertices in total.
inline std::vector<Forest> enumerate_unordered_forests(int m) {
  if (m < 0) throw std::invalid_argument("enumerate_unordered_forests: negative size");
  std::vector<std::string> pool;
  for (int k = 1; k <= m; ++k)
    for (auto& c : unordered_tree_codes(k)) pool.push_back(std::move(c));
  std::sort(pool.begin(), pool.end());

  std::vector<Forest> out;
  Forest current;
  auto extend = [&](auto&& self, std::size_t from, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      const int size = static_cast<int>(pool[i].size() / 2);
      if (size > remaining) continue;
      current.push_back(pool[i]);
      self(self, i, remaining - size);
      current.pop_back();
    }
  };
  extend(extend, 0, m);
  return out;
}

}  // namespace catalan
