#pragma once

// Symmetric-group combinatorics in one-line notation.
//
// Composition convention: (x * y)(i) = x(y(i)). Right multiplication by the
// simple transposition s_i therefore swaps the entries in positions i, i+1.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace catalan {

class Permutation {
 public:
  Permutation() : values_{1} {}

  /// Takes one-line notation w(1)...w(m); throws std::invalid_argument unless it is a permutation of 1..m.
  explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("permutation must have at least one entry");
    std::vector<bool> seen(values_.size() + 1, false);
    for (int v : values_) {
      if (v < 1 || v > static_cast<int>(values_.size()) || seen[v])
        throw std::invalid_argument("not a permutation of 1..m: " + describe(values_));
      seen[v] = true;
    }
  }

  static Permutation identity(int m) {
    std::vector<int> v(m);
    for (int i = 0; i < m; ++i) v[i] = i + 1;
    return Permutation(std::move(v));
  }

  static Permutation longest(int m) {
    std::vector<int> v(m);
    for (int i = 0; i < m; ++i) v[i] = m - i;
    return Permutation(std::move(v));
  }

  /// Simple transposition s_i in S_m (1 <= i < m).
  static Permutation simple(int i, int m) { return transposition(i, i + 1, m); }

  /// Transposition t_{i,j} exchanging i and j.
  static Permutation transposition(int i, int j, int m) {
    if (i < 1 || j < 1 || i > m || j > m || i == j) throw std::invalid_argument("bad transposition indices");
    auto p = identity(m);
    std::swap(p.values_[i - 1], p.values_[j - 1]);
    return p;
  }

  /// Parses "2431" (digits, m <= 9) or "2,4,3,1".
  static Permutation parse(std::string_view text) {
    std::vector<int> v;
    if (text.find(',') != std::string_view::npos) {
      std::size_t pos = 0;
      while (pos <= text.size()) {
        const std::size_t next = std::min(text.find(',', pos), text.size());
        const auto token = text.substr(pos, next - pos);
        if (token.empty()) throw std::invalid_argument("empty entry in permutation");
        int x = 0;
        for (char c : token) {
          if (c < '0' || c > '9') throw std::invalid_argument("non-digit in permutation");
          x = x * 10 + (c - '0');
        }
        v.push_back(x);
        pos = next + 1;
      }
    } else {
      for (char c : text) {
        if (c < '1' || c > '9') throw std::invalid_argument("non-digit in permutation");
        v.push_back(c - '0');
      }
    }
    return Permutation(std::move(v));
  }

  int size() const { return static_cast<int>(values_.size()); }

  /// w(i), 1-based.
  int operator()(int i) const { return values_[i - 1]; }

  const std::vector<int>& values() const { return values_; }

  Permutation inverse() const {
    std::vector<int> inv(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) inv[values_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
  }

  friend Permutation operator*(const Permutation& x, const Permutation& y) {
    if (x.size() != y.size()) throw std::invalid_argument("composition of permutations of different sizes");
    std::vector<int> r(x.values_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = x.values_[y.values_[i] - 1];
    return Permutation(std::move(r));
  }

  /// One-line notation; digits when m <= 9, comma-separated beyond.
  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (values_.size() > 9 && i > 0) s += ',';
      s += std::to_string(values_[i]);
    }
    return s;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.values_ <=> b.values_; }

 private:
  static std::string describe(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
  }

  std::vector<int> values_;
};

/// Number of inversions.
inline int length(const Permutation& w) {
  int inv = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(i) > w(j)) ++inv;
  return inv;
}

/// Tableau criterion: sorted prefixes of v are componentwise below those of w.
inline bool bruhat_leq(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size()) throw std::invalid_argument("bruhat_leq: size mismatch");
  const int m = v.size();
  std::vector<int> pv, pw;
  pv.reserve(m);
  pw.reserve(m);
  for (int i = 1; i < m; ++i) {
    pv.insert(std::upper_bound(pv.begin(), pv.end(), v(i)), v(i));
    pw.insert(std::upper_bound(pw.begin(), pw.end(), w(i)), w(i));
    for (int k = 0; k < i; ++k)
      if (pv[k] > pw[k]) return false;
  }
  return true;
}

/// x is covered by y.
inline bool covers(const Permutation& x, const Permutation& y) {
  return length(y) == length(x) + 1 && bruhat_leq(x, y);
}

/// Every element of S_m in lexicographic order.
inline std::vector<Permutation> all_permutations(int m) {
  std::vector<Permutation> out;
  std::vector<int> v(m);
  for (int i = 0; i < m; ++i) v[i] = i + 1;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

struct BruhatInterval {
  Permutation lower;
  Permutation upper;
  std::vector<Permutation> elements;  // lexicographic
};

/// All z with v <= z <= w, found by filtering S_m. Throws std::invalid_argument when v is not below w.
inline BruhatInterval interval(const Permutation& v, const Permutation& w) {
  if (!bruhat_leq(v, w)) throw std::invalid_argument("interval: " + v.str() + " is not below " + w.str());
  BruhatInterval out{v, w, {}};
  const int lv = length(v), lw = length(w);
  std::vector<int> z(v.size());
  for (int i = 0; i < v.size(); ++i) z[i] = i + 1;
  do {
    Permutation p(z);
    const int l = length(p);
    if (l < lv || l > lw) continue;
    if (bruhat_leq(v, p) && bruhat_leq(p, w)) out.elements.push_back(std::move(p));
  } while (std::next_permutation(z.begin(), z.end()));
  return out;
}

/// û: prepend 1 and shift the rest up.
inline Permutation u_head(const Permutation& u) {
  std::vector<int> v{1};
  for (int x : u.values()) v.push_back(x + 1);
  return Permutation(std::move(v));
}

/// ǔ: append n+1.
inline Permutation u_tail(const Permutation& u) {
  std::vector<int> v = u.values();
  v.push_back(u.size() + 1);
  return Permutation(std::move(v));
}

/// s(p,q) = s_p s_{p+1} ... s_q when p <= q, s_p s_{p-1} ... s_q otherwise, in S_m.
inline Permutation s_range(int p, int q, int m) {
  if (p < 1 || q < 1 || p >= m || q >= m) throw std::invalid_argument("s_range: indices out of range");
  auto r = Permutation::identity(m);
  const int step = p <= q ? 1 : -1;
  for (int i = p;; i += step) {
    r = r * Permutation::simple(i, m);
    if (i == q) break;
  }
  return r;
}

using IndexPair = std::pair<int, int>;

/// Pairs (i,j) with û·t_{i,j} an atom of [û, û·s(1,n)].
inline std::vector<IndexPair> atoms_head(const Permutation& u) {
  const auto v = u_head(u);
  std::vector<IndexPair> out;
  for (int j = 2; j <= v.size(); ++j) {
    for (int i = j - 1; i >= 1; --i) {
      if (v(i) < v(j)) {
        out.emplace_back(i, j);
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Pairs (i,j) with w·t_{i,j} a coatom of [û, w], w = û·s(1,n).
inline std::vector<IndexPair> coatoms_head(const Permutation& u) {
  const int m = u.size() + 1;
  const auto w = u_head(u) * s_range(1, m - 1, m);
  std::vector<IndexPair> out;
  for (int i = 1; i < m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      if (w(j) < w(i)) {
        out.emplace_back(i, j);
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// The small permutation with the same pattern as the window w(p), ..., w(q+1).
inline Permutation pattern_projection(const Permutation& w, int p, int q) {
  if (p < 1 || q < p || q + 1 > w.size()) throw std::invalid_argument("pattern_projection: bad window");
  std::vector<int> window(w.values().begin() + (p - 1), w.values().begin() + q + 1);
  std::vector<int> sorted = window;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  for (int x : window)
    out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin()) + 1);
  return Permutation(std::move(out));
}

/// (w0 z w0)(i) = m+1 - z(m+1-i).
inline Permutation w0_conjugate(const Permutation& z) {
  const int m = z.size();
  std::vector<int> out(m);
  for (int i = 1; i <= m; ++i) out[i - 1] = m + 1 - z(m + 1 - i);
  return Permutation(std::move(out));
}

/// A reduced word i_1 ... i_l with z = s_{i_1} ... s_{i_l}.
inline std::vector<int> reduced_word(const Permutation& z) {
  std::vector<int> v = z.values();
  std::vector<int> rev;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] > v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        rev.push_back(static_cast<int>(i) + 1);
        changed = true;
      }
    }
  }
  return {rev.rbegin(), rev.rend()};
}

struct SweepBlock {
  int p;
  int q;
  int lo() const { return std::min(p, q); }
  int hi() const { return std::max(p, q); }
  friend bool operator==(const SweepBlock&, const SweepBlock&) = default;
};

struct SweepDecomposition {
  bool found = false;
  std::vector<SweepBlock> blocks;
  bool proper = false;
  int r() const { return static_cast<int>(blocks.size()); }
};

namespace detail {

// Greedy split of a word into maximal runs i, i+1, ... or i, i-1, ....
inline std::vector<SweepBlock> segment_runs(const std::vector<int>& word) {
  std::vector<SweepBlock> blocks;
  std::size_t i = 0;
  while (i < word.size()) {
    std::size_t j = i + 1;
    if (j < word.size() && std::abs(word[j] - word[i]) == 1) {
      const int step = word[j] - word[i];
      while (j < word.size() && word[j] - word[j - 1] == step) ++j;
    }
    blocks.push_back({word[i], word[j - 1]});
    i = j;
  }
  return blocks;
}

inline bool intervals_proper(std::vector<SweepBlock> blocks) {
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.lo() < b.lo(); });
  for (std::size_t i = 1; i < blocks.size(); ++i)
    if (blocks[i].lo() - blocks[i - 1].hi() < 2) return false;
  return true;
}

}  // namespace detail

/// Minimal factorisation of s_{i_1}...s_{i_m} (distinct letters) into sweeps s(p,q),
/// searched breadth-first over the commutation class of the word.
inline SweepDecomposition sweep_decomposition(const std::vector<int>& word) {
  {
    std::set<int> distinct(word.begin(), word.end());
    if (distinct.size() != word.size()) throw std::invalid_argument("sweep_decomposition: letters must be distinct");
    if (!word.empty() && *distinct.begin() < 1) throw std::invalid_argument("sweep_decomposition: indices start at 1");
  }
  SweepDecomposition best;
  if (word.empty()) {
    best.found = true;
    best.proper = true;
    return best;
  }
  std::set<std::vector<int>> seen{word};
  std::deque<std::vector<int>> queue{word};
  while (!queue.empty()) {
    auto current = std::move(queue.front());
    queue.pop_front();
    auto blocks = detail::segment_runs(current);
    if (!best.found || blocks.size() < best.blocks.size()) {
      best.found = true;
      best.blocks = std::move(blocks);
    }
    for (std::size_t i = 0; i + 1 < current.size(); ++i) {
      if (std::abs(current[i] - current[i + 1]) < 2) continue;
      auto next = current;
      std::swap(next[i], next[i + 1]);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  best.proper = detail::intervals_proper(best.blocks);
  return best;
}

}  // namespace catalan
