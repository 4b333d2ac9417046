#pragma once

// Brute-force reference implementations. None of these touch the library's
// search code; they work from explicit part labels and edge lists.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

namespace oracle {

using Lists = std::vector<std::vector<int>>;
using Edge = std::vector<int>;

/// part label per vertex, parts laid out consecutively
inline std::vector<int> part_labels(const std::vector<int>& parts) {
  std::vector<int> label;
  for (std::size_t i = 0; i < parts.size(); ++i) label.insert(label.end(), static_cast<std::size_t>(parts[i]), static_cast<int>(i));
  return label;
}

inline void for_each_combination(int n, int r, const std::function<void(const std::vector<int>&)>& fn) {
  if (r > n || r < 0) return;
  std::vector<int> idx(static_cast<std::size_t>(r));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    int i = r - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j) - 1] + 1;
  }
}

/// Edges of the complete multipartite hypergraph: r-sets meeting two parts.
inline std::vector<Edge> multipartite_edges(int r, const std::vector<int>& parts) {
  const auto label = part_labels(parts);
  std::vector<Edge> edges;
  for_each_combination(static_cast<int>(label.size()), r, [&](const std::vector<int>& s) {
    for (int v : s)
      if (label[static_cast<std::size_t>(v)] != label[static_cast<std::size_t>(s[0])]) {
        edges.push_back(s);
        return;
      }
  });
  return edges;
}

inline bool proper(const std::vector<Edge>& edges, const std::vector<int>& f) {
  for (const auto& e : edges) {
    bool mono = true;
    for (int v : e) mono = mono && f[static_cast<std::size_t>(v)] == f[static_cast<std::size_t>(e[0])];
    if (mono) return false;
  }
  return true;
}

/// Odometer over a product of choice lists.
inline bool for_each_choice(const Lists& choices, const std::function<bool(const std::vector<int>&)>& fn) {
  const std::size_t n = choices.size();
  for (const auto& c : choices)
    if (c.empty()) return true;
  std::vector<std::size_t> idx(n, 0);
  std::vector<int> cur(n);
  for (std::size_t i = 0; i < n; ++i) cur[i] = choices[i][0];
  while (true) {
    if (!fn(cur)) return false;
    std::size_t i = 0;
    while (i < n && ++idx[i] == choices[i].size()) {
      idx[i] = 0;
      cur[i] = choices[i][0];
      ++i;
    }
    if (i == n) return true;
    cur[i] = choices[i][idx[i]];
  }
}

inline bool list_colorable(int n, const std::vector<Edge>& edges, const Lists& lists) {
  if (n == 0) return true;
  bool found = false;
  for_each_choice(lists, [&](const std::vector<int>& f) {
    found = proper(edges, f);
    return !found;
  });
  return found;
}

inline int chromatic_number(int n, const std::vector<Edge>& edges) {
  for (int k = 1; k <= n; ++k) {
    Lists all(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(k)));
    for (auto& l : all) std::iota(l.begin(), l.end(), 0);
    if (list_colorable(n, edges, all)) return k;
  }
  return 0;
}

/// Every vertex subset X satisfies (r-1)|L(X)| >= |X|.
inline bool hall_condition(const Lists& lists, int r) {
  const int n = static_cast<int>(lists.size());
  for (std::uint64_t x = 1; x < (std::uint64_t{1} << n); ++x) {
    std::set<int> u;
    int size = 0;
    for (int v = 0; v < n; ++v)
      if (x >> v & 1) {
        ++size;
        u.insert(lists[static_cast<std::size_t>(v)].begin(), lists[static_cast<std::size_t>(v)].end());
      }
    if (static_cast<long long>(r - 1) * static_cast<long long>(u.size()) < size) return false;
  }
  return true;
}

/// Fewest colours whose classes induce subgraphs of maximum degree <= d.
inline int improper_chromatic_number(int n, const std::vector<std::pair<int, int>>& edges, int d) {
  if (n == 0) return 0;
  for (int k = 1; k <= n; ++k) {
    Lists all(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(k)));
    for (auto& l : all) std::iota(l.begin(), l.end(), 0);
    bool ok = false;
    for_each_choice(all, [&](const std::vector<int>& f) {
      std::vector<int> deg(static_cast<std::size_t>(n), 0);
      for (auto [u, v] : edges)
        if (f[static_cast<std::size_t>(u)] == f[static_cast<std::size_t>(v)]) {
          ++deg[static_cast<std::size_t>(u)];
          ++deg[static_cast<std::size_t>(v)];
        }
      ok = *std::max_element(deg.begin(), deg.end()) <= d;
      return !ok;
    });
    if (ok) return k;
  }
  return n;
}

/// Same edge set up to a vertex relabeling.
inline bool isomorphic(int n, std::vector<Edge> a, std::vector<Edge> b) {
  if (a.size() != b.size()) return false;
  for (auto& e : b) std::sort(e.begin(), e.end());
  const std::set<Edge> target(b.begin(), b.end());
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    bool all = true;
    for (const auto& e : a) {
      Edge img;
      for (int v : e) img.push_back(p[static_cast<std::size_t>(v)]);
      std::sort(img.begin(), img.end());
      if (!target.count(img)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// All k-subsets of {0..m-1}.
inline Lists k_subsets(int m, int k) {
  Lists out;
  for_each_combination(m, k, [&](const std::vector<int>& s) { out.push_back(s); });
  return out;
}

/// ceil(n / (r-1)) - 1, computed by counting.
inline int small_universe(int n, int r) {
  int m = 0;
  while ((m + 1) * (r - 1) < n) ++m;
  return m;
}

inline double power(double b, int e) {
  double x = 1;
  for (int i = 0; i < e; ++i) x *= b;
  return x;
}

/// Enumerates every k-list assignment over {0..m-1} and brute-forces each.
/// Returns true iff all are colourable. Only for small raw spaces.
inline bool naive_choosable(int n, const std::vector<Edge>& edges, int k, int m) {
  if (m < k) return true;
  const Lists subsets = k_subsets(m, k);
  Lists index_choices(static_cast<std::size_t>(n), std::vector<int>(subsets.size()));
  for (auto& c : index_choices) std::iota(c.begin(), c.end(), 0);
  return for_each_choice(index_choices, [&](const std::vector<int>& pick) {
    Lists l;
    for (int i : pick) l.push_back(subsets[static_cast<std::size_t>(i)]);
    return list_colorable(n, edges, l);
  });
}

/// Exhaustive over the same space as naive_choosable, organized as a
/// memoized game: lists are fixed vertex by vertex, and the state is the set
/// of proper colourings still compatible with the lists chosen so far,
/// projected onto the remaining vertices. Some assignment is uncolourable
/// iff some sequence of choices empties the state.
class ChoosabilityDp {
 public:
  ChoosabilityDp(int n, const std::vector<Edge>& edges, int k, int m)
      : n_(n), k_(k), m_(m), subsets_(m >= k ? k_subsets(m, k) : Lists{}) {
    if (m < k || n == 0) return;
    // Index of a colouring: f(0) is most significant, base m.
    std::vector<char> state(static_cast<std::size_t>(power(m, n)), 0);
    Lists all(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(m)));
    for (auto& l : all) std::iota(l.begin(), l.end(), 0);
    std::size_t index = 0;
    // for_each_choice varies vertex 0 fastest; recompute the index directly.
    for_each_choice(all, [&](const std::vector<int>& f) {
      if (proper(edges, f)) {
        index = 0;
        for (int v = 0; v < n; ++v) index = index * static_cast<std::size_t>(m) + static_cast<std::size_t>(f[static_cast<std::size_t>(v)]);
        state[index] = 1;
      }
      return true;
    });
    memo_.resize(static_cast<std::size_t>(n));
    choosable_ = !can_empty(0, state);
  }

  bool choosable() const { return choosable_; }

 private:
  bool can_empty(int level, const std::vector<char>& state) {
    if (std::none_of(state.begin(), state.end(), [](char c) { return c != 0; })) return true;
    if (level == n_) return false;
    const std::size_t block = state.size() / static_cast<std::size_t>(m_);
    const bool memoize = n_ - level >= 3;
    std::string key;
    if (memoize) {
      key.assign((state.size() + 7) / 8, '\0');
      for (std::size_t i = 0; i < state.size(); ++i)
        if (state[i]) key[i / 8] = static_cast<char>(key[i / 8] | (1 << (i % 8)));
      if (memo_[static_cast<std::size_t>(level)].count(key)) return false;
    }
    std::vector<char> next(block);
    for (const auto& list : subsets_) {
      std::fill(next.begin(), next.end(), 0);
      for (int c : list)
        for (std::size_t i = 0; i < block; ++i) next[i] = static_cast<char>(next[i] | state[static_cast<std::size_t>(c) * block + i]);
      if (can_empty(level + 1, next)) return true;
    }
    if (memoize) memo_[static_cast<std::size_t>(level)].insert(std::move(key));
    return false;
  }

  int n_;
  int k_;
  int m_;
  Lists subsets_;
  std::vector<std::unordered_set<std::string>> memo_;
  bool choosable_ = true;
};

/// Every weakly decreasing shape on at most max_n vertices that cannot
/// transfer a vertex between two parts below r-1.
inline std::vector<std::vector<int>> normalized_shapes_upto(int r, int max_n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (!cur.empty()) {
      const auto small = std::count_if(cur.begin(), cur.end(), [&](int p) { return p < r - 1; });
      if (small <= 1) out.push_back(cur);
    }
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(max_n, max_n);
  return out;
}

}  // namespace oracle
