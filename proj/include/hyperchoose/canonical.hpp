#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperchoose/bits.hpp"
#include "hyperchoose/detail/list_search.hpp"
#include "hyperchoose/hypergraph.hpp"
#include "hyperchoose/lists.hpp"

namespace hyperchoose {

/// Largest universe size m with (r-1)*m < n. A hypergraph is k-choosable as
/// soon as it is L-colourable for every k-list assignment on at most m colours.
inline int universe_bound(int n, int r) {
  if (r < 2) throw std::invalid_argument("edge size r must be at least 2");
  if (n < 1) throw std::invalid_argument("universe bound needs at least one vertex");
  return (n + r - 2) / (r - 1) - 1;
}

/// Interchangeable vertex blocks of a hypergraph: vertices inside one block
/// may be permuted freely, and blocks sharing a swap group may be exchanged
/// wholesale. Multipartite hypergraphs use their parts (equal sizes share a
/// group); explicit ones get singleton blocks and no swaps.
struct SymmetryBlocks {
  std::vector<int> start;
  std::vector<int> size;
  std::vector<int> group;  // blocks with equal group id are swappable

  int count() const { return static_cast<int>(start.size()); }
  bool has_swaps() const {
    for (std::size_t i = 0; i < group.size(); ++i)
      for (std::size_t j = i + 1; j < group.size(); ++j)
        if (group[i] == group[j]) return true;
    return false;
  }

  static SymmetryBlocks of(const UniformHypergraph& h) {
    SymmetryBlocks b;
    if (const auto* shape = h.shape()) {
      int s = 0;
      for (int p : shape->parts()) {
        b.start.push_back(s);
        b.size.push_back(p);
        b.group.push_back(p);
        s += p;
      }
    } else {
      for (int v = 0; v < h.vertex_count(); ++v) {
        b.start.push_back(v);
        b.size.push_back(1);
        b.group.push_back(-1 - v);
      }
    }
    return b;
  }
};

/// Generates one representative per orbit of k-list assignments over the
/// colours 0..m-1 (m = universe_bound) under colour relabeling and the
/// block symmetries of the hypergraph.
///
/// Lists are encoded by their rank among all k-subsets of 0..m-1 ordered
/// lexicographically as sorted tuples, and an assignment by its rank
/// sequence in vertex order. The representative of an orbit is its
/// lexicographically smallest rank sequence. Generation is orderly: ranks
/// are non-decreasing inside a block, swappable blocks appear in
/// non-decreasing order, and a prefix is abandoned as soon as some colour
/// permutation provably maps the assignment below itself. Representatives
/// come out in increasing lexicographic order.
class AssignmentEnumerator {
 public:
  static constexpr int kMaxUniverse = 8;

  AssignmentEnumerator(const UniformHypergraph& h, int k)
      : n_(h.vertex_count()), k_(k), blocks_(SymmetryBlocks::of(h)) {
    if (k < 1) throw std::invalid_argument("list size k must be at least 1");
    m_ = n_ >= 1 ? universe_bound(n_, h.uniformity()) : 0;
    if (m_ < k_) {
      m_ = std::max(m_, 0);
      empty_ = true;
      return;
    }
    if (m_ > kMaxUniverse)
      throw std::length_error("universe bound " + std::to_string(m_) + " is beyond exhaustive enumeration (max " +
                              std::to_string(kMaxUniverse) + ")");
    build_subsets();
    build_permutations();
    all_perms_.resize(perm_count_);
    std::iota(all_perms_.begin(), all_perms_.end(), 0);
    block_of_.resize(static_cast<std::size_t>(n_));
    for (int b = 0; b < blocks_.count(); ++b)
      for (int i = 0; i < blocks_.size[static_cast<std::size_t>(b)]; ++i)
        block_of_[static_cast<std::size_t>(blocks_.start[static_cast<std::size_t>(b)] + i)] = b;
    prev_in_group_.assign(static_cast<std::size_t>(blocks_.count()), -1);
    for (int b = 0; b < blocks_.count(); ++b)
      for (int a = b - 1; a >= 0; --a)
        if (blocks_.group[static_cast<std::size_t>(a)] == blocks_.group[static_cast<std::size_t>(b)]) {
          prev_in_group_[static_cast<std::size_t>(b)] = a;
          break;
        }
    has_swaps_ = blocks_.has_swaps();
  }

  int universe_size() const { return m_; }
  int list_size() const { return k_; }
  bool empty() const { return empty_; }

  /// The k-subset with the given rank, as a colour mask.
  detail::ColorMask subset(int rank) const { return subsets_[static_cast<std::size_t>(rank)]; }

  ListAssignment to_assignment(const std::vector<int>& ranks) const {
    std::vector<std::vector<Color>> lists;
    lists.reserve(ranks.size());
    for (int r : ranks) {
      std::vector<Color> l;
      for (detail::ColorMask cs = subset(r); cs; cs &= cs - 1) l.push_back(std::countr_zero(cs));
      lists.push_back(std::move(l));
    }
    return ListAssignment(std::move(lists));
  }

  /// A resumable subtree: the rank prefix up to a block boundary and the
  /// colour permutations that fix that prefix.
  struct Task {
    std::vector<int> prefix;
    std::vector<int> alive;
  };

  /// Visits every representative (as a rank sequence) in increasing order.
  /// visit returns false to stop; returns false iff stopped.
  template <class Visit>
  bool for_each(Visit&& visit, const Deadline& deadline = Deadline::none()) const {
    if (empty_) return true;
    Task root = root_task();
    return run(root, visit, deadline);
  }

  /// Splits the enumeration at the first block boundary that yields at least
  /// `min_tasks` subtrees (or the last boundary before the leaves). Running
  /// the tasks in order visits exactly the sequence for_each visits.
  std::vector<Task> split(std::size_t min_tasks) const {
    std::vector<Task> tasks;
    if (empty_) return tasks;
    tasks.push_back(root_task());
    for (int b = 0; b + 1 < blocks_.count() && tasks.size() < min_tasks; ++b) {
      const int stop = blocks_.start[static_cast<std::size_t>(b)] + blocks_.size[static_cast<std::size_t>(b)];
      std::vector<Task> next;
      for (const Task& t : tasks) {
        Cursor cur = cursor(t);
        expand(cur, static_cast<int>(t.prefix.size()), t.alive, stop, [&](const Cursor& c, const std::vector<int>& alive) {
          next.push_back(Task{std::vector<int>(c.seq.begin(), c.seq.begin() + stop), alive});
          return true;
        }, Deadline::none());
      }
      tasks = std::move(next);
    }
    return tasks;
  }

  /// Visits the representatives inside one task's subtree, in order.
  template <class Visit>
  bool run(const Task& task, Visit&& visit, const Deadline& deadline = Deadline::none()) const {
    if (empty_) return true;
    Cursor cur = cursor(task);
    return expand(cur, static_cast<int>(task.prefix.size()), task.alive, n_ + 1,
                  [&](const Cursor& c, const std::vector<int>&) { return bool(visit(c.seq)); }, deadline);
  }

  /// True iff the rank sequence is the minimum of its orbit.
  bool is_canonical(const std::vector<int>& seq) const {
    if (static_cast<int>(seq.size()) != n_) return false;
    return empty_ || !some_image_below(seq, all_perms_);
  }

 private:
  struct Cursor {
    std::vector<int> seq;
    std::vector<char> tied;  // per vertex: block prefix so far equals its swap predecessor's
    std::uint64_t ticks = 0;
  };

  Task root_task() const { return Task{{}, all_perms_}; }

  Cursor cursor(const Task& t) const {
    Cursor c;
    c.seq.assign(static_cast<std::size_t>(n_), 0);
    c.tied.assign(static_cast<std::size_t>(n_) + 1, 0);
    std::copy(t.prefix.begin(), t.prefix.end(), c.seq.begin());
    return c;
  }

  void build_subsets() {
    // Lexicographic order of sorted tuples.
    std::vector<int> tuple;
    auto rec = [&](auto&& self, int from) -> void {
      if (static_cast<int>(tuple.size()) == k_) {
        detail::ColorMask m = 0;
        for (int c : tuple) m |= detail::ColorMask{1} << c;
        subsets_.push_back(m);
        return;
      }
      for (int c = from; c < m_; ++c) {
        tuple.push_back(c);
        self(self, c + 1);
        tuple.pop_back();
      }
    };
    rec(rec, 0);
    rank_of_.assign(std::size_t{1} << m_, -1);
    for (std::size_t i = 0; i < subsets_.size(); ++i) rank_of_[subsets_[i]] = static_cast<int>(i);
  }

  void build_permutations() {
    std::vector<int> p(static_cast<std::size_t>(m_));
    std::iota(p.begin(), p.end(), 0);
    const std::size_t lists = subsets_.size();
    do {
      for (std::size_t r = 0; r < lists; ++r) {
        detail::ColorMask img = 0;
        for (detail::ColorMask cs = subsets_[r]; cs; cs &= cs - 1)
          img |= detail::ColorMask{1} << p[static_cast<std::size_t>(std::countr_zero(cs))];
        image_.push_back(rank_of_[img]);
      }
      ++perm_count_;
    } while (std::next_permutation(p.begin(), p.end()));
  }

  int image(int perm, int rank) const {
    return image_[static_cast<std::size_t>(perm) * subsets_.size() + static_cast<std::size_t>(rank)];
  }

  /// Compares sorted(pi . seq[from, from+len)) with seq[from, from+len).
  /// Returns -1, 0, 1.
  int compare_block(const std::vector<int>& seq, int perm, int from, int len, int* buf) const {
    for (int i = 0; i < len; ++i) {
      const int x = image(perm, seq[static_cast<std::size_t>(from + i)]);
      int j = i;
      while (j > 0 && buf[j - 1] > x) {
        buf[j] = buf[j - 1];
        --j;
      }
      buf[j] = x;
    }
    for (int i = 0; i < len; ++i) {
      const int a = buf[i];
      const int b = seq[static_cast<std::size_t>(from + i)];
      if (a != b) return a < b ? -1 : 1;
    }
    return 0;
  }

  /// Full check including block swaps: does some permutation in `perms`,
  /// combined with the best block arrangement, map seq strictly below itself?
  bool some_image_below(const std::vector<int>& seq, const std::vector<int>& perms) const {
    const int nb = blocks_.count();
    std::vector<std::vector<int>> imgs(static_cast<std::size_t>(nb));
    std::vector<int> arranged(static_cast<std::size_t>(n_));
    for (int p : perms) {
      for (int b = 0; b < nb; ++b) {
        auto& v = imgs[static_cast<std::size_t>(b)];
        v.clear();
        const int s = blocks_.start[static_cast<std::size_t>(b)];
        for (int i = 0; i < blocks_.size[static_cast<std::size_t>(b)]; ++i)
          v.push_back(image(p, seq[static_cast<std::size_t>(s + i)]));
        std::sort(v.begin(), v.end());
      }
      // Within each swap group, the sorted block images fill the group's
      // slots in increasing order.
      std::vector<char> done(static_cast<std::size_t>(nb), 0);
      for (int b = 0; b < nb; ++b) {
        if (done[static_cast<std::size_t>(b)]) continue;
        std::vector<int> members;
        for (int c = b; c < nb; ++c)
          if (blocks_.group[static_cast<std::size_t>(c)] == blocks_.group[static_cast<std::size_t>(b)]) {
            members.push_back(c);
            done[static_cast<std::size_t>(c)] = 1;
          }
        std::vector<std::vector<int>> contents;
        for (int c : members) contents.push_back(imgs[static_cast<std::size_t>(c)]);
        std::sort(contents.begin(), contents.end());
        for (std::size_t i = 0; i < members.size(); ++i)
          std::copy(contents[i].begin(), contents[i].end(),
                    arranged.begin() + blocks_.start[static_cast<std::size_t>(members[i])]);
      }
      if (std::lexicographical_compare(arranged.begin(), arranged.end(), seq.begin(), seq.end())) return true;
    }
    return false;
  }

  /// Depth-first extension from vertex v. `alive` holds the permutations
  /// that fix every complete block before v's block. `on_node` fires at
  /// vertex `stop` (a block boundary) or at the leaves (stop > n).
  template <class OnNode>
  bool expand(Cursor& cur, int v, const std::vector<int>& alive, int stop, OnNode&& on_node,
              const Deadline& deadline) const {
    if (v == stop || v == n_) {
      if (v == n_ && stop > n_ && has_swaps_ && some_image_below(cur.seq, all_perms())) return true;
      return on_node(cur, alive);
    }
    if ((++cur.ticks & 0x3f) == 0) deadline.check();

    const int b = block_of_[static_cast<std::size_t>(v)];
    const int start = blocks_.start[static_cast<std::size_t>(b)];
    const int len = blocks_.size[static_cast<std::size_t>(b)];
    const int t = v - start;
    const int pred = prev_in_group_[static_cast<std::size_t>(b)];
    const bool tied_so_far = pred >= 0 && (t == 0 || cur.tied[static_cast<std::size_t>(v)]);

    int lo = t > 0 ? cur.seq[static_cast<std::size_t>(v - 1)] : 0;
    int tie_value = -1;
    if (tied_so_far) {
      tie_value = cur.seq[static_cast<std::size_t>(blocks_.start[static_cast<std::size_t>(pred)] + t)];
      lo = std::max(lo, tie_value);
    }
    const int hi = v == 0 ? 0 : static_cast<int>(subsets_.size()) - 1;  // the first list is always rank 0

    int buf[kMaxVertices];
    std::vector<int> next_alive;
    for (int x = lo; x <= hi; ++x) {
      cur.seq[static_cast<std::size_t>(v)] = x;
      cur.tied[static_cast<std::size_t>(v) + 1] = tied_so_far && x == tie_value;

      bool below = false;
      const bool block_done = t + 1 == len;
      if (block_done) next_alive.clear();
      for (int p : alive) {
        const int cmp = compare_block(cur.seq, p, start, t + 1, buf);
        if (cmp < 0) {
          below = true;
          break;
        }
        if (block_done && cmp == 0) next_alive.push_back(p);
      }
      if (below) continue;

      const bool keep_going = block_done ? expand(cur, v + 1, next_alive, stop, on_node, deadline)
                                         : expand(cur, v + 1, alive, stop, on_node, deadline);
      if (!keep_going) return false;
    }
    return true;
  }

  const std::vector<int>& all_perms() const { return all_perms_; }

  int n_;
  int k_;
  int m_ = 0;
  bool empty_ = false;
  bool has_swaps_ = false;
  SymmetryBlocks blocks_;
  std::vector<int> block_of_;
  std::vector<int> prev_in_group_;
  std::vector<detail::ColorMask> subsets_;
  std::vector<int> rank_of_;
  std::vector<int> image_;
  std::size_t perm_count_ = 0;
  std::vector<int> all_perms_;
};

/// Streams the canonical k-list assignments of h. visit(const ListAssignment&)
/// returns false to stop.
template <class Visit>
void for_each_canonical_assignment(const UniformHypergraph& h, int k, Visit&& visit) {
  const AssignmentEnumerator e(h, k);
  e.for_each([&](const std::vector<int>& seq) { return bool(visit(e.to_assignment(seq))); });
}

/// All canonical k-list assignments of h, in canonical order.
inline std::vector<ListAssignment> enumerate_assignments(const UniformHypergraph& h, int k) {
  std::vector<ListAssignment> out;
  for_each_canonical_assignment(h, k, [&](const ListAssignment& l) {
    out.push_back(l);
    return true;
  });
  return out;
}

}  // namespace hyperchoose
