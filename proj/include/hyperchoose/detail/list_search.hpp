#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hyperchoose/bits.hpp"
#include "hyperchoose/hypergraph.hpp"

namespace hyperchoose {

/// Thrown out of a search when its deadline passes.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded() : std::runtime_error("search budget exceeded") {}
};

/// Optional wall-clock limit shared by the exhaustive searches.
struct Deadline {
  std::optional<std::chrono::steady_clock::time_point> at;

  static Deadline none() { return {}; }
  static Deadline after(std::chrono::duration<double> d) {
    return {std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(d)};
  }
  bool passed() const { return at && std::chrono::steady_clock::now() >= *at; }
  void check() const {
    if (passed()) throw BudgetExceeded();
  }
};

namespace detail {

using ColorMask = std::uint64_t;
inline constexpr int kMaxColors = 64;

/// Properness through the class rule: a colour class may reach size r only
/// while it stays inside one part.
struct ClassRuleModel {
  int r;
  std::vector<VertexMask> part_masks;
  std::vector<int> part_of;

  explicit ClassRuleModel(const UniformHypergraph::Multipartite& mp, int r_)
      : r(r_), part_masks(mp.part_masks), part_of(mp.part_of) {}

  bool can_add(VertexMask cls, Vertex v) const {
    const VertexMask m = cls | bit(v);
    return popcount(m) < r || (m & ~part_masks[static_cast<std::size_t>(part_of[static_cast<std::size_t>(v)])]) == 0;
  }

  /// Upper bound on how many more vertices class `cls` can absorb from
  /// `avail` (uncoloured vertices still allowing the colour).
  int extra_capacity(VertexMask cls, VertexMask avail) const {
    const int s = popcount(cls);
    const int a = popcount(avail);
    const int spanning = std::max(0, std::min(r - 1 - s, a));
    if (s == 0) {
      int best = spanning;
      for (VertexMask pm : part_masks) best = std::max(best, popcount(avail & pm));
      return best;
    }
    const VertexMask home = part_masks[static_cast<std::size_t>(part_of[static_cast<std::size_t>(std::countr_zero(cls))])];
    if (cls & ~home) return spanning;
    return std::max(spanning, popcount(avail & home));
  }

  static constexpr bool has_capacity_bound = true;
};

/// Properness through explicit edge checks.
struct EdgeModel {
  std::vector<std::vector<VertexMask>> others;  // per vertex: each incident edge minus the vertex

  explicit EdgeModel(const UniformHypergraph& h) : others(static_cast<std::size_t>(h.vertex_count())) {
    h.for_each_edge([&](VertexMask e) {
      for (Vertex v : to_vertices(e)) others[static_cast<std::size_t>(v)].push_back(e & ~bit(v));
      return true;
    });
  }

  bool can_add(VertexMask cls, Vertex v) const {
    for (VertexMask rest : others[static_cast<std::size_t>(v)])
      if ((rest & ~cls) == 0) return false;
    return true;
  }

  int extra_capacity(VertexMask, VertexMask avail) const { return popcount(avail); }

  static constexpr bool has_capacity_bound = false;
};

/// Backtracking list colouring: most-constrained vertex first (ties by
/// index), colours ascending, forward checking on the chosen colour and, for
/// multipartite instances, a class-capacity bound.
template <class Model>
class ListSearch {
 public:
  /// `domains[v]` is the mask of colour indices allowed at v. With
  /// `interchangeable` set, all domains must be equal and colour symmetry is
  /// broken by opening colours in index order.
  ListSearch(Model model, int n, int num_colors, std::vector<ColorMask> domains, bool interchangeable,
             const Deadline& deadline)
      : model_(std::move(model)),
        n_(n),
        num_colors_(num_colors),
        interchangeable_(interchangeable),
        deadline_(deadline),
        classes_(static_cast<std::size_t>(num_colors), 0),
        assignment_(static_cast<std::size_t>(n), -1),
        levels_(static_cast<std::size_t>(n) + 1, std::vector<ColorMask>(static_cast<std::size_t>(n))),
        avail_(static_cast<std::size_t>(num_colors), 0) {
    if (num_colors > kMaxColors) throw std::length_error("more than 64 distinct colours in one search");
    levels_[0] = std::move(domains);
  }

  std::optional<std::vector<int>> solve() {
    if (dfs(0, low_bits(n_), -1)) return assignment_;
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool bound_ok(VertexMask uncolored, const std::vector<ColorMask>& dom) const {
    if constexpr (!Model::has_capacity_bound) return true;
    auto& avail = avail_;
    std::fill(avail.begin(), avail.end(), 0);
    for (VertexMask rest = uncolored; rest; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      for (ColorMask cs = dom[static_cast<std::size_t>(u)]; cs; cs &= cs - 1)
        avail[static_cast<std::size_t>(std::countr_zero(cs))] |= bit(u);
    }
    const int need = popcount(uncolored);
    int total = 0;
    for (int c = 0; c < num_colors_ && total < need; ++c)
      if (avail[static_cast<std::size_t>(c)])
        total += model_.extra_capacity(classes_[static_cast<std::size_t>(c)], avail[static_cast<std::size_t>(c)]);
    return total >= need;
  }

  bool dfs(int depth, VertexMask uncolored, int max_used) {
    if (uncolored == 0) return true;
    if ((++nodes_ & 0x3ff) == 0) deadline_.check();
    const auto& dom = levels_[static_cast<std::size_t>(depth)];
    if (!bound_ok(uncolored, dom)) return false;

    int v = -1;
    int best = kMaxColors + 1;
    for (VertexMask rest = uncolored; rest; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      const int size = popcount(dom[static_cast<std::size_t>(u)]);
      if (size < best) {
        best = size;
        v = u;
      }
    }
    if (best == 0) return false;

    const VertexMask others = uncolored & ~bit(v);
    auto& next = levels_[static_cast<std::size_t>(depth) + 1];
    for (ColorMask cs = dom[static_cast<std::size_t>(v)]; cs; cs &= cs - 1) {
      const int c = std::countr_zero(cs);
      if (interchangeable_ && c > max_used + 1) break;
      auto& cls = classes_[static_cast<std::size_t>(c)];
      cls |= bit(v);
      next = dom;
      bool wiped = false;
      for (VertexMask rest = others; rest; rest &= rest - 1) {
        const int u = std::countr_zero(rest);
        auto& du = next[static_cast<std::size_t>(u)];
        if ((du >> c & 1) && !model_.can_add(cls, u)) {
          du &= ~(ColorMask{1} << c);
          if (du == 0) {
            wiped = true;
            break;
          }
        }
      }
      if (!wiped && dfs(depth + 1, others, std::max(max_used, c))) {
        assignment_[static_cast<std::size_t>(v)] = c;
        return true;
      }
      cls &= ~bit(v);
    }
    return false;
  }

  Model model_;
  int n_;
  int num_colors_;
  bool interchangeable_;
  Deadline deadline_;
  std::vector<VertexMask> classes_;
  std::vector<int> assignment_;
  std::vector<std::vector<ColorMask>> levels_;
  mutable std::vector<VertexMask> avail_;
  std::uint64_t nodes_ = 0;
};

/// Runs the search with the model matching h's representation.
inline std::optional<std::vector<int>> search_coloring(const UniformHypergraph& h, int num_colors,
                                                       std::vector<ColorMask> domains, bool interchangeable,
                                                       const Deadline& deadline) {
  if (const auto* mp = h.multipartite_rep()) {
    ListSearch<ClassRuleModel> s(ClassRuleModel(*mp, h.uniformity()), h.vertex_count(), num_colors,
                                 std::move(domains), interchangeable, deadline);
    return s.solve();
  }
  ListSearch<EdgeModel> s(EdgeModel(h), h.vertex_count(), num_colors, std::move(domains), interchangeable, deadline);
  return s.solve();
}

}  // namespace detail
}  // namespace hyperchoose
