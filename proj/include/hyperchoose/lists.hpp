#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperchoose/bits.hpp"

namespace hyperchoose {

/// A total map vertex -> colour id.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {
    for (Color c : colors_)
      if (c < 0) throw std::invalid_argument("colour ids must be non-negative, got " + std::to_string(c));
  }

  int vertex_count() const { return static_cast<int>(colors_.size()); }
  Color operator[](Vertex v) const { return colors_[static_cast<std::size_t>(v)]; }
  const std::vector<Color>& colors() const { return colors_; }

  /// f^{-1}(c)
  VertexMask color_class(Color c) const {
    VertexMask m = 0;
    for (std::size_t v = 0; v < colors_.size(); ++v)
      if (colors_[v] == c) m |= bit(static_cast<int>(v));
    return m;
  }

  /// f(X), sorted.
  std::vector<Color> colors_used(VertexMask x) const {
    std::vector<Color> out;
    for (Vertex v : to_vertices(x)) out.push_back(colors_.at(static_cast<std::size_t>(v)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  std::vector<Color> colors_used() const { return colors_used(low_bits(vertex_count())); }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<Color> colors_;
};

/// Per-vertex colour lists. Lists are kept sorted and duplicate-free; the
/// universe is the exact union of all lists.
class ListAssignment {
 public:
  ListAssignment() = default;
  explicit ListAssignment(std::vector<std::vector<Color>> lists) : lists_(std::move(lists)) {
    check_vertex_cap(static_cast<long long>(lists_.size()));
    for (auto& l : lists_) {
      for (Color c : l)
        if (c < 0) throw std::invalid_argument("colour ids must be non-negative, got " + std::to_string(c));
      std::sort(l.begin(), l.end());
      l.erase(std::unique(l.begin(), l.end()), l.end());
      universe_.insert(universe_.end(), l.begin(), l.end());
    }
    std::sort(universe_.begin(), universe_.end());
    universe_.erase(std::unique(universe_.begin(), universe_.end()), universe_.end());
  }

  /// Same list for each of n vertices.
  static ListAssignment uniform(int n, std::vector<Color> list) {
    return ListAssignment(std::vector<std::vector<Color>>(static_cast<std::size_t>(n), std::move(list)));
  }

  int vertex_count() const { return static_cast<int>(lists_.size()); }
  const std::vector<Color>& list(Vertex v) const { return lists_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::vector<Color>>& lists() const { return lists_; }
  const std::vector<Color>& universe() const { return universe_; }

  bool contains(Vertex v, Color c) const {
    const auto& l = list(v);
    return std::binary_search(l.begin(), l.end(), c);
  }

  /// True iff every list has exactly k colours.
  bool is_k_assignment(int k) const {
    return std::all_of(lists_.begin(), lists_.end(), [k](const auto& l) { return static_cast<int>(l.size()) == k; });
  }

  /// L(X)
  std::vector<Color> union_over(VertexMask x) const {
    std::vector<Color> out;
    for (Vertex v : to_vertices(x)) out.insert(out.end(), list(v).begin(), list(v).end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// L_X on the vertices of x relabeled 0..|x|-1 in increasing order.
  ListAssignment restricted_to(VertexMask x) const {
    std::vector<std::vector<Color>> out;
    for (Vertex v : to_vertices(x)) out.push_back(list(v));
    return ListAssignment(std::move(out));
  }

  bool respected_by(const Coloring& f) const {
    if (f.vertex_count() != vertex_count()) return false;
    for (Vertex v = 0; v < vertex_count(); ++v)
      if (!contains(v, f[v])) return false;
    return true;
  }

  friend bool operator==(const ListAssignment& a, const ListAssignment& b) { return a.lists_ == b.lists_; }

 private:
  std::vector<std::vector<Color>> lists_;
  std::vector<Color> universe_;
};

}  // namespace hyperchoose
