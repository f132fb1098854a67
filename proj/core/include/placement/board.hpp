#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace placement {

struct GridShape {
  int rows = 0;
  int cols = 0;

  friend bool operator==(const GridShape&, const GridShape&) = default;
};

// An undirected simple graph with 1-indexed vertices; the playing surface.
// Immutable after construction.
class Board {
public:
  using Edge = std::pair<int, int>;  // normalized u < v

  static Board path(int n);
  static Board cycle(int n);
  static Board grid(int rows, int cols);
  static Board from_edges(int vertex_count, std::vector<Edge> edges);

  // Text format: first data line is the vertex count, each following data
  // line "u v" is one edge. '#' starts a comment, blank lines are skipped.
  static Board parse(std::string_view text);
  std::string render() const;

  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<GridShape> grid_shape() const { return grid_shape_; }

  bool adjacent(int u, int v) const;
  const std::vector<int>& neighbors(int v) const;

  // Stable hash of (vertex count, sorted edge list); cache key for all
  // derived results.
  std::uint64_t fingerprint() const;

  // Graph equality: vertex count and edge set. grid_shape is construction
  // metadata and does not participate.
  friend bool operator==(const Board& a, const Board& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

private:
  Board(int vertex_count, std::vector<Edge> edges,
        std::optional<GridShape> shape);

  int vertex_count_ = 0;
  std::vector<Edge> edges_;                // sorted, unique
  std::optional<GridShape> grid_shape_;
  std::vector<std::vector<int>> adjacency_;  // 1-indexed, sorted
};

// Both boards keep their internal structure; the second board's vertices are
// shifted up by the first board's vertex count. Any grid shape is dropped.
Board disjoint_union(const Board& a, const Board& b);

// Recognizes the builtin names "path:N", "cycle:N" and "grid:RxC".
// Returns nullopt when the text is not a builtin name; size errors inside a
// recognized name propagate as exceptions.
std::optional<Board> parse_builtin_board(std::string_view spec);

}  // namespace placement
