#include "placement/board.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "placement/errors.hpp"

namespace placement {

namespace {

constexpr std::uint64_t kFnvOffset = 14695981039346656037ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

void fnv_mix(std::uint64_t& h, std::uint64_t value) {
  for (int i = 0; i < 8; ++i) {
    h ^= (value >> (8 * i)) & 0xff;
    h *= kFnvPrime;
  }
}

}  // namespace

Board::Board(int vertex_count, std::vector<Edge> edges,
             std::optional<GridShape> shape)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      grid_shape_(shape),
      adjacency_(static_cast<std::size_t>(vertex_count) + 1) {
  for (const Edge& e : edges_) {
    adjacency_[static_cast<std::size_t>(e.first)].push_back(e.second);
    adjacency_[static_cast<std::size_t>(e.second)].push_back(e.first);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

Board Board::from_edges(int vertex_count, std::vector<Edge> edges) {
  if (vertex_count < 1)
    raise(Errc::invalid_size, "a board needs at least one vertex");
  for (Edge& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first == e.second)
      raise(Errc::domain_error,
            "self-loop at vertex " + std::to_string(e.first));
    if (e.first < 1 || e.second > vertex_count)
      raise(Errc::domain_error, "edge endpoint " + std::to_string(e.second) +
                                    " outside 1.." + std::to_string(vertex_count));
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    raise(Errc::domain_error, "duplicate edge");
  return Board(vertex_count, std::move(edges), std::nullopt);
}

Board Board::path(int n) {
  if (n < 1) raise(Errc::invalid_size, "path needs at least 1 vertex");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return Board(n, std::move(edges), std::nullopt);
}

Board Board::cycle(int n) {
  if (n < 3) raise(Errc::invalid_size, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(1, n);
  std::sort(edges.begin(), edges.end());
  return Board(n, std::move(edges), std::nullopt);
}

Board Board::grid(int rows, int cols) {
  if (rows < 1 || cols < 1)
    raise(Errc::invalid_size, "grid needs positive dimensions");
  auto id = [cols](int r, int c) { return (r - 1) * cols + c; };
  std::vector<Edge> edges;
  for (int r = 1; r <= rows; ++r)
    for (int c = 1; c <= cols; ++c) {
      if (c < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  std::sort(edges.begin(), edges.end());
  return Board(rows * cols, std::move(edges), GridShape{rows, cols});
}

Board Board::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int vertex_count = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first, second, extra;
    fields >> first;
    if (first.empty()) continue;
    auto context = [&] { return "board text line " + std::to_string(line_no); };
    if (vertex_count < 0) {
      if (fields >> extra)
        raise(Errc::parse_error, context() + ": expected a single vertex count");
      try {
        vertex_count = std::stoi(first);
      } catch (const std::exception&) {
        raise(Errc::parse_error, context() + ": invalid vertex count '" + first + "'");
      }
      if (vertex_count < 1)
        raise(Errc::parse_error, context() + ": vertex count must be positive");
      continue;
    }
    if (!(fields >> second) || (fields >> extra))
      raise(Errc::parse_error, context() + ": expected 'u v'");
    int u = 0, v = 0;
    try {
      u = std::stoi(first);
      v = std::stoi(second);
    } catch (const std::exception&) {
      raise(Errc::parse_error, context() + ": invalid edge '" + first + " " + second + "'");
    }
    if (u == v) raise(Errc::parse_error, context() + ": self-loop at " + first);
    if (u > v) std::swap(u, v);
    if (u < 1 || v > vertex_count)
      raise(Errc::parse_error, context() + ": endpoint " + std::to_string(v) +
                                   " outside 1.." + std::to_string(vertex_count));
    if (!seen.insert({u, v}).second)
      raise(Errc::parse_error, context() + ": duplicate edge " +
                                   std::to_string(u) + " " + std::to_string(v));
    edges.emplace_back(u, v);
  }
  if (vertex_count < 0) raise(Errc::parse_error, "board text has no vertex count");
  std::sort(edges.begin(), edges.end());
  return Board(vertex_count, std::move(edges), std::nullopt);
}

std::string Board::render() const {
  std::string out = std::to_string(vertex_count_) + "\n";
  for (const Edge& e : edges_)
    out += std::to_string(e.first) + " " + std::to_string(e.second) + "\n";
  return out;
}

bool Board::adjacent(int u, int v) const {
  if (u < 1 || u > vertex_count_ || v < 1 || v > vertex_count_) return false;
  const auto& list = adjacency_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

const std::vector<int>& Board::neighbors(int v) const {
  if (v < 1 || v > vertex_count_)
    raise(Errc::domain_error, "vertex " + std::to_string(v) + " outside 1.." +
                                  std::to_string(vertex_count_));
  return adjacency_[static_cast<std::size_t>(v)];
}

std::uint64_t Board::fingerprint() const {
  std::uint64_t h = kFnvOffset;
  fnv_mix(h, static_cast<std::uint64_t>(vertex_count_));
  for (const Edge& e : edges_) {
    fnv_mix(h, static_cast<std::uint64_t>(e.first));
    fnv_mix(h, static_cast<std::uint64_t>(e.second));
  }
  return h;
}

Board disjoint_union(const Board& a, const Board& b) {
  std::vector<Board::Edge> edges = a.edges();
  edges.reserve(a.edges().size() + b.edges().size());
  const int shift = a.vertex_count();
  for (const Board::Edge& e : b.edges())
    edges.emplace_back(e.first + shift, e.second + shift);
  return Board::from_edges(a.vertex_count() + b.vertex_count(), std::move(edges));
}

std::optional<Board> parse_builtin_board(std::string_view spec) {
  auto parse_positive = [](std::string_view text, const char* what) {
    int value = 0;
    if (text.empty()) raise(Errc::parse_error, std::string("missing ") + what);
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        raise(Errc::parse_error,
              std::string("invalid ") + what + " '" + std::string(text) + "'");
      value = value * 10 + (ch - '0');
      if (value > 1000000) raise(Errc::parse_error, std::string(what) + " too large");
    }
    return value;
  };
  if (spec.starts_with("path:"))
    return Board::path(parse_positive(spec.substr(5), "path size"));
  if (spec.starts_with("cycle:"))
    return Board::cycle(parse_positive(spec.substr(6), "cycle size"));
  if (spec.starts_with("grid:")) {
    auto dims = spec.substr(5);
    auto x = dims.find('x');
    if (x == std::string_view::npos)
      raise(Errc::parse_error, "grid spec must look like grid:RxC");
    return Board::grid(parse_positive(dims.substr(0, x), "grid rows"),
                       parse_positive(dims.substr(x + 1), "grid cols"));
  }
  return std::nullopt;
}

}  // namespace placement
