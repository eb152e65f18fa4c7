#pragma once

#include <compare>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace robustnet {

// Unordered vertex pair, stored normalized with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected unweighted graph on vertices 0..n-1.
/// All "mutations" return new values; instances are safe to share across
/// threads once constructed.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate and reversed-duplicate
  /// edges collapse to one. Throws std::out_of_range for endpoints outside
  /// [0, n) and std::invalid_argument for self-loops or n < 1.
  static Graph from_edges(int n, std::span<const Edge> edges);

  /// Reads the edge-list text format: first non-comment line is n, each
  /// following non-comment line is "u v". Lines whose first non-blank
  /// character is '#' and blank lines are skipped.
  /// Throws ParseError / RangeError / SelfLoopError with the line number.
  static Graph parse_edge_list(std::istream& in);
  static Graph parse_edge_list(const std::string& text);

  /// Canonical text form: "n" line, then one "u v" line per edge with
  /// u < v, sorted lexicographically. Stable byte-for-byte.
  std::string serialize() const;

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;
  bool has_edge(int u, int v) const;
  /// Position of {u,v} in edges(), or -1 when absent.
  int edge_index(int u, int v) const;
  /// 0 for the empty graph on any number of vertices.
  int min_degree() const;
  /// Absent pairs u < v in lexicographic order.
  std::vector<Edge> complement_nonedges() const;

  /// Copy with {u,v} added; equal graph if the edge already exists.
  Graph with_edge(int u, int v) const;
  /// Copy with {u,v} removed; equal graph if the edge is absent.
  Graph without_edge(int u, int v) const;

  /// Same vertex count and same edge set.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void build_adjacency();
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<Edge> edges_;             // sorted, unique
  std::vector<std::vector<int>> adj_;   // sorted neighbor lists
};

enum class FamilyKind { complete, cycle, star, path, empty };

struct GraphFamily {
  FamilyKind kind;
  int order;
};

/// Named generators: K_n, C_n (n >= 3), S_n (center 0), P_n, O_n.
/// Throws std::invalid_argument on a family whose invariants fail.
Graph generate(GraphFamily family);
inline Graph generate(FamilyKind kind, int order) { return generate({kind, order}); }

/// One-letter family code K/C/S/P/O (case-insensitive).
/// Throws std::invalid_argument on anything else.
FamilyKind family_from_code(char code);

}  // namespace robustnet
