#include "robustnet/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "robustnet/errors.hpp"

namespace robustnet {

namespace {

Edge normalized(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Whole-token integer parse; rejects trailing junk like "3x".
bool parse_int(const std::string& token, int& out) {
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

bool is_blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '#';
  }
  return true;  // blank
}

}  // namespace

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex index " + std::to_string(v) + " outside [0, " +
                            std::to_string(n_) + ")");
}

void Graph::build_adjacency() {
  adj_.assign(n_, {});
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 1) throw std::invalid_argument("vertex count must be positive");
  Graph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u == e.v)
      throw std::invalid_argument("self-loop (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ")");
    g.check_vertex(e.u);
    g.check_vertex(e.v);
    g.edges_.push_back(normalized(e.u, e.v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  g.build_adjacency();
  return g;
}

Graph Graph::parse_edge_list(std::istream& in) {
  int n = -1;
  std::vector<Edge> edges;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    std::istringstream tokens(line);
    std::vector<std::string> parts;
    std::string tok;
    while (tokens >> tok) parts.push_back(tok);
    if (n < 0) {
      int value = 0;
      if (parts.size() != 1 || !parse_int(parts[0], value))
        throw ParseError("expected vertex count", line_no);
      if (value < 1) throw ParseError("vertex count must be positive", line_no);
      n = value;
      continue;
    }
    int u = 0, v = 0;
    if (parts.size() != 2 || !parse_int(parts[0], u) || !parse_int(parts[1], v))
      throw ParseError("expected edge \"u v\"", line_no);
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw RangeError("vertex index outside [0, " + std::to_string(n) + ")", line_no);
    if (u == v) throw SelfLoopError("self-loop on vertex " + std::to_string(u), line_no);
    edges.push_back(normalized(u, v));
  }
  if (n < 0) throw ParseError("missing vertex count", 0);
  return from_edges(n, edges);
}

Graph Graph::parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

std::string Graph::serialize() const {
  std::string out = std::to_string(n_);
  out.push_back('\n');
  for (const Edge& e : edges_) {
    out += std::to_string(e.u);
    out.push_back(' ');
    out += std::to_string(e.v);
    out.push_back('\n');
  }
  return out;
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

bool Graph::has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return -1;
  Edge e = normalized(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) return static_cast<int>(it - edges_.begin());
  return -1;
}

int Graph::min_degree() const {
  int best = n_ > 0 ? n_ : 0;
  for (const auto& list : adj_) best = std::min(best, static_cast<int>(list.size()));
  return n_ > 0 ? best : 0;
}

std::vector<Edge> Graph::complement_nonedges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!has_edge(u, v)) out.push_back({u, v});
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
  if (has_edge(u, v)) return *this;
  Graph g = *this;
  Edge e = normalized(u, v);
  g.edges_.insert(std::upper_bound(g.edges_.begin(), g.edges_.end(), e), e);
  g.build_adjacency();
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  int idx = edge_index(u, v);
  if (idx < 0) return *this;
  Graph g = *this;
  g.edges_.erase(g.edges_.begin() + idx);
  g.build_adjacency();
  return g;
}

Graph generate(GraphFamily family) {
  const int n = family.order;
  if (n < 1) throw std::invalid_argument("graph order must be positive");
  std::vector<Edge> edges;
  switch (family.kind) {
    case FamilyKind::complete:
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
      break;
    case FamilyKind::cycle:
      if (n < 3) throw std::invalid_argument("cycle requires order >= 3");
      for (int u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
      edges.push_back({0, n - 1});
      break;
    case FamilyKind::star:
      for (int v = 1; v < n; ++v) edges.push_back({0, v});
      break;
    case FamilyKind::path:
      for (int u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
      break;
    case FamilyKind::empty:
      break;
  }
  return Graph::from_edges(n, edges);
}

FamilyKind family_from_code(char code) {
  switch (std::toupper(static_cast<unsigned char>(code))) {
    case 'K': return FamilyKind::complete;
    case 'C': return FamilyKind::cycle;
    case 'S': return FamilyKind::star;
    case 'P': return FamilyKind::path;
    case 'O': return FamilyKind::empty;
    default: throw std::invalid_argument(std::string("unknown family code '") + code + "'");
  }
}

}  // namespace robustnet
