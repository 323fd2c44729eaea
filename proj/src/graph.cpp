#include "oddholes/graph.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace oddholes {

bool lex_less(VertexSet a, VertexSet b) {
  const std::vector<int> va = a.to_vector();
  const std::vector<int> vb = b.to_vector();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(),
                                      vb.end());
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges,
             std::vector<std::string> labels)
    : n_(n) {
  if (n < 0) throw std::invalid_argument("vertex count is negative");
  if (n > 64)
    throw std::invalid_argument("graph has " + std::to_string(n) +
                                " vertices; at most 64 are supported");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("repeated edge");
  edges_ = std::move(edges);

  if (labels.empty()) {
    labels_.reserve(n);
    for (int v = 0; v < n; ++v) labels_.push_back(std::to_string(v + 1));
  } else {
    if (static_cast<int>(labels.size()) != n)
      throw std::invalid_argument("label count does not match vertex count");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (static_cast<int>(seen.size()) != n)
      throw std::invalid_argument("labels are not unique");
    labels_ = std::move(labels);
  }

  adj_.assign(n, 0);
  for (const auto& [u, v] : edges_) {
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
  }
}

bool Graph::adjacent(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::invalid_argument("vertex out of range");
  return adj_[u] >> v & 1;
}

VertexSet Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
  return VertexSet(adj_[v]);
}

const std::string& Graph::label(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
  return labels_[v];
}

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0
                             ? "line " + std::to_string(line) + ": " + message
                             : message),
      line_(line) {}

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

// Positive integer that certainly fits; anything bigger than 6 digits is
// already far past the 64-vertex limit.
long parse_vertex_number(const std::string& tok, int line) {
  if (tok.size() > 6)
    throw ParseError(line, "vertex number too large: " + tok);
  long value = std::stol(tok);
  if (value < 1) throw ParseError(line, "vertex numbers are 1-based");
  return value;
}

struct Line {
  int number;
  std::vector<std::string> tokens;
};

Graph parse_dimacs(const std::vector<Line>& lines) {
  int n = -1;
  long declared_edges = -1;
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  for (const auto& [no, toks] : lines) {
    if (toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (n >= 0) throw ParseError(no, "second p line");
      if (toks.size() != 4 || toks[1] != "edge" || !all_digits(toks[2]) ||
          !all_digits(toks[3]))
        throw ParseError(no, "malformed header; expected: p edge <n> <m>");
      long nn = parse_vertex_number(toks[2], no);
      if (nn > 64)
        throw ParseError(no, "graph has " + toks[2] +
                                 " vertices; at most 64 are supported");
      n = static_cast<int>(nn);
      declared_edges = std::stol(toks[3]);
      continue;
    }
    if (toks[0] == "e") {
      if (n < 0) throw ParseError(no, "edge before the p header");
      if (toks.size() != 3 || !all_digits(toks[1]) || !all_digits(toks[2]))
        throw ParseError(no, "malformed edge; expected: e <u> <v>");
      long u = parse_vertex_number(toks[1], no);
      long v = parse_vertex_number(toks[2], no);
      if (u > n || v > n)
        throw ParseError(no, "vertex " + std::to_string(std::max(u, v)) +
                                 " exceeds the declared count " +
                                 std::to_string(n));
      if (u == v) throw ParseError(no, "loop at vertex " + toks[1]);
      std::pair<int, int> e{static_cast<int>(std::min(u, v)) - 1,
                            static_cast<int>(std::max(u, v)) - 1};
      if (!seen.insert(e).second)
        throw ParseError(no, "repeated edge " + toks[1] + " " + toks[2]);
      edges.push_back(e);
      continue;
    }
    throw ParseError(no, "unrecognized line type '" + toks[0] + "'");
  }
  if (n < 0) throw ParseError(0, "missing p header");
  if (declared_edges != static_cast<long>(edges.size()))
    throw ParseError(0, "header declares " + std::to_string(declared_edges) +
                            " edges but " + std::to_string(edges.size()) +
                            " are listed");
  return Graph(n, std::move(edges));
}

Graph parse_edge_list(const std::vector<Line>& lines) {
  for (const auto& [no, toks] : lines)
    if (toks.size() != 2)
      throw ParseError(no, "expected two tokens per edge line");

  bool numeric = true;
  for (const auto& [no, toks] : lines)
    numeric = numeric && all_digits(toks[0]) && toks[0] != "0" &&
              all_digits(toks[1]) && toks[1] != "0";

  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  int n = 0;
  if (numeric) {
    for (const auto& [no, toks] : lines) {
      long u = parse_vertex_number(toks[0], no);
      long v = parse_vertex_number(toks[1], no);
      long m = std::max(u, v);
      if (m > 64)
        throw ParseError(no, "vertex " + std::to_string(m) +
                                 " out of range; at most 64 are supported");
      n = std::max(n, static_cast<int>(m));
      if (u == v) throw ParseError(no, "loop at vertex " + toks[0]);
      std::pair<int, int> e{static_cast<int>(std::min(u, v)) - 1,
                            static_cast<int>(std::max(u, v)) - 1};
      if (!seen.insert(e).second)
        throw ParseError(no, "repeated edge " + toks[0] + " " + toks[1]);
      edges.push_back(e);
    }
  } else {
    std::vector<std::string> order;
    auto index_of = [&](const std::string& lab, int no) {
      auto it = std::find(order.begin(), order.end(), lab);
      if (it != order.end()) return static_cast<int>(it - order.begin());
      if (order.size() == 64)
        throw ParseError(no, "more than 64 distinct labels");
      order.push_back(lab);
      return static_cast<int>(order.size()) - 1;
    };
    for (const auto& [no, toks] : lines) {
      int u = index_of(toks[0], no);
      int v = index_of(toks[1], no);
      if (u == v) throw ParseError(no, "loop at vertex " + toks[0]);
      std::pair<int, int> e{std::min(u, v), std::max(u, v)};
      if (!seen.insert(e).second)
        throw ParseError(no, "repeated edge " + toks[0] + " " + toks[1]);
      edges.push_back(e);
    }
    labels = order;
    n = static_cast<int>(order.size());
  }
  return Graph(n, std::move(edges), std::move(labels));
}

}  // namespace

Graph parse_graph(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  bool dimacs = false;
  for (int no = 1; std::getline(in, raw); ++no) {
    std::vector<std::string> toks = split_tokens(raw);
    if (toks.empty()) continue;
    if (toks[0][0] == '#') continue;
    if (toks[0] == "p") dimacs = true;
    lines.push_back({no, std::move(toks)});
  }
  return dimacs ? parse_dimacs(lines) : parse_edge_list(lines);
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges), g.labels());
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices()))
    throw std::invalid_argument("vertex set not contained in the graph");
  const std::vector<int> keep = s.to_vector();
  std::vector<int> new_index(g.vertex_count(), -1);
  std::vector<std::string> labels;
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
    new_index[keep[i]] = i;
    labels.push_back(g.label(keep[i]));
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges())
    if (s.contains(u) && s.contains(v))
      edges.emplace_back(new_index[u], new_index[v]);
  return Graph(static_cast<int>(keep.size()), std::move(edges),
               std::move(labels));
}

BipartitenessResult is_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  BipartitenessResult result;
  std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
  std::vector<int> queue;
  for (int start = 0; start < n; ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (int v : g.neighbors(u).to_vector()) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          parent[v] = u;
          depth[v] = depth[u] + 1;
          queue.push_back(v);
          continue;
        }
        if (color[v] != color[u]) continue;
        // Same BFS parity on an edge: walking both endpoints up to their
        // common ancestor closes an odd cycle.
        int a = u, b = v;
        std::vector<int> pa{a}, pb{b};
        while (depth[a] > depth[b]) pa.push_back(a = parent[a]);
        while (depth[b] > depth[a]) pb.push_back(b = parent[b]);
        while (a != b) {
          pa.push_back(a = parent[a]);
          pb.push_back(b = parent[b]);
        }
        result.odd_cycle = pa;
        for (auto it = pb.rbegin(); it != pb.rend(); ++it)
          if (*it != a) result.odd_cycle.push_back(*it);
        return result;
      }
    }
  }
  result.bipartite = true;
  for (int v = 0; v < n; ++v) result.side[color[v]].add(v);
  return result;
}

namespace {

struct CycleSearch {
  const Graph& g;
  int min_len;
  std::vector<VertexSet> found;
  std::vector<int> path;

  // Grows a chordless path rooted at its minimum vertex v0. Candidates
  // below v0 are excluded, a candidate adjacent to an interior path
  // vertex would create a chord, and a candidate adjacent to v0 closes
  // a cycle and must not be extended past.
  void extend(int v0, VertexSet path_set, VertexSet lower) {
    const int last = path.back();
    const VertexSet cand = (g.neighbors(last) - path_set) - lower;
    const VertexSet interior =
        (path_set - VertexSet::single(v0)) - VertexSet::single(last);
    for (int u : cand.to_vector()) {
      if (g.neighbors(u).intersects(interior)) continue;
      if (g.neighbors(u).contains(v0)) {
        const int len = static_cast<int>(path.size()) + 1;
        if (len >= min_len && len % 2 == 1 && path[1] < u) {
          VertexSet cycle = path_set;
          cycle.add(u);
          found.push_back(cycle);
        }
        continue;
      }
      path.push_back(u);
      VertexSet next = path_set;
      next.add(u);
      extend(v0, next, lower);
      path.pop_back();
    }
  }
};

}  // namespace

std::vector<VertexSet> enumerate_induced_odd_cycles(const Graph& g,
                                                    int min_len) {
  if (min_len < 3) min_len = 3;
  if (min_len % 2 == 0) ++min_len;
  CycleSearch search{g, min_len, {}, {}};
  for (int v0 = 0; v0 < g.vertex_count(); ++v0) {
    const VertexSet lower = VertexSet::first_n(v0 + 1);
    for (int v1 : (g.neighbors(v0) - lower).to_vector()) {
      search.path = {v0, v1};
      VertexSet path_set = VertexSet::single(v0);
      path_set.add(v1);
      search.extend(v0, path_set, lower);
    }
  }
  std::sort(search.found.begin(), search.found.end(),
            [](VertexSet a, VertexSet b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return lex_less(a, b);
            });
  return search.found;
}

int count_triangles(const Graph& g) {
  int count = 0;
  for (const auto& [u, v] : g.edges()) {
    const VertexSet above = g.vertices() - VertexSet::first_n(v + 1);
    count += ((g.neighbors(u) & g.neighbors(v)) & above).size();
  }
  return count;
}

VertexSet neighbors(const Graph& g, VertexSet a) {
  if (!a.subset_of(g.vertices()))
    throw std::invalid_argument("vertex set not contained in the graph");
  VertexSet out;
  for (int v : a.to_vector()) out = out | g.neighbors(v);
  return out - a;
}

bool is_independent(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices()))
    throw std::invalid_argument("vertex set not contained in the graph");
  for (int v : s.to_vector())
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

}  // namespace oddholes
