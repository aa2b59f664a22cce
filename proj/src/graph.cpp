#include "spti/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <sstream>

namespace spti {

Graph::Graph(int order, std::vector<Edge> edges) : order_(order) {
  if (order < 0) throw GraphError("negative vertex count");
  for (auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= order || e.v >= order) {
      throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") has an endpoint outside [0," + std::to_string(order) + ")");
    }
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw GraphError("duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
  }
  edges_ = std::move(edges);
  adj_.assign(order_, {});
  matrix_.assign(static_cast<std::size_t>(order_) * order_, 0);
  for (const auto& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    matrix_[e.u * order_ + e.v] = 1;
    matrix_[e.v * order_ + e.u] = 1;
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

std::span<const int> Graph::neighbors(int v) const { return adj_[v]; }

int Graph::max_degree() const noexcept {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

bool Graph::is_connected() const {
  if (order_ <= 1) return true;
  std::vector<char> seen(order_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == order_;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

// Two non-negative integers separated by whitespace, nothing else.
bool parse_pair(std::string_view line, long long& a, long long& b) {
  const char* p = line.data();
  const char* end = p + line.size();
  auto skip = [&] {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
  };
  skip();
  auto r1 = std::from_chars(p, end, a);
  if (r1.ec != std::errc{} || r1.ptr == p) return false;
  p = r1.ptr;
  if (p == end || (*p != ' ' && *p != '\t')) return false;
  skip();
  auto r2 = std::from_chars(p, end, b);
  if (r2.ec != std::errc{} || r2.ptr == p) return false;
  p = r2.ptr;
  skip();
  return p == end && a >= 0 && b >= 0;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> lines;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    ++lineno;
    auto line = trim(text.substr(pos, nl - pos));
    if (!line.empty() && line.front() != '#') lines.emplace_back(lineno, line);
    pos = nl + 1;
  }
  if (lines.empty()) throw GraphError("edge list is empty");

  long long n = 0;
  long long m = 0;
  if (!parse_pair(lines[0].second, n, m)) {
    throw GraphError("line " + std::to_string(lines[0].first) + ": expected header \"n m\"");
  }
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw GraphError("header declares " + std::to_string(m) + " edges but " +
                     std::to_string(lines.size() - 1) + " edge lines follow");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    long long u = 0;
    long long v = 0;
    if (!parse_pair(lines[i].second, u, v)) {
      throw GraphError("line " + std::to_string(lines[i].first) + ": expected \"u v\"");
    }
    if (u >= n || v >= n) {
      throw GraphError("line " + std::to_string(lines[i].first) + ": vertex index out of range");
    }
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::vector<long long> distasums(const Graph& g) {
  const int n = g.order();
  std::vector<long long> sums(n, 0);
  std::vector<int> dist(n);
  std::queue<int> queue;
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    queue.push(s);
    int reached = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          sums[s] += dist[w];
          ++reached;
          queue.push(w);
        }
      }
    }
    if (reached != n) throw GraphError("distasums: graph is disconnected");
  }
  return sums;
}

int cyclomatic_number(const Graph& g) {
  if (!g.is_connected()) throw GraphError("cyclomatic number: graph is disconnected");
  return g.size() - g.order() + 1;
}

long long triangle_count(const Graph& g) {
  // trace(A^3) = sum_i sum_{j~i} sum_{k~j} A_ki
  long long closed3 = 0;
  for (int i = 0; i < g.order(); ++i) {
    for (int j : g.neighbors(i)) {
      for (int k : g.neighbors(j)) closed3 += g.adjacent(k, i) ? 1 : 0;
    }
  }
  return closed3 / 6;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(g.order());
  for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

std::string degree_string(const Graph& g) {
  std::string out;
  for (int d : degree_sequence(g)) {
    if (!out.empty()) out += '-';
    out += std::to_string(d);
  }
  return out;
}

Graph relabeled(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw GraphError("relabel: permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Graph(g.order(), std::move(edges));
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, std::move(edges));
}

}  // namespace spti
