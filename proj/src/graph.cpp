#include "genpos/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace genpos {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::UnreachablePair: return "UnreachablePair";
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::WrongDiameter: return "WrongDiameter";
    case ErrorCode::NotACover: return "NotACover";
    case ErrorCode::NotIsometric: return "NotIsometric";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::DisconnectedGadget: return "DisconnectedGadget";
    case ErrorCode::InvalidCoordinate: return "InvalidCoordinate";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::TrailingBits: return "TrailingBits";
    case ErrorCode::BadToken: return "BadToken";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::UnknownClaimId: return "UnknownClaimId";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

// ---- VertexSet ----

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::range(int n) {
  std::vector<Vertex> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return VertexSet(std::move(v), Sorted{});
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

Bitset VertexSet::to_bits(int n) const {
  validate(n);
  Bitset b(n);
  for (auto v : members_) b.set(v);
  return b;
}

void VertexSet::validate(int n) const {
  if (!members_.empty() && (members_.front() < 0 || members_.back() >= n))
    throw Error(ErrorCode::InvalidVertex, "vertex set " + genpos::to_string(*this) + " not within 0.." + std::to_string(n - 1));
}

std::string to_string(const VertexSet& s) {
  std::ostringstream os;
  os << '{';
  for (int i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

// ---- Graph ----

Graph::Graph(int n) : n_(n), adj_(n, Bitset(n)) {
  if (n < 0) throw Error(ErrorCode::InvalidParameter, "negative order");
}

Bitset Graph::closed_neighbors(Vertex u) const {
  Bitset b = adj_[u];
  b.set(u);
  return b;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[u].next(u + 1); v >= 0; v = adj_[u].next(v + 1)) out.emplace_back(u, v);
  return out;
}

std::string Graph::label(Vertex v) const { return labels_.empty() ? std::to_string(v) : labels_[v]; }

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (static_cast<int>(labels.size()) != n_) throw Error(ErrorCode::InvalidParameter, "label count does not match order");
  Graph g(*this);
  g.labels_ = std::move(labels);
  return g;
}

Graph Graph::without_labels() const {
  Graph g(*this);
  g.labels_.clear();
  return g;
}

GraphBuilder::GraphBuilder(int n) : graph_(n) {}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  const int n = graph_.n_;
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw Error(ErrorCode::InvalidVertex, "edge " + std::to_string(u) + "-" + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
  if (u == v) throw Error(ErrorCode::SelfLoop, "loop at vertex " + std::to_string(u));
  if (!graph_.adj_[u].test(v)) {
    graph_.adj_[u].set(v);
    graph_.adj_[v].set(u);
    ++graph_.m_;
  }
  return *this;
}

GraphBuilder& GraphBuilder::add_edges(std::span<const Edge> edges) {
  for (auto [u, v] : edges) add_edge(u, v);
  return *this;
}

GraphBuilder& GraphBuilder::set_label(Vertex v, std::string label) {
  if (v < 0 || v >= graph_.n_) throw Error(ErrorCode::InvalidVertex, "label for vertex " + std::to_string(v));
  if (graph_.labels_.empty()) {
    graph_.labels_.resize(graph_.n_);
    for (int i = 0; i < graph_.n_; ++i) graph_.labels_[i] = std::to_string(i);
  }
  graph_.labels_[v] = std::move(label);
  return *this;
}

Graph GraphBuilder::build() && { return std::move(graph_); }
Graph GraphBuilder::build() const& { return graph_; }

Graph make_graph(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  b.add_edges(edges);
  return std::move(b).build();
}

// ---- metric ----

DistMatrix bfs_all_pairs(const Graph& g) {
  const int n = g.order();
  DistMatrix d(n);
  std::vector<Vertex> queue(n);
  for (int s = 0; s < n; ++s) {
    Bitset unseen = Bitset::full(n);
    unseen.reset(s);
    d.at(s, s) = 0;
    int head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const Vertex u = queue[head++];
      Bitset fresh = g.neighbors(u) & unseen;
      unseen.subtract(fresh);
      for (int w = fresh.first(); w >= 0; w = fresh.next(w + 1)) {
        d.at(s, w) = d(s, u) + 1;
        queue[tail++] = w;
      }
    }
  }
  return d;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<VertexSet> out;
  Bitset unseen = Bitset::full(n);
  while (unseen.any()) {
    Bitset comp(n), frontier(n);
    frontier.set(unseen.first());
    while (frontier.any()) {
      comp |= frontier;
      Bitset next(n);
      for (int u = frontier.first(); u >= 0; u = frontier.next(u + 1)) next |= g.neighbors(u);
      next.subtract(comp);
      frontier = next;
    }
    unseen.subtract(comp);
    out.push_back(VertexSet::from_bits(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || connected_components(g).size() == 1; }

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw Error(ErrorCode::DisconnectedGraph, std::string(what) + " requires a connected graph");
}

int diameter(const Graph& g, const DistMatrix& d) {
  int best = 0;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      if (!d.reachable(u, v)) throw Error(ErrorCode::DisconnectedGraph, "diameter of a disconnected graph");
      best = std::max(best, d(u, v));
    }
  return best;
}

int diameter(const Graph& g) { return diameter(g, bfs_all_pairs(g)); }

VertexSet interval(const Graph& g, const DistMatrix& d, Vertex u, Vertex v) {
  if (!d.reachable(u, v))
    throw Error(ErrorCode::UnreachablePair, std::to_string(u) + " and " + std::to_string(v) + " are in different components");
  std::vector<Vertex> out;
  const int duv = d(u, v);
  for (int w = 0; w < g.order(); ++w)
    if (d.reachable(u, w) && d(u, w) + d(w, v) == duv) out.push_back(w);
  return VertexSet(std::move(out));
}

Graph complement(const Graph& g) {
  const int n = g.order();
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  Graph out = std::move(b).build();
  return g.has_labels() ? out.with_labels(g.labels()) : out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  s.validate(g.order());
  const int k = s.size();
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i) {
    b.set_label(i, std::to_string(s[i]));
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(s[i], s[j])) b.add_edge(i, j);
  }
  return std::move(b).build();
}

bool is_isometric_subgraph(const Graph& g, const DistMatrix& d, const VertexSet& s) {
  const Graph h = induced_subgraph(g, s);
  const DistMatrix dh = bfs_all_pairs(h);
  for (int i = 0; i < s.size(); ++i)
    for (int j = i + 1; j < s.size(); ++j)
      if (!dh.reachable(i, j) || dh(i, j) != d(s[i], s[j])) return false;
  return true;
}

bool are_true_twins(const Graph& g, Vertex u, Vertex v) { return g.closed_neighbors(u) == g.closed_neighbors(v); }

}  // namespace genpos
