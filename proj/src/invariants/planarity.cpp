#include <algorithm>
#include <deque>

#include "cycgraph/invariants.hpp"

namespace cycgraph {

namespace {

using AdjList = std::vector<std::vector<std::size_t>>;

// Edge sets of the biconnected blocks of the component containing `root`.
std::vector<std::vector<Edge>> biconnected_blocks(const AdjList& adj, std::size_t root,
                                                  std::vector<std::size_t>& disc,
                                                  std::vector<std::size_t>& low,
                                                  std::size_t& timer) {
  struct Frame {
    std::size_t v, parent, next;
  };
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::vector<Edge>> blocks;
  std::vector<Edge> edge_stack;
  std::vector<Frame> frames{{root, kNone, 0}};
  disc[root] = low[root] = ++timer;
  while (!frames.empty()) {
    Frame& f = frames.back();
    if (f.next < adj[f.v].size()) {
      std::size_t w = adj[f.v][f.next++];
      if (w == f.parent) continue;
      if (disc[w] == 0) {
        edge_stack.emplace_back(f.v, w);
        disc[w] = low[w] = ++timer;
        frames.push_back({w, f.v, 0});
      } else if (disc[w] < disc[f.v]) {
        edge_stack.emplace_back(f.v, w);
        low[f.v] = std::min(low[f.v], disc[w]);
      }
      continue;
    }
    const std::size_t v = f.v, p = f.parent;
    frames.pop_back();
    if (p == kNone) continue;
    low[p] = std::min(low[p], low[v]);
    if (low[v] >= disc[p]) {
      std::vector<Edge> block;
      while (true) {
        Edge e = edge_stack.back();
        edge_stack.pop_back();
        block.push_back(e);
        if (e.first == p && e.second == v) break;
      }
      blocks.push_back(std::move(block));
    }
  }
  return blocks;
}

// Incremental face embedding of a 2-connected graph: embed a cycle, then
// repeatedly place a fragment into an admissible face, preferring fragments
// with a single admissible face.
class FaceEmbedder {
 public:
  FaceEmbedder(std::size_t n, const std::vector<Edge>& edges)
      : n_(n), edge_total_(edges.size()), adj_(n), emb_edge_(n * n, 0), emb_vertex_(n, 0) {
    for (auto [u, v] : edges) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
  }

  bool planar() {
    embed_initial_cycle();
    std::vector<std::size_t> stamp(n_);
    while (embedded_edges_ < edge_total_) {
      auto fragments = find_fragments();
      std::vector<std::vector<std::size_t>> admissible(fragments.size());
      std::fill(stamp.begin(), stamp.end(), static_cast<std::size_t>(-1));
      for (std::size_t f = 0; f < faces_.size(); ++f) {
        for (auto v : faces_[f]) stamp[v] = f;
        for (std::size_t k = 0; k < fragments.size(); ++k) {
          const auto& att = fragments[k].attachments;
          if (std::all_of(att.begin(), att.end(), [&](std::size_t v) { return stamp[v] == f; }))
            admissible[k].push_back(f);
        }
      }
      std::size_t chosen = fragments.size();
      for (std::size_t k = 0; k < fragments.size(); ++k) {
        if (admissible[k].empty()) return false;
        if (admissible[k].size() == 1 && chosen == fragments.size()) chosen = k;
      }
      if (chosen == fragments.size()) chosen = 0;
      embed_path(fragment_path(fragments[chosen]), admissible[chosen].front());
    }
    return true;
  }

 private:
  struct Fragment {
    std::vector<std::size_t> attachments;
    std::vector<std::size_t> inner;  // empty for a single-edge fragment
  };

  bool edge_embedded(std::size_t u, std::size_t v) const { return emb_edge_[u * n_ + v]; }
  void mark_edge(std::size_t u, std::size_t v) {
    emb_edge_[u * n_ + v] = emb_edge_[v * n_ + u] = 1;
    ++embedded_edges_;
  }

  void embed_initial_cycle() {
    // Close edge (0, b) with a shortest 0-avoiding-the-edge path from b.
    const std::size_t a = 0, b = adj_[0].front();
    std::vector<std::size_t> parent(n_, n_);
    std::deque<std::size_t> queue{b};
    parent[b] = b;
    while (!queue.empty() && parent[a] == n_) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (auto w : adj_[u]) {
        if (parent[w] != n_ || (u == b && w == a)) continue;
        parent[w] = u;
        queue.push_back(w);
      }
    }
    std::vector<std::size_t> cycle;
    for (std::size_t v = a; v != b; v = parent[v]) cycle.push_back(v);
    cycle.push_back(b);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      emb_vertex_[cycle[i]] = 1;
      mark_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
    }
    faces_.push_back(cycle);
    faces_.emplace_back(cycle.rbegin(), cycle.rend());
  }

  std::vector<Fragment> find_fragments() const {
    std::vector<Fragment> out;
    for (std::size_t u = 0; u < n_; ++u) {
      if (!emb_vertex_[u]) continue;
      for (auto w : adj_[u])
        if (w > u && emb_vertex_[w] && !edge_embedded(u, w)) out.push_back({{u, w}, {}});
    }
    std::vector<std::uint8_t> seen(n_, 0), attached(n_, 0);
    for (std::size_t s = 0; s < n_; ++s) {
      if (emb_vertex_[s] || seen[s]) continue;
      Fragment frag;
      frag.inner.push_back(s);
      seen[s] = 1;
      for (std::size_t head = 0; head < frag.inner.size(); ++head)
        for (auto w : adj_[frag.inner[head]]) {
          if (emb_vertex_[w]) {
            if (!attached[w]) {
              attached[w] = 1;
              frag.attachments.push_back(w);
            }
          } else if (!seen[w]) {
            seen[w] = 1;
            frag.inner.push_back(w);
          }
        }
      for (auto w : frag.attachments) attached[w] = 0;
      out.push_back(std::move(frag));
    }
    return out;
  }

  // Path between two distinct attachments through the fragment interior.
  std::vector<std::size_t> fragment_path(const Fragment& frag) const {
    if (frag.inner.empty()) return frag.attachments;
    const std::size_t a = frag.attachments.front();
    std::vector<std::size_t> parent(n_, n_);
    std::deque<std::size_t> queue;
    for (auto w : adj_[a])
      if (!emb_vertex_[w] && std::find(frag.inner.begin(), frag.inner.end(), w) != frag.inner.end()) {
        parent[w] = a;
        queue.push_back(w);
      }
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (auto y : adj_[x]) {
        if (emb_vertex_[y]) {
          if (y == a) continue;
          std::vector<std::size_t> path{y};
          for (std::size_t v = x; v != a; v = parent[v]) path.push_back(v);
          path.push_back(a);
          std::reverse(path.begin(), path.end());
          return path;
        }
        if (parent[y] == n_) {
          parent[y] = x;
          queue.push_back(y);
        }
      }
    }
    return {};  // unreachable for 2-connected input
  }

  void embed_path(const std::vector<std::size_t>& path, std::size_t face_index) {
    const std::size_t a = path.front(), b = path.back();
    const auto face = faces_[face_index];
    const std::size_t len = face.size();
    const std::size_t i = static_cast<std::size_t>(std::find(face.begin(), face.end(), a) - face.begin());
    const std::size_t j = static_cast<std::size_t>(std::find(face.begin(), face.end(), b) - face.begin());

    // a..b along the face, then back through the path interior.
    std::vector<std::size_t> first, second;
    for (std::size_t k = i; k != j; k = (k + 1) % len) first.push_back(face[k]);
    first.push_back(b);
    for (std::size_t k = path.size() - 2; k >= 1; --k) first.push_back(path[k]);
    // b..a along the face, then forward through the path interior.
    for (std::size_t k = j; k != i; k = (k + 1) % len) second.push_back(face[k]);
    second.push_back(a);
    for (std::size_t k = 1; k + 1 < path.size(); ++k) second.push_back(path[k]);

    faces_[face_index] = std::move(first);
    faces_.push_back(std::move(second));
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      emb_vertex_[path[k]] = 1;
      mark_edge(path[k], path[k + 1]);
    }
    emb_vertex_[b] = 1;
  }

  std::size_t n_;
  std::size_t edge_total_;
  AdjList adj_;
  std::vector<std::uint8_t> emb_edge_;
  std::vector<std::uint8_t> emb_vertex_;
  std::size_t embedded_edges_ = 0;
  std::vector<std::vector<std::size_t>> faces_;
};

bool block_planar(const std::vector<Edge>& block) {
  std::vector<std::size_t> verts;
  for (auto [u, v] : block) {
    verts.push_back(u);
    verts.push_back(v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  const std::size_t n = verts.size(), m = block.size();
  if (n <= 4 || m <= n) return true;  // small, a single edge, or a cycle
  if (m > 3 * n - 6) return false;
  std::vector<Edge> local;
  local.reserve(m);
  auto id = [&](std::size_t v) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  for (auto [u, v] : block) local.emplace_back(id(u), id(v));
  return FaceEmbedder(n, local).planar();
}

}  // namespace

std::optional<bool> is_planar(const Graph& g, const SolverLimits& limits) {
  const std::size_t n = g.vertex_count();
  auto components = connected_components(g);
  for (const auto& comp : components)
    if (comp.size() > limits.planarity_component_cap) return std::nullopt;

  AdjList adj(n);
  for (auto [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::size_t timer = 0;
  for (const auto& comp : components) {
    const std::size_t v = comp.size();
    if (v <= 4) continue;
    std::size_t e = 0;
    for (auto x : comp) e += adj[x].size();
    e /= 2;
    if (e > 3 * v - 6) return false;
    for (const auto& block : biconnected_blocks(adj, comp.front(), disc, low, timer))
      if (!block_planar(block)) return false;
  }
  return true;
}

}  // namespace cycgraph
