#include "higman/blocks.hpp"

#include <algorithm>
#include <set>

namespace higman {

std::vector<std::pair<size_t, size_t>> Graph::edges() const {
  std::vector<std::pair<size_t, size_t>> out;
  for (size_t p = 0; p < n; ++p) {
    for (size_t q : adj[p]) {
      if (p < q) out.emplace_back(p, q);
    }
  }
  return out;
}

Graph graph_of(const TransitionSystem& m) {
  Graph g;
  g.n = m.states;
  std::vector<std::set<size_t>> adj(m.states);
  for (const Transition& t : m.trans) {
    if (t.from != t.to) {
      adj[t.from].insert(t.to);
      adj[t.to].insert(t.from);
    }
  }
  g.adj.reserve(m.states);
  for (auto& s : adj) g.adj.emplace_back(s.begin(), s.end());
  return g;
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return true;
  std::vector<bool> seen(g.n, false);
  std::vector<size_t> stack{0};
  seen[0] = true;
  size_t count = 1;
  while (!stack.empty()) {
    size_t v = stack.back();
    stack.pop_back();
    for (size_t w : g.adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.n;
}

namespace {

// Depth-first biconnectivity: pops the edge stack at articulation points,
// each popped bundle forming one block.
struct BlockFinder {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<std::pair<size_t, size_t>> edge_stack;
  std::vector<std::vector<size_t>> blocks;
  int timer = 0;

  explicit BlockFinder(const Graph& graph)
      : g(graph), disc(graph.n, -1), low(graph.n, -1) {}

  void emit_from(const std::pair<size_t, size_t>& top_edge) {
    std::set<size_t> verts;
    while (true) {
      auto e = edge_stack.back();
      edge_stack.pop_back();
      verts.insert(e.first);
      verts.insert(e.second);
      if (e == top_edge) break;
    }
    blocks.emplace_back(verts.begin(), verts.end());
  }

  void dfs(size_t root) {
    struct Frame {
      size_t v;
      size_t parent;
      size_t next_edge = 0;
    };
    std::vector<Frame> stack{{root, root}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next_edge < g.adj[f.v].size()) {
        size_t w = g.adj[f.v][f.next_edge++];
        if (disc[w] == -1) {
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        size_t w = f.v;
        size_t parent = f.parent;
        stack.pop_back();
        if (!stack.empty()) {
          low[parent] = std::min(low[parent], low[w]);
          if (low[w] >= disc[parent]) emit_from({parent, w});
        }
      }
    }
  }
};

}  // namespace

std::vector<std::vector<size_t>> biconnected_blocks(const Graph& g) {
  BlockFinder finder(g);
  for (size_t v = 0; v < g.n; ++v) {
    if (finder.disc[v] == -1) {
      finder.dfs(v);
      if (g.adj[v].empty()) finder.blocks.push_back({v});
    }
  }
  return finder.blocks;
}

std::vector<size_t> cut_vertices(const Graph& g) {
  std::vector<size_t> count(g.n, 0);
  for (const auto& block : biconnected_blocks(g)) {
    for (size_t v : block) ++count[v];
  }
  std::vector<size_t> out;
  for (size_t v = 0; v < g.n; ++v) {
    if (count[v] > 1) out.push_back(v);
  }
  return out;
}

BlockPath block_decomposition(const Graph& g, size_t x, size_t y) {
  if (!is_connected(g)) {
    throw DomainError("block decomposition needs a connected graph");
  }
  BlockPath out;
  out.blocks = biconnected_blocks(g);
  const size_t nb = out.blocks.size();
  if (nb == 1) return out;

  std::vector<std::vector<size_t>> blocks_of(g.n);
  for (size_t b = 0; b < nb; ++b) {
    for (size_t v : out.blocks[b]) blocks_of[v].push_back(b);
  }
  internal_check(blocks_of[x].size() == 1 && blocks_of[y].size() == 1,
                 "envelope structure violation: endpoint is a cut vertex");

  // Adjacency between blocks through shared cut vertices.
  std::vector<std::set<size_t>> nbr(nb);
  for (size_t v = 0; v < g.n; ++v) {
    const auto& bs = blocks_of[v];
    for (size_t i = 0; i < bs.size(); ++i) {
      for (size_t j = i + 1; j < bs.size(); ++j) {
        nbr[bs[i]].insert(bs[j]);
        nbr[bs[j]].insert(bs[i]);
      }
    }
  }
  size_t ends = 0;
  for (size_t b = 0; b < nb; ++b) {
    internal_check(nbr[b].size() <= 2,
                   "envelope structure violation: block tree is not a path");
    if (nbr[b].size() == 1) ++ends;
  }
  internal_check(ends == 2,
                 "envelope structure violation: block tree is not a path");

  const size_t first = blocks_of[x][0];
  internal_check(nbr[first].size() == 1,
                 "envelope structure violation: x is not in an end block");

  std::vector<std::vector<size_t>> ordered;
  std::vector<size_t> cuts;
  size_t prev = nb;  // sentinel
  size_t cur = first;
  while (true) {
    ordered.push_back(out.blocks[cur]);
    size_t next = nb;
    for (size_t b : nbr[cur]) {
      if (b != prev) next = b;
    }
    if (next == nb) break;
    std::vector<size_t> shared;
    std::set_intersection(out.blocks[cur].begin(), out.blocks[cur].end(),
                          out.blocks[next].begin(), out.blocks[next].end(),
                          std::back_inserter(shared));
    internal_check(shared.size() == 1,
                   "adjacent blocks must share exactly one vertex");
    cuts.push_back(shared[0]);
    prev = cur;
    cur = next;
  }
  internal_check(ordered.size() == nb,
                 "envelope structure violation: block tree is not a path");
  const auto& last = ordered.back();
  internal_check(std::binary_search(last.begin(), last.end(), y),
                 "envelope structure violation: y is not in the last block");
  for (size_t i = 0; i < ordered.size(); ++i) {
    for (size_t j = i + 2; j < ordered.size(); ++j) {
      std::vector<size_t> shared;
      std::set_intersection(ordered[i].begin(), ordered[i].end(),
                            ordered[j].begin(), ordered[j].end(),
                            std::back_inserter(shared));
      internal_check(shared.empty(),
                     "non-consecutive blocks must be disjoint");
    }
  }
  out.blocks = std::move(ordered);
  out.cuts = std::move(cuts);
  return out;
}

Factorization factorize_via_blocks(const UpSet& f) {
  if (f.is_empty()) throw DomainError("empty segment");
  if (f.is_all()) {
    throw DomainError("the neutral segment has the empty factorization");
  }
  EnvelopeSpace s = build_envelope(f);
  TransitionSystem m = to_transition_system(s);
  Graph g = graph_of(m);
  BlockPath path = block_decomposition(g, s.x, s.y);

  Factorization out;
  if (path.blocks.size() == 1) {
    out.factors.push_back(f);
    return out;
  }
  for (size_t i = 0; i < path.blocks.size(); ++i) {
    const std::vector<size_t>& block = path.blocks[i];
    TransitionSystem mi = restrict_to(m, block);
    auto local = [&](size_t state) {
      auto it = std::lower_bound(block.begin(), block.end(), state);
      internal_check(it != block.end() && *it == state,
                     "block endpoint missing from its block");
      return static_cast<size_t>(it - block.begin());
    };
    const size_t xi = (i == 0) ? s.x : path.cuts[i - 1];
    const size_t yi = (i + 1 == path.blocks.size()) ? s.y : path.cuts[i];
    out.factors.push_back(automaton_language(mi, local(xi), local(yi)));
  }
  UpSet product = out.factors.front();
  for (size_t i = 1; i < out.factors.size(); ++i) {
    product = concat(product, out.factors[i]);
  }
  internal_check(product == f, "block factors do not multiply back to F");
  for (const UpSet& factor : out.factors) {
    internal_check(is_irreducible(factor), "block factor is reducible");
  }
  return out;
}

}  // namespace higman
