#ifndef HIGMAN_BLOCKS_HPP_
#define HIGMAN_BLOCKS_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "higman/envelope.hpp"
#include "higman/factorization.hpp"

namespace higman {

// The simple undirected graph underlying a transition system. Loops are
// implicit at every vertex and never stored.
struct Graph {
  size_t n = 0;
  std::vector<std::vector<size_t>> adj;  // sorted neighbour lists

  std::vector<std::pair<size_t, size_t>> edges() const;  // p < q
};

struct BlockPath {
  // Consecutive blocks share exactly one vertex, non-consecutive blocks are
  // disjoint; x lies in the first block and y in the last.
  std::vector<std::vector<size_t>> blocks;  // sorted vertex sets
  std::vector<size_t> cuts;                 // cuts[i] joins blocks i and i+1
};

Graph graph_of(const TransitionSystem& m);

bool is_connected(const Graph& g);

// Maximal connected induced subgraphs without a cut vertex, as sorted vertex
// sets. An isolated vertex forms its own block.
std::vector<std::vector<size_t>> biconnected_blocks(const Graph& g);

// Vertices whose removal disconnects the graph.
std::vector<size_t> cut_vertices(const Graph& g);

// Orders the blocks of a connected graph along the path from the block
// holding x to the block holding y. Requires the block tree to actually be
// a path with x and y in its end blocks and neither a cut vertex, which is
// guaranteed for envelope graphs; anything else reports an internal
// structure violation.
BlockPath block_decomposition(const Graph& g, size_t x, size_t y);

// Factorization through the envelope: no cut vertex means F itself is
// irreducible; otherwise each block of the envelope graph, read as an
// automaton between its entry and exit vertices, accepts one irreducible
// factor and the factors multiply back to F in block-path order.
Factorization factorize_via_blocks(const UpSet& f);

}  // namespace higman

#endif  // HIGMAN_BLOCKS_HPP_
