#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "higman/blocks.hpp"
#include "higman/oracle.hpp"

using namespace higman;
using test::U;
using test::W;

namespace {

Graph path_graph(size_t n) {
  Graph g;
  g.n = n;
  g.adj.resize(n);
  for (size_t v = 0; v + 1 < n; ++v) {
    g.adj[v].push_back(v + 1);
    g.adj[v + 1].push_back(v);
  }
  for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

}  // namespace

TEST_CASE("graphs of the worked transition systems") {
  const Alphabet a = Alphabet::make("ab");
  Graph ladder = graph_of(to_transition_system(build_envelope(U(a, {"ab"}))));
  CHECK(ladder.edges() ==
        std::vector<std::pair<size_t, size_t>>{{0, 1}, {1, 2}});

  Graph loop = graph_of(to_transition_system(build_envelope(UpSet::all(a))));
  CHECK(loop.n == 1);
  CHECK(loop.edges().empty());

  Graph none = graph_of(to_transition_system(build_envelope(UpSet::empty(a))));
  CHECK(none.n == 2);
  CHECK(none.edges().empty());
  CHECK_FALSE(is_connected(none));
}

TEST_CASE("biconnected blocks of hand-built graphs") {
  SUBCASE("three-vertex path") {
    BlockPath p = block_decomposition(path_graph(3), 0, 2);
    REQUIRE(p.blocks.size() == 2);
    CHECK(p.blocks[0] == std::vector<size_t>{0, 1});
    CHECK(p.blocks[1] == std::vector<size_t>{1, 2});
    CHECK(p.cuts == std::vector<size_t>{1});
  }
  SUBCASE("triangle has a single block") {
    Graph tri;
    tri.n = 3;
    tri.adj = {{1, 2}, {0, 2}, {0, 1}};
    CHECK(cut_vertices(tri).empty());
    BlockPath p = block_decomposition(tri, 0, 2);
    REQUIRE(p.blocks.size() == 1);
    CHECK(p.blocks[0] == std::vector<size_t>{0, 1, 2});
    CHECK(p.cuts.empty());
  }
  SUBCASE("four-vertex path") {
    BlockPath p = block_decomposition(path_graph(4), 0, 3);
    REQUIRE(p.blocks.size() == 3);
    CHECK(p.cuts == std::vector<size_t>{1, 2});
  }
  SUBCASE("orientation follows x") {
    BlockPath p = block_decomposition(path_graph(3), 2, 0);
    CHECK(p.blocks[0] == std::vector<size_t>{1, 2});
    CHECK(p.blocks[1] == std::vector<size_t>{0, 1});
  }
  SUBCASE("disconnected graphs are a domain error") {
    Graph g;
    g.n = 2;
    g.adj.resize(2);
    CHECK_THROWS_AS(block_decomposition(g, 0, 1), DomainError);
  }
  SUBCASE("cut-vertex endpoints violate the envelope structure") {
    CHECK_THROWS_AS(block_decomposition(path_graph(3), 1, 2), InternalError);
  }
}

TEST_CASE("block factorization agrees with the worked examples") {
  const Alphabet a = Alphabet::make("ab");
  CHECK(factorize_via_blocks(U(a, {"ab"})).factors ==
        std::vector<UpSet>{U(a, {"a"}), U(a, {"b"})});
  CHECK(factorize_via_blocks(U(a, {"aa", "bb"})).factors ==
        std::vector<UpSet>{U(a, {"aa", "bb"})});
  CHECK(factorize_via_blocks(U(a, {"abb"})).factors ==
        std::vector<UpSet>{U(a, {"a"}), U(a, {"b"}), U(a, {"b"})});
  // The product of the block languages reproduces the segment, as seen by
  // the oracle too.
  CHECK(oracle::same_words(
      oracle::truncate(concat(concat(U(a, {"a"}), U(a, {"b"})), U(a, {"b"})), 5)
          .words,
      oracle::truncate(U(a, {"abb"}), 5).words));

  CHECK_THROWS_AS(factorize_via_blocks(UpSet::empty(a)), DomainError);
  CHECK_THROWS_AS(factorize_via_blocks(UpSet::all(a)), DomainError);
}
