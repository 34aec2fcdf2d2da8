#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "higman/envelope.hpp"
#include "higman/oracle.hpp"

using namespace higman;
using test::U;
using test::W;

TEST_CASE("residuation distance basics") {
  const Alphabet a = Alphabet::make("ab");
  const UpSet f = U(a, {"ab"});
  CHECK(residuation_distance(f, f).is_all());
  CHECK(residuation_distance(UpSet::all(a), f) == f);
  CHECK(residuation_distance(U(a, {"a"}), f) == U(a, {"b"}));
  CHECK(residuation_distance(UpSet::all(a), UpSet::empty(a)).is_empty());
  // Symmetry through the involution.
  CHECK(residuation_distance(f, U(a, {"a"})) ==
        involute(residuation_distance(U(a, {"a"}), f)));
}

TEST_CASE("envelope of the two-letter ladder") {
  const Alphabet a = Alphabet::make("ab");
  const UpSet f = U(a, {"ab"});
  EnvelopeSpace s = build_envelope(f);
  REQUIRE(s.points.size() == 3);
  CHECK(s.points[0].is_all());
  CHECK(s.points[1] == U(a, {"a"}));
  CHECK(s.points[2] == f);
  CHECK(s.x == 0);
  CHECK(s.y == 2);
  CHECK(s.dist[0][1] == U(a, {"a"}));
  CHECK(s.dist[1][2] == U(a, {"b"}));
  CHECK(s.dist[0][2] == f);
  CHECK(s.dist[2][0] == U(a, {"ba"}));
}

TEST_CASE("boundary envelopes") {
  const Alphabet a = Alphabet::make("ab");
  EnvelopeSpace one = build_envelope(UpSet::all(a));
  CHECK(one.points.size() == 1);
  CHECK(one.x == one.y);

  EnvelopeSpace two = build_envelope(UpSet::empty(a));
  REQUIRE(two.points.size() == 2);
  CHECK(two.points[two.x].is_all());
  CHECK(two.points[two.y].is_empty());
  CHECK(two.dist[two.x][two.y].is_empty());
}

TEST_CASE("transition systems carry exactly the letter distances") {
  const Alphabet a = Alphabet::make("ab");
  EnvelopeSpace s = build_envelope(U(a, {"ab"}));
  TransitionSystem m = to_transition_system(s);
  const Letter la = *a.find("a");
  const Letter lb = *a.find("b");
  for (size_t p = 0; p < m.states; ++p) {
    CHECK(m.has(p, la, p));
    CHECK(m.has(p, lb, p));
  }
  CHECK(m.has(0, la, 1));
  CHECK(m.has(1, la, 0));  // involutive mirror, identity bar
  CHECK(m.has(1, lb, 2));
  CHECK_FALSE(m.has(0, la, 2));
  CHECK_FALSE(m.has(0, lb, 2));
}

TEST_CASE("accepted languages are the distances") {
  const Alphabet a = Alphabet::make("ab");
  const UpSet f = U(a, {"ab"});
  EnvelopeSpace s = build_envelope(f);
  TransitionSystem m = to_transition_system(s);
  CHECK(automaton_language(m, s.x, s.y) == f);
  CHECK(automaton_language(m, s.x, s.x).is_all());
  auto langs = automaton_distance_matrix(m);
  for (size_t p = 0; p < m.states; ++p) {
    for (size_t q = 0; q < m.states; ++q) {
      CHECK(langs[p][q] == s.dist[p][q]);
    }
  }

  EnvelopeSpace none = build_envelope(UpSet::empty(a));
  TransitionSystem mn = to_transition_system(none);
  CHECK(automaton_language(mn, none.x, none.y).is_empty());
}

TEST_CASE("gluing composes envelopes") {
  const Alphabet a = Alphabet::make("ab");
  EnvelopeSpace sa = build_envelope(U(a, {"a"}));
  EnvelopeSpace sb = build_envelope(U(a, {"b"}));
  EnvelopeSpace glued = glue(sa, sb);
  CHECK(glued.points.size() == 3);
  CHECK(spaces_isomorphic(build_envelope(U(a, {"ab"})), glued));

  EnvelopeSpace one = build_envelope(UpSet::all(a));
  CHECK(spaces_isomorphic(glue(sa, one), sa));
  CHECK(spaces_isomorphic(glue(one, sa), sa));

  CHECK(spaces_isomorphic(glue(sa, sa), build_envelope(U(a, {"aa"}))));
  CHECK_FALSE(spaces_isomorphic(sa, sb));  // d(x,y) differs as a value
  CHECK(spaces_isomorphic(sa, sa));
}

TEST_CASE("derived minimal pairs") {
  const Alphabet a = Alphabet::make("ab");
  EnvelopeSpace s = build_envelope(U(a, {"ab"}));
  auto pairs = derive_minimal_pairs(s);
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0].first.is_all());
  CHECK(pairs[0].second == U(a, {"ba"}));
  CHECK(pairs[1].first == U(a, {"a"}));
  CHECK(pairs[1].second == U(a, {"b"}));
  CHECK(pairs[2].first == U(a, {"ab"}));
  CHECK(pairs[2].second.is_all());

  auto one = derive_minimal_pairs(build_envelope(UpSet::all(a)));
  REQUIRE(one.size() == 1);
  CHECK(one[0].first.is_all());
  CHECK(one[0].second.is_all());

  auto none = derive_minimal_pairs(build_envelope(UpSet::empty(a)));
  REQUIRE(none.size() == 2);
  for (const auto& [x1, x2] : none) {
    CHECK((x1.is_all() || x1.is_empty()));
    CHECK(x1.is_all() == x2.is_empty());
  }
}

TEST_CASE("metric checks reject a tampered matrix") {
  const Alphabet a = Alphabet::make("ab");
  EnvelopeSpace s = build_envelope(U(a, {"ab"}));
  EnvelopeSpace broken = s;
  broken.dist[0][2] = UpSet::all(a);  // identity law violated
  CHECK_THROWS_AS(check_metric_space(broken), InternalError);
  EnvelopeSpace skewed = s;
  skewed.dist[0][1] = U(a, {"b"});  // involution law violated
  CHECK_THROWS_AS(check_metric_space(skewed), InternalError);
}
