#include "higman/envelope.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace higman {

namespace {

constexpr size_t kMaxEnvelopePoints = 4096;

struct UpSetLess {
  bool operator()(const UpSet& a, const UpSet& b) const {
    return upset_less(a, b);
  }
};

struct UpSetPairLess {
  bool operator()(const std::pair<UpSet, UpSet>& a,
                  const std::pair<UpSet, UpSet>& b) const {
    if (upset_less(a.first, b.first)) return true;
    if (upset_less(b.first, a.first)) return false;
    return upset_less(a.second, b.second);
  }
};

}  // namespace

bool TransitionSystem::has(size_t from, Letter letter, size_t to) const {
  return std::binary_search(trans.begin(), trans.end(),
                            Transition{from, letter, to});
}

UpSet residuation_distance(const UpSet& p, const UpSet& q) {
  UpSet lhs = residual(involute(p), involute(q), Side::right);
  UpSet rhs = residual(q, p, Side::left);
  return intersect(lhs, rhs);
}

EnvelopeSpace build_envelope(const UpSet& f) {
  const Alphabet& a = f.alphabet();
  std::set<UpSet, UpSetLess> seen;
  std::vector<UpSet> todo{f};
  seen.insert(f);
  // Right word-quotients of F, saturated letter by letter.
  while (!todo.empty()) {
    UpSet cur = std::move(todo.back());
    todo.pop_back();
    for (Letter c = 0; c < a.size(); ++c) {
      UpSet next = quotient(cur, Word::of(c), Side::right);
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  // Close under pairwise intersection: residuals by arbitrary segments are
  // exactly the finite intersections of single-word quotients.
  std::vector<UpSet> pts(seen.begin(), seen.end());
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      UpSet meet = intersect(pts[i], pts[j]);
      if (seen.insert(meet).second) pts.push_back(std::move(meet));
      if (pts.size() > kMaxEnvelopePoints) {
        throw DomainError("envelope exceeds the point limit");
      }
    }
  }
  seen.insert(UpSet::all(a));

  EnvelopeSpace s;
  s.alphabet = &a;
  s.points.assign(seen.begin(), seen.end());
  const size_t n = s.points.size();
  for (size_t i = 0; i < n; ++i) {
    if (s.points[i].is_all()) s.x = i;
    if (s.points[i] == f) s.y = i;
  }
  s.dist.assign(n, std::vector<UpSet>(n, UpSet::all(a)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < i; ++j) {
      s.dist[i][j] = residuation_distance(s.points[i], s.points[j]);
      s.dist[j][i] = involute(s.dist[i][j]);
    }
  }
  internal_check(s.dist[s.x][s.y] == f,
                 "envelope endpoints are not at distance F");
  check_metric_space(s);
  check_metricsup(s);
  return s;
}

void check_metric_space(const EnvelopeSpace& s) {
  const size_t n = s.points.size();
  internal_check(s.dist.size() == n, "distance matrix shape mismatch");
  for (size_t p = 0; p < n; ++p) {
    internal_check(s.dist[p].size() == n, "distance matrix shape mismatch");
    internal_check(s.dist[p][p].is_all(), "identity law: d(p,p) != A*");
  }
  for (size_t p = 0; p < n; ++p) {
    for (size_t q = 0; q < n; ++q) {
      if (p != q) {
        internal_check(!s.dist[p][q].is_all(),
                       "identity law: A* between distinct points");
      }
      internal_check(s.dist[q][p] == involute(s.dist[p][q]),
                     "involution law violated");
    }
  }
  for (size_t p = 0; p < n; ++p) {
    for (size_t r = 0; r < n; ++r) {
      if (r == p) continue;
      for (size_t q = 0; q < n; ++q) {
        if (q == r || q == p) continue;
        internal_check(
            contains(s.dist[p][q], concat(s.dist[p][r], s.dist[r][q])),
            "triangle law violated");
      }
    }
  }
}

void check_metricsup(const EnvelopeSpace& s) {
  // The z = p summand already equals d(p,q), so the join over z collapses
  // to d(p,q) exactly when every summand contains it.
  const size_t n = s.points.size();
  std::map<std::pair<UpSet, UpSet>, UpSet, UpSetPairLess> cache;
  auto dv = [&](const UpSet& u, const UpSet& v) -> const UpSet& {
    auto it = cache.find({u, v});
    if (it != cache.end()) return it->second;
    return cache.emplace(std::make_pair(u, v), residuation_distance(u, v))
        .first->second;
  };
  for (size_t p = 0; p < n; ++p) {
    for (size_t q = p + 1; q < n; ++q) {
      for (size_t z = 0; z < n; ++z) {
        if (z == p || z == q) continue;
        internal_check(contains(dv(s.dist[z][p], s.dist[z][q]), s.dist[p][q]),
                       "sup formula violated: a summand clips d(p,q)");
      }
    }
  }
}

TransitionSystem to_transition_system(const EnvelopeSpace& s) {
  const Alphabet& a = *s.alphabet;
  TransitionSystem m;
  m.alphabet = &a;
  m.states = s.points.size();
  for (size_t p = 0; p < m.states; ++p) {
    for (size_t q = 0; q < m.states; ++q) {
      for (Letter c = 0; c < a.size(); ++c) {
        if (member(s.dist[p][q], Word::of(c))) {
          m.trans.push_back({p, c, q});
        }
      }
    }
  }
  std::sort(m.trans.begin(), m.trans.end());
  for (size_t p = 0; p < m.states; ++p) {
    for (Letter c = 0; c < a.size(); ++c) {
      internal_check(m.has(p, c, p), "transition system is not reflexive");
    }
  }
  for (const Transition& t : m.trans) {
    internal_check(m.has(t.to, a.bar(t.letter), t.from),
                   "transition system is not involutive");
    for (Letter c = 0; c < a.size(); ++c) {
      if (a.leq(t.letter, c)) {
        internal_check(m.has(t.from, c, t.to),
                       "transitions are not letter-upward-closed");
      }
    }
  }
  return m;
}

TransitionSystem restrict_to(const TransitionSystem& m,
                             const std::vector<size_t>& states) {
  internal_check(std::is_sorted(states.begin(), states.end()) &&
                     std::adjacent_find(states.begin(), states.end()) ==
                         states.end(),
                 "state restriction must be sorted and duplicate-free");
  TransitionSystem out;
  out.alphabet = m.alphabet;
  out.states = states.size();
  auto index_of = [&](size_t q) -> std::optional<size_t> {
    auto it = std::lower_bound(states.begin(), states.end(), q);
    if (it == states.end() || *it != q) return std::nullopt;
    return static_cast<size_t>(it - states.begin());
  };
  for (const Transition& t : m.trans) {
    auto from = index_of(t.from);
    auto to = index_of(t.to);
    if (from && to) out.trans.push_back({*from, t.letter, *to});
  }
  std::sort(out.trans.begin(), out.trans.end());
  return out;
}

std::vector<std::vector<UpSet>> automaton_distance_matrix(
    const TransitionSystem& m) {
  const Alphabet& a = *m.alphabet;
  const size_t n = m.states;
  std::vector<std::vector<UpSet>> e(n, std::vector<UpSet>(n, UpSet::empty(a)));
  for (size_t p = 0; p < n; ++p) e[p][p] = UpSet::all(a);
  std::vector<std::vector<std::vector<Word>>> letters(
      n, std::vector<std::vector<Word>>(n));
  for (const Transition& t : m.trans) {
    if (t.from != t.to) letters[t.from][t.to].push_back(Word::of(t.letter));
  }
  for (size_t p = 0; p < n; ++p) {
    for (size_t q = 0; q < n; ++q) {
      if (p != q && !letters[p][q].empty()) {
        e[p][q] = minimize(a, std::move(letters[p][q]));
      }
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t p = 0; p < n; ++p) {
      for (size_t q = 0; q < n; ++q) {
        if (p == q) continue;
        UpSet acc = e[p][q];
        for (size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          if (e[p][r].is_empty() || e[r][q].is_empty()) continue;
          acc = union_meet(acc, concat(e[p][r], e[r][q]));
        }
        if (!(acc == e[p][q])) {
          e[p][q] = std::move(acc);
          changed = true;
        }
      }
    }
  }
  return e;
}

UpSet automaton_language(const TransitionSystem& m, size_t from, size_t to) {
  internal_check(from < m.states && to < m.states,
                 "automaton state out of range");
  return automaton_distance_matrix(m)[from][to];
}

EnvelopeSpace glue(const EnvelopeSpace& s1, const EnvelopeSpace& s2) {
  internal_check(s1.alphabet == s2.alphabet,
                 "gluing spaces over distinct alphabets");
  const Alphabet& a = *s1.alphabet;
  const size_t n1 = s1.points.size();
  const size_t n2 = s2.points.size();
  const size_t n = n1 + n2 - 1;

  // Points of s1 keep their indices; points of s2 follow, with x of s2
  // identified with y of s1.
  std::vector<size_t> map2(n2);
  {
    size_t next = n1;
    for (size_t j = 0; j < n2; ++j) {
      map2[j] = (j == s2.x) ? s1.y : next++;
    }
  }
  EnvelopeSpace g;
  g.alphabet = &a;
  g.x = s1.x;
  g.y = map2[s2.y];
  g.dist.assign(n, std::vector<UpSet>(n, UpSet::all(a)));
  for (size_t i = 0; i < n1; ++i) {
    for (size_t j = 0; j < n1; ++j) g.dist[i][j] = s1.dist[i][j];
  }
  for (size_t i = 0; i < n2; ++i) {
    for (size_t j = 0; j < n2; ++j) g.dist[map2[i]][map2[j]] = s2.dist[i][j];
  }
  for (size_t i = 0; i < n1; ++i) {
    if (i == s1.y) continue;
    for (size_t j = 0; j < n2; ++j) {
      if (j == s2.x) continue;
      g.dist[i][map2[j]] = concat(s1.dist[i][s1.y], s2.dist[s2.x][j]);
      g.dist[map2[j]][i] = concat(s2.dist[j][s2.x], s1.dist[s1.y][i]);
    }
  }
  g.points.reserve(n);
  for (size_t i = 0; i < n; ++i) g.points.push_back(g.dist[g.x][i]);
  check_metric_space(g);
  return g;
}

bool spaces_isomorphic(const EnvelopeSpace& sa, const EnvelopeSpace& sb) {
  const size_t n = sa.points.size();
  if (sb.points.size() != n) return false;
  if ((sa.x == sa.y) != (sb.x == sb.y)) return false;

  constexpr size_t kUnset = static_cast<size_t>(-1);
  std::vector<size_t> a2b(n, kUnset);
  std::vector<bool> used(n, false);
  std::vector<size_t> assigned;

  auto consistent = [&](size_t i, size_t j) {
    for (size_t k : assigned) {
      if (!(sa.dist[i][k] == sb.dist[j][a2b[k]]) ||
          !(sa.dist[k][i] == sb.dist[a2b[k]][j])) {
        return false;
      }
    }
    return true;
  };
  auto assign = [&](size_t i, size_t j) {
    a2b[i] = j;
    used[j] = true;
    assigned.push_back(i);
  };

  if (!consistent(sa.x, sb.x)) return false;
  assign(sa.x, sb.x);
  if (sa.y != sa.x) {
    if (used[sb.y] || !consistent(sa.y, sb.y)) return false;
    assign(sa.y, sb.y);
  }

  std::vector<size_t> rest;
  for (size_t i = 0; i < n; ++i) {
    if (a2b[i] == kUnset) rest.push_back(i);
  }
  auto search = [&](auto&& self, size_t at) -> bool {
    if (at == rest.size()) return true;
    const size_t i = rest[at];
    for (size_t j = 0; j < n; ++j) {
      if (used[j] || !consistent(i, j)) continue;
      assign(i, j);
      if (self(self, at + 1)) return true;
      assigned.pop_back();
      used[j] = false;
      a2b[i] = kUnset;
    }
    return false;
  };
  return search(search, 0);
}

std::vector<std::pair<UpSet, UpSet>> derive_minimal_pairs(
    const EnvelopeSpace& s) {
  const UpSet f = s.dist[s.x][s.y];
  std::vector<std::pair<UpSet, UpSet>> pairs;
  pairs.reserve(s.points.size());
  for (const UpSet& p : s.points) {
    UpSet t = involute(residual(f, p, Side::left));
    internal_check(contains(f, concat(p, involute(t))),
                   "derived pair escapes the segment");
    pairs.emplace_back(p, std::move(t));
  }
  for (size_t i = 0; i < pairs.size(); ++i) {
    for (size_t j = 0; j < pairs.size(); ++j) {
      if (i == j) continue;
      const bool dominated =
          contains(pairs[j].first, pairs[i].first) &&
          contains(pairs[j].second, pairs[i].second) &&
          !(pairs[j].first == pairs[i].first &&
            pairs[j].second == pairs[i].second);
      internal_check(!dominated, "derived pair is not minimal");
    }
  }
  return pairs;
}

}  // namespace higman
