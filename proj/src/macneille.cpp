#include "higman/macneille.hpp"

#include <algorithm>
#include <set>

namespace higman {

std::vector<Word> lowered_subwords(const Alphabet& a, const Word& g) {
  constexpr size_t kCap = 2'000'000;
  std::set<std::vector<Letter>> acc = {{}};
  for (size_t i = 0; i < g.size(); ++i) {
    std::set<std::vector<Letter>> next;
    for (const auto& partial : acc) {
      next.insert(partial);  // skip the position
      for (Letter c : a.lowers(g[i])) {
        std::vector<Letter> ext = partial;
        ext.push_back(c);
        next.insert(std::move(ext));
      }
    }
    if (next.size() > kCap) {
      throw DomainError("lower cone enumeration exceeds the instance limit");
    }
    acc = std::move(next);
  }
  std::vector<Word> out;
  out.reserve(acc.size());
  for (const auto& ls : acc) out.emplace_back(ls);
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

DownSetMax lower_cone(const UpSet& f) {
  if (f.is_empty()) {
    throw DomainError(
        "lower cone of the empty segment is all of A* and has no finite "
        "antichain of maximal elements");
  }
  const Alphabet& a = f.alphabet();
  const Word& shortest = f.gens().front();
  std::vector<Word> common;
  for (const Word& w : lowered_subwords(a, shortest)) {
    bool below_all = true;
    for (const Word& g : f.gens()) {
      if (!higman_leq(a, w, g)) {
        below_all = false;
        break;
      }
    }
    if (below_all) common.push_back(w);
  }
  return DownSetMax{&a, maximal_words(a, std::move(common))};
}

UpSet upper_cone(const Alphabet& a, const std::vector<Word>& words) {
  UpSet acc = UpSet::all(a);
  for (const Word& w : words) {
    acc = intersect(acc, UpSet::principal(a, w));
  }
  return acc;
}

UpSet closure(const UpSet& f) {
  if (f.is_empty()) return f;  // cone of the cone collapses back to empty
  return upper_cone(f.alphabet(), lower_cone(f).maxgens);
}

bool is_closed(const UpSet& f) { return closure(f) == f; }

UpSet closed_union(const Alphabet& a, const std::vector<UpSet>& fs) {
  UpSet acc = UpSet::empty(a);
  for (const UpSet& f : fs) acc = union_meet(acc, f);
  return closure(acc);
}

}  // namespace higman
