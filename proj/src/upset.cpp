#include "higman/upset.hpp"

#include <algorithm>
#include <optional>

namespace higman {

namespace {

void canonical_sort(std::vector<Word>& words) {
  std::sort(words.begin(), words.end(), shortlex_less);
  words.erase(std::unique(words.begin(), words.end()), words.end());
}

Word prepend(Letter c, const Word& w) {
  std::vector<Letter> ls;
  ls.reserve(w.size() + 1);
  ls.push_back(c);
  ls.insert(ls.end(), w.letters().begin(), w.letters().end());
  return Word(std::move(ls));
}

bool is_antichain(const Alphabet& a, const std::vector<Word>& words) {
  for (size_t i = 0; i < words.size(); ++i) {
    for (size_t j = 0; j < words.size(); ++j) {
      if (i != j && higman_leq(a, words[i], words[j])) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Word> minimal_words(const Alphabet& a, std::vector<Word> words) {
  canonical_sort(words);
  std::vector<Word> out;
  for (size_t i = 0; i < words.size(); ++i) {
    bool minimal = true;
    // Only shorter-or-equal words can embed, and those precede i.
    for (size_t j = 0; j < words.size() && words[j].size() <= words[i].size();
         ++j) {
      if (j != i && higman_leq(a, words[j], words[i])) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(words[i]);
  }
  return out;
}

std::vector<Word> maximal_words(const Alphabet& a, std::vector<Word> words) {
  canonical_sort(words);
  std::vector<Word> out;
  for (size_t i = 0; i < words.size(); ++i) {
    bool maximal = true;
    for (size_t j = 0; j < words.size(); ++j) {
      if (j != i && words[j].size() >= words[i].size() &&
          higman_leq(a, words[i], words[j])) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(words[i]);
  }
  return out;
}

UpSet UpSet::empty(const Alphabet& a) { return UpSet(&a, {}); }

UpSet UpSet::all(const Alphabet& a) { return UpSet(&a, {Word()}); }

UpSet UpSet::principal(const Alphabet& a, Word w) {
  return UpSet(&a, {std::move(w)});
}

UpSet UpSet::of(const Alphabet& a, std::vector<Word> words) {
  return minimize(a, std::move(words));
}

UpSet minimize(const Alphabet& a, std::vector<Word> words) {
  return UpSet(&a, minimal_words(a, std::move(words)));
}

bool upset_less(const UpSet& f, const UpSet& g) {
  return std::lexicographical_compare(f.gens().begin(), f.gens().end(),
                                      g.gens().begin(), g.gens().end(),
                                      shortlex_less);
}

bool member(const UpSet& f, const Word& w) {
  for (const Word& g : f.gens()) {
    if (g.size() > w.size()) break;  // gens are shortlex-sorted
    if (higman_leq(f.alphabet(), g, w)) return true;
  }
  return false;
}

bool contains(const UpSet& f, const UpSet& g) {
  internal_check(&f.alphabet() == &g.alphabet(),
                 "containment across distinct alphabets");
  for (const Word& w : g.gens()) {
    if (!member(f, w)) return false;
  }
  return true;
}

UpSet concat(const UpSet& f, const UpSet& g) {
  internal_check(&f.alphabet() == &g.alphabet(),
                 "concatenation across distinct alphabets");
  const Alphabet& a = f.alphabet();
  if (f.is_empty() || g.is_empty()) return UpSet::empty(a);
  std::vector<Word> products;
  products.reserve(f.gens().size() * g.gens().size());
  for (const Word& u : f.gens()) {
    for (const Word& v : g.gens()) products.push_back(u + v);
  }
  const size_t expected = f.gens().size() * g.gens().size();
  std::sort(products.begin(), products.end(), shortlex_less);
  internal_check(
      std::adjacent_find(products.begin(), products.end()) == products.end(),
      "generator product collapsed: |UV| != |U||V|");
  internal_check(products.size() == expected,
                 "generator product has the wrong cardinality");
  internal_check(is_antichain(a, products),
                 "generator product is not an antichain");
  return UpSet(&a, std::move(products));
}

UpSet union_meet(const UpSet& f, const UpSet& g) {
  internal_check(&f.alphabet() == &g.alphabet(),
                 "union across distinct alphabets");
  std::vector<Word> words = f.gens();
  words.insert(words.end(), g.gens().begin(), g.gens().end());
  return minimize(f.alphabet(), std::move(words));
}

std::vector<Word> min_upper_bounds(const Alphabet& a, const Word& u,
                                   const Word& v) {
  const size_t nu = u.size();
  const size_t nv = v.size();
  std::vector<std::optional<std::vector<Word>>> memo((nu + 1) * (nv + 1));
  auto solve = [&](auto&& self, size_t i, size_t j) -> const std::vector<Word>& {
    auto& slot = memo[i * (nv + 1) + j];
    if (slot) return *slot;
    std::vector<Word> cands;
    if (i == nu) {
      cands.push_back(v.suffix(j));
    } else if (j == nv) {
      cands.push_back(u.suffix(i));
    } else {
      // A minimal common upper bound starts either with a merged first
      // letter covering both heads, or with one head alone.
      for (Letter c : a.min_upper_bounds(u[i], v[j])) {
        for (const Word& m : self(self, i + 1, j + 1)) {
          cands.push_back(prepend(c, m));
        }
      }
      for (const Word& m : self(self, i + 1, j)) {
        cands.push_back(prepend(u[i], m));
      }
      for (const Word& m : self(self, i, j + 1)) {
        cands.push_back(prepend(v[j], m));
      }
    }
    slot = minimal_words(a, std::move(cands));
    return *slot;
  };
  return solve(solve, 0, 0);
}

UpSet intersect(const UpSet& f, const UpSet& g) {
  internal_check(&f.alphabet() == &g.alphabet(),
                 "intersection across distinct alphabets");
  const Alphabet& a = f.alphabet();
  if (f.is_empty() || g.is_empty()) return UpSet::empty(a);
  std::vector<Word> pool;
  for (const Word& u : f.gens()) {
    for (const Word& v : g.gens()) {
      std::vector<Word> mubs = min_upper_bounds(a, u, v);
      pool.insert(pool.end(), mubs.begin(), mubs.end());
    }
  }
  return minimize(a, std::move(pool));
}

namespace {

UpSet letter_quotient(const UpSet& f, Letter c, Side side) {
  const Alphabet& a = f.alphabet();
  std::vector<Word> cands;
  for (const Word& z : f.gens()) {
    cands.push_back(z);
    if (z.empty()) continue;
    if (side == Side::right && a.leq(z.back(), c)) {
      cands.push_back(z.without_last());
    } else if (side == Side::left && a.leq(z.front(), c)) {
      cands.push_back(z.without_first());
    }
  }
  return minimize(a, std::move(cands));
}

}  // namespace

UpSet quotient(const UpSet& f, const Word& w, Side side) {
  UpSet cur = f;
  if (side == Side::right) {
    for (size_t i = w.size(); i-- > 0;) {
      cur = letter_quotient(cur, w[i], Side::right);
    }
  } else {
    for (size_t i = 0; i < w.size(); ++i) {
      cur = letter_quotient(cur, w[i], Side::left);
    }
  }
  return cur;
}

UpSet residual(const UpSet& f, const UpSet& b, Side side) {
  internal_check(&f.alphabet() == &b.alphabet(),
                 "residual across distinct alphabets");
  const Alphabet& a = f.alphabet();
  if (b.is_empty()) return UpSet::all(a);
  UpSet acc = UpSet::all(a);
  for (const Word& w : b.gens()) {
    acc = intersect(acc, quotient(f, w, side));
    if (acc.is_empty()) break;
  }
  return acc;
}

size_t graduation(const UpSet& f) {
  if (f.is_empty()) {
    throw DomainError("graduation undefined on the empty segment");
  }
  return f.gens().front().size();
}

UpSet involute(const UpSet& f) {
  const Alphabet& a = f.alphabet();
  std::vector<Word> out;
  out.reserve(f.gens().size());
  for (const Word& w : f.gens()) out.push_back(involute(a, w));
  return minimize(a, std::move(out));
}

std::string to_string(const UpSet& f) {
  if (f.is_empty()) return "∅";
  if (f.is_all()) return "A*";
  std::string out = "↑{";
  for (size_t i = 0; i < f.gens().size(); ++i) {
    if (i > 0) out += ",";
    out += to_string(f.alphabet(), f.gens()[i]);
  }
  out += "}";
  return out;
}

}  // namespace higman
