#include "higman/oracle.hpp"

#include <algorithm>

namespace higman::oracle {

namespace {

void canonical_sort(std::vector<Word>& words) {
  std::sort(words.begin(), words.end(), shortlex_less);
  words.erase(std::unique(words.begin(), words.end()), words.end());
}

}  // namespace

std::vector<Word> all_words(const Alphabet& a, size_t limit, size_t cap) {
  const size_t n = static_cast<size_t>(a.size());
  size_t total = 1;
  size_t layer = 1;
  for (size_t len = 1; len <= limit; ++len) {
    layer *= n;
    total += layer;
    if (total > cap) {
      throw DomainError("word enumeration exceeds the configured cap");
    }
  }
  std::vector<Word> out;
  out.reserve(total);
  out.emplace_back();
  size_t begin = 0;
  for (size_t len = 1; len <= limit; ++len) {
    size_t end = out.size();
    for (size_t i = begin; i < end; ++i) {
      for (Letter c = 0; c < a.size(); ++c) {
        std::vector<Letter> ls = out[i].letters();
        ls.push_back(c);
        out.emplace_back(std::move(ls));
      }
    }
    begin = end;
  }
  canonical_sort(out);
  return out;
}

bool embeds_exhaustive(const Alphabet& a, const Word& u, const Word& v) {
  auto search = [&](auto&& self, size_t i, size_t j) -> bool {
    if (i == u.size()) return true;
    if (u.size() - i > v.size() - j) return false;
    for (size_t k = j; k < v.size(); ++k) {
      if (a.leq(u[i], v[k]) && self(self, i + 1, k + 1)) return true;
    }
    return false;
  };
  return search(search, 0, 0);
}

BoundedLanguage truncate(const UpSet& f, size_t limit, size_t cap) {
  BoundedLanguage out;
  out.alphabet = &f.alphabet();
  out.limit = limit;
  for (const Word& w : all_words(f.alphabet(), limit, cap)) {
    bool inside = false;
    for (const Word& g : f.gens()) {
      if (embeds_exhaustive(f.alphabet(), g, w)) {
        inside = true;
        break;
      }
    }
    if (inside) out.words.push_back(w);
  }
  return out;
}

std::vector<Word> upclose(const Alphabet& a, const std::vector<Word>& below,
                          size_t limit, size_t cap) {
  std::vector<Word> out;
  for (const Word& w : all_words(a, limit, cap)) {
    for (const Word& b : below) {
      if (embeds_exhaustive(a, b, w)) {
        out.push_back(w);
        break;
      }
    }
  }
  return out;
}

std::vector<Word> concat_min(const Alphabet& a, const std::vector<Word>& x,
                             const std::vector<Word>& y) {
  return minimal_exhaustive(a, raw_concat(x, y));
}

std::vector<Word> concat_trunc(const BoundedLanguage& x,
                               const BoundedLanguage& y, size_t limit) {
  std::vector<Word> out;
  for (const Word& u : x.words) {
    for (const Word& v : y.words) {
      if (u.size() + v.size() <= limit) out.push_back(u + v);
    }
  }
  canonical_sort(out);
  return out;
}

std::vector<Word> residual_words(const BoundedLanguage& f, const Word& w,
                                 Side side) {
  if (w.size() > f.limit) {
    throw DomainError("truncation too shallow for the requested residual");
  }
  const size_t room = f.limit - w.size();
  std::vector<Word> out;
  for (const Word& u : all_words(*f.alphabet, room)) {
    Word probe = side == Side::right ? u + w : w + u;
    if (std::binary_search(f.words.begin(), f.words.end(), probe,
                           shortlex_less)) {
      out.push_back(u);
    }
  }
  return out;
}

std::vector<Word> minimal_exhaustive(const Alphabet& a,
                                     std::vector<Word> words) {
  canonical_sort(words);
  std::vector<Word> out;
  for (size_t i = 0; i < words.size(); ++i) {
    bool minimal = true;
    for (size_t j = 0; j < words.size(); ++j) {
      if (j != i && embeds_exhaustive(a, words[j], words[i])) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(words[i]);
  }
  return out;
}

std::vector<Word> maximal_exhaustive(const Alphabet& a,
                                     std::vector<Word> words) {
  canonical_sort(words);
  std::vector<Word> out;
  for (size_t i = 0; i < words.size(); ++i) {
    bool maximal = true;
    for (size_t j = 0; j < words.size(); ++j) {
      if (j != i && embeds_exhaustive(a, words[i], words[j])) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(words[i]);
  }
  return out;
}

std::vector<Word> set_union(std::vector<Word> x, const std::vector<Word>& y) {
  x.insert(x.end(), y.begin(), y.end());
  canonical_sort(x);
  return x;
}

std::vector<Word> set_intersection(const std::vector<Word>& x,
                                   const std::vector<Word>& y) {
  std::vector<Word> out;
  for (const Word& w : x) {
    if (std::binary_search(y.begin(), y.end(), w, shortlex_less)) {
      out.push_back(w);
    }
  }
  return out;
}

std::vector<Word> raw_concat(const std::vector<Word>& x,
                             const std::vector<Word>& y) {
  std::vector<Word> out;
  out.reserve(x.size() * y.size());
  for (const Word& u : x) {
    for (const Word& v : y) out.push_back(u + v);
  }
  canonical_sort(out);
  return out;
}

bool same_words(const std::vector<Word>& x, const std::vector<Word>& y) {
  return x == y;
}

}  // namespace higman::oracle
