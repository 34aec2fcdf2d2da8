#include "higman/alphabet.hpp"

#include <algorithm>
#include <set>

namespace higman {

std::optional<Letter> Alphabet::find(std::string_view name) const {
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<Letter>(i);
  }
  return std::nullopt;
}

Alphabet Alphabet::validate(const AlphabetSpec& spec) {
  if (spec.letters.empty()) {
    throw ParseError("alphabet must contain at least one letter");
  }
  Alphabet a;
  a.names_ = spec.letters;
  const size_t n = a.names_.size();
  {
    std::set<std::string> seen;
    for (const auto& name : a.names_) {
      if (name.empty()) throw ParseError("letter names must be non-empty");
      if (!seen.insert(name).second) {
        throw ParseError("duplicate letter name: " + name);
      }
    }
  }
  a.single_char_ = std::all_of(a.names_.begin(), a.names_.end(),
                               [](const std::string& s) { return s.size() == 1; });

  auto id_of = [&](const std::string& name) -> Letter {
    if (auto l = a.find(name)) return *l;
    throw ParseError("unknown letter: " + name);
  };

  a.leq_.assign(n * n, 0);
  for (size_t i = 0; i < n; ++i) a.leq_[i * n + i] = 1;
  for (const auto& [lo, hi] : spec.order) {
    a.leq_[static_cast<size_t>(id_of(lo)) * n + static_cast<size_t>(id_of(hi))] = 1;
  }
  // Reflexive-transitive closure.
  for (size_t k = 0; k < n; ++k) {
    for (size_t i = 0; i < n; ++i) {
      if (!a.leq_[i * n + k]) continue;
      for (size_t j = 0; j < n; ++j) {
        if (a.leq_[k * n + j]) a.leq_[i * n + j] = 1;
      }
    }
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (a.leq_[i * n + j] && a.leq_[j * n + i]) {
        throw ParseError("order pairs create a cycle through " + a.names_[i] +
                         " and " + a.names_[j]);
      }
    }
  }

  a.bar_.resize(n);
  for (size_t i = 0; i < n; ++i) a.bar_[i] = static_cast<Letter>(i);
  std::vector<bool> assigned(n, false);
  for (const auto& [x, y] : spec.involution) {
    Letter lx = id_of(x);
    Letter ly = id_of(y);
    auto bind = [&](Letter from, Letter to) {
      size_t f = static_cast<size_t>(from);
      if (assigned[f] && a.bar_[f] != to) {
        throw ParseError("involution is not a bijection: " + a.names_[f] +
                         " is paired twice");
      }
      a.bar_[f] = to;
      assigned[f] = true;
    };
    bind(lx, ly);
    bind(ly, lx);
  }
  for (size_t i = 0; i < n; ++i) {
    if (a.bar_[static_cast<size_t>(a.bar_[i])] != static_cast<Letter>(i)) {
      throw ParseError("involution composed with itself is not the identity");
    }
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (a.leq_[i * n + j] &&
          !a.leq_[static_cast<size_t>(a.bar_[i]) * n + static_cast<size_t>(a.bar_[j])]) {
        throw ParseError("involution does not preserve the letter order");
      }
    }
  }
  a.bar_is_identity_ = true;
  for (size_t i = 0; i < n; ++i) {
    if (a.bar_[i] != static_cast<Letter>(i)) a.bar_is_identity_ = false;
  }

  a.lowers_.resize(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (a.leq_[j * n + i]) a.lowers_[i].push_back(static_cast<Letter>(j));
    }
  }
  a.mubs_.resize(n * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      std::vector<Letter> uppers;
      for (size_t c = 0; c < n; ++c) {
        if (a.leq_[i * n + c] && a.leq_[j * n + c]) {
          uppers.push_back(static_cast<Letter>(c));
        }
      }
      std::vector<Letter>& out = a.mubs_[i * n + j];
      for (Letter c : uppers) {
        bool minimal = true;
        for (Letter d : uppers) {
          if (d != c && a.leq_[static_cast<size_t>(d) * n + static_cast<size_t>(c)]) {
            minimal = false;
            break;
          }
        }
        if (minimal) out.push_back(c);
      }
    }
  }
  return a;
}

Alphabet Alphabet::make(const std::string& letters,
                        const std::vector<std::string>& order,
                        const std::vector<std::string>& involution) {
  AlphabetSpec spec;
  for (char c : letters) spec.letters.emplace_back(1, c);
  for (const auto& p : order) {
    if (p.size() != 2) throw ParseError("order shorthand wants two characters");
    spec.order.emplace_back(std::string(1, p[0]), std::string(1, p[1]));
  }
  for (const auto& p : involution) {
    if (p.size() != 2) {
      throw ParseError("involution shorthand wants two characters");
    }
    spec.involution.emplace_back(std::string(1, p[0]), std::string(1, p[1]));
  }
  return validate(spec);
}

bool higman_leq(const Alphabet& a, const Word& u, const Word& v) {
  size_t j = 0;
  for (size_t i = 0; i < u.size(); ++i) {
    while (j < v.size() && !a.leq(u[i], v[j])) ++j;
    if (j == v.size()) return false;
    ++j;
  }
  return true;
}

Word involute(const Alphabet& a, const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (size_t i = w.size(); i-- > 0;) out.push_back(a.bar(w[i]));
  return Word(std::move(out));
}

bool shortlex_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  return u.letters() < v.letters();
}

std::string to_string(const Alphabet& a, const Word& w) {
  if (w.empty()) return "ε";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !a.single_char_names()) out += ".";
    out += a.name(w[i]);
  }
  return out;
}

}  // namespace higman
