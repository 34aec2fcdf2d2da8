#include "higman/factorization.hpp"

#include <algorithm>
#include <set>

namespace higman {

namespace {

constexpr size_t kMaxSearchGenerators = 12;

bool starts_with(const Word& z, const Word& p) {
  if (p.size() > z.size()) return false;
  for (size_t i = 0; i < p.size(); ++i) {
    if (z[i] != p[i]) return false;
  }
  return true;
}

bool ends_with(const Word& z, const Word& s) {
  if (s.size() > z.size()) return false;
  const size_t off = z.size() - s.size();
  for (size_t i = 0; i < s.size(); ++i) {
    if (z[off + i] != s[i]) return false;
  }
  return true;
}

struct PairLess {
  bool operator()(const std::pair<UpSet, UpSet>& a,
                  const std::pair<UpSet, UpSet>& b) const {
    if (upset_less(a.first, b.first)) return true;
    if (upset_less(b.first, a.first)) return false;
    return upset_less(a.second, b.second);
  }
};

}  // namespace

std::vector<std::pair<UpSet, UpSet>> two_factor_splits(const UpSet& f) {
  if (f.is_empty() || f.is_all()) {
    throw DomainError("two-factor splits need a nonempty proper segment");
  }
  const Alphabet& a = f.alphabet();
  const std::vector<Word>& gens = f.gens();
  if (gens.size() > kMaxSearchGenerators) {
    throw DomainError("factorization search limited to " +
                      std::to_string(kMaxSearchGenerators) + " generators");
  }
  const Word& pivot = gens.front();  // shortest generator
  std::set<std::pair<UpSet, UpSet>, PairLess> found;

  for (size_t k = 1; k < pivot.size(); ++k) {
    const Word u0 = pivot.prefix(k);
    const Word v0 = pivot.suffix(k);
    // Left candidates: prefixes whose missing suffix is exactly v0; right
    // candidates symmetric. Each generator contributes at most one of each.
    std::vector<Word> ucand;
    std::vector<Word> vcand;
    for (const Word& z : gens) {
      if (z.size() > v0.size() && ends_with(z, v0)) {
        ucand.push_back(z.prefix(z.size() - v0.size()));
      }
      if (z.size() > u0.size() && starts_with(z, u0)) {
        vcand.push_back(z.suffix(u0.size()));
      }
    }
    size_t u0_at = ucand.size();
    size_t v0_at = vcand.size();
    for (size_t i = 0; i < ucand.size(); ++i) {
      if (ucand[i] == u0) u0_at = i;
    }
    for (size_t i = 0; i < vcand.size(); ++i) {
      if (vcand[i] == v0) v0_at = i;
    }
    internal_check(u0_at < ucand.size() && v0_at < vcand.size(),
                   "pivot split missing from its own candidate sets");

    std::vector<std::vector<size_t>> u_by_count(ucand.size() + 1);
    for (size_t mask = 1; mask < (size_t{1} << ucand.size()); ++mask) {
      if (!(mask >> u0_at & 1)) continue;
      u_by_count[static_cast<size_t>(__builtin_popcountll(mask))].push_back(
          mask);
    }
    std::vector<std::vector<size_t>> v_by_count(vcand.size() + 1);
    for (size_t mask = 1; mask < (size_t{1} << vcand.size()); ++mask) {
      if (!(mask >> v0_at & 1)) continue;
      v_by_count[static_cast<size_t>(__builtin_popcountll(mask))].push_back(
          mask);
    }

    for (size_t cu = 1; cu <= ucand.size(); ++cu) {
      if (gens.size() % cu != 0) continue;
      const size_t cv = gens.size() / cu;
      if (cv > vcand.size()) continue;
      for (size_t mu : u_by_count[cu]) {
        std::vector<Word> us;
        for (size_t i = 0; i < ucand.size(); ++i) {
          if (mu >> i & 1) us.push_back(ucand[i]);
        }
        for (size_t mv : v_by_count[cv]) {
          std::vector<Word> vs;
          for (size_t i = 0; i < vcand.size(); ++i) {
            if (mv >> i & 1) vs.push_back(vcand[i]);
          }
          std::vector<Word> products;
          products.reserve(cu * cv);
          for (const Word& u : us) {
            for (const Word& v : vs) products.push_back(u + v);
          }
          std::sort(products.begin(), products.end(), shortlex_less);
          if (products != gens) continue;
          UpSet left = UpSet::of(a, us);
          UpSet right = UpSet::of(a, vs);
          // Comparable candidate words would collapse to comparable
          // generators, so both sides must still be antichains.
          internal_check(
              left.gens().size() == cu && right.gens().size() == cv,
              "factor candidates were not antichains");
          found.emplace(std::move(left), std::move(right));
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

bool is_irreducible(const UpSet& f) {
  if (f.is_empty()) return true;
  if (f.is_all()) return false;
  return two_factor_splits(f).empty();
}

Factorization factorize(const UpSet& f) {
  return factorize(f, [](size_t) { return size_t{0}; });
}

Factorization factorize(const UpSet& f, const SplitChooser& choose) {
  if (f.is_empty()) throw DomainError("empty segment");
  Factorization out;
  if (f.is_all()) return out;
  auto rec = [&](auto&& self, const UpSet& g) -> void {
    std::vector<std::pair<UpSet, UpSet>> splits = two_factor_splits(g);
    if (splits.empty()) {
      out.factors.push_back(g);
      return;
    }
    const auto& [left, right] = splits[choose(splits.size()) % splits.size()];
    self(self, left);
    self(self, right);
  };
  rec(rec, f);
  return out;
}

EquidivisibilityWitness equidivisibility_witness(const UpSet& f1,
                                                 const UpSet& f2,
                                                 const UpSet& g1,
                                                 const UpSet& g2) {
  if (f1.is_empty() || f2.is_empty() || g1.is_empty() || g2.is_empty()) {
    throw DomainError("equidivisibility needs nonempty factors");
  }
  const UpSet p = concat(f1, f2);
  if (!(p == concat(g1, g2))) {
    throw DomainError("the two products differ");
  }
  auto try_side = [&](const UpSet& short1, const UpSet& short2,
                      const UpSet& long1, const UpSet& long2)
      -> std::optional<UpSet> {
    UpSet w = residual(long1, short1, Side::left);
    if (w.is_empty()) return std::nullopt;
    if (concat(short1, w) == long1 && concat(w, long2) == short2) return w;
    return std::nullopt;
  };
  const bool f1_first = graduation(f1) <= graduation(g1);
  if (f1_first) {
    if (auto w = try_side(f1, f2, g1, g2)) {
      return {WitnessSide::f1_prefix, *std::move(w)};
    }
    if (auto w = try_side(g1, g2, f1, f2)) {
      return {WitnessSide::g1_prefix, *std::move(w)};
    }
  } else {
    if (auto w = try_side(g1, g2, f1, f2)) {
      return {WitnessSide::g1_prefix, *std::move(w)};
    }
    if (auto w = try_side(f1, f2, g1, g2)) {
      return {WitnessSide::f1_prefix, *std::move(w)};
    }
  }
  throw InternalError("equidivisibility witness not found");
}

std::vector<SummabilityOutcome> verify_summable(
    const UpSet& v1, const UpSet& v2,
    const std::vector<std::pair<UpSet, UpSet>>& candidates) {
  if (v1.is_empty() || v2.is_empty()) {
    throw DomainError("summability needs nonempty components");
  }
  const UpSet v = concat(v1, v2);
  for (const auto& [u1, u2] : candidates) {
    if (!contains(v, concat(u1, u2))) {
      throw DomainError("candidate product escapes the target segment");
    }
  }
  std::vector<SummabilityOutcome> out;
  for (size_t i = 0; i < candidates.size(); ++i) {
    const auto& [u1, u2] = candidates[i];
    SummabilityOutcome o{u1, u2, true, std::nullopt, std::nullopt};
    for (size_t j = 0; j < candidates.size(); ++j) {
      if (j == i) continue;
      const auto& [w1, w2] = candidates[j];
      if (contains(w1, u1) && contains(w2, u2) && !(w1 == u1 && w2 == u2)) {
        o.minimal = false;
        break;
      }
    }
    if (o.minimal) {
      // The interpolant, when it exists, is forced by cancellation, so the
      // residual either is the witness or there is none.
      UpSet wl = residual(u2, v2, Side::right);
      if (!wl.is_empty() && concat(wl, v2) == u2 && contains(u1, v1) &&
          contains(v1, concat(u1, wl))) {
        o.left_witness = std::move(wl);
      }
      UpSet wr = residual(u1, v1, Side::left);
      if (!wr.is_empty() && concat(v1, wr) == u1 && contains(u2, v2) &&
          contains(v2, concat(wr, u2))) {
        o.right_witness = std::move(wr);
      }
    }
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace higman
