#include "higman/selfcheck.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "higman/blocks.hpp"
#include "higman/envelope.hpp"
#include "higman/factorization.hpp"
#include "higman/macneille.hpp"
#include "higman/oracle.hpp"
#include "higman/randgen.hpp"

namespace higman {

namespace {

using gen::AlphabetPtr;
using gen::Rng;

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++result_.checks;
    if (!ok) {
      ++result_.failures;
      if (result_.counterexample.empty()) result_.counterexample = describe();
    }
  }

  void expect(bool ok, const std::string& describe) {
    expect(ok, [&] { return describe; });
  }

  void count() { ++result_.checks; }

  // Runs a whole instance; an unexpected exception fails it.
  void instance(const std::function<void()>& body) {
    ++result_.checks;
    try {
      body();
    } catch (const std::exception& e) {
      ++result_.failures;
      if (result_.counterexample.empty()) {
        result_.counterexample = std::string("exception: ") + e.what();
      }
    }
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::string show(const UpSet& f) { return to_string(f); }

std::string show_words(const Alphabet& a, const std::vector<Word>& ws) {
  std::string out = "{";
  for (size_t i = 0; i < ws.size(); ++i) {
    if (i) out += ",";
    out += to_string(a, ws[i]);
  }
  return out + "}";
}

UpSet fold_concat(const Alphabet& a, const std::vector<UpSet>& fs) {
  UpSet acc = UpSet::all(a);
  for (const UpSet& f : fs) acc = concat(acc, f);
  return acc;
}

size_t generator_mass(const UpSet& f) {
  size_t mass = 0;
  for (const Word& g : f.gens()) mass += g.size();
  return mass;
}

// The shared instance pool for the factorization/blocks agreement suites:
// products of random irreducibles first, then free-form antichains. Both
// suites call this with the same arguments and therefore see the same
// segments. Antichain mass is bounded so envelope construction stays at
// desk scale.
struct AgreementSet {
  std::vector<AlphabetPtr> alphabets;  // keeps the segments' alphabets alive
  std::vector<UpSet> instances;
  std::vector<std::vector<UpSet>> known_factors;  // empty when free-form
};

AgreementSet agreement_instances(uint64_t seed, int products,
                                 int antichains) {
  Rng rng(seed ^ 0x7365);
  AgreementSet out;
  for (int i = 0; i < products; ++i) {
    AlphabetPtr a = gen::random_alphabet(rng, 4);
    auto inst = gen::random_product(rng, *a, 4, 8, 6);
    out.alphabets.push_back(std::move(a));
    out.known_factors.push_back(inst.factors);
    out.instances.push_back(inst.product);
  }
  for (int i = 0; i < antichains; ++i) {
    AlphabetPtr a = gen::random_alphabet(rng, 4);
    UpSet f = gen::random_upset(rng, *a, 8, 6);
    for (int tries = 0; tries < 50 && generator_mass(f) > 14; ++tries) {
      f = gen::random_upset(rng, *a, 8, 6);
    }
    out.alphabets.push_back(std::move(a));
    out.known_factors.push_back({});
    out.instances.push_back(std::move(f));
  }
  return out;
}

}  // namespace

namespace suites {

SuiteResult order_laws(uint64_t seed, int cases) {
  Suite s("order-laws");
  std::vector<Alphabet> alphabets;
  alphabets.push_back(Alphabet::make("ab"));
  alphabets.push_back(Alphabet::make("ab", {"ab"}));
  alphabets.push_back(Alphabet::make("abc"));
  alphabets.push_back(Alphabet::make("abc", {"ab", "bc"}));
  alphabets.push_back(Alphabet::make("ab", {}, {"ab"}));

  for (const Alphabet& a : alphabets) {
    const size_t len_cap = a.size() == 2 ? 4 : 3;
    std::vector<Word> words = oracle::all_words(a, len_cap);
    for (const Word& u : words) {
      s.expect(higman_leq(a, u, u),
               [&] { return "not reflexive at " + to_string(a, u); });
      s.expect(involute(a, involute(a, u)) == u, [&] {
        return "involution not involutive at " + to_string(a, u);
      });
    }
    for (const Word& u : words) {
      for (const Word& v : words) {
        const bool uv = higman_leq(a, u, v);
        s.expect(uv == oracle::embeds_exhaustive(a, u, v), [&] {
          return "greedy/exhaustive mismatch on (" + to_string(a, u) + "," +
                 to_string(a, v) + ")";
        });
        if (uv && higman_leq(a, v, u)) {
          s.expect(u == v, [&] {
            return "antisymmetry fails on (" + to_string(a, u) + "," +
                   to_string(a, v) + ")";
          });
        }
        s.expect(uv == higman_leq(a, involute(a, u), involute(a, v)), [&] {
          return "involution not order-preserving on (" + to_string(a, u) +
                 "," + to_string(a, v) + ")";
        });
      }
    }
    // Transitivity and concatenation compatibility on random triples.
    Rng rng(seed ^ 0x7261);
    for (int t = 0; t < cases * 20; ++t) {
      const Word& u = words[rng.below(words.size())];
      const Word& v = words[rng.below(words.size())];
      const Word& w = words[rng.below(words.size())];
      if (higman_leq(a, u, v) && higman_leq(a, v, w)) {
        s.expect(higman_leq(a, u, w), [&] {
          return "transitivity fails through " + to_string(a, v);
        });
      }
      if (higman_leq(a, u, v)) {
        s.expect(higman_leq(a, u + w, v + w) && higman_leq(a, w + u, w + v),
                 [&] {
                   return "concatenation destroys the order at " +
                          to_string(a, w);
                 });
      }
    }
  }

  // Split laws: anything below uv splits below u and v; anything above uv
  // splits above u and v. Exhaustive at small lengths.
  const Alphabet ab = Alphabet::make("ab");
  std::vector<Word> small = oracle::all_words(ab, 3);
  std::vector<Word> six = oracle::all_words(ab, 6);
  auto split_ok = [&](const Word& w, const Word& u, const Word& v,
                      bool below) {
    for (size_t k = 0; k <= w.size(); ++k) {
      const Word left = w.prefix(k);
      const Word right = w.suffix(k);
      const bool fits =
          below
              ? (higman_leq(ab, left, u) && higman_leq(ab, right, v))
              : (higman_leq(ab, u, left) && higman_leq(ab, v, right));
      if (fits) return true;
    }
    return false;
  };
  for (const Word& u : small) {
    for (const Word& v : small) {
      const Word uv = u + v;
      for (const Word& w : six) {
        if (higman_leq(ab, w, uv)) {
          s.expect(split_ok(w, u, v, true), [&] {
            return "no split of " + to_string(ab, w) + " below (" +
                   to_string(ab, u) + "," + to_string(ab, v) + ")";
          });
        }
        if (higman_leq(ab, uv, w)) {
          s.expect(split_ok(w, u, v, false), [&] {
            return "no split of " + to_string(ab, w) + " above (" +
                   to_string(ab, u) + "," + to_string(ab, v) + ")";
          });
        }
      }
    }
  }
  return s.take();
}

SuiteResult oracle_equivalence(uint64_t seed, int cases) {
  Suite s("oracle-equivalence");
  Rng rng(seed ^ 0x6f72);
  constexpr size_t kDepth = 6;
  for (int c = 0; c < cases; ++c) {
    AlphabetPtr a = gen::random_alphabet(rng, 3);
    s.instance([&] {
      UpSet f = gen::random_upset(rng, *a, 5, 4);
      UpSet g = gen::random_upset(rng, *a, 5, 4);
      auto tf = oracle::truncate(f, kDepth);
      auto tg = oracle::truncate(g, kDepth);

      for (const Word& w : oracle::all_words(*a, 4)) {
        const bool inside = std::binary_search(tf.words.begin(),
                                               tf.words.end(), w,
                                               shortlex_less);
        if (member(f, w) != inside) {
          s.expect(false, [&] {
            return "membership of " + to_string(*a, w) + " diverges on " +
                   show(f);
          });
          return;
        }
      }

      std::vector<Word> raw;
      for (int i = 0; i < 4; ++i) {
        raw.push_back(gen::random_word(rng, *a, 0, 3));
      }
      s.expect(oracle::same_words(
                   oracle::truncate(UpSet::of(*a, raw), kDepth).words,
                   oracle::upclose(*a, raw, kDepth)),
               [&] { return "minimize diverges on " + show_words(*a, raw); });

      s.expect(
          oracle::same_words(oracle::truncate(concat(f, g), kDepth).words,
                             oracle::concat_trunc(tf, tg, kDepth)),
          [&] { return "concat diverges on " + show(f) + "," + show(g); });
      s.expect(
          oracle::same_words(oracle::truncate(union_meet(f, g), kDepth).words,
                             oracle::set_union(tf.words, tg.words)),
          [&] { return "union diverges on " + show(f) + "," + show(g); });
      s.expect(
          oracle::same_words(oracle::truncate(intersect(f, g), kDepth).words,
                             oracle::set_intersection(tf.words, tg.words)),
          [&] {
            return "intersection diverges on " + show(f) + "," + show(g);
          });

      const Word w = gen::random_word(rng, *a, 1, 2);
      for (Side side : {Side::right, Side::left}) {
        s.expect(
            oracle::same_words(
                oracle::truncate(quotient(f, w, side), kDepth - w.size())
                    .words,
                oracle::residual_words(tf, w, side)),
            [&] {
              return "quotient diverges on " + show(f) + " by " +
                     to_string(*a, w);
            });
      }
    });
  }
  return s.take();
}

SuiteResult min_homomorphism(uint64_t seed, int cases) {
  return min_homomorphism_with(seed, cases, [](const UpSet& f, const UpSet& g) {
    return concat(f, g);
  });
}

SuiteResult min_homomorphism_with(
    uint64_t seed, int cases,
    const std::function<UpSet(const UpSet&, const UpSet&)>& product) {
  Suite s("min-homomorphism");
  Rng rng(seed ^ 0x6d69);
  for (int c = 0; c < cases; ++c) {
    AlphabetPtr a = gen::random_alphabet(rng, 3);
    s.instance([&] {
      // Arbitrary word sets, not antichains: the minimal generators of the
      // product must be the product of the minimal generators.
      std::vector<Word> xs, ys;
      for (uint64_t i = rng.range(1, 4); i-- > 0;) {
        xs.push_back(gen::random_word(rng, *a, 0, 3));
      }
      for (uint64_t i = rng.range(1, 4); i-- > 0;) {
        ys.push_back(gen::random_word(rng, *a, 0, 3));
      }
      UpSet fx = UpSet::of(*a, xs);
      UpSet fy = UpSet::of(*a, ys);
      std::vector<Word> expected = oracle::concat_min(*a, xs, ys);
      s.expect(product(fx, fy).gens() == expected, [&] {
        return "Min(XY) != Min(X)Min(Y) on " + show_words(*a, xs) + "," +
               show_words(*a, ys);
      });
      s.expect(oracle::same_words(
                   oracle::truncate(product(fx, fy), 6).words,
                   oracle::upclose(*a, oracle::raw_concat(xs, ys), 6)),
               [&] {
                 return "up-closure of the product diverges on " +
                        show_words(*a, xs) + "," + show_words(*a, ys);
               });
    });
  }
  return s.take();
}

SuiteResult antichain_cardinality(uint64_t seed, int cases) {
  Suite s("antichain-cardinality");
  Rng rng(seed ^ 0x6361);
  for (int c = 0; c < cases; ++c) {
    AlphabetPtr a = gen::random_alphabet(rng, 4);
    s.instance([&] {
      UpSet f = gen::random_upset(rng, *a, 4, 4);
      UpSet g = gen::random_upset(rng, *a, 4, 4);
      s.expect(
          concat(f, g).gens().size() == f.gens().size() * g.gens().size(),
          [&] { return "|UV| != |U||V| on " + show(f) + "," + show(g); });
    });
  }
  return s.take();
}

SuiteResult cancellation(uint64_t seed, int cases) {
  Suite s("cancellation");
  Rng rng(seed ^ 0x6e63);
  for (int c = 0; c < cases; ++c) {
    AlphabetPtr a = gen::random_alphabet(rng, 4);
    s.instance([&] {
      UpSet f = gen::random_upset(rng, *a, 3, 3);
      UpSet g = gen::random_upset(rng, *a, 3, 3);
      UpSet h = gen::random_upset(rng, *a, 3, 3);
      const bool left_eq = concat(f, g) == concat(f, h);
      s.expect(left_eq == (g == h), [&] {
        return "left cancellation fails on " + show(f) + "," + show(g) +
               "," + show(h);
      });
      const bool right_eq = concat(g, f) == concat(h, f);
      s.expect(right_eq == (g == h), [&] {
        return "right cancellation fails on " + show(f) + "," + show(g) +
               "," + show(h);
      });
      // Concatenation is monotone, and growing factors strictly grows the
      // product.
      UpSet fbig = union_meet(f, gen::random_upset(rng, *a, 2, 3));
      UpSet gbig = union_meet(g, gen::random_upset(rng, *a, 2, 3));
      s.expect(contains(concat(fbig, gbig), concat(f, g)), [&] {
        return "concatenation is not monotone on " + show(f) + "," + show(g);
      });
      if (!(fbig == f) || !(gbig == g)) {
        s.expect(!(concat(fbig, gbig) == concat(f, g)), [&] {
          return "an enlarged factor pair reproduced the product: " +
                 show(f) + "," + show(g);
        });
      }
    });
  }
  return s.take();
}

SuiteResult distributivity(uint64_t seed, int cases) {
  Suite s("distributivity");
  Rng rng(seed ^ 0x6469);
  for (int c = 0; c < cases; ++c) {
    AlphabetPtr a = gen::random_alphabet(rng, 4);
    s.instance([&] {
      UpSet f = gen::random_upset(rng, *a, 3, 3);
      UpSet g = gen::random_upset(rng, *a, 3, 3);
      UpSet h = gen::random_upset(rng, *a, 3, 3);
      s.expect(concat(f, union_meet(g, h)) ==
                   union_meet(concat(f, g), concat(f, h)),
               [&] {
                 return "left distributivity over union fails on " +
                        show(f) + "," + show(g) + "," + show(h);
               });
      s.expect(concat(union_meet(g, h), f) ==
                   union_meet(concat(g, f), concat(h, f)),
               [&] {
                 return "right distributivity over union fails on " +
                        show(f) + "," + show(g) + "," + show(h);
               });
    });
  }
  // Raw languages do not distribute over intersection; the classic witness
  // must survive in the oracle.
  const Alphabet abc = Alphabet::make("abc");
  auto word = [&](const std::string& text) {
    std::vector<Letter> ls;
    for (char ch : text) ls.push_back(*abc.find(std::string(1, ch)));
    return Word(std::move(ls));
  };
  std::vector<Word> x1 = {word("ab")};
  std::vector<Word> x2 = {word("a")};
  std::vector<Word> y = {word("c"), word("bc")};
  std::vector<Word> lhs =
      oracle::raw_concat(oracle::set_intersection(x1, x2), y);
  std::vector<Word> rhs = oracle::set_intersection(
      oracle::raw_concat(x1, y), oracle::raw_concat(x2, y));
  s.expect(lhs.empty(), "(X1 ∩ X2)Y should be empty in the raw oracle");
  s.expect(rhs == std::vector<Word>{word("abc")},
           "X1Y ∩ X2Y should be exactly {abc} in the raw oracle");
  return s.take();
}

SuiteResult residual_maximality(uint64_t seed, int cases) {
  Suite s("residual-maximality");
  Rng rng(seed ^ 0x7265);
  constexpr size_t kDepth = 5;
  for (int c = 0; c < cases; ++c) {
    AlphabetPtr a = gen::random_alphabet(rng, 3);
    s.instance([&] {
      UpSet f = gen::random_upset(rng, *a, 4, 3);
      UpSet b = gen::random_upset(rng, *a, 2, 2);
      for (Side side : {Side::right, Side::left}) {
        UpSet r = residual(f, b, side);
        const UpSet prod = side == Side::right ? concat(r, b) : concat(b, r);
        s.expect(contains(f, prod), [&] {
          return "residual unsound on " + show(f) + " by " + show(b);
        });
        // Maximality at oracle depth: everything the residual rejects
        // genuinely escapes F against some generator of B.
        auto tr = oracle::truncate(r, kDepth);
        bool failed = false;
        for (const Word& u : oracle::all_words(*a, kDepth)) {
          if (std::binary_search(tr.words.begin(), tr.words.end(), u,
                                 shortlex_less)) {
            continue;
          }
          bool escapes = false;
          for (const Word& bw : b.gens()) {
            const Word probe = side == Side::right ? u + bw : bw + u;
            if (!member(f, probe)) {
              escapes = true;
              break;
            }
          }
          if (!escapes) {
            s.expect(false, [&] {
              return "residual " + show(r) + " of " + show(f) + " by " +
                     show(b) + " misses " + to_string(*a, u);
            });
            failed = true;
            break;
          }
        }
        if (failed) return;
      }
    });
  }
  return s.take();
}

SuiteResult equidivisibility(uint64_t seed, int cases) {
  Suite s("equidivisibility");
  Rng rng(seed ^ 0x6571);
  for (int c = 0; c < cases; ++c) {
    AlphabetPtr al = gen::random_alphabet(rng, 4);
    s.instance([&] {
      UpSet a = gen::random_upset(rng, *al, 2, 2);
      UpSet b = gen::random_upset(rng, *al, 2, 2);
      UpSet cc = gen::random_upset(rng, *al, 2, 2);
      // (A)(BC) = (AB)(C): the interpolant must come out as B.
      auto w = equidivisibility_witness(a, concat(b, cc), concat(a, b), cc);
      s.expect(w.side == WitnessSide::f1_prefix && w.refinement == b, [&] {
        return "interpolant is not B on " + show(a) + "," + show(b) + "," +
               show(cc);
      });
      // Mirrored roles flip the side.
      auto w2 = equidivisibility_witness(concat(a, b), cc, a, concat(b, cc));
      s.expect(w2.side == WitnessSide::g1_prefix && w2.refinement == b, [&] {
        return "mirrored interpolant is not B on " + show(a) + "," +
               show(b) + "," + show(cc);
      });
      // Identical factorizations interpolate through the neutral element.
      auto w3 = equidivisibility_witness(a, b, a, b);
      s.expect(w3.refinement.is_all(),
               [&] { return "self-witness is not A* on " + show(a); });
    });
  }
  return s.take();
}

SuiteResult summability(uint64_t seed, int cases) {
  Suite s("summability");
  Rng rng(seed ^ 0x7375);
  for (int c = 0; c < cases; ++c) {
    AlphabetPtr al = gen::random_alphabet(rng, 3);
    s.instance([&] {
      UpSet v1 = gen::random_upset(rng, *al, 2, 2);
      UpSet v2 = gen::random_upset(rng, *al, 2, 2);
      const UpSet v = concat(v1, v2);
      std::vector<std::pair<UpSet, UpSet>> candidates;
      candidates.emplace_back(v1, v2);
      candidates.emplace_back(v, UpSet::all(*al));
      candidates.emplace_back(UpSet::all(*al), v);
      // Regroupings of the unique factorization multiply to v exactly.
      const Factorization fz = factorize(v);
      for (size_t cut = 1; cut < fz.factors.size(); ++cut) {
        UpSet left = fold_concat(
            *al, {fz.factors.begin(),
                  fz.factors.begin() + static_cast<long>(cut)});
        UpSet right = fold_concat(
            *al,
            {fz.factors.begin() + static_cast<long>(cut), fz.factors.end()});
        candidates.emplace_back(std::move(left), std::move(right));
      }
      auto outcomes = verify_summable(v1, v2, candidates);
      for (const auto& o : outcomes) {
        if (o.minimal) {
          s.expect(o.summable(), [&] {
            return "minimal pair (" + show(o.u1) + "," + show(o.u2) +
                   ") below " + show(v1) + "·" + show(v2) +
                   " has no interpolation witness";
          });
        }
      }
    });
  }
  return s.take();
}

SuiteResult factorization_unique(uint64_t seed, int products,
                                 int antichains) {
  Suite s("factorization-unique");
  AgreementSet set = agreement_instances(seed, products, antichains);
  for (size_t i = 0; i < set.instances.size(); ++i) {
    const UpSet& f = set.instances[i];
    const Alphabet& a = f.alphabet();
    s.instance([&] {
      const Factorization first = factorize(f);
      s.expect(fold_concat(a, first.factors) == f,
               [&] { return "factors do not multiply back to " + show(f); });
      for (const UpSet& factor : first.factors) {
        s.expect(is_irreducible(factor), [&] {
          return "reducible factor " + show(factor) + " of " + show(f);
        });
      }
      // Uniqueness: the recursion order must not matter.
      const Factorization last = factorize(f, [](size_t n) { return n - 1; });
      Rng pick_rng(seed ^ (0x9e37ull + i));
      const Factorization randomized =
          factorize(f, [&pick_rng](size_t n) { return pick_rng.below(n); });
      s.expect(first == last && first == randomized, [&] {
        return "recursion order changed the factors of " + show(f);
      });
      if (!set.known_factors[i].empty()) {
        s.expect(first.factors == set.known_factors[i], [&] {
          return "factorization of " + show(f) +
                 " differs from its generating sequence";
        });
      }
      size_t gsum = 0;
      for (const UpSet& factor : first.factors) gsum += graduation(factor);
      s.expect(gsum == graduation(f),
               [&] { return "graduation not additive over " + show(f); });
      if (!f.is_all() && graduation(f) == 1) {
        s.expect(is_irreducible(f), [&] {
          return "graduation-1 segment reducible: " + show(f);
        });
      }
    });
  }
  return s.take();
}

SuiteResult macneille_cones(uint64_t seed, int cases) {
  Suite s("macneille-cones");
  Rng rng(seed ^ 0x6d61);
  constexpr size_t kDepth = 6;
  for (int c = 0; c < cases; ++c) {
    AlphabetPtr a = gen::random_alphabet(rng, 3);
    s.instance([&] {
      UpSet fx = gen::random_upset(rng, *a, 3, 3);
      UpSet fy = gen::random_upset(rng, *a, 3, 3);
      const std::vector<Word>& xs = fx.gens();
      const std::vector<Word>& ys = fy.gens();

      // Lower cones: the cone of the product is the product of the cones,
      // both as max-antichains and as bounded lower sets.
      DownSetMax dx = lower_cone(fx);
      DownSetMax dy = lower_cone(fy);
      DownSetMax dxy = lower_cone(concat(fx, fy));
      std::vector<Word> pairwise;
      for (const Word& u : dx.maxgens) {
        for (const Word& v : dy.maxgens) pairwise.push_back(u + v);
      }
      s.expect(dxy.maxgens == oracle::maximal_exhaustive(*a, pairwise), [&] {
        return "lower cone of product mismatches on " + show(fx) + "," +
               show(fy);
      });
      auto in_down = [&](const std::vector<Word>& maxg, const Word& w) {
        for (const Word& m : maxg) {
          if (oracle::embeds_exhaustive(*a, w, m)) return true;
        }
        return false;
      };
      bool failed = false;
      for (const Word& w : oracle::all_words(*a, kDepth)) {
        bool lhs = in_down(dxy.maxgens, w);
        bool rhs = false;
        for (size_t k = 0; k <= w.size() && !rhs; ++k) {
          rhs = in_down(dx.maxgens, w.prefix(k)) &&
                in_down(dy.maxgens, w.suffix(k));
        }
        if (lhs != rhs) {
          s.expect(false, [&] {
            return "lower-set membership of " + to_string(*a, w) +
                   " disagrees on " + show(fx) + "," + show(fy);
          });
          failed = true;
          break;
        }
      }
      if (failed) return;

      // Upper cones distribute over the product as well.
      std::vector<Word> prods;
      for (const Word& u : xs) {
        for (const Word& v : ys) prods.push_back(u + v);
      }
      s.expect(upper_cone(*a, prods) ==
                   concat(upper_cone(*a, xs), upper_cone(*a, ys)),
               [&] {
                 return "upper cone of product mismatches on " + show(fx) +
                        "," + show(fy);
               });

      // Multiplication by a closed segment distributes over intersections
      // and closed unions of closed segments.
      UpSet y0 = gen::random_closed(rng, *a, 2, 2);
      UpSet z1 = gen::random_closed(rng, *a, 2, 2);
      UpSet z2 = gen::random_closed(rng, *a, 2, 2);
      s.expect(concat(y0, intersect(z1, z2)) ==
                   intersect(concat(y0, z1), concat(y0, z2)),
               [&] {
                 return "closed product does not distribute over meet: " +
                        show(y0) + "," + show(z1) + "," + show(z2);
               });
      s.expect(concat(intersect(z1, z2), y0) ==
                   intersect(concat(z1, y0), concat(z2, y0)),
               [&] {
                 return "closed product does not distribute over meet "
                        "(right): " +
                        show(y0) + "," + show(z1) + "," + show(z2);
               });
      s.expect(concat(y0, closed_union(*a, {z1, z2})) ==
                   closed_union(*a, {concat(y0, z1), concat(y0, z2)}),
               [&] {
                 return "closed product does not distribute over closed "
                        "union: " +
                        show(y0) + "," + show(z1) + "," + show(z2);
               });
      s.expect(concat(closed_union(*a, {z1, z2}), y0) ==
                   closed_union(*a, {concat(z1, y0), concat(z2, y0)}),
               [&] {
                 return "closed product does not distribute over closed "
                        "union (right): " +
                        show(y0) + "," + show(z1) + "," + show(z2);
               });
    });
  }
  return s.take();
}

SuiteResult closure_laws(uint64_t seed, int cases) {
  Suite s("closure-laws");
  Rng rng(seed ^ 0x636c);
  for (int c = 0; c < cases; ++c) {
    AlphabetPtr a = gen::random_alphabet(rng, 4);
    s.instance([&] {
      UpSet f = gen::random_upset(rng, *a, 4, 4);
      UpSet cf = closure(f);
      s.expect(contains(cf, f), [&] { return "closure shrank " + show(f); });
      s.expect(closure(cf) == cf,
               [&] { return "closure not idempotent on " + show(f); });
      UpSet g = union_meet(f, gen::random_upset(rng, *a, 2, 3));
      s.expect(contains(closure(g), cf), [&] {
        return "closure not monotone between " + show(f) + " and " + show(g);
      });
      s.expect(is_closed(gen::random_closed(rng, *a, 3, 3)),
               "an intersection of principal segments must be closed");
    });
  }
  const Alphabet ab = Alphabet::make("ab");
  s.expect(closure(UpSet::empty(ab)).is_empty(),
           "closure must fix the empty segment");
  s.expect(closure(UpSet::all(ab)).is_all(), "closure must fix A*");
  return s.take();
}

SuiteResult closed_factors(uint64_t seed, int cases) {
  Suite s("closed-factors");
  Rng rng(seed ^ 0x6366);
  for (int c = 0; c < cases; ++c) {
    AlphabetPtr a = gen::random_alphabet(rng, 3);
    s.instance([&] {
      UpSet z = gen::random_closed(rng, *a, 2, 4);
      // Two principal segments can meet in a large antichain; stay at desk
      // scale for the factorization search.
      if (z.is_empty() || z.is_all() || z.gens().size() > 8) return;
      for (const auto& split : two_factor_splits(z)) {
        s.expect(is_closed(split.first) && is_closed(split.second), [&] {
          return "factor of closed " + show(z) + " is not closed: " +
                 show(split.first) + "·" + show(split.second);
        });
      }
      for (const UpSet& factor : factorize(z).factors) {
        s.expect(is_closed(factor), [&] {
          return "irreducible factor of closed " + show(z) +
                 " is not closed: " + show(factor);
        });
      }
    });
  }
  return s.take();
}

SuiteResult metric_axioms(uint64_t seed, int cases) {
  Suite s("metric-axioms");
  Rng rng(seed ^ 0x6d65);
  for (int c = 0; c < cases; ++c) {
    AlphabetPtr a = gen::random_alphabet(rng, 3);
    s.instance([&] {
      UpSet f = gen::random_upset(rng, *a, 4, 4);
      // The constructor asserts the distance laws and the sup formula.
      EnvelopeSpace sp = build_envelope(f);
      const size_t n = sp.points.size();

      // Every long-enough distance generator splits through a midpoint.
      bool failed = false;
      for (size_t p = 0; p < n && !failed; ++p) {
        for (size_t q = 0; q < n && !failed; ++q) {
          if (p == q) continue;
          for (const Word& g : sp.dist[p][q].gens()) {
            for (size_t k = 1; k + 1 <= g.size(); ++k) {
              const Word alpha = g.prefix(k);
              const Word beta = g.suffix(k);
              bool found = false;
              for (size_t z = 0; z < n && !found; ++z) {
                found = member(sp.dist[p][z], alpha) &&
                        member(sp.dist[z][q], beta);
              }
              if (!found) {
                s.expect(false, [&] {
                  return "no midpoint splits " + to_string(*a, g) +
                         " between points of the envelope of " + show(f);
                });
                failed = true;
                break;
              }
            }
            if (failed) break;
          }
        }
      }

      // Two balls with compatible radii share a point.
      for (int t = 0; t < 4; ++t) {
        const size_t p1 = rng.below(n);
        const size_t p2 = rng.below(n);
        const size_t z0 = rng.below(n);
        UpSet r1 = sp.dist[p1][z0];
        UpSet r2 = sp.dist[p2][z0];
        if (!contains(sp.dist[p1][p2], concat(r1, involute(r2)))) continue;
        bool met = false;
        for (size_t z = 0; z < n && !met; ++z) {
          met = contains(sp.dist[p1][z], r1) && contains(sp.dist[p2][z], r2);
        }
        s.expect(met, [&] {
          return "compatible balls do not intersect in the envelope of " +
                 show(f);
        });
      }

      // Non-expansive self-maps fixing both endpoints are the identity.
      if (n <= 5) {
        std::vector<size_t> map(n, 0);
        size_t total = 1;
        for (size_t i = 0; i < n; ++i) total *= n;
        for (size_t code = 0; code < total; ++code) {
          size_t rem = code;
          for (size_t i = 0; i < n; ++i) {
            map[i] = rem % n;
            rem /= n;
          }
          if (map[sp.x] != sp.x || map[sp.y] != sp.y) continue;
          bool nonexpansive = true;
          bool identity = true;
          for (size_t i = 0; i < n && nonexpansive; ++i) {
            identity = identity && map[i] == i;
            for (size_t j = 0; j < n; ++j) {
              if (!contains(sp.dist[map[i]][map[j]], sp.dist[i][j])) {
                nonexpansive = false;
                break;
              }
            }
          }
          if (nonexpansive) {
            s.expect(identity, [&] {
              return "a proper non-expansive self-map fixes the endpoints "
                     "of the envelope of " +
                     show(f);
            });
          }
        }
      }

      // Derived minimal pairs obey the residual correspondence both ways:
      // the first slot is recovered as the right residual by the involuted
      // second slot.
      for (const auto& pair : derive_minimal_pairs(sp)) {
        s.expect(
            pair.first == residual(f, involute(pair.second), Side::right),
            [&] {
              return "pair correspondence broken at " + show(pair.first) +
                     " for " + show(f);
            });
      }
    });
  }
  return s.take();
}

SuiteResult automaton_language_law(uint64_t seed, int cases) {
  Suite s("automaton-language");
  Rng rng(seed ^ 0x6175);
  for (int c = 0; c < cases; ++c) {
    AlphabetPtr a = gen::random_alphabet(rng, 3);
    s.instance([&] {
      UpSet f = gen::random_upset(rng, *a, 4, 4);
      EnvelopeSpace sp = build_envelope(f);
      TransitionSystem m = to_transition_system(sp);
      auto langs = automaton_distance_matrix(m);
      for (size_t p = 0; p < sp.points.size(); ++p) {
        for (size_t q = 0; q < sp.points.size(); ++q) {
          s.expect(langs[p][q] == sp.dist[p][q], [&] {
            return "accepted language differs from the distance in the "
                   "envelope of " +
                   show(f);
          });
        }
      }
      s.expect(langs[sp.x][sp.y] == f, [&] {
        return "the envelope automaton of " + show(f) + " accepts " +
               show(langs[sp.x][sp.y]);
      });
    });
  }
  return s.take();
}

SuiteResult blocks_agreement(uint64_t seed, int products, int antichains) {
  Suite s("blocks-agreement");
  AgreementSet set = agreement_instances(seed, products, antichains);
  for (const UpSet& f : set.instances) {
    const Alphabet& a = f.alphabet();
    s.instance([&] {
      if (f.is_all()) return;
      EnvelopeSpace sp = build_envelope(f);
      TransitionSystem m = to_transition_system(sp);
      Graph g = graph_of(m);
      const bool no_cut = cut_vertices(g).empty();
      s.expect(is_irreducible(f) == no_cut, [&] {
        return "irreducibility does not match cut vertices on " + show(f);
      });

      const Factorization via_blocks = factorize_via_blocks(f);
      const Factorization direct = factorize(f);
      s.expect(via_blocks == direct, [&] {
        return "block factors differ from algebraic factors on " + show(f);
      });

      // The blocks partition the edges and stay reflexive and involutive
      // when the system is restricted to them.
      BlockPath path = block_decomposition(g, sp.x, sp.y);
      size_t edge_total = 0;
      for (const auto& block : path.blocks) {
        TransitionSystem mb = restrict_to(m, block);
        for (size_t p = 0; p < mb.states; ++p) {
          for (Letter letter = 0; letter < a.size(); ++letter) {
            s.expect(mb.has(p, letter, p), "restriction lost a loop");
          }
        }
        for (const Transition& t : mb.trans) {
          s.expect(mb.has(t.to, a.bar(t.letter), t.from),
                   "restriction lost involutivity");
        }
        Graph gb = graph_of(mb);
        edge_total += gb.edges().size();
      }
      s.expect(edge_total == g.edges().size(), [&] {
        return "blocks do not partition the edges of " + show(f);
      });
    });
  }
  return s.take();
}

SuiteResult gluing(uint64_t seed, int cases) {
  Suite s("gluing");
  Rng rng(seed ^ 0x676c);
  for (int c = 0; c < cases; ++c) {
    AlphabetPtr a = gen::random_alphabet(rng, 3);
    s.instance([&] {
      UpSet f1 = gen::random_upset(rng, *a, 3, 3);
      UpSet f2 = gen::random_upset(rng, *a, 3, 3);
      EnvelopeSpace s1 = build_envelope(f1);
      EnvelopeSpace s2 = build_envelope(f2);
      EnvelopeSpace glued = glue(s1, s2);
      EnvelopeSpace direct = build_envelope(concat(f1, f2));
      s.expect(spaces_isomorphic(direct, glued), [&] {
        return "glued envelope differs from the envelope of the product " +
               show(f1) + "·" + show(f2);
      });
      EnvelopeSpace one = build_envelope(UpSet::all(*a));
      s.expect(spaces_isomorphic(glue(s1, one), s1), [&] {
        return "gluing a point on the right changed " + show(f1);
      });
      s.expect(spaces_isomorphic(glue(one, s1), s1), [&] {
        return "gluing a point on the left changed " + show(f1);
      });
    });
  }
  return s.take();
}

SuiteResult boundary_cases() {
  Suite s("boundary-cases");
  const Alphabet ab = Alphabet::make("ab");
  const UpSet all = UpSet::all(ab);
  const UpSet none = UpSet::empty(ab);

  s.instance([&] {
    EnvelopeSpace sp = build_envelope(all);
    s.expect(sp.points.size() == 1 && sp.x == sp.y,
             "envelope of A* must be a single point");
    s.expect(sp.dist[0][0].is_all(), "the single self-distance must be A*");
    s.expect(factorize(all).factors.empty(),
             "A* must factor into the empty sequence");
    Graph g = graph_of(to_transition_system(sp));
    s.expect(g.edges().empty(), "the graph of A* is a bare loop");
  });

  s.instance([&] {
    EnvelopeSpace sp = build_envelope(none);
    s.expect(sp.points.size() == 2,
             "envelope of the empty segment has 2 points");
    s.expect(sp.points[sp.x].is_all() && sp.points[sp.y].is_empty(),
             "envelope endpoints of the empty segment");
    s.expect(sp.dist[sp.x][sp.y].is_empty(), "d(x,y) must be empty");
    Graph g = graph_of(to_transition_system(sp));
    s.expect(g.edges().empty(),
             "the graph of the empty segment has no edge");
    s.expect(is_irreducible(none), "the empty segment is irreducible");
    bool threw = false;
    try {
      graduation(none);
    } catch (const DomainError&) {
      threw = true;
    }
    s.expect(threw, "graduation of the empty segment must be an error");
    threw = false;
    try {
      factorize(none);
    } catch (const DomainError&) {
      threw = true;
    }
    s.expect(threw, "factorizing the empty segment must be an error");
  });

  s.instance([&] {
    auto w = [&](const std::string& text) {
      std::vector<Letter> ls;
      for (char ch : text) ls.push_back(*ab.find(std::string(1, ch)));
      return Word(std::move(ls));
    };
    UpSet x = UpSet::of(ab, {w("a"), w("b")});
    UpSet y = UpSet::of(ab, {w("aa"), w("bb")});
    s.expect(is_irreducible(x),
             "the segment above both letters is irreducible");
    s.expect(is_irreducible(y), "the doubled-letter segment is irreducible");
    s.expect(contains(concat(x, x), y), "XX must contain Y as a language");
  });
  return s.take();
}

SuiteResult worked_envelope() {
  Suite s("worked-envelope");
  const Alphabet ab = Alphabet::make("ab");
  auto w = [&](const std::string& text) {
    std::vector<Letter> ls;
    for (char ch : text) ls.push_back(*ab.find(std::string(1, ch)));
    return Word(std::move(ls));
  };
  const UpSet f = UpSet::principal(ab, w("ab"));
  const UpSet up_a = UpSet::principal(ab, w("a"));
  const UpSet up_b = UpSet::principal(ab, w("b"));

  s.instance([&] {
    // Oracle view first: word quotients at depth 6 pin the expected points.
    auto tf = oracle::truncate(f, 6);
    s.expect(oracle::same_words(oracle::residual_words(tf, w("b"), Side::right),
                                oracle::truncate(up_a, 5).words),
             "oracle: F/b must be the segment above a");
    s.expect(oracle::same_words(oracle::residual_words(tf, w("a"), Side::right),
                                oracle::truncate(f, 5).words),
             "oracle: F/a must be F itself");

    EnvelopeSpace sp = build_envelope(f);
    s.expect(sp.points.size() == 3, "the envelope of ↑{ab} has 3 points");
    s.expect(sp.points[sp.x].is_all() && sp.points[sp.y] == f,
             "endpoint labels");
    const std::vector<UpSet> expected = {UpSet::all(ab), up_a, f};
    s.expect(sp.points == expected, "points are A*, ↑{a}, ↑{ab} in order");
    s.expect(sp.dist[0][1] == up_a && sp.dist[1][2] == up_b &&
                 sp.dist[0][2] == f,
             "distances along the path");

    BlockPath path =
        block_decomposition(graph_of(to_transition_system(sp)), sp.x, sp.y);
    s.expect(path.blocks.size() == 2 && path.cuts == std::vector<size_t>{1},
             "the blocks form a two-step path through ↑{a}");

    const Factorization expected_factors{{up_a, up_b}};
    s.expect(factorize(f) == expected_factors, "factorize(↑{ab}) = [↑a, ↑b]");
    s.expect(factorize_via_blocks(f) == expected_factors,
             "factorize_via_blocks(↑{ab}) = [↑a, ↑b]");
  });
  return s.take();
}

SuiteResult prefix_suffix_audit(std::vector<std::string>* findings) {
  Suite s("prefix-suffix-audit");
  for (const std::string& letters : {std::string("ab"), std::string("abc")}) {
    const Alphabet a = Alphabet::make(letters);
    std::vector<Word> words;
    for (const Word& u : oracle::all_words(a, 4)) {
      if (!u.empty()) words.push_back(u);
    }
    for (size_t i = 0; i < words.size(); ++i) {
      for (size_t j = i + 1; j < words.size(); ++j) {
        const Word& u = words[i];
        const Word& v = words[j];
        if (higman_leq(a, u, v) || higman_leq(a, v, u)) continue;
        const bool predicted = u.front() != v.front() && u.back() != v.back();
        const bool actual = is_irreducible(UpSet::of(a, {u, v}));
        s.count();
        if (predicted != actual && findings) {
          findings->push_back(
              "prefix/suffix criterion disagrees on {" + to_string(a, u) +
              "," + to_string(a, v) + "}: predicted " +
              (predicted ? "irreducible" : "reducible") + ", decided " +
              (actual ? "irreducible" : "reducible"));
        }
      }
    }
  }
  return s.take();
}

}  // namespace suites

SelfcheckReport run_selfcheck(uint64_t seed, int cases) {
  SelfcheckReport report;
  report.seed = seed;
  report.cases = cases;
  const int small = std::max(1, cases / 5);
  report.suites.push_back(suites::order_laws(seed, std::max(1, cases / 10)));
  report.suites.push_back(suites::oracle_equivalence(seed, cases));
  report.suites.push_back(suites::min_homomorphism(seed, cases));
  report.suites.push_back(suites::antichain_cardinality(seed, cases));
  report.suites.push_back(suites::cancellation(seed, cases));
  report.suites.push_back(suites::distributivity(seed, cases));
  report.suites.push_back(suites::residual_maximality(seed, small));
  report.suites.push_back(suites::equidivisibility(seed, cases));
  report.suites.push_back(suites::summability(seed, cases));
  report.suites.push_back(suites::factorization_unique(seed, small, small));
  report.suites.push_back(suites::macneille_cones(seed, small));
  report.suites.push_back(suites::closure_laws(seed, cases));
  report.suites.push_back(suites::closed_factors(seed, small));
  report.suites.push_back(suites::metric_axioms(seed, small));
  report.suites.push_back(suites::automaton_language_law(seed, small));
  report.suites.push_back(suites::blocks_agreement(seed, small, small));
  report.suites.push_back(suites::gluing(seed, small));
  report.suites.push_back(suites::boundary_cases());
  report.suites.push_back(suites::worked_envelope());
  report.suites.push_back(suites::prefix_suffix_audit(&report.findings));
  return report;
}

}  // namespace higman
