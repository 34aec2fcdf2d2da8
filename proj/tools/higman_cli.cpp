// Command-line surface over the final-segment algebra. One subcommand per
// operation, JSON in, a single JSON document (or DOT text) out.
//
// Exit codes: 0 success, 1 domain error, 2 usage or parse error,
// 3 violated internal invariant.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "higman/blocks.hpp"
#include "higman/envelope.hpp"
#include "higman/factorization.hpp"
#include "higman/json_io.hpp"
#include "higman/macneille.hpp"
#include "higman/oracle.hpp"
#include "higman/selfcheck.hpp"
#include "higman/upset.hpp"

namespace {

using higman::Alphabet;
using higman::DomainError;
using higman::ParseError;
using higman::Side;
using higman::UpSet;
using higman::Word;
using higman::io::json;

struct Context {
  std::string alphabet_path;
  size_t max_gens = 8;
  size_t max_len = 6;
  size_t max_letters = 4;
  std::optional<Alphabet> alphabet;

  const Alphabet& load_alphabet() {
    if (!alphabet) {
      if (alphabet_path.empty()) {
        throw ParseError("an --alphabet file is required");
      }
      std::ifstream in(alphabet_path);
      if (!in) throw ParseError("cannot open alphabet file " + alphabet_path);
      json j;
      try {
        in >> j;
      } catch (const json::exception& e) {
        throw ParseError(std::string("bad alphabet JSON: ") + e.what());
      }
      alphabet = higman::io::alphabet_from_json(j);
      if (static_cast<size_t>(alphabet->size()) > max_letters) {
        throw DomainError("alphabet exceeds the --max-letters cap of " +
                          std::to_string(max_letters));
      }
    }
    return *alphabet;
  }

  json json_operand(const std::string& text) const {
    std::string payload = text;
    if (payload.empty()) throw ParseError("empty operand");
    if (payload.front() != '{' && payload.front() != '[') {
      std::ifstream in(payload);
      if (!in) throw ParseError("cannot open operand file " + payload);
      std::ostringstream buf;
      buf << in.rdbuf();
      payload = buf.str();
    }
    try {
      return json::parse(payload);
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad operand JSON: ") + e.what());
    }
  }

  UpSet upset_arg(const std::string& text) {
    UpSet f = higman::io::upset_from_json(load_alphabet(), json_operand(text));
    if (f.gens().size() > max_gens) {
      throw DomainError("operand exceeds the --max-gens cap of " +
                        std::to_string(max_gens));
    }
    for (const Word& g : f.gens()) {
      if (g.size() > max_len) {
        throw DomainError("operand generator exceeds the --max-len cap of " +
                          std::to_string(max_len));
      }
    }
    return f;
  }

  Word word_arg(const std::string& text) {
    Word w = higman::io::word_from_text(load_alphabet(), text);
    if (w.size() > max_len) {
      throw DomainError("word operand exceeds the --max-len cap of " +
                        std::to_string(max_len));
    }
    return w;
  }
};

void add_common(CLI::App* cmd, Context& ctx) {
  cmd->add_option("--alphabet", ctx.alphabet_path,
                  "alphabet description file (JSON)");
  cmd->add_option("--max-gens", ctx.max_gens,
                  "refuse operands with more generators");
  cmd->add_option("--max-len", ctx.max_len,
                  "refuse operand generators longer than this");
  cmd->add_option("--max-letters", ctx.max_letters,
                  "refuse alphabets larger than this");
}

Side side_of(const std::string& s) {
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  throw ParseError("--side must be left or right");
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

json selfcheck_to_json(const higman::SelfcheckReport& report) {
  json suites = json::array();
  for (const auto& s : report.suites) {
    json entry{{"name", s.name},
               {"checks", s.checks},
               {"failures", s.failures}};
    if (!s.counterexample.empty()) {
      entry["counterexample"] = s.counterexample;
    }
    suites.push_back(std::move(entry));
  }
  return json{{"seed", report.seed},
              {"cases", report.cases},
              {"ok", report.ok()},
              {"suites", suites},
              {"findings", report.findings}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "final segments of a free monoid under the subword order: antichain "
      "algebra, unique factorization, cone closure, envelopes and block "
      "decomposition"};
  app.require_subcommand(1);
  Context ctx;

  std::string op_a, op_b, op_word, side_text = "right";
  std::vector<std::string> op_list;
  bool want_dot = false;
  bool want_json = false;
  bool want_blocks = false;
  uint64_t seed = 42;
  int cases = 50;
  size_t oracle_depth = 4;
  int exit_override = 0;

  auto* c_min = app.add_subcommand("min", "minimal generators of a word set");
  add_common(c_min, ctx);
  c_min->add_option("words", op_a, "JSON array of words")->required();
  c_min->callback([&] {
    json j = ctx.json_operand(op_a);
    const json& arr = j.is_object() && j.contains("gens") ? j.at("gens") : j;
    if (!arr.is_array()) throw ParseError("expected an array of words");
    std::vector<Word> words;
    for (const auto& item : arr) {
      words.push_back(higman::io::word_from_json(ctx.load_alphabet(), item));
    }
    emit(higman::io::upset_to_json(minimize(ctx.load_alphabet(), words)));
  });

  auto* c_member = app.add_subcommand("member", "is the word in the segment");
  add_common(c_member, ctx);
  c_member->add_option("segment", op_a)->required();
  c_member->add_option("word", op_word)->required();
  c_member->callback([&] {
    emit(json{{"member",
               member(ctx.upset_arg(op_a), ctx.word_arg(op_word))}});
  });

  auto* c_leq = app.add_subcommand("leq", "subword-order comparison");
  add_common(c_leq, ctx);
  c_leq->add_option("u", op_a)->required();
  c_leq->add_option("v", op_b)->required();
  c_leq->callback([&] {
    emit(json{{"leq", higman_leq(ctx.load_alphabet(), ctx.word_arg(op_a),
                                 ctx.word_arg(op_b))}});
  });

  auto* c_concat = app.add_subcommand("concat", "concatenate two segments");
  add_common(c_concat, ctx);
  c_concat->add_option("f", op_a)->required();
  c_concat->add_option("g", op_b)->required();
  c_concat->callback([&] {
    emit(higman::io::upset_to_json(
        concat(ctx.upset_arg(op_a), ctx.upset_arg(op_b))));
  });

  auto* c_meet = app.add_subcommand("meet", "set union of two segments");
  add_common(c_meet, ctx);
  c_meet->add_option("f", op_a)->required();
  c_meet->add_option("g", op_b)->required();
  c_meet->callback([&] {
    emit(higman::io::upset_to_json(
        union_meet(ctx.upset_arg(op_a), ctx.upset_arg(op_b))));
  });

  auto* c_intersect =
      app.add_subcommand("intersect", "set intersection of two segments");
  add_common(c_intersect, ctx);
  c_intersect->add_option("f", op_a)->required();
  c_intersect->add_option("g", op_b)->required();
  c_intersect->callback([&] {
    emit(higman::io::upset_to_json(
        intersect(ctx.upset_arg(op_a), ctx.upset_arg(op_b))));
  });

  auto* c_quot = app.add_subcommand("quotient", "word quotient of a segment");
  add_common(c_quot, ctx);
  c_quot->add_option("segment", op_a)->required();
  c_quot->add_option("word", op_word)->required();
  c_quot->add_option("--side", side_text, "left or right (default right)");
  c_quot->callback([&] {
    emit(higman::io::upset_to_json(quotient(
        ctx.upset_arg(op_a), ctx.word_arg(op_word), side_of(side_text))));
  });

  auto* c_res = app.add_subcommand("residual",
                                   "largest r with r·B (or B·r) inside F");
  add_common(c_res, ctx);
  c_res->add_option("f", op_a)->required();
  c_res->add_option("b", op_b)->required();
  c_res->add_option("--side", side_text, "left or right (default right)");
  c_res->callback([&] {
    emit(higman::io::upset_to_json(residual(
        ctx.upset_arg(op_a), ctx.upset_arg(op_b), side_of(side_text))));
  });

  auto* c_gamma = app.add_subcommand("gamma", "graduation of a segment");
  add_common(c_gamma, ctx);
  c_gamma->add_option("segment", op_a)->required();
  c_gamma->callback([&] {
    emit(json{{"gamma", graduation(ctx.upset_arg(op_a))}});
  });

  auto* c_irr = app.add_subcommand("irreducible", "irreducibility test");
  add_common(c_irr, ctx);
  c_irr->add_option("segment", op_a)->required();
  c_irr->callback([&] {
    emit(json{{"irreducible", is_irreducible(ctx.upset_arg(op_a))}});
  });

  auto* c_fact =
      app.add_subcommand("factorize", "unique factorization into irreducibles");
  add_common(c_fact, ctx);
  c_fact->add_option("segment", op_a)->required();
  c_fact->callback([&] {
    emit(higman::io::factorization_to_json(factorize(ctx.upset_arg(op_a))));
  });

  auto* c_factb = app.add_subcommand(
      "factorize-blocks", "factorization through the envelope block path");
  add_common(c_factb, ctx);
  c_factb->add_option("segment", op_a)->required();
  c_factb->add_flag("--blocks", want_blocks, "include the block path");
  c_factb->add_flag("--dot", want_dot, "emit the coloured block graph");
  c_factb->callback([&] {
    UpSet f = ctx.upset_arg(op_a);
    if (want_dot || want_blocks) {
      higman::EnvelopeSpace sp = higman::build_envelope(f);
      higman::BlockPath path = higman::block_decomposition(
          higman::graph_of(higman::to_transition_system(sp)), sp.x, sp.y);
      if (want_dot) {
        std::cout << higman::io::blocks_dot(sp, path);
        return;
      }
      json doc = higman::io::factorization_to_json(factorize_via_blocks(f));
      doc.update(higman::io::block_path_to_json(path));
      emit(doc);
      return;
    }
    emit(higman::io::factorization_to_json(factorize_via_blocks(f)));
  });

  auto* c_env = app.add_subcommand("envelope",
                                   "injective envelope of the two-point "
                                   "space at distance F");
  add_common(c_env, ctx);
  c_env->add_option("segment", op_a)->required();
  c_env->add_flag("--dot", want_dot, "emit the transition graph as DOT");
  c_env->add_flag("--json", want_json, "emit JSON (default)");
  c_env->callback([&] {
    higman::EnvelopeSpace sp = higman::build_envelope(ctx.upset_arg(op_a));
    if (want_dot) {
      std::cout << higman::io::envelope_dot(sp);
    } else {
      emit(higman::io::envelope_to_json(sp));
    }
  });

  auto* c_dist =
      app.add_subcommand("distance", "residuation distance of two segments");
  add_common(c_dist, ctx);
  c_dist->add_option("p", op_a)->required();
  c_dist->add_option("q", op_b)->required();
  c_dist->callback([&] {
    emit(higman::io::upset_to_json(higman::residuation_distance(
        ctx.upset_arg(op_a), ctx.upset_arg(op_b))));
  });

  auto* c_clo = app.add_subcommand("closure", "cone closure of a segment");
  add_common(c_clo, ctx);
  c_clo->add_option("segment", op_a)->required();
  c_clo->callback([&] {
    emit(higman::io::upset_to_json(closure(ctx.upset_arg(op_a))));
  });

  auto* c_iscl = app.add_subcommand("is-closed", "cone-closedness test");
  add_common(c_iscl, ctx);
  c_iscl->add_option("segment", op_a)->required();
  c_iscl->callback([&] {
    emit(json{{"closed", is_closed(ctx.upset_arg(op_a))}});
  });

  auto* c_cu = app.add_subcommand("closed-union",
                                  "closure of the union of segments");
  add_common(c_cu, ctx);
  c_cu->add_option("segments", op_list, "two or more segment operands")
      ->required();
  c_cu->callback([&] {
    std::vector<UpSet> fs;
    for (const std::string& text : op_list) fs.push_back(ctx.upset_arg(text));
    emit(higman::io::upset_to_json(closed_union(ctx.load_alphabet(), fs)));
  });

  auto* c_check = app.add_subcommand(
      "selfcheck", "run the cross-module property suites");
  c_check->add_option("--seed", seed, "deterministic seed (default 42)");
  c_check->add_option("--cases", cases, "instance count scale (default 50)");
  c_check->callback([&] {
    higman::SelfcheckReport report =
        higman::run_selfcheck(seed, std::max(1, cases));
    emit(selfcheck_to_json(report));
    if (!report.ok()) exit_override = 1;
  });

  // Debugging access to the brute-force side; not advertised.
  auto* c_oracle = app.add_subcommand("oracle", "");
  c_oracle->group("");
  {
    auto* t = c_oracle->add_subcommand("truncate", "explicit truncation");
    add_common(t, ctx);
    t->add_option("segment", op_a)->required();
    t->add_option("--depth", oracle_depth, "length cap (default 4)");
    t->callback([&] {
      auto bl = higman::oracle::truncate(ctx.upset_arg(op_a), oracle_depth);
      json words = json::array();
      for (const Word& w : bl.words) {
        words.push_back(higman::io::word_to_json(ctx.load_alphabet(), w));
      }
      emit(json{{"limit", bl.limit}, {"words", words}});
    });
    auto* r = c_oracle->add_subcommand("residual", "explicit word residual");
    add_common(r, ctx);
    r->add_option("segment", op_a)->required();
    r->add_option("word", op_word)->required();
    r->add_option("--side", side_text, "left or right (default right)");
    r->add_option("--depth", oracle_depth, "truncation depth (default 4)");
    r->callback([&] {
      auto bl = higman::oracle::truncate(ctx.upset_arg(op_a), oracle_depth);
      auto out = higman::oracle::residual_words(bl, ctx.word_arg(op_word),
                                                side_of(side_text));
      json words = json::array();
      for (const Word& w : out) {
        words.push_back(higman::io::word_to_json(ctx.load_alphabet(), w));
      }
      emit(json{{"words", words}});
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const higman::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return exit_override;
}
