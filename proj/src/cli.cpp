#include "solvcore/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "solvcore/batch.hpp"
#include "solvcore/magnus.hpp"
#include "solvcore/oracle.hpp"
#include "solvcore/solvable.hpp"
#include "solvcore/wreath.hpp"

namespace solvcore::cli {

namespace {

Word random_reduced(std::mt19937_64& rng, int rank, int len) {
  std::vector<int> raw;
  raw.reserve(std::size_t(len));
  int last = 0;
  for (int i = 0; i < len; ++i) {
    for (;;) {
      int g = static_cast<int>(rng() % static_cast<unsigned long long>(rank)) + 1;
      int code = (rng() & 1) ? g : -g;
      if (code != -last) {
        raw.push_back(code);
        last = code;
        break;
      }
    }
  }
  return Word::normalize(rank, raw);
}

bool run_selftest(std::ostream& out) {
  bool all_ok = true;
  auto report = [&](const std::string& name, bool ok) {
    out << (ok ? "[PASS] " : "[FAIL] ") << name << '\n';
    all_ok = all_ok && ok;
  };
  std::mt19937_64 rng(20240817);

  {  // exhaustive agreement with the finite oracle on Z/2 wr Z/3
    Group a = Group::finite_cyclic(2), b = Group::finite_cyclic(3);
    FiniteGroupTable t = enumerate_finite_wreath(a, b);
    bool ok = true;
    for (int i = 0; i < static_cast<int>(t.size()) && ok; ++i) {
      for (int j = 0; j < static_cast<int>(t.size()) && ok; ++j) {
        bool brute = brute_conjugacy(t, i, j).has_value();
        bool algo = cp_wreath(table_elem_to_wreath(t, i), table_elem_to_wreath(t, j), a, b);
        ok = brute == algo;
      }
    }
    report("finite wreath oracle agreement (Z/2 wr Z/3, all pairs)", ok);
  }

  {  // pair-form round trips in wr(Z^1, Z^1)
    Group a = Group::free_abelian(1), b = Group::free_abelian(1);
    bool ok = true;
    for (int i = 0; i < 100 && ok; ++i) {
      Word w = random_reduced(rng, 2, 1 + int(rng() % 10));
      WreathElement e = to_pair_form(w, a, b);
      ok = w_equal(e, to_pair_form(pair_to_word(e, a, b), a, b), a, b);
    }
    report("pair form round trip (100 random mixed words)", ok);
  }

  {  // embedding is multiplicative in S(2,2)
    Group base = Group::free_solvable(1, 2);
    bool ok = true;
    for (int i = 0; i < 50 && ok; ++i) {
      Word u = random_reduced(rng, 2, 1 + int(rng() % 10));
      Word v = random_reduced(rng, 2, 1 + int(rng() % 10));
      ok = magnus_equal(base, magnus_image(concat(u, v), base),
                        magnus_mul(base, magnus_image(u, base), magnus_image(v, base)));
    }
    report("embedding multiplicativity (50 random pairs, S(2,2))", ok);
  }

  {  // power problem round trips in S(2,2)
    bool ok = true;
    for (int i = 0; i < 20 && ok; ++i) {
      Word y = random_reduced(rng, 2, 1 + int(rng() % 6));
      if (wp_solvable(2, 2, y)) continue;
      long long n = static_cast<long long>(rng() % 11) - 5;
      auto got = pp_solvable(2, 2, word_pow(y, n), y);
      ok = got && *got == n;
    }
    report("power problem round trips (20 samples, S(2,2))", ok);
  }

  {  // conjugacy search on constructed positives in S(2,2)
    Options opts;
    opts.cross_check = true;
    bool ok = true;
    for (int i = 0; i < 10 && ok; ++i) {
      Word x = random_reduced(rng, 2, 1 + int(rng() % 8));
      Word s = random_reduced(rng, 2, 1 + int(rng() % 4));
      Word y = conj_by(s, x);
      auto z = csp_solvable(2, 2, x, y, opts);
      ok = z && wp_solvable(2, 2, concat(conj_by(*z, x), invert(y)));
    }
    report("conjugacy search on constructed positives (10 samples, S(2,2))", ok);
  }

  return all_ok;
}

int dispatch(const Command& cmd, std::ostream& out, std::ostream& err) {
  if (cmd.verb == "selftest") {
    return run_selftest(out) ? kExitOk : kExitInternal;
  }

  Group g = Group::parse(cmd.group_text);
  std::size_t arity = (cmd.verb == "cp" || cmd.verb == "csp" || cmd.verb == "pp") ? 2 : 1;
  if (cmd.words.size() != arity) {
    throw ParseError("verb '" + cmd.verb + "' expects " + std::to_string(arity) + " word(s), got " +
                         std::to_string(cmd.words.size()),
                     0);
  }
  std::vector<Word> words;
  words.reserve(cmd.words.size());
  for (const auto& text : cmd.words) words.push_back(parse_word(text, g));

  Options opts;
  opts.cross_check = cmd.cross_check;
  opts.lift_budget = cmd.budget;
  opts.trace = cmd.trace ? &err : nullptr;

  if (cmd.verb == "wp") {
    out << (wp(g, words[0]) ? "yes" : "no") << '\n';
  } else if (cmd.verb == "cp") {
    out << (cp(g, words[0], words[1], opts) ? "yes" : "no") << '\n';
  } else if (cmd.verb == "csp") {
    auto z = csp(g, words[0], words[1], opts);
    if (z) {
      out << "conjugator: " << format_word(*z, g) << '\n';
    } else {
      out << "no" << '\n';
    }
  } else if (cmd.verb == "pp") {
    auto n = pp(g, words[0], words[1]);
    if (n) {
      out << "n = " << *n << '\n';
    } else {
      out << "no" << '\n';
    }
  } else if (cmd.verb == "pair") {
    if (g.kind() != Group::Kind::Wreath) {
      throw UnsupportedError("pair form requires a wreath product group, got " + g.to_string());
    }
    out << format_pair(to_pair_form(words[0], g.left(), g.right()), g.left(), g.right()) << '\n';
  } else if (cmd.verb == "magnus") {
    if (g.kind() != Group::Kind::FreeSolvable || g.degree() < 2) {
      throw UnsupportedError("matrix form requires S(d,r) with d >= 2, got " + g.to_string());
    }
    Group base = Group::free_solvable(g.degree() - 1, g.rank());
    out << format_magnus(magnus_image(words[0], base), base) << '\n';
  } else {
    throw ParseError("unknown verb '" + cmd.verb + "'", 0);
  }
  return kExitOk;
}

}  // namespace

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(cmd, out, err);
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const LiftBudgetError& e) {
    err << "unsupported: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const VerificationError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::invalid_argument& e) {  // ParseError, AlphabetError, bad descriptors
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"decision and search procedures for wreath products and free solvable groups"};
  app.require_subcommand(1);

  Command cmd;
  if (const char* env = std::getenv("SOLVCORE_BUDGET")) {
    cmd.budget = std::atoi(env) > 0 ? std::atoi(env) : cmd.budget;
  }

  auto add_common = [&](CLI::App* sub, std::size_t arity, bool needs_group) {
    if (needs_group) {
      sub->add_option("--group,-g", cmd.group_text, "group descriptor, e.g. S(2,2) or wr(Z^2,Z/3)")
          ->required();
    }
    if (arity > 0) {
      sub->add_option("words", cmd.words, "input word(s), e.g. \"x1 X2 x1\"")
          ->expected(static_cast<int>(arity));
    }
    sub->add_flag("--cross-check", cmd.cross_check,
                  "run both wreath decision paths and compare");
    sub->add_flag("--trace,--verbose", cmd.trace, "print algorithm steps to stderr");
    sub->add_option("--budget", cmd.budget, "conjugator lifting search budget");
  };

  add_common(app.add_subcommand("wp", "word problem: is the word trivial?"), 1, true);
  add_common(app.add_subcommand("cp", "conjugacy problem: are x and y conjugate?"), 2, true);
  add_common(app.add_subcommand("csp", "conjugacy search: find z with z x z^-1 = y"), 2, true);
  add_common(app.add_subcommand("pp", "power problem: find n with x = y^n"), 2, true);
  add_common(app.add_subcommand("pair", "print the pair form of a wreath word"), 1, true);
  add_common(app.add_subcommand("magnus", "print the matrix image of a word of S(d,r)"), 1, true);
  add_common(app.add_subcommand("selftest", "run a quick subset of the validation suite"), 0,
             false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  cmd.verb = app.get_subcommands().front()->get_name();
  return run(cmd, out, err);
}

}  // namespace solvcore::cli
