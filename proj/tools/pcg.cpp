// pcg: command-line front end for partially commutative group computations.
//
// Subcommands operate on a group presentation loaded with --group and words
// given as positional arguments or streamed line-by-line with --stdin.
// Text output by default, stable JSON with --json.  Exit code 0 covers
// domain-level "no" answers; 2 signals usage or parse errors; 1 signals
// violated preconditions.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcg/bench.hpp"
#include "pcg/conjugacy.hpp"
#include "pcg/divisibility.hpp"
#include "pcg/oracle.hpp"
#include "pcg/presentation.hpp"
#include "pcg/random.hpp"
#include "pcg/rewrite.hpp"
#include "pcg/word.hpp"

using nlohmann::json;
using namespace pcg;

namespace {

struct Options {
  std::string group_file;
  bool json_out = false;
  bool batch = false;
  bool right = false;
  bool witness = false;
  std::string order = "prec";
  std::string subset;
  std::string left_subset;
  std::string right_subset;
};

Presentation load_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot read group file: " + path);
  return parse_presentation(in);
}

SymbolSet parse_subset(const Presentation& p, const std::string& csv) {
  SymbolSet s(p.rank());
  std::stringstream ss(csv);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name.empty()) continue;
    int idx = p.index_of(name);
    if (idx == 0) throw parse_error("unknown symbol in subset: " + name);
    s.set(idx);
  }
  return s;
}

json word_json(const Presentation& p, const Word& w) {
  json a = json::array();
  for (const auto& l : w.letters) a.push_back({{"s", p.name(l.sym)}, {"e", l.exp}});
  return a;
}

json counters_json(const OpCounter& c) {
  return {{"cancellations", c.cancellations},
          {"transpositions", c.transpositions},
          {"queries", c.queries},
          {"elementary", c.elementary}};
}

struct Answer {
  std::string text;
  json body;
};

using Handler = std::function<Answer(const Presentation&, const Options&,
                                     const std::vector<std::string>&)>;

std::string join_chains(const Presentation& p, const std::vector<Word>& ws) {
  std::string out;
  for (size_t i = 0; i < ws.size(); ++i) {
    if (i) out += " | ";
    out += display_word(p, ws[i]);
  }
  return out;
}

Answer do_normalize(const Presentation& p, const Options& o,
                    const std::vector<std::string>& args) {
  Word w = parse_word(p, args.at(0));
  OpCounter c;
  Word nf = o.order == "shortlex" ? shortlex_normalize(p, w, &c)
                                  : kb_normalize(p, w, &c);
  return {display_word(p, nf),
          {{"result", word_json(p, nf)}, {"counters", counters_json(c)}}};
}

Answer do_geodesic(const Presentation& p, const Options&,
                   const std::vector<std::string>& args) {
  Word w = parse_word(p, args.at(0));
  OpCounter c;
  Word g = reduce_to_geodesic(p, w, &c);
  return {display_word(p, g),
          {{"result", word_json(p, g)},
           {"geodesic_input", g.size() == w.size()},
           {"counters", counters_json(c)}}};
}

Answer do_divides(const Presentation& p, const Options& o,
                  const std::vector<std::string>& args) {
  Word u = parse_word(p, args.at(0));
  Word w = parse_word(p, args.at(1));
  OpCounter c;
  auto wit = o.right ? divides_right(p, u, w, &c) : divides_left(p, u, w, &c);
  if (!wit) return {"no", {{"result", false}, {"counters", counters_json(c)}}};
  return {"yes quotient=" + display_word(p, wit->quotient),
          {{"result", true},
           {"witness",
            {{"quotient", word_json(p, wit->quotient)},
             {"positions", wit->positions}}},
           {"counters", counters_json(c)}}};
}

Answer do_gcd(const Presentation& p, const Options& o,
              const std::vector<std::string>& args) {
  Word u = parse_word(p, args.at(0));
  Word v = parse_word(p, args.at(1));
  OpCounter c;
  Word g = o.right ? inverse(gcd_pair(p, inverse(u), inverse(v), &c))
                   : gcd_pair(p, u, v, &c);
  return {display_word(p, g),
          {{"result", word_json(p, g)}, {"counters", counters_json(c)}}};
}

Answer do_lm(const Presentation& p, const Options&,
             const std::vector<std::string>& args) {
  Word u = parse_word(p, args.at(0));
  Word v = parse_word(p, args.at(1));
  Word w = parse_word(p, args.at(2));
  OpCounter c;
  GcdLm gl = gcd_lm_of_divisors(p, u, v, w, &c);
  return {display_word(p, gl.lm),
          {{"result", word_json(p, gl.lm)},
           {"gcd", word_json(p, gl.gcd)},
           {"counters", counters_json(c)}}};
}

Answer do_chains(const Presentation& p, const Options&,
                 const std::vector<std::string>& args) {
  Word w = parse_word(p, args.at(0));
  OpCounter c;
  auto cd = chain_decomposition(p, reduce_to_geodesic(p, w), &c);
  json chains = json::array();
  for (const auto& ch : cd.chains) chains.push_back(word_json(p, ch));
  return {join_chains(p, cd.chains),
          {{"result", chains},
           {"chain_numbers", cd.chain_numbers},
           {"counters", counters_json(c)}}};
}

Answer do_pdiv(const Presentation& p, const Options& o,
               const std::vector<std::string>& args) {
  Word w = reduce_to_geodesic(p, parse_word(p, args.at(0)));
  SymbolSet y = parse_subset(p, o.subset);
  OpCounter c;
  ParabolicDivisor d =
      o.right ? parabolic_gd_right(p, w, y, &c) : parabolic_gd(p, w, y, &c);
  return {display_word(p, d.divisor),
          {{"result", word_json(p, d.divisor)},
           {"quotient", word_json(p, d.quotient)},
           {"counters", counters_json(c)}}};
}

Answer do_blocks(const Presentation& p, const Options&,
                 const std::vector<std::string>& args) {
  Word w = reduce_to_geodesic(p, parse_word(p, args.at(0)));
  OpCounter c;
  auto bd = block_decomposition(p, w, &c);
  json blocks = json::array();
  for (const auto& b : bd.blocks) blocks.push_back(word_json(p, b));
  return {join_chains(p, bd.blocks),
          {{"result", blocks}, {"counters", counters_json(c)}}};
}

Answer do_cycred(const Presentation& p, const Options& o,
                 const std::vector<std::string>& args) {
  Word w = parse_word(p, args.at(0));
  OpCounter c;
  auto cr = cyclically_reduce(p, reduce_to_geodesic(p, w), &c);
  std::string text = display_word(p, cr.word);
  if (o.witness) text += " z=" + display_word(p, cr.witness.conjugator);
  return {text,
          {{"result", word_json(p, cr.word)},
           {"witness", word_json(p, cr.witness.conjugator)},
           {"counters", counters_json(c)}}};
}

Answer do_exhaust(const Presentation& p, const Options& o,
                  const std::vector<std::string>& args) {
  Word w = parse_word(p, args.at(0));
  SymbolSet y = parse_subset(p, o.subset);
  OpCounter c;
  auto e = exhausted_form(p, reduce_to_geodesic(p, w), y, &c);
  std::string text = display_word(p, e.word);
  if (o.witness) text += " z=" + display_word(p, e.witness.conjugator);
  return {text,
          {{"result", word_json(p, e.word)},
           {"witness", word_json(p, e.witness.conjugator)},
           {"counters", counters_json(c)}}};
}

Answer do_conjugate(const Presentation& p, const Options& o,
                    const std::vector<std::string>& args) {
  Word g = parse_word(p, args.at(0));
  Word h = parse_word(p, args.at(1));
  OpCounter c;
  auto wit = are_conjugate(p, g, h, &c);
  if (!wit) return {"no", {{"result", false}, {"counters", counters_json(c)}}};
  std::string text = "yes";
  if (o.witness) text += " z=" + display_word(p, wit->conjugator);
  return {text,
          {{"result", true},
           {"witness", word_json(p, wit->conjugator)},
           {"counters", counters_json(c)}}};
}

Answer do_pconj(const Presentation& p, const Options& o,
                const std::vector<std::string>& args) {
  Word w = parse_word(p, args.at(0));  // base element
  Word v = parse_word(p, args.at(1));  // candidate
  SymbolSet y = parse_subset(p, o.subset);
  OpCounter c;
  auto wit = in_parabolic_conjugacy_class(p, v, w, y, &c);
  if (!wit) return {"no", {{"result", false}, {"counters", counters_json(c)}}};
  std::string text = "yes";
  if (o.witness) text += " z=" + display_word(p, wit->conjugator);
  return {text,
          {{"result", true},
           {"witness", word_json(p, wit->conjugator)},
           {"counters", counters_json(c)}}};
}

Answer do_dcoset(const Presentation& p, const Options& o,
                 const std::vector<std::string>& args) {
  Word g = parse_word(p, args.at(0));
  SymbolSet y = parse_subset(p, o.left_subset);
  SymbolSet z = parse_subset(p, o.right_subset);
  OpCounter c;
  auto d = double_coset_canonical(p, g, y, z, &c);
  return {display_word(p, d.canonical) + " h1=" + display_word(p, d.h1) +
              " h2=" + display_word(p, d.h2),
          {{"result", word_json(p, d.canonical)},
           {"h1", word_json(p, d.h1)},
           {"h2", word_json(p, d.h2)},
           {"counters", counters_json(c)}}};
}

Answer do_oracle(const Presentation& p, const Options& o,
                 const std::string& kind,
                 const std::vector<std::string>& args) {
  if (kind == "geodesics") {
    auto cls = oracle::enumerate_geodesics(p, parse_word(p, args.at(0)));
    json a = json::array();
    std::string text = std::to_string(cls.size()) + " geodesic words";
    for (const auto& g : cls) a.push_back(word_json(p, g));
    return {text, {{"result", a}}};
  }
  if (kind == "min") {
    auto ord = o.order == "shortlex" ? oracle::OrderKind::ShortLex
                                     : oracle::OrderKind::Prec;
    Word m = oracle::bruteforce_min(p, parse_word(p, args.at(0)), ord);
    return {display_word(p, m), {{"result", word_json(p, m)}}};
  }
  if (kind == "crset") {
    auto cls = oracle::cr_set(p, parse_word(p, args.at(0)));
    json a = json::array();
    for (const auto& g : cls) a.push_back(word_json(p, g));
    return {std::to_string(cls.size()) + " cyclically reduced conjugates",
            {{"result", a}}};
  }
  if (kind == "conjugate") {
    bool yes = oracle::bruteforce_conjugate(p, parse_word(p, args.at(0)),
                                            parse_word(p, args.at(1)));
    return {yes ? "yes" : "no", {{"result", yes}}};
  }
  if (kind == "divisors") {
    auto divs = oracle::bruteforce_divisors(p, parse_word(p, args.at(0)));
    json a = json::array();
    for (const auto& d : divs) a.push_back(word_json(p, d));
    return {std::to_string(divs.size()) + " left divisors", {{"result", a}}};
  }
  throw parse_error("unknown oracle subcommand: " + kind);
}

std::vector<std::string> split_query(const std::string& line) {
  std::vector<std::string> parts;
  std::string cur;
  std::stringstream ss(line);
  while (std::getline(ss, cur, ';')) parts.push_back(cur);
  if (parts.empty()) parts.push_back("");
  return parts;
}

/// Runs a handler once per positional query, or once per stdin line in
/// batch mode.  A failing line is reported inline and does not abort the
/// batch; the output has exactly one line per query.
int run_queries(const Presentation& p, const Options& o, size_t arity,
                const Handler& h, const std::vector<std::string>& positional) {
  std::vector<std::vector<std::string>> queries;
  json jqueries = json::array();
  if (o.batch) {
    std::string line;
    while (std::getline(std::cin, line)) queries.push_back(split_query(line));
  } else {
    queries.push_back(positional);
  }
  for (const auto& q : queries) {
    try {
      if (q.size() < arity)
        throw parse_error("expected " + std::to_string(arity) +
                          " word(s), got " + std::to_string(q.size()));
      Answer a = h(p, o, q);
      if (o.json_out) {
        a.body["query"] = q;
        std::cout << a.body.dump() << "\n";
      } else {
        std::cout << a.text << "\n";
      }
    } catch (const std::exception& e) {
      if (!o.batch) throw;
      if (o.json_out) {
        std::cout << json{{"query", q}, {"error", e.what()}}.dump() << "\n";
      } else {
        std::cout << "error: " << e.what() << "\n";
      }
    }
  }
  return 0;
}

void print_bench_report(const BenchReport& rep, bool as_json) {
  if (as_json) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
      json series = json::array();
      for (size_t i = 0; i < c.series.sizes.size(); ++i)
        series.push_back({{"n", c.series.sizes[i]},
                          {"mean", c.series.mean_metric[i]},
                          {"max", c.series.max_metric[i]}});
      checks.push_back({{"name", c.name},
                        {"bound", c.bound_text},
                        {"hard", c.hard},
                        {"fitted_exponent", c.fitted_exponent},
                        {"pass", c.pass},
                        {"series", series}});
    }
    std::cout << json{{"seed", rep.config.seed},
                      {"rank", rep.config.rank},
                      {"samples", rep.config.samples},
                      {"checks", checks}}
                     .dump(2)
              << "\n";
    return;
  }
  std::cout << "bench seed=" << rep.config.seed << " r=" << rep.config.rank
            << " samples=" << rep.config.samples << "\n";
  for (const auto& c : rep.checks) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "  [" << c.bound_text
              << "]";
    if (!c.hard) std::cout << "  fitted=" << c.fitted_exponent;
    std::cout << "\n";
    std::cout << "  ";
    for (size_t i = 0; i < c.series.sizes.size(); ++i)
      std::cout << " n=" << c.series.sizes[i] << " mean=" << c.series.mean_metric[i]
                << " max=" << c.series.max_metric[i] << ";";
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partially commutative group calculator"};
  app.require_subcommand(1);
  Options o;

  struct Sub {
    CLI::App* cmd;
    size_t arity;
    Handler handler;
  };
  std::vector<Sub> subs;

  auto add_common = [&](CLI::App* cmd, bool needs_group = true) {
    auto* g = cmd->add_option("--group", o.group_file, "presentation file");
    if (needs_group) g->required();
    cmd->add_flag("--json", o.json_out, "machine-readable output");
    cmd->add_flag("--stdin", o.batch, "read queries from standard input");
  };

  auto reg = [&](const std::string& name, const std::string& desc,
                 size_t arity, Handler h, bool right_flag = false,
                 bool witness_flag = false) -> CLI::App* {
    CLI::App* cmd = app.add_subcommand(name, desc);
    add_common(cmd);
    static std::vector<std::shared_ptr<std::vector<std::string>>> keep;
    auto words = std::make_shared<std::vector<std::string>>();
    keep.push_back(words);
    cmd->add_option("words", *words, "input word(s)");
    if (right_flag) cmd->add_flag("--right", o.right, "right-hand version");
    if (witness_flag) cmd->add_flag("--witness", o.witness, "print conjugator");
    subs.push_back({cmd, arity, std::move(h)});
    cmd->callback([&, cmd, words, arity]() {
      Presentation p = load_group(o.group_file);
      for (auto& s : subs)
        if (s.cmd == cmd) run_queries(p, o, arity, s.handler, *words);
    });
    return cmd;
  };

  auto* cnorm = reg("normalize", "normal form of a word", 1, do_normalize);
  cnorm->add_option("--order", o.order, "shortlex|prec")
      ->check(CLI::IsMember({"shortlex", "prec"}));
  reg("geodesic", "geodesic form of a word", 1, do_geodesic);
  reg("divides", "does u divide w", 2, do_divides, true);
  reg("gcd", "greatest common divisor", 2, do_gcd, true);
  reg("lm", "least common multiple of two divisors of w", 3, do_lm);
  reg("chains", "chain decomposition", 1, do_chains);
  auto* cpdiv = reg("pdiv", "greatest parabolic divisor", 1, do_pdiv, true);
  cpdiv->add_option("--subset", o.subset, "symbols of Y, comma separated")
      ->required();
  reg("blocks", "block decomposition", 1, do_blocks);
  reg("cycred", "cyclically reduced form", 1, do_cycred, false, true);
  auto* cexh = reg("exhaust", "exhausted form w.r.t. G(Y)", 1, do_exhaust,
                   false, true);
  cexh->add_option("--subset", o.subset, "symbols of Y, comma separated")
      ->required();
  reg("conjugate", "are two words conjugate", 2, do_conjugate, false, true);
  auto* cpconj = reg("pconj", "is CAND conjugate to BASE by G(Y)", 2, do_pconj,
                     false, true);
  cpconj->add_option("--subset", o.subset, "symbols of Y, comma separated")
      ->required();
  auto* cdc = reg("dcoset", "double coset canonical representative", 1,
                  do_dcoset);
  cdc->add_option("--left", o.left_subset, "symbols of Y, comma separated")
      ->required();
  cdc->add_option("--right", o.right_subset, "symbols of Z, comma separated")
      ->required();

  // oracle subcommands (debugging aids; small inputs only)
  CLI::App* corc = app.add_subcommand("oracle", "brute-force reference tools");
  corc->require_subcommand(1);
  for (const std::string kind :
       {"geodesics", "min", "crset", "conjugate", "divisors"}) {
    CLI::App* cmd = corc->add_subcommand(kind);
    add_common(cmd);
    if (kind == "min")
      cmd->add_option("--order", o.order, "shortlex|prec")
          ->check(CLI::IsMember({"shortlex", "prec"}));
    auto words = std::make_shared<std::vector<std::string>>();
    cmd->add_option("words", *words, "input word(s)");
    size_t arity = kind == "conjugate" ? 2 : 1;
    cmd->callback([&, kind, words, arity]() {
      Presentation p = load_group(o.group_file);
      Handler h = [kind](const Presentation& pp, const Options& oo,
                         const std::vector<std::string>& a) {
        return do_oracle(pp, oo, kind, a);
      };
      run_queries(p, o, arity, h, *words);
    });
  }

  // bench: operation-count validation harness
  CLI::App* cbench = app.add_subcommand("bench", "complexity bound checks");
  BenchConfig bcfg;
  std::vector<size_t> sizes;
  cbench->add_option("--seed", bcfg.seed, "random seed");
  cbench->add_option("--samples", bcfg.samples, "samples per size");
  cbench->add_option("--r", bcfg.rank, "alphabet rank");
  cbench->add_option("--density", bcfg.density_percent,
                     "commutation density, percent");
  cbench->add_option("--sizes", sizes, "input sizes");
  cbench->add_flag("--json", o.json_out, "machine-readable output");
  cbench->callback([&]() {
    if (!sizes.empty()) bcfg.sizes = sizes;
    BenchReport rep = run_bench(bcfg);
    print_bench_report(rep, o.json_out);
    if (!rep.all_pass()) throw precondition_error("bench bounds violated");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
