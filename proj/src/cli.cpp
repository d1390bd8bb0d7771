#include "dendri/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "dendri/gsbcheck.hpp"
#include "dendri/oracle.hpp"
#include "dendri/rewrite.hpp"
#include "dendri/series.hpp"

namespace dendri::cli {

bool DimensionReport::agree() const {
  const Integer dd(static_cast<unsigned long>(dd_words));
  const Integer rw(static_cast<unsigned long>(rewritten));
  bool ok = dd == closed_form && rw == closed_form;
  if (oracle) ok = ok && Integer(static_cast<unsigned long>(*oracle)) == closed_form;
  return ok;
}

DimensionReport dimension_report(std::size_t m, std::size_t n, bool with_oracle) {
  DimensionReport r;
  r.m = m;
  const Alphabet alphabet{n};
  const auto words = enumerate_normal_lwords(m, n);
  r.normal_lwords = words.size();

  EnumerationIndex dd;
  dd.degree = m;
  dd.alphabet = alphabet;
  dd.words = enumerate_dd_words(m, n);
  for (std::size_t i = 0; i < dd.words.size(); ++i) dd.position.emplace(dd.words[i], i);
  r.dd_words = dd.size();

  Rewriter rewriter(alphabet);
  RowEchelon image;
  for (const auto& w : words.words) image.insert(coordinates(rewriter.word_normal_form(w), dd));
  r.rewritten = image.rank();

  if (with_oracle) r.oracle = quotient_dim(m, n);
  r.closed_form = dim_closed(m, n);
  return r;
}

namespace {

enum class Format { Text, Json };

struct Global {
  Format format = Format::Text;
  std::uint64_t seed = kDefaultSeed;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> gather_inputs(const std::vector<std::string>& positional, bool from_stdin, std::istream& in) {
  std::vector<std::string> inputs = positional;
  if (from_stdin) {
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      inputs.push_back(line);
    }
  }
  if (inputs.empty()) throw UsageError("no input expressions (pass them as arguments or use --stdin)");
  return inputs;
}

std::vector<LWord> parse_inputs(const std::vector<std::string>& inputs, std::optional<std::size_t> generators,
                                Alphabet& alphabet) {
  std::optional<Alphabet> bound;
  if (generators) bound = Alphabet{*generators};
  std::vector<LWord> words;
  std::uint32_t max_gen = 1;
  for (const auto& s : inputs) {
    words.push_back(parse_lword(s, bound));
    max_gen = std::max(max_gen, words.back().max_generator());
  }
  alphabet = bound ? *bound : Alphabet{max_gen};
  return words;
}

void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

int cmd_normalize(const Global& g, const std::vector<std::string>& inputs, std::optional<std::size_t> generators,
                  std::ostream& out) {
  Alphabet alphabet;
  auto words = parse_inputs(inputs, generators, alphabet);
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& w : words) {
    LWord nw = normalize(w);
    if (g.format == Format::Json)
      arr.push_back({{"n", alphabet.size}, {"input", to_string(w)}, {"word", to_string(nw)}});
    else
      out << to_string(nw) << '\n';
  }
  if (g.format == Format::Json) print_json(out, arr);
  return kOk;
}

int cmd_reduce(const Global& g, const std::vector<std::string>& inputs, std::optional<std::size_t> generators,
               std::ostream& out) {
  Alphabet alphabet;
  auto words = parse_inputs(inputs, generators, alphabet);
  Rewriter rewriter(alphabet);
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& w : words) {
    Polynomial nf = rewriter.normal_form(Polynomial::monomial(alphabet, normalize(w)));
    if (g.format == Format::Json)
      arr.push_back(to_json(nf));
    else
      out << to_string(nf) << '\n';
  }
  if (g.format == Format::Json) print_json(out, words.size() == 1 ? arr[0] : arr);
  return kOk;
}

int cmd_count(const Global& g, std::size_t n, std::size_t max_degree, bool with_oracle, std::ostream& out) {
  std::vector<DimensionReport> rows;
  for (std::size_t m = 1; m <= max_degree; ++m) rows.push_back(dimension_report(m, n, with_oracle));
  bool all = std::all_of(rows.begin(), rows.end(), [](const DimensionReport& r) { return r.agree(); });
  if (g.format == Format::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json j{{"m", r.m},
                       {"normal_lwords", r.normal_lwords},
                       {"dd_words", r.dd_words},
                       {"rewritten", r.rewritten},
                       {"closed_form", r.closed_form.get_str()},
                       {"agree", r.agree()}};
      if (r.oracle) j["oracle"] = *r.oracle;
      arr.push_back(std::move(j));
    }
    print_json(out, {{"n", n}, {"rows", std::move(arr)}, {"agree", all}});
  } else {
    out << std::setw(3) << "m" << std::setw(14) << "normal_L" << std::setw(12) << "dd_words" << std::setw(12)
        << "rewritten";
    if (with_oracle) out << std::setw(10) << "oracle";
    out << std::setw(14) << "closed" << "  agree\n";
    for (const auto& r : rows) {
      out << std::setw(3) << r.m << std::setw(14) << r.normal_lwords << std::setw(12) << r.dd_words << std::setw(12)
          << r.rewritten;
      if (with_oracle) out << std::setw(10) << *r.oracle;
      out << std::setw(14) << r.closed_form.get_str() << "  " << (r.agree() ? "yes" : "NO") << '\n';
    }
  }
  return all ? kOk : kVerificationFailed;
}

int cmd_hilbert(const Global& g, std::size_t n, std::size_t max_degree, const std::string& method, std::ostream& out) {
  static const std::map<std::string, DimensionMethod> methods{{"recursive", DimensionMethod::Recursive},
                                                              {"closed", DimensionMethod::Closed},
                                                              {"gf", DimensionMethod::GeneratingFunction}};
  if (method != "all") {
    DimensionTable t = dimension_table(max_degree, n, methods.at(method));
    if (g.format == Format::Json) {
      auto j = to_json(t);
      j["method"] = method;
      print_json(out, j);
    } else {
      out << std::setw(4) << "m" << std::setw(24) << "f_m" << "  dim\n";
      for (const auto& r : t.rows) out << std::setw(4) << r.m << std::setw(24) << r.f_m.get_str() << "  " << r.dim.get_str() << '\n';
    }
    return kOk;
  }

  auto rec = dimension_table(max_degree, n, DimensionMethod::Recursive);
  auto closed = dimension_table(max_degree, n, DimensionMethod::Closed);
  auto gf = dimension_table(max_degree, n, DimensionMethod::GeneratingFunction);
  bool all = true;
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream text;
  text << std::setw(4) << "m" << std::setw(24) << "f_m" << std::setw(36) << "recursive" << std::setw(36) << "closed"
       << std::setw(36) << "gf" << "  agree\n";
  for (std::size_t i = 0; i < rec.rows.size(); ++i) {
    bool agree = rec.rows[i].dim == closed.rows[i].dim && closed.rows[i].dim == gf.rows[i].dim;
    all = all && agree;
    rows.push_back({{"m", rec.rows[i].m},
                    {"dim", closed.rows[i].dim.get_str()},
                    {"f_m", rec.rows[i].f_m.get_str()},
                    {"recursive", rec.rows[i].dim.get_str()},
                    {"closed", closed.rows[i].dim.get_str()},
                    {"gf", gf.rows[i].dim.get_str()},
                    {"agree", agree}});
    text << std::setw(4) << rec.rows[i].m << std::setw(24) << rec.rows[i].f_m.get_str() << std::setw(36)
         << rec.rows[i].dim.get_str() << std::setw(36) << closed.rows[i].dim.get_str() << std::setw(36)
         << gf.rows[i].dim.get_str() << "  " << (agree ? "yes" : "NO") << '\n';
  }
  if (g.format == Format::Json)
    print_json(out, {{"n", n}, {"method", "all"}, {"rows", std::move(rows)}, {"agree", all}});
  else
    out << text.str();
  return all ? kOk : kVerificationFailed;
}

int cmd_gk(const Global& g, std::size_t n, const std::vector<std::size_t>& degrees, std::ostream& out) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t d : degrees) {
    GKStatistic s = gk_statistic(d, n);
    if (g.format == Format::Json)
      rows.push_back(to_json(s));
    else
      out << std::setw(8) << d << "  " << s.value.to_string(30) << '\n';
  }
  if (g.format == Format::Json) print_json(out, rows);
  return kOk;
}

int cmd_verify_gsb(const Global& g, std::size_t n, std::size_t max_degree, bool named, std::size_t samples,
                   std::ostream& out) {
  std::vector<CompositionReport> reports = check_all_right_mult(max_degree, n);
  auto inclusion = check_local_confluence(max_degree, n);
  std::move(inclusion.begin(), inclusion.end(), std::back_inserter(reports));

  if (samples > 0) {
    // Random right-multiplication checks with composite factors, one
    // degree past the exhaustive range.
    const Alphabet alphabet{n};
    Rewriter rewriter(alphabet);
    std::mt19937_64 rng(g.seed);
    std::vector<std::vector<LWord>> words(4);
    for (std::size_t d = 1; d <= 3; ++d) words[d] = enumerate_normal_lwords(d, n).words;
    std::uniform_int_distribution<std::size_t> deg(1, 3);
    auto pick = [&] {
      const auto& pool = words[deg(rng)];
      return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    };
    for (std::size_t i = 0; i < samples; ++i) {
      RuleId rule = rng() % 2 == 0 ? RuleId::F2 : RuleId::F3;
      std::vector<LWord> b;
      for (std::size_t k = 0; k < arity(rule); ++k) b.push_back(pick());
      reports.push_back(check_right_mult(rule, b, pick(), alphabet, rewriter));
    }
  }
  if (named) {
    auto cases = check_named_cases(std::max<std::size_t>(n, 6));
    std::move(cases.begin(), cases.end(), std::back_inserter(reports));
  }

  bool all = std::all_of(reports.begin(), reports.end(),
                         [](const CompositionReport& r) { return r.ok && r.within_bound; });
  if (g.format == Format::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    print_json(out, {{"n", n}, {"max_degree", max_degree}, {"checked", reports.size()}, {"ok", all},
                     {"reports", std::move(arr)}});
  } else {
    struct Tally {
      std::size_t total = 0, failed = 0;
    };
    std::map<std::string, Tally> by_case;
    for (const auto& r : reports) {
      auto& t = by_case[r.case_label];
      ++t.total;
      if (!(r.ok && r.within_bound)) ++t.failed;
    }
    out << "compositions checked: " << reports.size() << " (generators " << n << ", degree <= " << max_degree
        << ")\n";
    for (const auto& [label, t] : by_case)
      out << "  case " << std::setw(9) << std::left << label << std::right << std::setw(8) << t.total
          << (t.failed ? "  FAILED " + std::to_string(t.failed) : std::string("  ok")) << '\n';
    for (const auto& r : reports)
      if (!(r.ok && r.within_bound))
        out << "FAIL " << r.case_label << " at " << to_string(r.ambiguity_word) << ": residual "
            << to_string(r.residual) << '\n';
    out << (all ? "all compositions trivial\n" : "verification FAILED\n");
  }
  return all ? kOk : kVerificationFailed;
}

int cmd_oracle_dim(const Global& g, std::size_t n, std::size_t degree, bool include_f3, std::ostream& out) {
  OracleDimension d = oracle_dimension(degree, n, include_f3);
  if (g.format == Format::Json) {
    print_json(out, to_json(d));
  } else {
    out << "degree        " << d.degree << '\n'
        << "generators    " << d.n << '\n'
        << "normal words  " << d.n_words << '\n'
        << "rank          " << d.rank << '\n'
        << "quotient dim  " << d.quotient_dim << '\n'
        << "closed form   " << d.closed_form.get_str() << '\n'
        << "agree         " << (d.agree ? "true" : "false") << '\n';
  }
  return d.agree ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free dendriform algebras: normal forms, Groebner-Shirshov verification and Hilbert series",
               "dendri"};
  app.require_subcommand(1);
  app.fallthrough();

  const CLI::Range positive(std::size_t{1}, std::size_t{1} << 32, "POSITIVE");

  Global global;
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", global.seed, "Seed for randomized checks");

  std::vector<std::string> exprs;
  bool from_stdin = false;
  std::optional<std::size_t> word_generators;
  std::size_t generators = 1;
  std::size_t max_degree = 1;
  std::size_t degree = 1;
  std::string method = "all";
  std::vector<std::size_t> degrees;
  bool named = false;
  bool include_f3 = false;
  bool with_oracle = false;
  std::size_t samples = 0;

  auto add_word_input = [&](CLI::App* sub) {
    sub->add_option("expr", exprs, "Expressions such as \"((x1 > x2) < x3)\"");
    sub->add_flag("--stdin", from_stdin, "Read one expression per line from standard input");
    sub->add_option("--generators,-n", word_generators, "Alphabet size (default: largest index used)")
        ->check(positive);
  };
  auto* normalize_cmd = app.add_subcommand("normalize", "Normal L-word of an expression");
  add_word_input(normalize_cmd);
  auto* reduce_cmd = app.add_subcommand("reduce", "Normal form in the free dendriform algebra");
  add_word_input(reduce_cmd);

  auto* count_cmd = app.add_subcommand("count", "Count basis words per degree by enumeration and rewriting");
  count_cmd->add_option("--generators,-n", generators)->required()->check(positive);
  count_cmd->add_option("--max-degree", max_degree)->required()->check(positive);
  count_cmd->add_flag("--oracle", with_oracle, "Also compute the relation-matrix dimension");

  auto* hilbert_cmd = app.add_subcommand("hilbert", "Dimension table of the Hilbert series");
  hilbert_cmd->add_option("--generators,-n", generators)->required()->check(positive);
  hilbert_cmd->add_option("--max-degree", max_degree)->required()->check(positive);
  hilbert_cmd->add_option("--method", method)->check(CLI::IsMember({"recursive", "closed", "gf", "all"}));

  auto* gk_cmd = app.add_subcommand("gk", "Growth statistic ln(dim DD_d) / ln d");
  gk_cmd->add_option("--generators,-n", generators)->required()->check(positive);
  gk_cmd->add_option("--degrees", degrees)->required()->delimiter(',')->check(CLI::Range(2ul, 1000000ul));

  auto* verify_cmd = app.add_subcommand("verify-gsb", "Check all compositions up to a degree");
  verify_cmd->add_option("--generators,-n", generators)->required()->check(positive);
  verify_cmd->add_option("--max-degree", max_degree)->required()->check(CLI::Range(3ul, 64ul));
  verify_cmd->add_flag("--named-cases", named, "Also check cases 6.4, 10.5 and 11.6");
  verify_cmd->add_option("--samples", samples, "Extra random right-multiplication checks (uses --seed)");

  auto* oracle_cmd = app.add_subcommand("oracle-dim", "Quotient dimension by exact linear algebra");
  oracle_cmd->add_option("--generators,-n", generators)->required()->check(positive);
  oracle_cmd->add_option("--degree", degree)->required()->check(positive);
  oracle_cmd->add_flag("--include-f3", include_f3, "Add f3 instances as extra rows");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  global.format = format == "json" ? Format::Json : Format::Text;

  try {
    if (*normalize_cmd) return cmd_normalize(global, gather_inputs(exprs, from_stdin, in), word_generators, out);
    if (*reduce_cmd) return cmd_reduce(global, gather_inputs(exprs, from_stdin, in), word_generators, out);
    if (*count_cmd) return cmd_count(global, generators, max_degree, with_oracle, out);
    if (*hilbert_cmd) return cmd_hilbert(global, generators, max_degree, method, out);
    if (*gk_cmd) return cmd_gk(global, generators, degrees, out);
    if (*verify_cmd) return cmd_verify_gsb(global, generators, max_degree, named, samples, out);
    if (*oracle_cmd) return cmd_oracle_dim(global, generators, degree, include_f3, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace dendri::cli
