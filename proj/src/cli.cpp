#include "scd/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "scd/balanced.hpp"
#include "scd/domination.hpp"
#include "scd/io.hpp"
#include "scd/matrix.hpp"
#include "scd/obstructions.hpp"
#include "scd/recognition.hpp"
#include "scd/report.hpp"
#include "scd/tournaments.hpp"

namespace scd {

namespace {

constexpr int kExitAccepted = 0;
constexpr int kExitRejected = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitInputError = 3;

std::string detect_class(const Digraph& d) {
  if (d.is_symmetric()) return "symmetric";
  if (is_tournament(d)) return "tournament";
  if (level_partition(d)) return "balanced";
  return "general";
}

struct OutputOptions {
  bool json_requested = false;
  std::string json_path;  // empty = stdout
  std::string dot_path;
};

void emit(const RunReport& report, const Digraph& d, const OutputOptions& opt,
          std::ostream& out) {
  if (opt.json_requested && opt.json_path.empty()) {
    out << report_to_json(report).dump(2) << "\n";
  } else {
    print_human(out, report);
    if (opt.json_requested) {
      std::ofstream jf(opt.json_path);
      if (!jf) throw input_error("cannot write " + opt.json_path);
      jf << report_to_json(report).dump(2) << "\n";
    }
  }
  if (!opt.dot_path.empty() && report.certificate) {
    std::ofstream df(opt.dot_path);
    if (!df) throw input_error("cannot write " + opt.dot_path);
    write_dot(df, d, *report.certificate);
  }
}

RunReport base_report(const std::string& command, const Digraph& d) {
  RunReport r;
  r.command = command;
  r.n = d.n();
  r.arcs = d.arc_count() - d.loop_count();
  r.loops = d.loop_count();
  r.detected_class = detect_class(d);
  return r;
}

int finish(RunReport& r, const Digraph& d, const OutputOptions& opt, std::ostream& out,
           std::chrono::steady_clock::time_point t0, int code) {
  r.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  emit(r, d, opt, out);
  return code;
}

int cmd_recognize(const Digraph& d, const std::string& klass, int oracle_limit,
                  int obstruction_budget, const OutputOptions& opt, std::ostream& out) {
  auto t0 = std::chrono::steady_clock::now();
  RunReport r = base_report("recognize", d);
  std::string use = (klass == "auto") ? r.detected_class : klass;

  if (use == "symmetric") {
    if (!d.is_symmetric()) throw input_error("--class symmetric: input is not symmetric");
    int budget = obstruction_budget > 0 ? obstruction_budget : d.n();
    Certificate c = recognize_symmetric(d, budget);
    r.certificate = c;
    r.verdict = certificate_accepts(c) ? "strongly-chordal" : "not-strongly-chordal";
    return finish(r, d, opt, out, t0, certificate_accepts(c) ? kExitAccepted : kExitRejected);
  }
  if (use == "tournament") {
    if (!is_tournament(d)) throw input_error("--class tournament: input is not a tournament");
    TournamentClass tc = classify_tournament(d);
    if (tc.accepted()) {
      r.certificate = StrongOrderingCert{*tc.ordering};
      r.verdict = "strongly-chordal";
      std::ostringstream note;
      switch (tc.kind) {
        case TournamentClass::Kind::ReflexiveTransitive:
          note << "reflexive transitive tournament on " << tc.n << " vertices";
          break;
        case TournamentClass::Kind::IrrBlowup:
          note << "transitive blowup (n=" << tc.n << ", i=" << tc.i << ", k=" << tc.k << ")";
          break;
        case TournamentClass::Kind::MixedBlowup:
          note << "transitive blowup with loops (n=" << tc.n << ", i=" << tc.i
               << ", k=" << tc.k << ")";
          break;
        default:
          note << tc.note;
      }
      r.note = note.str();
      return finish(r, d, opt, out, t0, kExitAccepted);
    }
    if (tc.obstruction)
      r.certificate = *tc.obstruction;
    else
      r.certificate = UnwitnessedCert{tc.note};
    r.verdict = "not-strongly-chordal";
    return finish(r, d, opt, out, t0, kExitRejected);
  }
  if (use == "balanced") {
    if (!level_partition(d)) throw input_error("--class balanced: input is not balanced");
    Certificate c = strongly_chordal_balanced(d);
    r.certificate = c;
    r.verdict = certificate_accepts(c) ? "strongly-chordal" : "not-strongly-chordal";
    return finish(r, d, opt, out, t0, certificate_accepts(c) ? kExitAccepted : kExitRejected);
  }
  // general digraph: only the factorial oracle is available
  if (d.n() > oracle_limit) {
    r.verdict = "undecided";
    r.note = "general case: polynomial recognition is open; n=" + std::to_string(d.n()) +
             " exceeds the oracle limit " + std::to_string(oracle_limit);
    return finish(r, d, opt, out, t0, kExitUndecided);
  }
  auto ord = brute_force_strongly_chordal(d, oracle_limit);
  if (ord) {
    r.certificate = StrongOrderingCert{*ord};
    r.verdict = "strongly-chordal";
    return finish(r, d, opt, out, t0, kExitAccepted);
  }
  r.certificate = UnwitnessedCert{"all " + std::to_string(d.n()) +
                                  "! simultaneous permutations contain a Gamma submatrix"};
  r.verdict = "not-strongly-chordal";
  return finish(r, d, opt, out, t0, kExitRejected);
}

int cmd_dominate(const Digraph& d, int obstruction_budget, const OutputOptions& opt,
                 std::ostream& out) {
  auto t0 = std::chrono::steady_clock::now();
  RunReport r = base_report("dominate", d);
  if (!d.is_symmetric())
    throw input_error("dominate requires a symmetric digraph (graph with possible loops)");
  int budget = obstruction_budget > 0 ? obstruction_budget : d.n();
  Certificate c = recognize_symmetric(d, budget);
  if (!certificate_accepts(c)) {
    r.certificate = c;
    r.verdict = "not-strongly-chordal";
    r.note = "domination not attempted";
    return finish(r, d, opt, out, t0, kExitRejected);
  }
  const auto& ord = std::get<StrongOrderingCert>(c).ordering;
  try {
    DominationResult res = general_dominate(d, ord, OrderingCheck::Verify);
    r.certificate = c;
    r.verdict = "strongly-chordal";
    r.domination_size = int(res.D.size());
    r.dominating_set = res.D;
    r.disjoint_set = res.C;
    return finish(r, d, opt, out, t0, kExitAccepted);
  } catch (const infeasible_error& e) {
    r.verdict = "infeasible";
    std::ostringstream note;
    note << e.what() << "; undominatable:";
    for (int v : e.undominatable) note << ' ' << v;
    r.note = note.str();
    return finish(r, d, opt, out, t0, kExitRejected);
  }
}

int cmd_oracle(const std::string& path, const std::string& mode, int oracle_limit,
               const OutputOptions& opt, std::ostream& out) {
  auto t0 = std::chrono::steady_clock::now();
  if (mode == "totally-balanced") {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    ZeroOneMatrix m;
    if (detect_format(in) == FileFormat::Matrix) {
      std::ifstream in2(path);
      m = matrix_from_lines(read_matrix_lines(in2));
    } else {
      m = adjacency_matrix(read_digraph_file(path));
    }
    RunReport r;
    r.command = "oracle";
    r.n = m.rows;
    for (const auto& row : m.row) r.arcs += row.count();
    r.detected_class = "matrix";
    bool tb = is_totally_balanced(m);
    r.totally_balanced = tb;
    r.verdict = tb ? "totally-balanced" : "not-totally-balanced";
    Digraph dummy(0);
    return finish(r, dummy, opt, out, t0, tb ? kExitAccepted : kExitRejected);
  }

  Digraph d = read_any_digraph_file(path);
  RunReport r = base_report("oracle", d);
  if (mode == "min-domination") {
    auto res = brute_force_min_domination(d);
    if (!res) {
      r.verdict = "infeasible";
      return finish(r, d, opt, out, t0, kExitRejected);
    }
    r.verdict = "ok";
    r.domination_size = res->first;
    r.dominating_set = res->second;
    return finish(r, d, opt, out, t0, kExitAccepted);
  }
  // default: factorial strong-chordality oracle
  auto ord = brute_force_strongly_chordal(d, oracle_limit);
  if (ord) {
    r.certificate = StrongOrderingCert{*ord};
    r.verdict = "strongly-chordal";
    return finish(r, d, opt, out, t0, kExitAccepted);
  }
  r.certificate = UnwitnessedCert{"exhaustive permutation search found no Gamma-free ordering"};
  r.verdict = "not-strongly-chordal";
  return finish(r, d, opt, out, t0, kExitRejected);
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(std::stoi(tok));
  return out;
}

int cmd_generate(const std::string& family, int length, int k, int n, int i,
                 const std::string& loops, const std::string& rim, const std::string& match,
                 const std::string& out_path, std::ostream& out) {
  auto id = family_from_name(family);
  if (!id) throw input_error("unknown family '" + family + "'");
  FamilySpec spec;
  spec.id = *id;
  spec.length = length;
  spec.k = k;
  spec.n = n;
  spec.i = i;
  spec.loop_set = parse_int_list(loops);
  spec.loopless_rim = parse_int_list(rim);
  if (!match.empty()) {
    std::stringstream ss(match);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      auto dash = tok.find('-');
      if (dash == std::string::npos) throw input_error("matching pairs look like a-b");
      spec.matching.emplace_back(std::stoi(tok.substr(0, dash)),
                                 std::stoi(tok.substr(dash + 1)));
    }
  }
  Digraph d = generate(spec);
  if (out_path.empty())
    write_digraph(out, d);
  else
    write_digraph_file(out_path, d);
  return kExitAccepted;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"strongly chordal digraph recognition, certificates and domination"};
  app.require_subcommand(1);

  std::string path, klass = "auto", dot_path, family, loops, rim, match,
              out_path, oracle_mode = "strongly-chordal";
  int oracle_limit = 9, obstruction_budget = 0;
  int length = 0, k = 0, n = 0, i = 1;
  std::vector<std::string> json_vals;
  std::vector<CLI::Option*> json_opts;

  auto add_output_opts = [&](CLI::App* sub) {
    json_opts.push_back(
        sub->add_option("--json", json_vals,
                        "structured output; with no PATH it replaces stdout output")
            ->expected(0, 1));
    sub->add_option("--dot", dot_path, "write the certificate subgraph in DOT format");
  };

  auto* rec = app.add_subcommand("recognize", "decide strong chordality, emit a certificate");
  rec->add_option("file", path, "digraph or matrix file")->required();
  rec->add_option("--class", klass, "auto|symmetric|tournament|balanced|general")
      ->check(CLI::IsMember({"auto", "symmetric", "tournament", "balanced", "general"}));
  rec->add_option("--oracle-limit", oracle_limit, "max n for the factorial oracle");
  rec->add_option("--obstruction-budget", obstruction_budget,
                  "max obstruction size searched (default: n)");
  add_output_opts(rec);

  auto* dom = app.add_subcommand("dominate", "minimum general dominating set with dual");
  dom->add_option("file", path, "digraph file (symmetric)")->required();
  dom->add_option("--obstruction-budget", obstruction_budget, "witness budget on rejection");
  add_output_opts(dom);

  auto* gen = app.add_subcommand("generate", "emit a member of a forbidden/reference family");
  gen->add_option("family", family, "F1..F9, T0..T6, RefTriangle, Fence, TTn, TTstar, TTblowup")
      ->required();
  gen->add_option("--len", length, "cycle/path/fence length");
  gen->add_option("--k", k, "trampoline core size or blowup size");
  gen->add_option("--n", n, "tournament size / position count");
  gen->add_option("--i", i, "blowup position (1-based)");
  gen->add_option("--loops", loops, "comma-separated loop vertices");
  gen->add_option("--rim", rim, "trampoline rim subset losing loops");
  gen->add_option("--match", match, "trampoline rim matching, e.g. 0-1,2-4");
  gen->add_option("--out", out_path, "output file (default: stdout)");

  auto* orc = app.add_subcommand("oracle", "run a brute-force oracle directly");
  orc->add_option("file", path, "digraph or matrix file")->required();
  orc->add_option("--mode", oracle_mode, "strongly-chordal|totally-balanced|min-domination")
      ->check(CLI::IsMember({"strongly-chordal", "totally-balanced", "min-domination"}));
  bool want_tb = false, want_dom = false, want_sc = false;
  orc->add_flag("--totally-balanced", want_tb, "shorthand for --mode totally-balanced");
  orc->add_flag("--min-domination", want_dom, "shorthand for --mode min-domination");
  orc->add_flag("--strongly-chordal", want_sc, "shorthand for --mode strongly-chordal");
  orc->add_option("--oracle-limit", oracle_limit, "max n for the factorial oracle");
  add_output_opts(orc);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  OutputOptions opt;
  for (auto* jopt : json_opts) opt.json_requested |= (jopt->count() > 0);
  if (!json_vals.empty()) opt.json_path = json_vals.front();
  opt.dot_path = dot_path;

  try {
    if (gen->parsed())
      return cmd_generate(family, length, k, n, i, loops, rim, match, out_path, out);
    if (orc->parsed()) {
      if (want_tb) oracle_mode = "totally-balanced";
      if (want_dom) oracle_mode = "min-domination";
      if (want_sc) oracle_mode = "strongly-chordal";
      return cmd_oracle(path, oracle_mode, oracle_limit, opt, out);
    }
    Digraph d = read_any_digraph_file(path);
    if (rec->parsed())
      return cmd_recognize(d, klass, oracle_limit, obstruction_budget, opt, out);
    if (dom->parsed()) return cmd_dominate(d, obstruction_budget, opt, out);
    err << "error: no subcommand\n";
    return kExitInputError;
  } catch (const guard_error& e) {
    err << "refused: " << e.what() << "\n";
    return kExitUndecided;
  } catch (const infeasible_error& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitRejected;
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const contract_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

} // namespace scd
