#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "olr/bounds/bounds.hpp"
#include "olr/builder/registry.hpp"
#include "olr/core/detect.hpp"
#include "olr/harness/server.hpp"
#include "olr/harness/table.hpp"
#include "olr/harness/verify.hpp"
#include "olr/solver/solver.hpp"

using namespace olr;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string edges_to_string(const std::vector<Edge>& es) {
  std::string s;
  for (const auto& e : es) s += (s.empty() ? "" : " ") + to_string(e);
  return s.empty() ? "(none)" : s;
}

int cmd_play(const std::string& builder_spec, const std::string& painter_spec, int cap,
             const std::string& out, const std::string& replay, const std::string& red,
             const std::string& blue) {
  if (!replay.empty()) {
    std::ifstream in(replay);
    if (!in) throw std::runtime_error("cannot read " + replay);
    Transcript t = Transcript::from_jsonl(in);
    Board b = t.replay();
    GameGoal g{TargetPattern::parse(red), TargetPattern::parse(blue)};
    std::string winner = "none";
    if (contains_pattern(b, Color::Red, g.red)) winner = "red";
    if (contains_pattern(b, Color::Blue, g.blue)) winner = winner == "red" ? "both" : "blue";
    std::cout << "replayed " << t.size() << " rounds, winner " << winner << "\n";
    return winner == "none" ? 1 : 0;
  }
  BuilderStrategy s = parse_builder(builder_spec);
  PainterStrategy p = parse_painter(painter_spec);
  GameRecord rec = run_game(s, p, cap ? cap : s.claimed_bound + 16);
  std::cout << s.name << " vs " << p.name << ": " << to_string(*rec.winner) << " wins in "
            << rec.transcript.size() << " rounds (claimed bound " << s.claimed_bound << ")\n";
  if (out.empty())
    std::cout << rec.transcript.to_jsonl();
  else
    write_file(out, rec.transcript.to_jsonl());
  return static_cast<int>(rec.transcript.size()) <= s.claimed_bound ? 0 : 1;
}

int cmd_certify(const std::vector<std::string>& specs, int bound, const std::string& out) {
  bool all_ok = true;
  for (const auto& spec : specs) {
    BuilderStrategy s = parse_builder(spec);
    const int claimed = bound ? bound : s.claimed_bound;
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep = certify_bound(s, claimed);
    std::cout << s.name << " " << rep.goal.to_string() << " claimed " << claimed << " worst "
              << rep.worst_rounds << " leaves " << rep.leaves << " "
              << (rep.ok() ? "ok" : "COUNTEREXAMPLE") << " (" << seconds_since(t0) << "s)\n";
    if (!rep.ok()) {
      all_ok = false;
      std::cout << "  " << rep.failure << "\n";
      if (out.empty())
        std::cout << rep.counterexample->to_jsonl();
      else
        write_file(out, rep.counterexample->to_jsonl());
    }
  }
  return all_ok ? 0 : 1;
}

int cmd_solve(const std::string& red, const std::string& blue, int round_cap, int vertex_cap,
              int threads, bool full, const std::string& out) {
  GameGoal g{TargetPattern::parse(red), TargetPattern::parse(blue)};
  SolveConfig cfg(g, round_cap, vertex_cap);
  cfg.full_generator = full;
  if (threads > 1) std::cerr << "note: the solver runs single-threaded\n";
  auto t0 = std::chrono::steady_clock::now();
  SolveResult r = solve(cfg);
  if (r.value)
    std::cout << g.to_string() << " = " << *r.value;
  else
    std::cout << g.to_string() << " unknown in [" << r.lower << ","
              << (r.upper ? std::to_string(*r.upper) : std::string("inf")) << "]";
  std::cout << "  nodes " << r.nodes_expanded << "  " << seconds_since(t0) << "s\n";
  if (!out.empty()) write_file(out, r.principal.to_jsonl());
  return 0;
}

int cmd_scaffold(const std::string& family, const std::string& target, int max_edges) {
  auto fam = Family::parse(family);
  auto h = TargetPattern::parse(target);
  auto r = min_scaffolding_size(fam, h, max_edges);
  if (!r) {
    std::cout << "no " << fam.to_string() << "-scaffolding for " << h.to_string()
              << " with at most " << max_edges << " edges\n";
    return 0;
  }
  std::cout << "minimum " << fam.to_string() << "-scaffolding for " << h.to_string() << ": "
            << r->edges << " edges\n"
            << "  R      " << edges_to_string(r->certificate.red) << "\n"
            << "  copy   " << edges_to_string(r->certificate.forced_copy) << "\n";
  if (fam.path_bound) {
    std::cout << "  X      {";
    bool first = true;
    for (auto v : r->certificate.endpoints) std::cout << (first ? "" : ",") << v, first = false;
    std::cout << "}\n";
  }
  return 0;
}

int cmd_bounds(int k, const std::string& target) {
  auto h = TargetPattern::parse(target);
  auto sum = lower_bound_formulas(k, TargetShape::of(h));
  std::cout << "lower bounds for (P" << k + 1 << "," << h.to_string() << ")\n";
  for (std::size_t i = 0; i < sum.reports.size(); ++i) {
    const auto& r = sum.reports[i];
    std::cout << "  " << r.name << ": " << to_string(r.value) << "  ceil " << ceil_of(r.value)
              << (i == sum.best ? "  <- strongest" : "") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"on-line Ramsey games on paths and cycles"};
  app.require_subcommand(1);

  std::string builder, painter = "blocking:P3+acyclic", out, replay, red = "P3", blue = "P3";
  int cap = 0;
  auto* play = app.add_subcommand("play", "play a builder strategy against a painter");
  play->add_option("--builder", builder, "e.g. p3-path:8");
  play->add_option("--painter", painter, "blocking:FAM, count-red:N, replay:RB.., all-red, all-blue");
  play->add_option("--round-cap", cap);
  play->add_option("--out", out, "write the transcript here");
  play->add_option("--replay", replay, "replay a JSONL transcript instead");
  play->add_option("--red", red, "red target for --replay");
  play->add_option("--blue", blue, "blue target for --replay");

  std::vector<std::string> specs;
  int bound = 0;
  std::string cex_out;
  auto* certify = app.add_subcommand("certify", "check a round bound against every painter");
  certify->add_option("--strategy,strategies", specs)->required();
  certify->add_option("--bound", bound, "defaults to the strategy's claimed bound");
  certify->add_option("--emit-counterexample", cex_out);

  int round_cap = 12, vertex_cap = 0, threads = 1;
  bool full = false;
  std::string emit;
  auto* solve_cmd = app.add_subcommand("solve", "exact game value by search");
  solve_cmd->add_option("--red", red)->required();
  solve_cmd->add_option("--blue", blue)->required();
  solve_cmd->add_option("--round-cap", round_cap);
  solve_cmd->add_option("--vertex-cap", vertex_cap, "defaults to 2 * round cap");
  solve_cmd->add_option("--threads", threads);
  solve_cmd->add_flag("--full-generator", full, "no fresh-vertex reduction");
  solve_cmd->add_option("--emit-transcript", emit);

  std::string family, target;
  int max_edges = 7;
  auto* scaffold = app.add_subcommand("scaffold", "minimum scaffolding search");
  scaffold->add_option("--family", family)->required();
  scaffold->add_option("--target", target)->required();
  scaffold->add_option("--max-edges", max_edges);

  int k = 2;
  auto* bounds = app.add_subcommand("bounds", "closed-form lower bounds for (P_{k+1}, H)");
  bounds->add_option("--k", k)->required();
  bounds->add_option("--target", target)->required();

  TableOptions topt;
  auto* table = app.add_subcommand("table", "bounds, solver values and strategy bounds");
  table->add_option("--family", topt.family, "p3-path, p3-cycle, c4-path, p4-path");
  table->add_option("--from", topt.from);
  table->add_option("--to", topt.to);
  table->add_flag("--solve", topt.solve);
  table->add_option("--solve-round-cap", topt.solve_round_cap);
  table->add_flag("--certify", topt.certify);

  std::string host = "127.0.0.1";
  int port = 8080;
  auto* serve_cmd = app.add_subcommand("serve", "HTTP game-session service");
  serve_cmd->add_option("--host", host);
  serve_cmd->add_option("--port", port);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*play) {
      if (builder.empty() && replay.empty()) throw std::invalid_argument("need --builder or --replay");
      return cmd_play(builder, painter, cap, out, replay, red, blue);
    }
    if (*certify) return cmd_certify(specs, bound, cex_out);
    if (*solve_cmd) return cmd_solve(red, blue, round_cap, vertex_cap, threads, full, emit);
    if (*scaffold) return cmd_scaffold(family, target, max_edges);
    if (*bounds) return cmd_bounds(k, target);
    if (*table) {
      std::cout << format_table(value_table(topt));
      return 0;
    }
    if (*serve_cmd) {
      SessionManager sessions;
      std::cerr << "listening on " << host << ":" << port << "\n";
      return serve(sessions, host, port) ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
