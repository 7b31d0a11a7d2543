#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "shiftbribery/approx.hpp"
#include "shiftbribery/io.hpp"
#include "shiftbribery/kernel.hpp"
#include "shiftbribery/reductions.hpp"
#include "shiftbribery/solvers.hpp"

namespace sb::cli {
namespace {

const std::vector<std::string> kAlgorithms = {"bruteforce", "fpt-shifts", "aon", "xp-flow",
                                              "greedy", "fptas-voters", "fptas-candidates"};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) fail(ErrorKind::invalid, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) fail(ErrorKind::invalid, "cannot write " + path);
  f << text;
}

// Options shared by commands that load an instance file.
struct InputOptions {
  std::string file;
  std::string rule;
  std::string alpha;
  std::int64_t budget = -1;

  void add_to(CLI::App* cmd, bool with_budget = true) {
    cmd->add_option("-i,--input", file, "instance file, - for stdin")->required();
    cmd->add_option("--rule", rule, "override the file's rule")->check(CLI::IsMember({"borda", "maximin", "copeland"}));
    cmd->add_option("--alpha", alpha, "Copeland tie value p/q");
    if (with_budget) cmd->add_option("--budget", budget, "override the file's budget")->check(CLI::NonNegativeNumber);
  }

  InstanceFile load() const {
    auto f = parse_instance(read_file(file));
    if (!rule.empty()) f.rule.kind = parse_rule(rule);
    if (!alpha.empty()) {
      if (f.rule.kind != RuleKind::copeland) fail(ErrorKind::invalid, "--alpha needs the copeland rule");
      f.rule = VotingRule::copeland(parse_rational(alpha));
    }
    if (budget >= 0) f.instance.budget = budget;
    return f;
  }
};

struct SolveRequest {
  std::string algo;
  int t = -1;
  std::string epsilon;
  int max_affected = -1;
};

int total_shifts(const Instance& inst) {
  std::int64_t sum = 0;
  for (int c : shift_caps(inst.election, inst.preferred)) sum += c;
  return static_cast<int>(std::min<std::int64_t>(sum, INT32_MAX));
}

SolveResult run_solver(const Instance& inst, const VotingRule& rule, const SolveRequest& req) {
  const auto& a = req.algo;
  if (req.max_affected >= 0 && a != "bruteforce")
    fail(ErrorKind::unsupported, "--max-affected is only supported by bruteforce");
  if (req.t >= 0 && a != "bruteforce" && a != "fpt-shifts")
    fail(ErrorKind::unsupported, "--t is only supported by bruteforce and fpt-shifts");
  if (!req.epsilon.empty() && a != "fptas-voters" && a != "fptas-candidates")
    fail(ErrorKind::unsupported, "--epsilon is only supported by the approximation schemes");
  const Rational eps = req.epsilon.empty() ? Rational(1) : parse_rational(req.epsilon);

  if (a == "bruteforce") {
    BruteForceOptions opts;
    if (req.max_affected >= 0) opts.max_affected = req.max_affected;
    if (req.t >= 0) opts.max_total_shifts = req.t;
    return brute_force(inst, rule, opts);
  }
  if (a == "fpt-shifts") return fpt_shifts(inst, rule, req.t >= 0 ? req.t : total_shifts(inst));
  if (a == "aon") return solve_all_or_nothing(inst, rule);
  if (a == "xp-flow") return xp_flow_solve(inst, rule);
  if (a == "greedy") return greedy_convex(inst, rule);
  if (a == "fptas-voters") return fptas_voters(inst, rule, eps);
  if (a == "fptas-candidates") return fptas_candidates(inst, rule, eps);
  fail(ErrorKind::invalid, "unknown algorithm " + a);
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

int parse_index(const std::string& text, int count, const std::string& what) {
  int v = 0;
  try {
    std::size_t used = 0;
    v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    fail(ErrorKind::invalid, "bad " + what + " '" + text + "'");
  }
  if (v < 1 || v > count) fail(ErrorKind::invalid, what + " " + text + " outside 1.." + std::to_string(count));
  return v - 1;
}

int parse_amount(const std::string& text) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || v < 0)
    fail(ErrorKind::invalid, "bad shift amount '" + text + "'");
  return v;
}

// "1-2,2-3" over vertices 1..n
std::vector<std::pair<int, int>> parse_edges(const std::string& text, int n) {
  std::vector<std::pair<int, int>> edges;
  if (text.empty()) return edges;
  for (const auto& e : split_list(text, ',')) {
    auto dash = e.find('-');
    if (dash == std::string::npos) fail(ErrorKind::invalid, "edge '" + e + "' is not x-y");
    edges.push_back({parse_index(e.substr(0, dash), n, "vertex"), parse_index(e.substr(dash + 1), n, "vertex")});
  }
  return edges;
}

int exit_for(const Error& e) { return e.kind() == ErrorKind::capacity ? kCapacity : kUsage; }

struct BenchJob {
  std::string name;
  const InstanceFile* file;
  std::string algo;
};

std::string csv_row(const BenchJob& job, const InstanceFile& f) {
  const auto& inst = f.instance;
  std::ostringstream row;
  row << job.name << ',' << rule_name(f.rule.kind) << ',' << inst.num_candidates() << ',' << inst.num_voters() << ','
      << job.algo << ',';
  const auto start = std::chrono::steady_clock::now();
  try {
    SolveRequest req;
    req.algo = job.algo;
    auto r = run_solver(inst, f.rule, req);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    row << "ok," << (r.feasible ? "true" : "false") << ',' << r.spent << ',' << describe(r.guarantee) << ',' << secs
        << ',' << r.explored;
  } catch (const Error& e) {
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const char* status = e.kind() == ErrorKind::capacity ? "capacity"
                         : e.kind() == ErrorKind::unsupported ? "unsupported"
                                                              : "invalid";
    row << status << ",,,," << secs << ',';
  }
  return row.str();
}

int bench(const std::string& suite, const std::vector<std::string>& algos, std::ostream& out) {
  namespace fs = std::filesystem;
  std::vector<fs::path> paths;
  if (fs::is_directory(suite)) {
    for (const auto& entry : fs::directory_iterator(suite))
      if (entry.is_regular_file() && entry.path().extension() == ".sb") paths.push_back(entry.path());
    std::sort(paths.begin(), paths.end());
  } else {
    paths.emplace_back(suite);
  }
  if (paths.empty()) fail(ErrorKind::invalid, "no .sb instances in " + suite);

  std::vector<InstanceFile> files;
  for (const auto& p : paths) files.push_back(parse_instance(read_file(p.string())));
  std::vector<BenchJob> jobs;
  for (std::size_t i = 0; i < files.size(); ++i)
    for (const auto& a : algos) jobs.push_back({paths[i].filename().string(), &files[i], a});

  int workers = 1;
  if (const char* env = std::getenv("SHIFTBRIBERY_WORKERS")) workers = std::max(1, std::atoi(env));
  std::vector<std::string> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t j; (j = next++) < jobs.size();) rows[j] = csv_row(jobs[j], *jobs[j].file);
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  out << "instance,rule,candidates,voters,algo,status,feasible,spent,guarantee,seconds,explored\n";
  for (const auto& r : rows) out << r << '\n';
  return kSuccess;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shift Bribery solvers for Borda, Maximin and Copeland", "shiftbribery"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "find a cheapest successful shift action");
  InputOptions solve_in;
  solve_in.add_to(solve);
  SolveRequest req;
  bool json = false;
  solve->add_option("--algo", req.algo, "solver")->required()->check(CLI::IsMember(kAlgorithms));
  solve->add_option("--t", req.t, "shift bound (fpt-shifts, bruteforce)")->check(CLI::NonNegativeNumber);
  solve->add_option("--epsilon", req.epsilon, "approximation parameter p/q (default 1)");
  solve->add_option("--max-affected", req.max_affected, "affected-voter cap (bruteforce)")->check(CLI::NonNegativeNumber);
  solve->add_flag("--json", json, "print a JSON result document");

  auto* kern = app.add_subcommand("kernelize", "shrink an instance for the question 'at most t shifts'");
  InputOptions kern_in;
  kern_in.add_to(kern);
  int kern_t = 0;
  bool always_build = false;
  std::string kern_out;
  kern->add_option("--t", kern_t, "shift bound")->required()->check(CLI::NonNegativeNumber);
  kern->add_flag("--always-build", always_build, "build the kernel even when the input is already small");
  kern->add_option("-o,--output", kern_out, "output file (default stdout)");

  auto* classify_cmd = app.add_subcommand("classify", "report the price-function families of an instance");
  InputOptions classify_in;
  classify_in.add_to(classify_cmd, false);

  auto* gen = app.add_subcommand("generate", "build a Shift Bribery instance from a hard problem");
  gen->require_subcommand(1);
  std::string gen_out, gen_prices = "unit";
  auto* gen_sc = gen->add_subcommand("setcover", "Set Cover, elements 1..universe");
  int sc_universe = 0, gen_k = 0, gen_vertices = 0;
  std::string sc_sets, sc_rule = "borda", gen_edges, gen_colors;
  gen_sc->add_option("--universe", sc_universe, "universe size")->required();
  gen_sc->add_option("--sets", sc_sets, "sets separated by ';', elements by ','; e.g. \"1,2;3\"")->required();
  gen_sc->add_option("--k", gen_k, "cover size")->required();
  gen_sc->add_option("--rule", sc_rule, "voting rule (default borda)")->check(CLI::IsMember({"borda", "maximin", "copeland"}));
  auto* gen_cl = gen->add_subcommand("clique", "Clique of size k, Copeland");
  auto* gen_mcc = gen->add_subcommand("mcc", "Multicolored Clique on a regular properly colored graph, Copeland");
  for (auto* g : {gen_cl, gen_mcc}) {
    g->add_option("--vertices", gen_vertices, "vertex count")->required();
    g->add_option("--edges", gen_edges, "edges over 1..n, e.g. \"1-2,2-3\"");
    g->add_option("--k", gen_k, "clique size")->required();
  }
  gen_mcc->add_option("--colors", gen_colors, "color of each vertex in 1..k, e.g. \"1,1,2,2\"")->required();
  for (auto* g : {gen_sc, gen_cl}) g->add_option("--prices", gen_prices, "price variant (default unit)")->check(CLI::IsMember({"unit", "aon"}));
  for (auto* g : {gen_sc, gen_cl, gen_mcc}) g->add_option("-o,--output", gen_out, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "recompute the cost and outcome of a shift action");
  InputOptions verify_in;
  verify_in.add_to(verify);
  std::string action_text;
  verify->add_option("--action", action_text, "shift amounts s1,s2,...")->required();

  auto* bench_cmd = app.add_subcommand("bench", "run the solver matrix over a suite, CSV to stdout");
  std::string suite;
  std::vector<std::string> bench_algos = kAlgorithms;
  bench_cmd->add_option("--suite", suite, "directory of .sb files, or one file")->required();
  bench_cmd->add_option("--algos", bench_algos, "solvers to run")->delimiter(',')->check(CLI::IsMember(kAlgorithms));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsage;
  }

  try {
    if (solve->parsed()) {
      auto f = solve_in.load();
      const auto start = std::chrono::steady_clock::now();
      auto r = run_solver(f.instance, f.rule, req);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (json) {
        ResultMeta meta;
        meta.solver = req.algo;
        meta.rule = f.rule.kind;
        meta.wall_seconds = secs;
        if (req.t >= 0) meta.t = req.t;
        if (!req.epsilon.empty()) meta.epsilon = parse_rational(req.epsilon);
        if (req.max_affected >= 0) meta.max_affected = req.max_affected;
        meta.budget = f.instance.budget;
        out << serialize_result(r, meta);
      } else {
        out << "feasible: " << (r.feasible ? "yes" : "no") << '\n';
        if (r.feasible && r.action) {
          out << "action: " << join(*r.action) << '\n';
          out << "spent: " << r.spent << '\n';
          out << "guarantee: " << describe(r.guarantee) << '\n';
        }
      }
      return r.feasible ? kSuccess : kInfeasible;
    }
    if (kern->parsed()) {
      auto f = kern_in.load();
      auto k = kernelize(f.instance, f.rule, kern_t, KernelOptions{.keep_small = !always_build});
      std::ostringstream header;
      header << "kernel for at most " << kern_t << " shifts\n"
             << (k.unchanged ? "input returned unchanged" : k.trivial ? "answer decided, trivial instance" : "built")
             << "\ncritical candidates kept: " << k.critical << "\ninput voters kept: " << k.retained;
      write_output(kern_out, serialize_instance({k.instance, f.rule}, header.str()), out);
      return kSuccess;
    }
    if (classify_cmd->parsed()) {
      auto f = classify_in.load();
      auto fam = family_names(classify(f.instance.prices, f.instance.election, f.instance.preferred));
      out << "families: " << (fam.empty() ? "none" : fam) << '\n';
      return kSuccess;
    }
    if (gen->parsed()) {
      const auto prices = parse_price_variant(gen_prices);
      std::optional<Reduction> red;
      std::string what;
      if (gen_sc->parsed()) {
        SetCoverInstance sc{sc_universe, {}, gen_k};
        for (const auto& set : split_list(sc_sets, ';')) {
          std::vector<int> members;
          if (!set.empty())
            for (const auto& e : split_list(set, ',')) members.push_back(parse_index(e, sc_universe, "element"));
          sc.family.push_back(members);
        }
        red = reduce_setcover(sc, parse_rule(sc_rule), prices);
        what = "setcover rule=" + sc_rule + " prices=" + gen_prices;
      } else {
        GraphInstance g{gen_vertices, parse_edges(gen_edges, gen_vertices), gen_k, std::nullopt};
        if (gen_mcc->parsed()) {
          std::vector<int> colors;
          for (const auto& c : split_list(gen_colors, ',')) colors.push_back(parse_index(c, std::max(gen_k, 1), "color"));
          g.coloring = colors;
          red = reduce_mcc_copeland(g);
          what = "mcc prices=unit";
        } else {
          red = reduce_clique_copeland(g, prices);
          what = "clique prices=" + gen_prices;
        }
      }
      std::string header = "generated: " + what + " k=" + std::to_string(gen_k);
      if (red->max_affected) header += "\nmax-affected: " + std::to_string(*red->max_affected);
      if (!red->note.empty()) header += "\nnote: " + red->note;
      write_output(gen_out, serialize_instance({red->instance, red->rule}, header), out);
      return kSuccess;
    }
    if (verify->parsed()) {
      auto f = verify_in.load();
      ShiftAction s;
      for (const auto& x : split_list(action_text, ',')) s.push_back(parse_amount(x));
      if (static_cast<int>(s.size()) != f.instance.num_voters())
        fail(ErrorKind::invalid, "action has " + std::to_string(s.size()) + " entries for " +
                                     std::to_string(f.instance.num_voters()) + " voters");
      const auto caps = shift_caps(f.instance.election, f.instance.preferred);
      for (int i = 0; i < static_cast<int>(s.size()); ++i)
        if (s[i] > caps[i]) fail(ErrorKind::invalid, "voter " + std::to_string(i + 1) + " cannot shift p that far");
      const auto c = cost(f.instance.prices, s);
      const bool wins = is_winner(apply_shift(f.instance.election, f.instance.preferred, s), f.rule, f.instance.preferred);
      const bool affordable = !f.instance.budget || c <= *f.instance.budget;
      out << "cost: " << c << '\n' << "winner: " << (wins ? "yes" : "no") << '\n';
      if (f.instance.budget) out << "within budget: " << (affordable ? "yes" : "no") << '\n';
      return wins && affordable ? kSuccess : kInfeasible;
    }
    if (bench_cmd->parsed()) return bench(suite, bench_algos, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_for(e);
  }
  return kUsage;
}

}  // namespace sb::cli
