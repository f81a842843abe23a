#include <algorithm>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "degpow/families.hpp"
#include "degpow/graph.hpp"
#include "degpow/report.hpp"
#include "degpow/structure.hpp"
#include "degpow/verify.hpp"

using namespace degpow;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw UsageError("not an integer: '" + s + "'");
  return value;
}

// "2", "2..5", "2,3,7", "2..4,9"
std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_int(item));
      continue;
    }
    const int lo = parse_int(item.substr(0, dots)), hi = parse_int(item.substr(dots + 2));
    if (lo > hi) throw UsageError("empty range '" + item + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = parse_int(text);
    return {v, v};
  }
  const int lo = parse_int(text.substr(0, dots)), hi = parse_int(text.substr(dots + 2));
  if (lo > hi) throw UsageError("empty range '" + text + "'");
  return {lo, hi};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph read_edge_list(const std::string& path) {
  std::istringstream in(read_file(path));
  int n = 0;
  if (!(in >> n)) throw UsageError(path + ": missing vertex count");
  std::vector<Edge> edges;
  int u = 0, v = 0;
  while (in >> u >> v) edges.emplace_back(u, v);
  if (!in.eof()) throw UsageError(path + ": malformed edge list");
  return new_graph(n, edges);
}

struct GraphInput {
  std::string g6, file, edgelist;

  void attach(CLI::App* cmd) {
    cmd->add_option("--g6", g6, "graph6 string");
    cmd->add_option("--file", file, "file of graph6 lines");
    cmd->add_option("--edgelist", edgelist, "edge-list file: n, then one pair per line");
  }

  std::vector<Graph> load() const {
    const int given = !g6.empty() + !file.empty() + !edgelist.empty();
    if (given != 1) throw UsageError("give exactly one of --g6, --file, --edgelist");
    if (!g6.empty()) return {from_graph6(g6)};
    if (!edgelist.empty()) return {read_edge_list(edgelist)};
    std::vector<Graph> out;
    std::istringstream in(read_file(file));
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) out.push_back(from_graph6(line));
    }
    return out;
  }
};

struct Filters {
  bool c4_free = false, even_cycle_free = false;
  std::optional<int> max_edges, min_degree, min_conn, min_edge_conn, degenerate;

  void attach(CLI::App* cmd) {
    cmd->add_flag("--c4-free", c4_free, "only C4-free graphs");
    cmd->add_flag("--even-cycle-free", even_cycle_free, "only graphs without even cycles");
    cmd->add_option("--max-edges", max_edges, "at most this many edges");
    cmd->add_option("--min-degree", min_degree, "minimum degree at least this");
    cmd->add_option("--min-conn", min_conn, "minimally t-connected");
    cmd->add_option("--min-edge-conn", min_edge_conn, "minimally t-edge-connected");
    cmd->add_option("--degenerate", degenerate, "k-degenerate");
  }

  SearchPredicate predicate() const {
    SearchPredicate p;
    p.c4_free = c4_free;
    p.even_cycle_free = even_cycle_free;
    p.max_edges = max_edges;
    p.min_degree = min_degree;
    p.minimally_connected = min_conn;
    p.minimally_edge_connected = min_edge_conn;
    p.degenerate = degenerate;
    return p;
  }
};

struct Output {
  bool json = false, csv = false, timestamps = false;

  void attach(CLI::App* cmd) {
    cmd->add_flag("--json", json, "print the report as JSON");
    cmd->add_flag("--csv", csv, "print the report as CSV");
    cmd->add_flag("--timestamps", timestamps, "record start and end times in the report");
  }
};

EnumerateOptions enumeration_options(int jobs, std::optional<int> max_n_flag, int needed) {
  if (jobs < 1) throw UsageError("--jobs must be >= 1");
  EnumerateOptions options;
  options.jobs = jobs;
  options.max_n = enumeration_guard_from_env();
  if (max_n_flag) {
    if (*max_n_flag > kEnumerationHardMaxN)
      throw UsageError("--max-n above the hard limit " + std::to_string(kEnumerationHardMaxN));
    options.max_n = std::max(options.max_n, *max_n_flag);
  }
  if (needed > options.max_n)
    throw UsageError("n=" + std::to_string(needed) + " exceeds the enumeration guard " +
                     std::to_string(options.max_n) + "; pass --max-n or set DEGPOW_MAX_N (at most 10)");
  return options;
}

// Text, JSON or CSV on stdout. Failing records are repeated on stderr with
// their witness so they are visible in every mode.
int emit(const ReportEnvelope& envelope, const Output& out) {
  if (out.json) {
    std::cout << to_json(envelope);
  } else if (out.csv) {
    std::cout << to_csv(envelope);
  } else {
    for (const auto& r : envelope.records) {
      if (const auto* v = std::get_if<VerificationRecord>(&r)) {
        std::cout << (v->pass ? "PASS " : "FAIL ") << v->check << ' ' << v->params_text()
                  << " value=" << v->value;
        if (!v->detail.empty()) std::cout << " (" << v->detail << ')';
        std::cout << '\n';
      } else {
        const auto& e = std::get<ExtremalReport>(r);
        std::cout << "n=" << e.n << " p=" << e.p << " [" << e.predicate << "] max="
                  << (e.max_value ? to_string(*e.max_value) : "none")
                  << " classes=" << e.graphs_examined << '\n';
        for (const auto& w : e.witnesses) std::cout << "  " << w << '\n';
      }
    }
  }
  std::size_t failed = 0, total = 0;
  for (const auto& r : envelope.records) {
    const auto* v = std::get_if<VerificationRecord>(&r);
    if (!v) continue;
    ++total;
    if (!v->pass) {
      ++failed;
      std::cerr << "FAIL " << v->check << ' ' << v->params_text() << " witness " << v->witness
                << '\n';
    }
  }
  if (!out.json && !out.csv && total)
    std::cout << (total - failed) << '/' << total << " checks passed\n";
  return failed ? 1 : 0;
}

int cmd_construct(const std::string& family, const std::vector<int>& params, const std::string& format) {
  const auto kind = parse_family_kind(family);
  if (!kind) throw UsageError("unknown family '" + family + "'");
  const bool two = *kind == FamilyKind::complete_bipartite || *kind == FamilyKind::split;
  if (params.size() != (two ? 2u : 1u))
    throw UsageError(family + (two ? " takes two parameters" : " takes one parameter"));
  Graph g(1);
  if (*kind == FamilyKind::complete_bipartite) g = construct({*kind, params[0]}, params[1]);
  else if (*kind == FamilyKind::split) g = construct({*kind, params[1]}, params[0]);
  else g = construct({*kind}, params[0]);

  if (format == "graph6") {
    std::cout << to_graph6(g) << '\n';
  } else {
    std::cout << g.order() << '\n';
    for (auto [u, v] : g.edges()) std::cout << u << ' ' << v << '\n';
  }
  return 0;
}

int cmd_check(const std::string& property, const std::vector<Graph>& graphs, std::optional<int> t,
              std::optional<int> k) {
  auto need = [&](const std::optional<int>& v, const char* flag) {
    if (!v) throw UsageError(property + " needs " + flag);
    if (*v < 0) throw UsageError(std::string(flag) + " must be non-negative");
    return *v;
  };
  auto yes = [](bool b) { return std::string(b ? "true" : "false"); };
  for (const Graph& g : graphs) {
    std::string answer;
    if (property == "degree-sequence") answer = degree_sequence(g).to_string();
    else if (property == "c4free") answer = yes(!has_c4(g));
    else if (property == "triangle-free") answer = yes(!has_triangle(g));
    else if (property == "even-cycle-free") answer = yes(!has_even_cycle(g));
    else if (property == "connected") answer = yes(is_connected(g));
    else if (property == "kappa") answer = std::to_string(vertex_connectivity(g));
    else if (property == "lambda") answer = std::to_string(edge_connectivity(g));
    else if (property == "t-conn") answer = yes(is_t_connected(g, need(t, "--t")));
    else if (property == "t-edge-conn") answer = yes(is_t_edge_connected(g, need(t, "--t")));
    else if (property == "min-t-conn") answer = yes(is_minimally_t_connected(g, need(t, "--t")));
    else if (property == "min-t-edge-conn")
      answer = yes(is_minimally_t_edge_connected(g, need(t, "--t")));
    else if (property == "degeneracy") answer = std::to_string(degeneracy(g));
    else if (property == "k-degenerate") answer = yes(is_k_degenerate(g, need(k, "--k")));
    else if (property == "maximal-k-degenerate")
      answer = yes(is_maximal_k_degenerate(g, need(k, "--k")));
    else throw UsageError("unknown property '" + property + "'");
    std::cout << answer << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree powers of graphs: constructions, enumeration and verification"};
  app.require_subcommand(1);

  std::string family, format = "graph6";
  std::vector<int> family_params;
  auto* construct_cmd = app.add_subcommand("construct", "print a family member");
  construct_cmd->add_option("family", family, "star, cycle, friendship, bipartite, wheel, split, polarity")
      ->required();
  construct_cmd->add_option("params", family_params, "n; t n for bipartite; n k for split; q for polarity")
      ->required();
  construct_cmd->add_option("--out", format, "output format")
      ->check(CLI::IsMember({"graph6", "edgelist"}));

  GraphInput ep_input;
  int ep_p = 0;
  auto* ep_cmd = app.add_subcommand("ep", "sum of p-th powers of the degrees");
  ep_input.attach(ep_cmd);
  ep_cmd->add_option("--p,p", ep_p, "exponent")->required();

  GraphInput check_input;
  std::string property;
  std::optional<int> check_t, check_k;
  auto* check_cmd = app.add_subcommand("check", "evaluate a structural property");
  check_cmd->add_option("property", property,
                        "degree-sequence, c4free, triangle-free, even-cycle-free, connected, kappa, lambda, t-conn, "
                        "t-edge-conn, min-t-conn, min-t-edge-conn, degeneracy, k-degenerate, "
                        "maximal-k-degenerate")
      ->required();
  check_input.attach(check_cmd);
  check_cmd->add_option("--t", check_t, "connectivity parameter");
  check_cmd->add_option("--k", check_k, "degeneracy parameter");

  int search_n = 0, jobs = 1;
  std::optional<int> max_n_flag;
  std::string search_ps;
  Filters filters;
  Output output;
  auto* extremal_cmd = app.add_subcommand("extremal", "maximum e_p over a class, with all witnesses");
  extremal_cmd->add_option("--n", search_n, "order")->required();
  extremal_cmd->add_option("--p", search_ps, "exponents, e.g. 2 or 2..5")->required();
  filters.attach(extremal_cmd);
  output.attach(extremal_cmd);

  bool count_only = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list one graph per isomorphism class");
  enumerate_cmd->add_option("--n", search_n, "order")->required();
  enumerate_cmd->add_flag("--count", count_only, "print only the number of classes");
  filters.attach(enumerate_cmd);

  std::string suite_name, grid_n, grid_p, grid_k, grid_q, grid_pair;
  std::optional<int> grid_pmax, grid_nmax;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite_name,
                         "thm1, cor1, thm2, thm3, thm4, lemma1, lemma12, appendixA, thresholds, "
                         "polarity, structure, counts, all-desk")
      ->required();
  verify_cmd->add_option("--n", grid_n, "orders, a..b");
  verify_cmd->add_option("--p", grid_p, "exponents, e.g. 2,3 or 2..5");
  verify_cmd->add_option("--k", grid_k, "degeneracy bounds");
  verify_cmd->add_option("--q", grid_q, "prime powers");
  verify_cmd->add_option("--pair", grid_pair, "threshold pair")
      ->check(CLI::IsMember({"F_vs_K2", "W_vs_K3"}));
  verify_cmd->add_option("--pmax", grid_pmax, "largest exponent for thresholds");
  verify_cmd->add_option("--nmax", grid_nmax, "scan limit");
  output.attach(verify_cmd);

  for (auto* cmd : {extremal_cmd, enumerate_cmd, verify_cmd}) {
    cmd->add_option("--jobs", jobs, "worker threads");
    cmd->add_option("--max-n", max_n_flag, "raise the enumeration guard (at most 10)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // help and version requests exit 0; usage errors share the bad-input code
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command_line = [&] {
    std::string s = "degpow";
    for (int i = 1; i < argc; ++i) s += std::string(" ") + argv[i];
    return s;
  }();

  try {
    if (*construct_cmd) return cmd_construct(family, family_params, format);

    if (*ep_cmd) {
      if (ep_p < 1) throw UsageError("p must be >= 1");
      for (const Graph& g : ep_input.load()) std::cout << to_string(ep(g, ep_p)) << '\n';
      return 0;
    }

    if (*check_cmd) return cmd_check(property, check_input.load(), check_t, check_k);

    if (*enumerate_cmd) {
      const auto options = enumeration_options(jobs, max_n_flag, search_n);
      const SearchPredicate pred = filters.predicate();
      std::vector<std::string> forms;
      std::mutex mutex;
      const auto count = enumerate_graphs(
          search_n, pred,
          count_only ? GraphVisitor{}
                     : GraphVisitor{[&](const Graph&, const CanonicalForm& f) {
                         std::lock_guard lock(mutex);
                         forms.push_back(f.graph6);
                       }},
          options);
      if (count_only) {
        std::cout << count << '\n';
      } else {
        std::sort(forms.begin(), forms.end());
        for (const auto& f : forms) std::cout << f << '\n';
      }
      return 0;
    }

    ReportEnvelope envelope;
    envelope.command = command_line;
    if (output.timestamps) envelope.started_at = utc_timestamp();

    if (*extremal_cmd) {
      const auto options = enumeration_options(jobs, max_n_flag, search_n);
      const auto ps = parse_int_list(search_ps);
      const SearchPredicate pred = filters.predicate();
      envelope.parameters = {{"n", std::to_string(search_n)}, {"p", search_ps},
                             {"predicate", pred.describe()}};
      for (auto& r : extremal_ep(search_n, ps, pred, options)) envelope.records.emplace_back(std::move(r));
    } else {
      const auto suite = parse_suite(suite_name);
      if (!suite) throw UsageError("unknown suite '" + suite_name + "'");
      SuiteGrid grid;
      envelope.parameters.emplace_back("suite", suite_name);
      if (!grid_n.empty()) {
        grid.n_range = parse_range(grid_n);
        envelope.parameters.emplace_back("n", grid_n);
      }
      if (!grid_p.empty()) {
        grid.ps = parse_int_list(grid_p);
        envelope.parameters.emplace_back("p", grid_p);
      }
      if (!grid_k.empty()) {
        grid.ks = parse_int_list(grid_k);
        envelope.parameters.emplace_back("k", grid_k);
      }
      if (!grid_q.empty()) {
        grid.qs = parse_int_list(grid_q);
        envelope.parameters.emplace_back("q", grid_q);
      }
      if (!grid_pair.empty()) {
        grid.pair = grid_pair == "F_vs_K2" ? ThresholdPair::F_vs_K2 : ThresholdPair::W_vs_K3;
        envelope.parameters.emplace_back("pair", grid_pair);
      }
      if (grid_pmax) {
        grid.p_max = *grid_pmax;
        envelope.parameters.emplace_back("pmax", std::to_string(*grid_pmax));
      }
      if (grid_nmax) {
        grid.n_max = *grid_nmax;
        envelope.parameters.emplace_back("nmax", std::to_string(*grid_nmax));
      }
      // The default grids are the documented ones, so they may go past the
      // guard; an explicit --n must stay within it.
      const int needed = suite_max_order(*suite, grid);
      EnumerateOptions options = enumeration_options(jobs, max_n_flag, grid.n_range ? needed : 0);
      options.max_n = std::max(options.max_n, std::min(needed, kEnumerationHardMaxN));
      for (auto& r : run_suite(*suite, grid, options)) envelope.records.emplace_back(std::move(r));
    }
    if (output.timestamps) envelope.finished_at = utc_timestamp();
    return emit(envelope, output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
