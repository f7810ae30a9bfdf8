// Command-line front end. Talks to the library only through plumbkit.h.
//
// Exit codes: 0 success, 1 negative verdict, 2 usage / parse / domain error,
// 3 cross-check failure.

#include "plumbkit/plumbkit.h"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kMismatch = 3;

struct StringDeleter {
  void operator()(char* s) const { pk_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct GraphDeleter {
  void operator()(pk_graph* g) const { pk_graph_free(g); }
};
using Graph = std::unique_ptr<pk_graph, GraphDeleter>;

struct ReductionDeleter {
  void operator()(pk_reduction* r) const { pk_reduction_free(r); }
};
using ReductionHandle = std::unique_ptr<pk_reduction, ReductionDeleter>;

struct ScanDeleter {
  void operator()(pk_scan* s) const { pk_scan_free(s); }
};
using ScanHandle = std::unique_ptr<pk_scan, ScanDeleter>;

// Carries a pk_status failure up to main().
struct Failure {
  pk_status status;
  std::string message;
};

void check(pk_status st) {
  if (st != PK_OK) throw Failure{st, pk_last_error()};
}

std::string take(char* raw) {
  CString owned(raw);
  return owned ? std::string(owned.get()) : std::string();
}

Graph load_graph(const std::string& path) {
  pk_graph* g = nullptr;
  // "fixture:<name>" selects a built-in diagram.
  const std::string prefix = "fixture:";
  if (path.rfind(prefix, 0) == 0) {
    check(pk_graph_fixture(path.substr(prefix.size()).c_str(), &g));
  } else {
    check(pk_graph_load(path.c_str(), &g));
  }
  return Graph(g);
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

struct Triple {
  std::int64_t a1 = 0, a2 = 0, a3 = 0;
};

void add_triple(CLI::App* cmd, Triple& t) {
  cmd->add_option("a1", t.a1, "first index")->required();
  cmd->add_option("a2", t.a2, "second index")->required();
  cmd->add_option("a3", t.a3, "third index")->required();
}

int cmd_expand(const std::string& num, const std::string& den) {
  char* out = nullptr;
  check(pk_expand(num.c_str(), den.c_str(), &out));
  std::cout << take(out) << "\n";
  return kOk;
}

int cmd_seifert(const Triple& t) {
  char* out = nullptr;
  check(pk_seifert(t.a1, t.a2, t.a3, &out));
  std::cout << take(out) << "\n";
  return kOk;
}

int cmd_plumb(const Triple& t, const std::string& out_path) {
  pk_graph* raw = nullptr;
  check(pk_graph_star(t.a1, t.a2, t.a3, &raw));
  Graph g(raw);
  char* text = nullptr;
  check(pk_graph_serialize(g.get(), &text));
  const std::string doc = take(text);
  if (out_path.empty()) {
    std::cout << doc;
  } else if (!write_file(out_path, doc)) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kUsage;
  }
  return kOk;
}

int cmd_invariants(const std::string& path) {
  Graph g = load_graph(path);
  char* s = nullptr;
  check(pk_graph_determinant(g.get(), &s));
  const std::string det = take(s);
  std::int64_t sigma = 0;
  check(pk_graph_signature(g.get(), &sigma));
  std::cout << "vertices: " << pk_graph_vertex_count(g.get()) << "\n";
  std::cout << "edges: " << pk_graph_edge_count(g.get()) << "\n";
  std::cout << "det: " << det << "\n";
  std::cout << "signature: " << sigma << "\n";
  if (pk_graph_wu_class(g.get(), &s) == PK_OK) {
    std::cout << "wu class: {" << take(s) << "}\n";
    check(pk_graph_mu_bar(g.get(), &s));
    std::cout << "mu-bar: " << take(s) << "\n";
    int mu = 0;
    if (pk_graph_rohlin(g.get(), &mu) == PK_OK) std::cout << "rohlin: " << mu << "\n";
  } else {
    std::cout << "wu class: undefined (even determinant)\n";
  }
  return kOk;
}

int cmd_mu(const Triple& t, const std::string& method) {
  std::optional<int> lattice;
  std::optional<int> plumbing;
  if (method == "lattice" || method == "both") {
    int mu = 0;
    check(pk_rohlin_lattice(t.a1, t.a2, t.a3, &mu));
    lattice = mu;
  }
  if (method == "plumbing" || method == "both") {
    int mu = 0;
    check(pk_rohlin_plumbing(t.a1, t.a2, t.a3, &mu));
    plumbing = mu;
  }
  if (lattice && plumbing) {
    std::cout << *lattice << " " << *plumbing << "\n";
    if (*lattice != *plumbing) {
      std::cerr << "error: lattice and plumbing methods disagree\n";
      return kMismatch;
    }
  } else {
    std::cout << (lattice ? *lattice : *plumbing) << "\n";
  }
  return kOk;
}

int cmd_reduce(const std::string& path, std::size_t budget, std::size_t blow_ups, const std::string& trace_path,
               bool show_path) {
  Graph g = load_graph(path);
  pk_reduction* raw = nullptr;
  check(pk_reduce(g.get(), budget, blow_ups, &raw));
  ReductionHandle r(raw);
  char* s = nullptr;
  check(pk_reduction_label(r.get(), &s));
  std::cout << take(s) << "\n";
  if (pk_reduction_verdict(r.get()) != PK_VERDICT_S3) {
    if (pk_reduction_verdict(r.get()) == PK_VERDICT_UNKNOWN)
      std::cout << "states visited: " << pk_reduction_states_visited(r.get())
                << (pk_reduction_budget_exhausted(r.get()) ? " (budget exhausted)" : " (move space exhausted)")
                << "\n";
    return kNegative;
  }
  std::cout << "moves: " << pk_reduction_move_count(r.get()) << "\n";
  if (show_path) {
    check(pk_reduction_path(r.get(), &s));
    std::cout << take(s);
  }
  if (!trace_path.empty()) {
    check(pk_reduction_trace(r.get(), &s));
    if (!write_file(trace_path, take(s))) {
      std::cerr << "error: cannot write " << trace_path << "\n";
      return kUsage;
    }
  }
  return kOk;
}

int cmd_scan(pk_scan_params params, const std::string& out_path, const std::string& format) {
  if (params.r_max < params.r_min || (params.r_min == 0 && params.r_max == 0)) {
    std::cerr << "error: r range is empty\n";
    return kUsage;
  }
  if (params.s_max < params.s_min || (params.s_min == 0 && params.s_max == 0)) {
    std::cerr << "error: s range is empty\n";
    return kUsage;
  }
  if (params.p_bound < 2 || params.q_bound < 2) {
    std::cerr << "error: p and q bounds must be >= 2\n";
    return kUsage;
  }
  pk_scan* raw = nullptr;
  check(pk_scan_run(&params, &raw));
  ScanHandle scan(raw);
  char* s = nullptr;
  check(pk_scan_records(scan.get(), &s));
  const std::string records = take(s);
  if (!out_path.empty() && !write_file(out_path, records)) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kUsage;
  }
  if (format == "records") {
    if (out_path.empty()) std::cout << records;
  } else {
    check(pk_scan_summary(scan.get(), &s));
    std::cout << take(s);
  }
  check(pk_scan_hit_triples(scan.get(), &s));
  std::string triples = take(s);
  std::string joined;
  for (std::size_t pos = 0; pos < triples.size();) {
    std::size_t nl = triples.find('\n', pos);
    if (!joined.empty()) joined += " ";
    joined += "Sigma(" + triples.substr(pos, nl - pos) + ")";
    pos = nl + 1;
  }
  (format == "records" ? std::cerr : std::cout)
      << "all-odd mu=1 hits: " << pk_scan_hit_count(scan.get()) << " records" << (joined.empty() ? "" : ": ")
      << joined << "\n";
  return kOk;
}

int cmd_export_dot(const std::string& path) {
  Graph g = load_graph(path);
  char* s = nullptr;
  check(pk_graph_dot(g.get(), &s));
  std::cout << take(s);
  return kOk;
}

int cmd_replay(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return kUsage;
  }
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  pk_graph* raw = nullptr;
  std::size_t moves = 0;
  const pk_status st = pk_trace_replay(text.c_str(), &raw, &moves);
  if (st == PK_ERR_MOVE) {
    std::cerr << "replay failed: " << pk_last_error() << "\n";
    return kMismatch;
  }
  check(st);
  Graph end(raw);
  char* s = nullptr;
  check(pk_graph_canonical(end.get(), &s));
  std::cout << "replayed " << moves << " moves\n";
  std::cout << "end: " << take(s) << (pk_graph_vertex_count(end.get()) == 0 ? " (empty: S3)" : "") << "\n";
  return kOk;
}

int cmd_lemma(const Triple& t, const std::string& format) {
  char* s = nullptr;
  int satisfied = 0;
  check(pk_lemma_report(t.a1, t.a2, t.a3, format == "records" ? 1 : 0, &s, &satisfied));
  std::cout << take(s);
  return satisfied ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plumbkit: Brieskorn spheres, plumbing calculus and Rohlin invariants"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pk_version()));
  std::function<int()> run;

  std::string num, den;
  auto* expand = app.add_subcommand("expand", "negative continued fraction of num/den < -1");
  expand->add_option("num", num, "numerator")->required()->allow_extra_args(false);
  expand->add_option("den", den, "denominator")->required();
  expand->callback([&] { run = [&] { return cmd_expand(num, den); }; });

  Triple triple;
  auto* seifert = app.add_subcommand("seifert", "Seifert invariants of Sigma(a1,a2,a3)");
  add_triple(seifert, triple);
  seifert->callback([&] { run = [&] { return cmd_seifert(triple); }; });

  std::string out_path;
  auto* plumb = app.add_subcommand("plumb", "star-shaped plumbing of Sigma(a1,a2,a3) as a graph document");
  add_triple(plumb, triple);
  plumb->add_option("--out", out_path, "write the graph document here");
  plumb->callback([&] { run = [&] { return cmd_plumb(triple, out_path); }; });

  std::string graph_path;
  auto* invariants = app.add_subcommand("invariants", "det, signature, Wu class and mu-bar of a graph");
  invariants->add_option("graph", graph_path, "graph file or fixture:<name>")->required();
  invariants->callback([&] { run = [&] { return cmd_invariants(graph_path); }; });

  std::string method = "both";
  auto* mu = app.add_subcommand("mu", "Rohlin invariant of Sigma(a1,a2,a3)");
  add_triple(mu, triple);
  mu->add_option("--method", method, "lattice | plumbing | both")
      ->check(CLI::IsMember({"lattice", "plumbing", "both"}));
  mu->callback([&] { run = [&] { return cmd_mu(triple, method); }; });

  std::size_t budget = 100000;
  std::size_t blow_ups = 0;
  std::string trace_path;
  bool show_path = false;
  auto* reduce = app.add_subcommand("reduce", "search for a move sequence reducing a diagram to S3");
  reduce->add_option("graph", graph_path, "graph file or fixture:<name>")->required();
  reduce->add_option("--budget", budget, "maximum visited canonical states")->capture_default_str();
  reduce->add_option("--blow-up-depth", blow_ups, "blow-ups allowed along a path")->capture_default_str();
  reduce->add_option("--trace", trace_path, "write the move trace here on S3");
  reduce->add_flag("--path", show_path, "print canonical forms along the trace");
  reduce->callback([&] { run = [&] { return cmd_reduce(graph_path, budget, blow_ups, trace_path, show_path); }; });

  pk_scan_params params{};
  pk_scan_params_default(&params);
  std::string format = "text";
  auto* scan = app.add_subcommand("scan", "scan the surgery family for +-1 coefficients");
  scan->add_option("--p-bound", params.p_bound, "|p| bound")->capture_default_str();
  scan->add_option("--q-bound", params.q_bound, "|q| bound")->capture_default_str();
  scan->add_option("--r-min", params.r_min)->capture_default_str();
  scan->add_option("--r-max", params.r_max)->capture_default_str();
  scan->add_option("--s-min", params.s_min)->capture_default_str();
  scan->add_option("--s-max", params.s_max)->capture_default_str();
  scan->add_option("--threads", params.threads, "worker threads, 0 = all cores")->capture_default_str();
  scan->add_option("--out", out_path, "write line-delimited records here");
  scan->add_option("--format", format, "text | records")->check(CLI::IsMember({"text", "records"}));
  scan->callback([&] { run = [&] { return cmd_scan(params, out_path, format); }; });

  auto* dot = app.add_subcommand("export-dot", "render a graph file as DOT");
  dot->add_option("graph", graph_path, "graph file or fixture:<name>")->required();
  dot->callback([&] { run = [&] { return cmd_export_dot(graph_path); }; });

  std::string trace_in;
  auto* replay = app.add_subcommand("replay-trace", "replay a move trace and report its end state");
  replay->add_option("trace", trace_in, "trace file")->required();
  replay->callback([&] { run = [&] { return cmd_replay(trace_in); }; });

  auto* lemma = app.add_subcommand("lemma", "report surgery, Rohlin and involution checks for Sigma(a1,a2,a3)");
  add_triple(lemma, triple);
  lemma->add_option("--format", format, "text | records")->check(CLI::IsMember({"text", "records"}));
  lemma->callback([&] { run = [&] { return cmd_lemma(triple, format); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return run();
  } catch (const Failure& f) {
    std::cerr << "error: " << pk_status_name(f.status) << ": " << f.message << "\n";
    return kUsage;
  }
}
