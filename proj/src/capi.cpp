#include "plumbkit/plumbkit.h"

#include "plumbkit/calculus.hpp"
#include "plumbkit/errors.hpp"
#include "plumbkit/fixtures.hpp"
#include "plumbkit/graph_io.hpp"
#include "plumbkit/lattice.hpp"
#include "plumbkit/lemma.hpp"
#include "plumbkit/scan.hpp"
#include "plumbkit/seifert.hpp"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

using namespace plumbkit;

struct pk_graph {
  PlumbingGraph graph;
};

struct pk_reduction {
  Reduction result;
};

struct pk_scan {
  ScanParams params;
  std::vector<ScanRecord> records;
};

namespace {

thread_local std::string last_error;

class ArgumentError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

template <typename Fn>
pk_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return PK_OK;
  } catch (const ArgumentError& e) {
    last_error = e.what();
    return PK_ERR_ARGUMENT;
  } catch (const IoError& e) {
    last_error = e.what();
    return PK_ERR_IO;
  } catch (const ParseError& e) {
    last_error = e.what();
    return PK_ERR_PARSE;
  } catch (const DomainError& e) {
    last_error = e.what();
    return PK_ERR_DOMAIN;
  } catch (const ParityError& e) {
    last_error = e.what();
    return PK_ERR_PARITY;
  } catch (const SingularError& e) {
    last_error = e.what();
    return PK_ERR_SINGULAR;
  } catch (const MoveError& e) {
    last_error = e.what();
    return PK_ERR_MOVE;
  } catch (const HypothesisError& e) {
    last_error = e.what();
    return PK_ERR_HYPOTHESIS;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return PK_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return PK_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return PK_ERR_INTERNAL;
  }
}

template <typename T>
void require(T* p, const char* what) {
  if (p == nullptr) throw ArgumentError(std::string("null argument: ") + what);
}

Integer integer_arg(const std::string& text) {
  try {
    return parse_integer(text);
  } catch (const DomainError& e) {
    throw ArgumentError(e.what());
  }
}

void hand_out(const std::string& s, char** out) {
  require(out, "output string");
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (buf == nullptr) throw std::bad_alloc();
  std::memcpy(buf, s.c_str(), s.size() + 1);
  *out = buf;
}

const PlumbingGraph& graph_of(const pk_graph* g) {
  require(g, "graph");
  return g->graph;
}

void hand_out_graph(PlumbingGraph g, pk_graph** out) {
  require(out, "graph output");
  *out = new pk_graph{std::move(g)};
}

std::string read_file(const char* path) {
  require(path, "path");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(std::string("cannot open '") + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

extern "C" {

const char* pk_version(void) { return "0.1.0"; }

const char* pk_status_name(pk_status status) {
  switch (status) {
    case PK_OK: return "ok";
    case PK_ERR_ARGUMENT: return "argument error";
    case PK_ERR_DOMAIN: return "domain error";
    case PK_ERR_PARITY: return "parity error";
    case PK_ERR_SINGULAR: return "singular error";
    case PK_ERR_MOVE: return "move error";
    case PK_ERR_HYPOTHESIS: return "hypothesis error";
    case PK_ERR_PARSE: return "parse error";
    case PK_ERR_IO: return "i/o error";
    case PK_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* pk_last_error(void) { return last_error.c_str(); }

void pk_string_free(char* s) { std::free(s); }

pk_status pk_expand(const char* num, const char* den, char** terms_out) {
  return guarded([&] {
    require(num, "num");
    require(den, "den");
    const Rational x(integer_arg(num), integer_arg(den));
    hand_out(neg_cont_frac(x).str(), terms_out);
  });
}

pk_status pk_evaluate(const char* terms, char** value_out) {
  return guarded([&] {
    require(terms, "terms");
    std::istringstream in(terms);
    std::vector<Integer> parsed;
    for (std::string tok; in >> tok;) parsed.push_back(integer_arg(tok));
    hand_out(eval_neg_cont_frac(NegCF(std::move(parsed))).str(), value_out);
  });
}

pk_status pk_seifert(int64_t a1, int64_t a2, int64_t a3, char** text_out) {
  return guarded([&] {
    const auto s = brieskorn_seifert(BrieskornTriple(a1, a2, a3));
    std::string out = "b=" + s.b.str() + " arms=";
    for (std::size_t i = 0; i < s.arms.size(); ++i) {
      if (i) out += ",";
      out += "(" + s.arms[i].alpha.str() + "," + s.arms[i].beta.str() + ")";
    }
    out += " e=" + s.euler_number().str();
    hand_out(out, text_out);
  });
}

pk_status pk_all_odd(int64_t a1, int64_t a2, int64_t a3, int* odd_out) {
  return guarded([&] {
    require(odd_out, "odd_out");
    *odd_out = all_odd(BrieskornTriple(a1, a2, a3)) ? 1 : 0;
  });
}

pk_status pk_brieskorn_signature(int64_t a1, int64_t a2, int64_t a3, char** sigma_out) {
  return guarded([&] { hand_out(brieskorn_signature_counting(BrieskornTriple(a1, a2, a3)).str(), sigma_out); });
}

pk_status pk_rohlin_lattice(int64_t a1, int64_t a2, int64_t a3, int* mu_out) {
  return guarded([&] {
    require(mu_out, "mu_out");
    *mu_out = rohlin_from_signature(BrieskornTriple(a1, a2, a3));
  });
}

pk_status pk_rohlin_plumbing(int64_t a1, int64_t a2, int64_t a3, int* mu_out) {
  return guarded([&] {
    require(mu_out, "mu_out");
    *mu_out = rohlin_mu_bar(star_plumbing(brieskorn_seifert(BrieskornTriple(a1, a2, a3))));
  });
}

pk_status pk_graph_parse(const char* text, pk_graph** graph_out) {
  return guarded([&] {
    require(text, "text");
    hand_out_graph(parse_graph(text), graph_out);
  });
}

pk_status pk_graph_load(const char* path, pk_graph** graph_out) {
  return guarded([&] { hand_out_graph(parse_graph(read_file(path)), graph_out); });
}

pk_status pk_graph_fixture(const char* name, pk_graph** graph_out) {
  return guarded([&] {
    require(name, "name");
    hand_out_graph(load_fixture(name), graph_out);
  });
}

pk_status pk_graph_star(int64_t a1, int64_t a2, int64_t a3, pk_graph** graph_out) {
  return guarded([&] { hand_out_graph(star_plumbing(brieskorn_seifert(BrieskornTriple(a1, a2, a3))), graph_out); });
}

void pk_graph_free(pk_graph* graph) { delete graph; }

size_t pk_graph_vertex_count(const pk_graph* graph) { return graph ? graph->graph.vertex_count() : 0; }

size_t pk_graph_edge_count(const pk_graph* graph) { return graph ? graph->graph.edge_count() : 0; }

pk_status pk_graph_serialize(const pk_graph* graph, char** text_out) {
  return guarded([&] { hand_out(serialize_graph(graph_of(graph)), text_out); });
}

pk_status pk_graph_dot(const pk_graph* graph, char** dot_out) {
  return guarded([&] { hand_out(to_dot(graph_of(graph)), dot_out); });
}

pk_status pk_graph_canonical(const pk_graph* graph, char** code_out) {
  return guarded([&] { hand_out(canonical_form(graph_of(graph)), code_out); });
}

pk_status pk_graph_determinant(const pk_graph* graph, char** det_out) {
  return guarded([&] { hand_out(determinant(linking_matrix(graph_of(graph))).str(), det_out); });
}

pk_status pk_graph_signature(const pk_graph* graph, int64_t* sigma_out) {
  return guarded([&] {
    require(sigma_out, "sigma_out");
    *sigma_out = signature(linking_matrix(graph_of(graph)));
  });
}

pk_status pk_graph_wu_class(const pk_graph* graph, char** ids_out) {
  return guarded([&] {
    std::string out;
    for (const auto& id : wu_class(graph_of(graph))) {
      if (!out.empty()) out += ' ';
      out += id;
    }
    hand_out(out, ids_out);
  });
}

pk_status pk_graph_mu_bar(const pk_graph* graph, char** mu_bar_out) {
  return guarded([&] { hand_out(mu_bar(graph_of(graph)).str(), mu_bar_out); });
}

pk_status pk_graph_rohlin(const pk_graph* graph, int* mu_out) {
  return guarded([&] {
    require(mu_out, "mu_out");
    *mu_out = rohlin_mu_bar(graph_of(graph));
  });
}

pk_status pk_reduce(const pk_graph* graph, size_t budget, size_t blow_up_depth, pk_reduction** out) {
  return guarded([&] {
    require(out, "reduction output");
    const ReduceOptions options{budget, blow_up_depth};
    *out = new pk_reduction{reduce_to_s3(graph_of(graph), options)};
  });
}

pk_verdict pk_reduction_verdict(const pk_reduction* r) {
  if (r == nullptr) return PK_VERDICT_UNKNOWN;
  switch (r->result.verdict) {
    case VerdictKind::S3: return PK_VERDICT_S3;
    case VerdictKind::NotHomologySphere: return PK_VERDICT_NOT_HOMOLOGY_SPHERE;
    case VerdictKind::Unknown: return PK_VERDICT_UNKNOWN;
  }
  return PK_VERDICT_UNKNOWN;
}

pk_status pk_reduction_label(const pk_reduction* r, char** label_out) {
  return guarded([&] {
    require(r, "reduction");
    hand_out(r->result.label(), label_out);
  });
}

size_t pk_reduction_move_count(const pk_reduction* r) {
  return (r && r->result.trace) ? r->result.trace->moves.size() : 0;
}

size_t pk_reduction_states_visited(const pk_reduction* r) { return r ? r->result.states_visited : 0; }

int pk_reduction_budget_exhausted(const pk_reduction* r) { return (r && r->result.budget_exhausted) ? 1 : 0; }

pk_status pk_reduction_trace(const pk_reduction* r, char** trace_out) {
  return guarded([&] {
    require(r, "reduction");
    if (!r->result.trace) throw ArgumentError("reduction has no trace (verdict " + r->result.label() + ")");
    hand_out(serialize_trace(*r->result.trace), trace_out);
  });
}

pk_status pk_reduction_path(const pk_reduction* r, char** codes_out) {
  return guarded([&] {
    require(r, "reduction");
    if (!r->result.trace) throw ArgumentError("reduction has no trace (verdict " + r->result.label() + ")");
    std::string out;
    for (const auto& g : r->result.trace->intermediates()) out += canonical_form(g) + "\n";
    hand_out(out, codes_out);
  });
}

void pk_reduction_free(pk_reduction* r) { delete r; }

pk_status pk_trace_replay(const char* text, pk_graph** end_out, size_t* move_count_out) {
  return guarded([&] {
    require(text, "text");
    const MoveTrace trace = parse_trace(text);
    PlumbingGraph end = replay(trace);
    if (move_count_out) *move_count_out = trace.moves.size();
    if (end_out) hand_out_graph(std::move(end), end_out);
  });
}

void pk_scan_params_default(pk_scan_params* params) {
  if (params == nullptr) return;
  const ScanParams d;
  *params = {d.p_bound, d.q_bound, d.r_range.lo, d.r_range.hi, d.s_range.lo, d.s_range.hi, 0};
}

pk_status pk_surgery_coefficient(int64_t p, int64_t q, int64_t r, int64_t s, char** coefficient_out) {
  return guarded([&] { hand_out(surgery_coefficient(p, q, r, s).str(), coefficient_out); });
}

pk_status pk_scan_run(const pk_scan_params* params, pk_scan** out) {
  return guarded([&] {
    require(params, "params");
    require(out, "scan output");
    if (params->p_bound < 0 || params->q_bound < 0) throw ArgumentError("scan bounds must be non-negative");
    const ScanParams sp{params->p_bound, params->q_bound, {params->r_min, params->r_max},
                        {params->s_min, params->s_max}};
    auto records = scan_range(sp, params->threads);
    *out = new pk_scan{sp, std::move(records)};
  });
}

size_t pk_scan_record_count(const pk_scan* scan) { return scan ? scan->records.size() : 0; }

size_t pk_scan_hit_count(const pk_scan* scan) {
  if (scan == nullptr) return 0;
  size_t n = 0;
  for (const auto& r : scan->records)
    if (r.is_hit()) ++n;
  return n;
}

pk_status pk_scan_records(const pk_scan* scan, char** jsonl_out) {
  return guarded([&] {
    require(scan, "scan");
    hand_out(records_jsonl(scan->records), jsonl_out);
  });
}

pk_status pk_scan_summary(const pk_scan* scan, char** text_out) {
  return guarded([&] {
    require(scan, "scan");
    hand_out(summary_table(scan->params, scan->records), text_out);
  });
}

pk_status pk_scan_hit_triples(const pk_scan* scan, char** text_out) {
  return guarded([&] {
    require(scan, "scan");
    std::string out;
    for (const auto& t : hit_triples(scan->records))
      out += std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + "\n";
    hand_out(out, text_out);
  });
}

void pk_scan_free(pk_scan* scan) { delete scan; }

pk_status pk_lemma_report(int64_t a1, int64_t a2, int64_t a3, int as_record, char** text_out, int* satisfied_out) {
  return guarded([&] {
    const LemmaCheck c = check_lemma(BrieskornTriple(a1, a2, a3));
    hand_out(as_record ? render_record(c) : render_text(c), text_out);
    if (satisfied_out) *satisfied_out = c.satisfied() ? 1 : 0;
  });
}

}  // extern "C"
