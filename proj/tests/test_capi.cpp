#include "doctest.h"

#include "plumbkit/plumbkit.h"

#include <string>

namespace {

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out = s ? s : "";
  pk_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("status names and errors") {
  CHECK(std::string(pk_status_name(PK_OK)) == "ok");
  CHECK(std::string(pk_version()) == "0.1.0");
  char* out = nullptr;
  CHECK(pk_expand("1", "2", &out) == PK_ERR_DOMAIN);
  CHECK(out == nullptr);
  CHECK(std::string(pk_last_error()).size() > 0);
  CHECK(pk_expand(nullptr, "2", &out) == PK_ERR_ARGUMENT);
  CHECK(pk_expand("x", "2", &out) == PK_ERR_ARGUMENT);
}

TEST_CASE("arithmetic") {
  char* out = nullptr;
  REQUIRE(pk_expand("-9", "4", &out) == PK_OK);
  CHECK(take(out) == "-3 -2 -2 -2");
  REQUIRE(pk_evaluate("-7 -2", &out) == PK_OK);
  CHECK(take(out) == "-13/2");
  CHECK(pk_evaluate("-1", &out) == PK_ERR_DOMAIN);
}

TEST_CASE("seifert invariants") {
  char* out = nullptr;
  REQUIRE(pk_seifert(13, 5, 9, &out) == PK_OK);
  CHECK(take(out) == "b=-1 arms=(5,2),(9,4),(13,2) e=-1/585");
  int v = -1;
  CHECK(pk_seifert(4, 6, 7, &out) == PK_ERR_DOMAIN);
  REQUIRE(pk_all_odd(5, 9, 13, &v) == PK_OK);
  CHECK(v == 1);
  REQUIRE(pk_brieskorn_signature(5, 9, 13, &out) == PK_OK);
  CHECK(take(out) == "-184");
  REQUIRE(pk_rohlin_lattice(3, 13, 23, &v) == PK_OK);
  CHECK(v == 1);
  CHECK(pk_rohlin_lattice(2, 3, 5, &v) == PK_ERR_DOMAIN);
  REQUIRE(pk_rohlin_plumbing(2, 3, 5, &v) == PK_OK);
  CHECK(v == 1);
}

TEST_CASE("graphs") {
  pk_graph* g = nullptr;
  REQUIRE(pk_graph_fixture("d2", &g) == PK_OK);
  CHECK(pk_graph_vertex_count(g) == 9);
  CHECK(pk_graph_edge_count(g) == 8);
  char* out = nullptr;
  REQUIRE(pk_graph_determinant(g, &out) == PK_OK);
  CHECK(take(out) == "-1");
  int64_t sigma = 0;
  REQUIRE(pk_graph_signature(g, &sigma) == PK_OK);
  CHECK(sigma == -9);
  REQUIRE(pk_graph_wu_class(g, &out) == PK_OK);
  CHECK(take(out) == "c");
  REQUIRE(pk_graph_mu_bar(g, &out) == PK_OK);
  CHECK(take(out) == "-8");
  int mu = 0;
  REQUIRE(pk_graph_rohlin(g, &mu) == PK_OK);
  CHECK(mu == 1);
  REQUIRE(pk_graph_serialize(g, &out) == PK_OK);
  const std::string text = take(out);
  pk_graph_free(g);

  pk_graph* h = nullptr;
  REQUIRE(pk_graph_parse(text.c_str(), &h) == PK_OK);
  REQUIRE(pk_graph_serialize(h, &out) == PK_OK);
  CHECK(take(out) == text);
  REQUIRE(pk_graph_dot(h, &out) == PK_OK);
  CHECK(take(out).starts_with("graph plumbing {"));
  pk_graph_free(h);

  CHECK(pk_graph_parse("vertex a 1\nedge a b\n", &h) == PK_ERR_PARSE);
  CHECK(std::string(pk_last_error()).find("line 2") != std::string::npos);
  CHECK(pk_graph_load("/nonexistent/file.graph", &h) == PK_ERR_IO);
  CHECK(pk_graph_fixture("nope", &h) == PK_ERR_DOMAIN);

  REQUIRE(pk_graph_parse("vertex a -2\n", &h) == PK_OK);
  CHECK(pk_graph_rohlin(h, &mu) == PK_ERR_DOMAIN);
  CHECK(pk_graph_mu_bar(h, &out) == PK_ERR_SINGULAR);
  pk_graph_free(h);

  REQUIRE(pk_graph_star(3, 13, 23, &h) == PK_OK);
  CHECK(pk_graph_vertex_count(h) == 9);
  pk_graph* f = nullptr;
  REQUIRE(pk_graph_fixture("sigma-3-13-23", &f) == PK_OK);
  char* c1 = nullptr;
  char* c2 = nullptr;
  REQUIRE(pk_graph_canonical(h, &c1) == PK_OK);
  REQUIRE(pk_graph_canonical(f, &c2) == PK_OK);
  CHECK(take(c1) == take(c2));
  pk_graph_free(h);
  pk_graph_free(f);
}

TEST_CASE("reduction and replay") {
  pk_graph* g = nullptr;
  REQUIRE(pk_graph_fixture("d3", &g) == PK_OK);
  pk_reduction* r = nullptr;
  REQUIRE(pk_reduce(g, 100000, 0, &r) == PK_OK);
  CHECK(pk_reduction_verdict(r) == PK_VERDICT_S3);
  CHECK(pk_reduction_move_count(r) == 7);
  CHECK(pk_reduction_budget_exhausted(r) == 0);
  char* out = nullptr;
  REQUIRE(pk_reduction_path(r, &out) == PK_OK);
  CHECK(take(out).find("{<(-2)(0)>}") != std::string::npos);
  REQUIRE(pk_reduction_trace(r, &out) == PK_OK);
  const std::string trace = take(out);
  pk_reduction_free(r);
  pk_graph_free(g);

  pk_graph* end = nullptr;
  size_t moves = 0;
  REQUIRE(pk_trace_replay(trace.c_str(), &end, &moves) == PK_OK);
  CHECK(moves == 7);
  CHECK(pk_graph_vertex_count(end) == 0);
  pk_graph_free(end);
  std::string bad = trace;
  bad.replace(bad.find("blowdown e"), 10, "blowdown a");
  CHECK(pk_trace_replay(bad.c_str(), &end, &moves) == PK_ERR_MOVE);

  REQUIRE(pk_graph_fixture("e8", &g) == PK_OK);
  REQUIRE(pk_reduce(g, 100000, 0, &r) == PK_OK);
  CHECK(pk_reduction_verdict(r) == PK_VERDICT_UNKNOWN);
  REQUIRE(pk_reduction_label(r, &out) == PK_OK);
  CHECK(take(out) == "UNKNOWN");
  CHECK(pk_reduction_trace(r, &out) == PK_ERR_ARGUMENT);
  pk_reduction_free(r);
  pk_graph_free(g);
}

TEST_CASE("scan and reports") {
  pk_scan_params p;
  pk_scan_params_default(&p);
  CHECK(p.p_bound == 100);
  CHECK(p.r_min == -20);
  char* out = nullptr;
  REQUIRE(pk_surgery_coefficient(-13, 23, 3, 1, &out) == PK_OK);
  CHECK(take(out) == "1");
  pk_scan* s = nullptr;
  REQUIRE(pk_scan_run(&p, &s) == PK_OK);
  CHECK(pk_scan_record_count(s) == 960);
  CHECK(pk_scan_hit_count(s) == 32);
  REQUIRE(pk_scan_hit_triples(s, &out) == PK_OK);
  CHECK(take(out) == "3,13,23\n7,57,83\n");
  pk_scan_free(s);
  p.p_bound = -1;
  CHECK(pk_scan_run(&p, &s) == PK_ERR_ARGUMENT);

  int ok = 0;
  REQUIRE(pk_lemma_report(5, 9, 13, 1, &out, &ok) == PK_OK);
  CHECK(ok == 1);
  CHECK(take(out).starts_with("{"));
  REQUIRE(pk_lemma_report(2, 3, 5, 0, &out, &ok) == PK_OK);
  CHECK(ok == 0);
  pk_string_free(out);
}
