#include "doctest.h"

#include "oracles.hpp"
#include "plumbkit/calculus.hpp"
#include "plumbkit/errors.hpp"
#include "plumbkit/fixtures.hpp"
#include "plumbkit/graph_io.hpp"
#include "plumbkit/lattice.hpp"

#include <algorithm>
#include <random>

using namespace plumbkit;

namespace {

PlumbingGraph chain(const std::vector<long long>& weights, const std::string& prefix = "v") {
  PlumbingGraph g;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    g.add_vertex(prefix + std::to_string(i), weights[i]);
    if (i) g.add_edge(prefix + std::to_string(i - 1), prefix + std::to_string(i));
  }
  return g;
}

// Brute-force weighted isomorphism test over all bijections.
bool isomorphic(const PlumbingGraph& g, const PlumbingGraph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  const auto gv = g.vertices();
  auto hv = h.vertices();
  std::sort(hv.begin(), hv.end());
  do {
    bool ok = true;
    for (std::size_t i = 0; i < gv.size() && ok; ++i) {
      ok = g.weight(gv[i]) == h.weight(hv[i]);
      for (std::size_t j = i + 1; j < gv.size() && ok; ++j) ok = g.adjacent(gv[i], gv[j]) == h.adjacent(hv[i], hv[j]);
    }
    if (ok) return true;
  } while (std::next_permutation(hv.begin(), hv.end()));
  return false;
}

Integer abs_det(const PlumbingGraph& g) { return abs(determinant(linking_matrix(g))); }

}  // namespace

TEST_SUITE("calculus") {
  TEST_CASE("blow down the middle of a chain") {
    const auto g = blow_down(chain({-2, -1, -2}), "v1");
    CHECK(g.vertex_count() == 2);
    CHECK(g.weight("v0") == -1);
    CHECK(g.weight("v2") == -1);
    CHECK(g.adjacent("v0", "v2"));
  }

  TEST_CASE("blow down a +1 leaf lowers its neighbor") {
    const auto g = blow_down(chain({-2, 1}), "v1");
    CHECK(g.vertex_count() == 1);
    CHECK(g.weight("v0") == -3);
  }

  TEST_CASE("first blow-down of the post-handle diagram") {
    const auto g = blow_down(load_fixture("d3"), "c");
    CHECK(g.weight("a") == -2);
    CHECK(g.weight("b") == -5);
    CHECK(g.weight("d") == -1);
    CHECK(g.adjacent("b", "d"));
    CHECK(g.adjacent("b", "e"));
    CHECK_FALSE(g.contains("c"));
    CHECK(g.is_valid_forest());
  }

  TEST_CASE("isolated unit vertex disappears") {
    PlumbingGraph g;
    g.add_vertex("x", -1);
    CHECK(blow_down(g, "x").empty());
    CHECK(record_blow_down(g, "x").kind == MoveKind::DeleteUnitVertex);
  }

  TEST_CASE("blow-down preconditions") {
    CHECK_THROWS_AS(blow_down(chain({-2, -2}), "v0"), MoveError);
    CHECK_THROWS_AS(blow_down(chain({-2}), "nope"), MoveError);
    PlumbingGraph star;
    star.add_vertex("c", -1);
    for (int i = 0; i < 3; ++i) {
      star.add_vertex("l" + std::to_string(i), -2);
      star.add_edge("c", "l" + std::to_string(i));
    }
    CHECK_THROWS_AS(blow_down(star, "c"), MoveError);
  }

  TEST_CASE("zero-pair cancellation") {
    CHECK(cancel_zero_pair(load_fixture("d4"), "a", "b").empty());
    CHECK(cancel_zero_pair(chain({7, 0}), "v0", "v1").empty());
    CHECK_THROWS_AS(cancel_zero_pair(chain({-2, -1}), "v0", "v1"), MoveError);
    CHECK_THROWS_AS(cancel_zero_pair(chain({-2, 0, -3}), "v0", "v1"), MoveError);
    // Only the pair goes; other components stay.
    auto g = chain({-2, 0});
    g.add_vertex("z", -5);
    const auto rest = cancel_zero_pair(g, "v0", "v1");
    CHECK(rest.vertex_count() == 1);
    CHECK(rest.weight("z") == -5);
  }

  TEST_CASE("blow-up inverts blow-down") {
    const auto g = chain({-2, -3, -4});
    const auto up = blow_up(g, "x1", -1, {"v0", "v1"});
    CHECK(up.weight("v0") == -3);
    CHECK(up.weight("v1") == -4);
    CHECK_FALSE(up.adjacent("v0", "v1"));
    CHECK(blow_down(up, "x1") == g);
    const auto leaf = blow_up(g, "x1", 1, {"v2"});
    CHECK(blow_down(leaf, "x1") == g);
    CHECK(abs_det(up) == abs_det(g));
    CHECK_THROWS_AS(blow_up(g, "x1", -1, {"v0", "v2"}), MoveError);
    CHECK_THROWS_AS(blow_up(g, "v0", -1, {"v1"}), MoveError);
    CHECK_THROWS_AS(blow_up(g, "x1", 2, {"v1"}), MoveError);
  }

  TEST_CASE("canonical form") {
    std::mt19937_64 rng(21);
    const auto d2 = load_fixture("d2");
    for (int i = 0; i < 10; ++i) CHECK(canonical_form(oracle::relabel(d2, rng)) == canonical_form(d2));

    PlumbingGraph ab;
    ab.add_vertex("a", -2);
    ab.add_vertex("b", 0);
    ab.add_edge("a", "b");
    PlumbingGraph ba;
    ba.add_vertex("a", 0);
    ba.add_vertex("b", -2);
    ba.add_edge("a", "b");
    CHECK(canonical_form(ab) == canonical_form(ba));
    CHECK(canonical_form(load_fixture("d3")) != canonical_form(load_fixture("e8")));
    CHECK(canonical_form(PlumbingGraph{}) == "{}");
  }

  TEST_CASE("canonical forms agree exactly when graphs are isomorphic") {
    std::mt19937_64 rng(22);
    std::vector<PlumbingGraph> pool;
    for (int i = 0; i < 90; ++i) pool.push_back(oracle::random_forest(rng, 1 + i % 6, -1, 0, 0.7));
    for (int i = 0; i < 30; ++i) pool.push_back(oracle::relabel(pool[i], rng));
    int same = 0;
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        const bool iso = isomorphic(pool[i], pool[j]);
        same += iso;
        CHECK((canonical_form(pool[i]) == canonical_form(pool[j])) == iso);
      }
    CHECK(same > 30);
  }

  TEST_CASE("reducer on the terminal diagram") {
    const auto r = reduce_to_s3(load_fixture("d4"));
    CHECK(r.verdict == VerdictKind::S3);
    REQUIRE(r.trace);
    CHECK(r.trace->moves.size() == 1);
    CHECK(r.trace->moves[0].kind == MoveKind::CancelZeroPair);
    CHECK(r.label() == "S3");
  }

  TEST_CASE("reducer on the post-handle diagram passes through -2 0") {
    const auto r = reduce_to_s3(load_fixture("d3"));
    REQUIRE(r.verdict == VerdictKind::S3);
    const auto& trace = *r.trace;
    CHECK(trace.end.empty());
    CHECK(replay(trace).empty());
    const auto target = canonical_form(load_fixture("d4"));
    bool seen = false;
    for (const auto& g : trace.intermediates()) seen = seen || canonical_form(g) == target;
    CHECK(seen);
    // Blowing down c, d, e, f, g, h is the sequence that yields -2 0.
    std::vector<VertexId> blown;
    for (const auto& m : trace.moves)
      if (m.kind == MoveKind::BlowDown) blown.push_back(m.targets[0]);
    std::sort(blown.begin(), blown.end());
    CHECK(blown == std::vector<VertexId>{"c", "d", "e", "f", "g", "h"});
  }

  TEST_CASE("reducer verdicts that are not S3") {
    const auto e8 = reduce_to_s3(load_fixture("e8"));
    CHECK(e8.verdict == VerdictKind::Unknown);
    CHECK(e8.det_abs == 1);
    CHECK_FALSE(e8.budget_exhausted);
    CHECK_FALSE(e8.trace);
    CHECK(e8.label() == "UNKNOWN");

    CHECK(reduce_to_s3(load_fixture("d2")).verdict == VerdictKind::Unknown);

    const auto lens = reduce_to_s3(chain({-2}));
    CHECK(lens.verdict == VerdictKind::NotHomologySphere);
    CHECK(lens.label() == "NOT-HS(2)");

    const auto tight = reduce_to_s3(load_fixture("d3"), ReduceOptions{2, 0});
    CHECK(tight.verdict == VerdictKind::Unknown);
    CHECK(tight.budget_exhausted);
  }

  TEST_CASE("empty graph is already S3") {
    const auto r = reduce_to_s3(PlumbingGraph{});
    CHECK(r.verdict == VerdictKind::S3);
    CHECK(r.trace->moves.empty());
  }

  TEST_CASE("blow-ups stay sound") {
    const auto d3 = reduce_to_s3(load_fixture("d3"), ReduceOptions{100000, 1});
    CHECK(d3.verdict == VerdictKind::S3);
    CHECK(replay(*d3.trace).empty());
    const auto e8 = reduce_to_s3(load_fixture("e8"), ReduceOptions{3000, 1});
    CHECK(e8.verdict == VerdictKind::Unknown);
  }

  TEST_CASE("search is deterministic") {
    const auto a = reduce_to_s3(load_fixture("d3"));
    const auto b = reduce_to_s3(load_fixture("d3"));
    CHECK(serialize_trace(*a.trace) == serialize_trace(*b.trace));
    CHECK(a.states_visited == b.states_visited);
  }

  TEST_CASE("trace text round trip and tamper detection") {
    const auto r = reduce_to_s3(load_fixture("d3"));
    const std::string text = serialize_trace(*r.trace);
    const auto parsed = parse_trace(text);
    CHECK(parsed.start == r.trace->start);
    CHECK(parsed.moves == r.trace->moves);
    CHECK(parsed.end == r.trace->end);
    CHECK(serialize_trace(parsed) == text);

    std::string bad = text;
    bad.replace(bad.find("blowdown e"), 10, "blowdown a");
    CHECK_THROWS_AS(parse_trace(bad), MoveError);
    CHECK_THROWS_AS(parse_trace("vertex a -1\n"), ParseError);
    CHECK_THROWS_AS(parse_trace("vertex a -1\nmoves\nslide a\n"), ParseError);

    const auto up = parse_trace("vertex a -2\nmoves\nblowup x1 -1 a\nblowdown x1\n");
    CHECK(up.moves.size() == 2);
    CHECK(up.end == up.start);
  }

  TEST_CASE("recorded moves refuse a different graph") {
    const auto g = chain({-2, -1, -2});
    const auto m = record_blow_down(g, "v1");
    auto other = g;
    other.set_weight("v0", -3);
    CHECK_THROWS_AS(apply_move(other, m), MoveError);
    CHECK(apply_move(g, m) == blow_down(g, "v1"));
  }

  TEST_CASE("moves conserve |det| and forest structure on random graphs") {
    std::mt19937_64 rng(23);
    std::size_t pairs = 0;
    for (int trial = 0; pairs < 1500 && trial < 20000; ++trial) {
      auto g = oracle::random_forest(rng, 1 + trial % 10, -2, 1, 0.85);
      const auto moves = applicable_moves(g, trial % 4 == 0);
      for (const auto& m : moves) {
        const auto h = apply_move(g, m);
        ++pairs;
        CHECK(h.is_valid_forest());
        if (m.kind == MoveKind::CancelZeroPair) {
          const auto pair = g.induced(m.targets);
          CHECK(abs_det(pair) == 1);
          CHECK(abs_det(h) == abs_det(g));
        } else {
          CHECK(abs_det(h) == abs_det(g));
        }
      }
    }
    CHECK(pairs >= 1000);
  }
}
