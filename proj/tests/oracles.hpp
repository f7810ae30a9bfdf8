#pragma once

// Independent reference computations for the test suites. Nothing here calls
// the code paths it is used to check.

#include "plumbkit/arith.hpp"
#include "plumbkit/graph.hpp"
#include "plumbkit/lattice.hpp"
#include "plumbkit/scan.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using plumbkit::Integer;
using plumbkit::PlumbingGraph;
using plumbkit::Rational;

using Matrix = std::vector<std::vector<Integer>>;

inline Matrix dense(const PlumbingGraph& g) {
  auto ids = g.vertices();
  Matrix m(ids.size(), std::vector<Integer>(ids.size(), Integer(0)));
  for (std::size_t i = 0; i < ids.size(); ++i) {
    m[i][i] = g.weight(ids[i]);
    for (std::size_t j = 0; j < ids.size(); ++j)
      if (g.adjacent(ids[i], ids[j])) m[i][j] = 1;
  }
  return m;
}

// Bareiss fraction-free elimination with row swaps.
inline Integer bareiss_det(Matrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Characteristic polynomial det(xI - A) by Faddeev-LeVerrier; coefficients
// from x^n down to x^0.
inline std::vector<Rational> char_poly(const Matrix& a) {
  const std::size_t n = a.size();
  using RMat = std::vector<std::vector<Rational>>;
  RMat A(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A[i][j] = Rational(a[i][j]);
  std::vector<Rational> c(n + 1);
  c[0] = Rational(1);
  RMat M(n, std::vector<Rational>(n));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{k-1} I
    RMat next(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational s(0);
        for (std::size_t l = 0; l < n; ++l) s = s + A[i][l] * M[l][j];
        if (i == j) s = s + c[k - 1];
        next[i][j] = s;
      }
    }
    M = std::move(next);
    Rational trace(0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace = trace + A[i][l] * M[l][i];
    c[k] = -(trace / Rational(static_cast<long long>(k)));
  }
  return c;
}

inline int sign_changes(const std::vector<Rational>& coeffs) {
  int changes = 0;
  int last = 0;
  for (const auto& c : coeffs) {
    if (c.sign() == 0) continue;
    if (last != 0 && c.sign() != last) ++changes;
    last = c.sign();
  }
  return changes;
}

// Signature from Descartes' rule of signs, exact because a symmetric matrix's
// characteristic polynomial has only real roots.
inline std::int64_t descartes_signature(const Matrix& a) {
  auto c = char_poly(a);
  while (!c.empty() && c.back().sign() == 0) c.pop_back();  // strip zero roots
  std::vector<Rational> reflected = c;
  const std::size_t deg = c.size() - 1;
  for (std::size_t i = 0; i < c.size(); ++i)
    if ((deg - i) % 2 == 1) reflected[i] = -reflected[i];
  return sign_changes(c) - sign_changes(reflected);
}

// All characteristic subsets by exhaustive search over 2^n subsets.
inline std::vector<std::set<std::string>> brute_wu(const PlumbingGraph& g) {
  const auto ids = g.vertices();
  const auto m = dense(g);
  const std::size_t n = ids.size();
  std::vector<std::set<std::string>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) {
      Integer s(0);
      for (std::size_t u = 0; u < n; ++u)
        if (mask >> u & 1) s += m[v][u];
      ok = ((s - m[v][v]) % 2 == 0);
    }
    if (!ok) continue;
    std::set<std::string> subset;
    for (std::size_t u = 0; u < n; ++u)
      if (mask >> u & 1) subset.insert(ids[u]);
    out.push_back(std::move(subset));
  }
  return out;
}

// Direct lattice count with plain rationals, no shared code with the library.
inline std::int64_t lattice_signature(std::int64_t a1, std::int64_t a2, std::int64_t a3) {
  std::int64_t sig = 0;
  for (std::int64_t i = 1; i < a1; ++i)
    for (std::int64_t j = 1; j < a2; ++j)
      for (std::int64_t k = 1; k < a3; ++k) {
        Rational s = Rational(Integer(i), Integer(a1)) + Rational(Integer(j), Integer(a2)) +
                     Rational(Integer(k), Integer(a3));
        while (s > Rational(2)) s = s - Rational(2);
        sig += (s < Rational(1)) ? 1 : -1;
      }
  return sig;
}

inline Rational eval_cf(const std::vector<Integer>& terms) {
  // Forward convergent recurrence h_k = c_k h_{k-1} - h_{k-2}.
  Integer h_prev = 1, h = terms[0], k_prev = 0, k = 1;
  for (std::size_t i = 1; i < terms.size(); ++i) {
    Integer h_next = terms[i] * h - h_prev;
    Integer k_next = terms[i] * k - k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return Rational(h, k);
}

// Naive quadruple loop, no algebraic shortcuts.
inline std::vector<plumbkit::ScanRecord> naive_scan(const plumbkit::ScanParams& p) {
  std::vector<plumbkit::ScanRecord> out;
  for (std::int64_t a = -p.p_bound; a <= p.p_bound; ++a)
    for (std::int64_t b = -p.q_bound; b <= p.q_bound; ++b) {
      if (std::abs(a) < 2 || std::abs(b) < 2 || std::gcd(a, b) != 1) continue;
      for (std::int64_t r = p.r_range.lo; r <= p.r_range.hi; ++r)
        for (std::int64_t s = p.s_range.lo; s <= p.s_range.hi; ++s) {
          if (r == 0 || s == 0) continue;
          const std::int64_t c = r * s * (a + b) * (a + b) + a * b;
          if (c == 1 || c == -1) out.push_back({a, b, r, s, std::nullopt, false, std::nullopt});
        }
    }
  return out;
}

// Random weighted forest: each new vertex attaches to an earlier one with
// probability attach_p.
inline PlumbingGraph random_forest(std::mt19937_64& rng, std::size_t n, int wmin, int wmax, double attach_p = 0.8) {
  PlumbingGraph g;
  std::uniform_int_distribution<int> weight(wmin, wmax);
  std::bernoulli_distribution attach(attach_p);
  for (std::size_t i = 0; i < n; ++i) {
    std::string id = "v" + std::to_string(i);
    g.add_vertex(id, weight(rng));
    if (i > 0 && attach(rng)) {
      std::uniform_int_distribution<std::size_t> parent(0, i - 1);
      g.add_edge("v" + std::to_string(parent(rng)), id);
    }
  }
  return g;
}

// Same graph with ids rewritten through a random permutation of new names.
inline PlumbingGraph relabel(const PlumbingGraph& g, std::mt19937_64& rng) {
  auto ids = g.vertices();
  std::vector<std::string> fresh;
  for (std::size_t i = 0; i < ids.size(); ++i) fresh.push_back("n" + std::to_string(i * 7 + 3));
  std::shuffle(fresh.begin(), fresh.end(), rng);
  std::map<std::string, std::string> to;
  for (std::size_t i = 0; i < ids.size(); ++i) to[ids[i]] = fresh[i];
  PlumbingGraph out;
  for (const auto& v : ids) out.add_vertex(to[v], g.weight(v));
  for (const auto& e : g.edges()) out.add_edge(to[e.a], to[e.b]);
  return out;
}

}  // namespace oracle
