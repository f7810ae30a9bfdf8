#include "plumbkit/seifert.hpp"

#include "plumbkit/errors.hpp"

#include <algorithm>
#include <numeric>

namespace plumbkit {

BrieskornTriple::BrieskornTriple(std::int64_t a1, std::int64_t a2, std::int64_t a3) : indices_{a1, a2, a3} {
  std::sort(indices_.begin(), indices_.end());
  if (indices_[0] < 2) throw DomainError("Brieskorn indices must be >= 2, got " + str());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (std::gcd(indices_[i], indices_[j]) != 1) throw DomainError("indices not pairwise coprime: " + str());
    }
  }
}

Integer BrieskornTriple::product() const {
  return Integer(indices_[0]) * indices_[1] * indices_[2];
}

std::string BrieskornTriple::str() const {
  return "(" + std::to_string(indices_[0]) + "," + std::to_string(indices_[1]) + "," +
         std::to_string(indices_[2]) + ")";
}

Rational SeifertData::euler_number() const {
  Rational e(b);
  for (const auto& arm : arms) e = e + Rational(arm.beta, arm.alpha);
  return e;
}

SeifertData brieskorn_seifert(const BrieskornTriple& t) {
  const Integer a = t.product();
  SeifertData out;
  Integer sum(0);
  for (auto alpha_small : t.indices()) {
    const Integer alpha(alpha_small);
    const Integer cofactor = a / alpha;
    // cofactor * beta = -1 (mod alpha); cofactor is invertible mod alpha.
    const auto bz = bezout(cofactor, alpha);
    if (bz.g != 1) throw DomainError("indices not pairwise coprime: " + t.str());
    Integer beta = mod_floor(-bz.u, alpha);
    sum += beta * cofactor;
    out.arms.push_back({alpha, beta});
  }
  Integer numer = -1 - sum;
  if (numer % a != 0) throw ParityError("central weight is not integral for " + t.str());
  out.b = numer / a;
  if (out.euler_number() != Rational(Integer(-1), a))
    throw ParityError("Euler number mismatch for " + t.str());
  return out;
}

PlumbingGraph star_plumbing(const SeifertData& s) {
  PlumbingGraph g;
  const VertexId center = "c";
  g.add_vertex(center, s.b);
  for (std::size_t i = 0; i < s.arms.size(); ++i) {
    const auto& arm = s.arms[i];
    if (arm.alpha < 2 || arm.beta <= 0 || arm.beta >= arm.alpha || gcd(arm.alpha, arm.beta) != 1)
      throw DomainError("invalid Seifert arm (" + arm.alpha.str() + "," + arm.beta.str() + ")");
    const auto chain = neg_cont_frac(Rational(-arm.alpha, arm.beta));
    // Zero-pad the position so id order matches chain order.
    const std::size_t width = std::to_string(chain.size()).size();
    VertexId prev = center;
    for (std::size_t j = 0; j < chain.size(); ++j) {
      std::string pos = std::to_string(j + 1);
      pos.insert(0, width - pos.size(), '0');
      VertexId id = center + std::to_string(i + 1) + "." + pos;
      g.add_vertex(id, chain.terms()[j]);
      g.add_edge(prev, id);
      prev = id;
    }
  }
  return g;
}

bool all_odd(const BrieskornTriple& t) {
  return std::all_of(t.indices().begin(), t.indices().end(), [](std::int64_t a) { return a % 2 != 0; });
}

// Work in units of 1/a, a = a1 a2 a3: the lattice point (i, j, k) sits at
// x = i a2 a3 + j a1 a3 + k a1 a2, strictly inside (0, 3a) and never a
// multiple of a. x mod 2a in (0, a) is a positive eigenvalue, in (a, 2a)
// a negative one.
Integer brieskorn_signature(const BrieskornTriple& t) {
  const Integer a1 = t[0], a2 = t[1], a3 = t[2];
  const Integer a = a1 * a2 * a3;
  const Integer two_a = 2 * a;
  Integer sig(0);
  for (Integer i = 1; i < a1; ++i) {
    for (Integer j = 1; j < a2; ++j) {
      for (Integer k = 1; k < a3; ++k) {
        Integer x = (i * a2 * a3 + j * a1 * a3 + k * a1 * a2) % two_a;
        if (x % a == 0) throw ParityError("lattice point on a wall for " + t.str());
        sig += (x < a) ? 1 : -1;
      }
    }
  }
  return sig;
}

Integer brieskorn_signature_counting(const BrieskornTriple& t) {
  const Integer a1 = t[0], a2 = t[1], a3 = t[2];
  const Integer a = a1 * a2 * a3;
  const Integer step = a1 * a2;
  // Number of k in [1, a3-1] with base + k*step < bound.
  auto count_below = [&](const Integer& base, const Integer& bound) -> Integer {
    if (bound <= base + step) return 0;
    Integer k = (bound - base - 1) / step;  // largest k with base + k*step < bound
    return k < a3 - 1 ? k : a3 - 1;
  };
  Integer sig(0);
  for (Integer i = 1; i < a1; ++i) {
    for (Integer j = 1; j < a2; ++j) {
      const Integer base = i * a2 * a3 + j * a1 * a3;
      const Integer below_a = count_below(base, a);
      const Integer below_2a = count_below(base, 2 * a);
      const Integer total = a3 - 1;
      const Integer positive = below_a + (total - below_2a);
      sig += positive - (below_2a - below_a);
    }
  }
  return sig;
}

int rohlin_from_signature(const BrieskornTriple& t) {
  if (!all_odd(t)) throw DomainError("lattice-count Rohlin invariant needs all-odd indices, got " + t.str());
  const Integer sig = brieskorn_signature_counting(t);
  if (sig % 8 != 0) throw ParityError("Milnor fiber signature " + sig.str() + " not divisible by 8");
  return static_cast<int>(mod_floor(sig / 8, 2));
}

}  // namespace plumbkit
