#pragma once

#include "plumbkit/arith.hpp"
#include "plumbkit/graph.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace plumbkit {

/// Pairwise coprime multiplicities >= 2 of a Brieskorn sphere, sorted ascending.
class BrieskornTriple {
 public:
  /// Throws DomainError if an index is < 2 or two indices share a factor.
  BrieskornTriple(std::int64_t a1, std::int64_t a2, std::int64_t a3);

  std::int64_t operator[](std::size_t i) const { return indices_[i]; }
  const std::array<std::int64_t, 3>& indices() const noexcept { return indices_; }
  Integer product() const;

  friend auto operator<=>(const BrieskornTriple&, const BrieskornTriple&) = default;

  /// "(a1,a2,a3)"
  std::string str() const;

 private:
  std::array<std::int64_t, 3> indices_;
};

struct SeifertArm {
  Integer alpha;  // >= 2
  Integer beta;   // 0 < beta < alpha, coprime to alpha

  friend bool operator==(const SeifertArm&, const SeifertArm&) = default;
};

/// Unnormalized Seifert invariants (b; (alpha_i, beta_i)). Arm i is plumbed as
/// the chain expanding -alpha_i/beta_i.
struct SeifertData {
  Integer b;
  std::vector<SeifertArm> arms;

  /// e = b + sum beta_i/alpha_i.
  Rational euler_number() const;

  friend bool operator==(const SeifertData&, const SeifertData&) = default;
};

/// Seifert data normalized to e = -1/(a1 a2 a3).
SeifertData brieskorn_seifert(const BrieskornTriple& t);

/// Star-shaped tree: center "c" of weight b; arm i is the chain
/// "c<i>.<j>" with weights neg_cont_frac(-alpha_i/beta_i), attached at j = 1.
PlumbingGraph star_plumbing(const SeifertData& s);

/// All indices odd, so -1 in the circle action is a free involution.
bool all_odd(const BrieskornTriple& t);

/// Signature of the Milnor fiber by enumerating every lattice point
/// (i, j, k), 0 < i < a1, 0 < j < a2, 0 < k < a3. O(a1 a2 a3).
Integer brieskorn_signature(const BrieskornTriple& t);

/// Same count, closed form in k for each (i, j). O(a1 a2).
Integer brieskorn_signature_counting(const BrieskornTriple& t);

/// (signature / 8) mod 2 for all-odd triples. Uses the counting variant.
/// Throws DomainError if not all odd; ParityError if 8 does not divide sigma.
int rohlin_from_signature(const BrieskornTriple& t);

}  // namespace plumbkit
