#pragma once

#include "plumbkit/arith.hpp"
#include "plumbkit/graph.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace plumbkit {

// Symmetric integer matrix of a plumbing: weights on the diagonal, 1 per edge.
// Rows follow the graph's id order.
class LinkingMatrix {
 public:
  LinkingMatrix() = default;
  LinkingMatrix(std::vector<VertexId> order, std::vector<Integer> entries);

  std::size_t size() const noexcept { return order_.size(); }
  const Integer& at(std::size_t i, std::size_t j) const { return entries_[i * size() + j]; }
  const std::vector<VertexId>& order() const noexcept { return order_; }

  friend bool operator==(const LinkingMatrix&, const LinkingMatrix&) = default;

 private:
  std::vector<VertexId> order_;
  std::vector<Integer> entries_;
};

LinkingMatrix linking_matrix(const PlumbingGraph& g);

/// Result of congruence diagonalization over the rationals: A ~ diag(pivots)
/// (+) one hyperbolic 2x2 block [[0,b],[b,0]] per entry of `hyperbolic`
/// (+) a zero block of size `nullity`.
struct CongruenceForm {
  std::vector<Rational> pivots;
  std::vector<Rational> hyperbolic;
  std::size_t nullity = 0;
};

CongruenceForm congruence_diagonalize(const LinkingMatrix& m);

/// Exact determinant, read off the congruence form.
Integer determinant(const LinkingMatrix& m);

/// (#positive) - (#negative) eigenvalues, computed without floating point.
std::int64_t signature(const LinkingMatrix& m);

/// The unique vertex subset S with sum_{u in S} A[v,u] = A[v,v] (mod 2) for
/// every v. Throws SingularError when det is even.
std::set<VertexId> wu_class(const PlumbingGraph& g);

/// signature(A) - w^T A w for the Wu class w. Requires odd det (SingularError
/// otherwise). When |det| = 1 the value is divisible by 8 and a violation
/// throws ParityError; other odd determinants return the raw value.
Integer mu_bar(const PlumbingGraph& g);

/// Rohlin invariant (mu_bar / 8) mod 2 of a plumbed integral homology sphere.
/// Throws DomainError if |det| != 1.
int rohlin_mu_bar(const PlumbingGraph& g);

}  // namespace plumbkit
