#include "plumbkit/lattice.hpp"

#include "plumbkit/errors.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <map>
#include <optional>

namespace plumbkit {

LinkingMatrix::LinkingMatrix(std::vector<VertexId> order, std::vector<Integer> entries)
    : order_(std::move(order)), entries_(std::move(entries)) {
  if (entries_.size() != order_.size() * order_.size())
    throw DomainError("linking matrix entry count does not match its order");
}

LinkingMatrix linking_matrix(const PlumbingGraph& g) {
  auto order = g.vertices();
  const std::size_t n = order.size();
  std::map<VertexId, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(order[i], i);

  std::vector<Integer> entries(n * n, Integer(0));
  for (std::size_t i = 0; i < n; ++i) {
    entries[i * n + i] = g.weight(order[i]);
    for (const auto& nb : g.neighbors(order[i])) entries[i * n + index.at(nb)] = 1;
  }
  return LinkingMatrix(std::move(order), std::move(entries));
}

namespace {

// Dense symmetric rational work matrix restricted to a shrinking active set.
class WorkMatrix {
 public:
  explicit WorkMatrix(const LinkingMatrix& m) : n_(m.size()), cells_(n_ * n_), active_(n_, true) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) cells_[i * n_ + j] = Rational(m.at(i, j));
  }

  Rational& at(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }
  bool active(std::size_t i) const { return active_[i]; }
  void retire(std::size_t i) { active_[i] = false; }
  std::size_t n() const { return n_; }

  std::size_t off_diagonal_nonzeros(std::size_t i) {
    std::size_t count = 0;
    for (std::size_t j = 0; j < n_; ++j)
      if (j != i && active_[j] && at(i, j).sign() != 0) ++count;
    return count;
  }

 private:
  std::size_t n_;
  std::vector<Rational> cells_;
  std::vector<bool> active_;
};

}  // namespace

CongruenceForm congruence_diagonalize(const LinkingMatrix& m) {
  WorkMatrix w(m);
  const std::size_t n = w.n();
  CongruenceForm form;
  std::size_t remaining = n;

  while (remaining > 0) {
    // Pivot rule: among active rows with nonzero diagonal, take the one with
    // the fewest off-diagonal nonzeros (ties: lowest index). On trees this
    // peels leaves and avoids fill-in.
    std::optional<std::size_t> pivot;
    std::size_t best_fill = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!w.active(i) || w.at(i, i).sign() == 0) continue;
      std::size_t fill = w.off_diagonal_nonzeros(i);
      if (!pivot || fill < best_fill) {
        pivot = i;
        best_fill = fill;
      }
    }

    if (pivot) {
      const std::size_t p = *pivot;
      const Rational d = w.at(p, p);
      std::vector<std::size_t> touched;
      for (std::size_t j = 0; j < n; ++j)
        if (j != p && w.active(j) && w.at(p, j).sign() != 0) touched.push_back(j);
      for (std::size_t j : touched) {
        const Rational factor = w.at(j, p) / d;
        for (std::size_t k : touched) w.at(j, k) = w.at(j, k) - factor * w.at(p, k);
      }
      form.pivots.push_back(d);
      w.retire(p);
      --remaining;
      continue;
    }

    // Zero diagonal everywhere: split off a hyperbolic plane if one exists.
    std::optional<std::pair<std::size_t, std::size_t>> plane;
    for (std::size_t i = 0; i < n && !plane; ++i) {
      if (!w.active(i)) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (w.active(j) && w.at(i, j).sign() != 0) {
          plane = {i, j};
          break;
        }
      }
    }
    if (!plane) {
      form.nullity = remaining;
      break;
    }
    const auto [i, j] = *plane;
    const Rational b = w.at(i, j);
    std::vector<std::size_t> others;
    for (std::size_t k = 0; k < n; ++k)
      if (k != i && k != j && w.active(k) && (w.at(k, i).sign() != 0 || w.at(k, j).sign() != 0))
        others.push_back(k);
    // Schur complement against P = [[0,b],[b,0]], P^-1 = [[0,1/b],[1/b,0]].
    for (std::size_t k : others) {
      for (std::size_t l : others) {
        w.at(k, l) = w.at(k, l) - (w.at(k, i) * w.at(j, l) + w.at(k, j) * w.at(i, l)) / b;
      }
    }
    form.hyperbolic.push_back(b);
    w.retire(i);
    w.retire(j);
    remaining -= 2;
  }
  return form;
}

Integer determinant(const LinkingMatrix& m) {
  if (m.size() == 0) return 1;
  auto form = congruence_diagonalize(m);
  if (form.nullity > 0) return 0;
  Rational det(1);
  for (const auto& d : form.pivots) det = det * d;
  for (const auto& b : form.hyperbolic) det = det * (-(b * b));
  if (!det.is_integer()) throw ParityError("non-integral determinant " + det.str());
  return det.num();
}

std::int64_t signature(const LinkingMatrix& m) {
  auto form = congruence_diagonalize(m);
  std::int64_t sig = 0;
  for (const auto& d : form.pivots) sig += d.sign();
  // Each hyperbolic block contributes one positive and one negative eigenvalue.
  return sig;
}

std::set<VertexId> wu_class(const PlumbingGraph& g) {
  const auto m = linking_matrix(g);
  const std::size_t n = m.size();
  // Augmented rows [A mod 2 | diag(A) mod 2].
  std::vector<boost::dynamic_bitset<>> rows(n, boost::dynamic_bitset<>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = bit_test(m.at(i, j), 0);
    rows[i][n] = bit_test(m.at(i, i), 0);
  }

  std::size_t r = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = r;
    while (sel < n && !rows[sel][c]) ++sel;
    if (sel == n) throw SingularError("linking matrix is singular mod 2 (even determinant)");
    std::swap(rows[r], rows[sel]);
    for (std::size_t i = 0; i < n; ++i)
      if (i != r && rows[i][c]) rows[i] ^= rows[r];
    ++r;
  }

  std::set<VertexId> out;
  for (std::size_t i = 0; i < n; ++i)
    if (rows[i][n]) out.insert(m.order()[i]);
  return out;
}

Integer mu_bar(const PlumbingGraph& g) {
  const auto wu = wu_class(g);
  const auto m = linking_matrix(g);
  Integer self(0);
  for (const auto& v : wu) {
    self += g.weight(v);
    for (const auto& n : g.neighbors(v))
      if (wu.contains(n)) self += 1;  // each edge inside S is counted from both ends
  }
  Integer value = Integer(signature(m)) - self;
  if (abs(determinant(m)) == 1 && value % 8 != 0)
    throw ParityError("mu-bar " + value.str() + " is not divisible by 8 for a unimodular plumbing");
  return value;
}

int rohlin_mu_bar(const PlumbingGraph& g) {
  const auto det = determinant(linking_matrix(g));
  if (abs(det) != 1) throw DomainError("not an integral homology sphere: |det| = " + Integer(abs(det)).str());
  Integer eighths = mu_bar(g) / 8;
  return static_cast<int>(mod_floor(eighths, 2));
}

}  // namespace plumbkit
