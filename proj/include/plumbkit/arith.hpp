#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <tuple>
#include <vector>

namespace plumbkit {

using Integer = boost::multiprecision::cpp_int;

/// Parses a base-10 integer with optional sign. Throws DomainError.
Integer parse_integer(const std::string& text);

/// Exact fraction num/den, always stored in lowest terms with den >= 1.
class Rational {
 public:
  Rational() = default;
  Rational(Integer num);  // NOLINT(google-explicit-constructor)
  Rational(long long num) : Rational(Integer(num)) {}  // NOLINT
  /// Throws DomainError if den == 0.
  Rational(Integer num, Integer den);

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  /// Throws DomainError on division by zero.
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  int sign() const noexcept { return num_.sign(); }
  bool is_integer() const noexcept { return den_ == 1; }

  std::string str() const;

 private:
  Integer num_{0};
  Integer den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Negative (Hirzebruch-Jung) continued fraction c1 - 1/(c2 - 1/(... - 1/ck)),
/// every term <= -2.
class NegCF {
 public:
  /// Throws DomainError if terms is empty or any term exceeds -2.
  explicit NegCF(std::vector<Integer> terms);

  const std::vector<Integer>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  friend bool operator==(const NegCF&, const NegCF&) = default;

  std::string str() const;

 private:
  std::vector<Integer> terms_;
};

/// Unique all-terms-<=-2 expansion of x < -1.
/// Throws DomainError if x >= -1.
NegCF neg_cont_frac(const Rational& x);

Rational eval_neg_cont_frac(const NegCF& cf);

struct Bezout {
  Integer g;
  Integer u;
  Integer v;
};

/// g = gcd(a, b) > 0 with u*a + v*b = g. Throws DomainError for (0, 0).
Bezout bezout(const Integer& a, const Integer& b);

Integer gcd(const Integer& a, const Integer& b);

/// Least non-negative residue.
Integer mod_floor(const Integer& a, const Integer& m);

/// Ceiling of a/b for b > 0.
Integer ceil_div(const Integer& a, const Integer& b);

}  // namespace plumbkit
