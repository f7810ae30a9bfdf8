#include "plumbkit/arith.hpp"

#include "plumbkit/errors.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <utility>

namespace plumbkit {

Integer parse_integer(const std::string& text) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  if (pos == text.size()) throw DomainError("not an integer: '" + text + "'");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw DomainError("not an integer: '" + text + "'");
  }
  Integer value(text.substr(pos));
  return text[0] == '-' ? Integer(-value) : value;
}

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += abs(m);
  return r;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (q * b < a) ++q;
  return q;
}

Rational::Rational(Integer num) : num_(std::move(num)), den_(1) {}

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw DomainError("zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Integer g = gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw DomainError("division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Integer lhs = a.num_ * b.den_;
  Integer rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

NegCF::NegCF(std::vector<Integer> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw DomainError("continued fraction needs at least one term");
  for (const auto& t : terms_) {
    if (t > -2) throw DomainError("continued fraction term " + t.str() + " exceeds -2");
  }
}

std::string NegCF::str() const {
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += ' ';
    out += t.str();
  }
  return out;
}

NegCF neg_cont_frac(const Rational& x) {
  if (x >= Rational(-1)) throw DomainError("expansion needs x < -1, got " + x.str());
  // x = -a/b with a > b > 0. Step: c = -ceil(a/b), remainder x' = 1/(c - x).
  Integer a = -x.num();
  Integer b = x.den();
  std::vector<Integer> terms;
  while (true) {
    Integer c = ceil_div(a, b);
    terms.push_back(-c);
    // c - a/b = (c*b - a)/b, in [0, 1). Next value is -b/(c*b - a).
    Integer rem = c * b - a;
    if (rem == 0) break;
    a = b;
    b = rem;
  }
  return NegCF(std::move(terms));
}

Rational eval_neg_cont_frac(const NegCF& cf) {
  const auto& t = cf.terms();
  Rational value(t.back());
  for (auto it = t.rbegin() + 1; it != t.rend(); ++it) value = Rational(*it) - Rational(1) / value;
  return value;
}

Bezout bezout(const Integer& a, const Integer& b) {
  if (a == 0 && b == 0) throw DomainError("bezout(0, 0) is undefined");
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, Integer(old_r - q * r));
    std::tie(old_s, s) = std::make_tuple(s, Integer(old_s - q * s));
    std::tie(old_t, t) = std::make_tuple(t, Integer(old_t - q * t));
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

}  // namespace plumbkit
