#include "flowround/rational.hpp"

#include <cctype>
#include <ostream>

#include "flowround/errors.hpp"

namespace flowround {

Rational::Rational(long long num, long long den) {
  if (den == 0) fail(Errc::parse, "rational with zero denominator");
  v_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  v_.canonicalize();
}

Rational Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return Rational(mpq_class(q));
}

Rational Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return Rational(mpq_class(q));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.v_ == 0) fail(Errc::internal, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

namespace {

bool valid_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  std::string s = text;
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  if (s.empty()) fail(Errc::parse, "empty rational: '" + text + "'");

  mpz_class num, den;
  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string::npos) {
    std::string p = s.substr(0, slash), q = s.substr(slash + 1);
    if (!valid_digits(p) || !valid_digits(q)) fail(Errc::parse, "bad rational: '" + text + "'");
    num = mpz_class(p);
    den = mpz_class(q);
    if (den == 0) fail(Errc::parse, "zero denominator: '" + text + "'");
  } else if (dot != std::string::npos) {
    // Exact decimal: digits over a power of ten, then reduced. Never a
    // binary float parse, so "1.7" is exactly 17/10.
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!valid_digits(whole) || (!frac.empty() && !valid_digits(frac)))
      fail(Errc::parse, "bad decimal: '" + text + "'");
    num = mpz_class(whole);
    den = 1;
    for (char c : frac) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
  } else {
    if (!valid_digits(s)) fail(Errc::parse, "bad number: '" + text + "'");
    num = mpz_class(s);
    den = 1;
  }
  if (neg) num = -num;
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const {
  if (is_integral()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace flowround
