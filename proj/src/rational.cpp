#include "macw/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace macw {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad(const std::string& text) {
  throw std::invalid_argument("not a rational: \"" + text + "\"");
}

}  // namespace

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  v_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw std::invalid_argument("division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(const std::string& text) {
  std::string s = text;
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  if (s.empty()) bad(text);

  mpq_class value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    mpz_class p(num, 10), q(den, 10);
    if (q == 0) throw std::invalid_argument("zero denominator in \"" + text + "\"");
    value = mpq_class(p) / mpq_class(q);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) bad(text);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class p = mpz_class(whole, 10) * scale + mpz_class(frac, 10);
    value = mpq_class(p) / mpq_class(scale);
  } else {
    if (!all_digits(s)) bad(text);
    value = mpq_class(mpz_class(s, 10));
  }

  if (neg) value = -value;
  value.canonicalize();
  return Rational(value);
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

long long Rational::numerator_ll() const {
  if (!v_.get_num().fits_slong_p()) {
    throw std::overflow_error("numerator too large for long long");
  }
  return v_.get_num().get_si();
}

long long Rational::denominator_ll() const {
  if (!v_.get_den().fits_slong_p()) {
    throw std::overflow_error("denominator too large for long long");
  }
  return v_.get_den().get_si();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace macw
