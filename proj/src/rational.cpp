#include "hv/rational.hpp"

#include <cctype>
#include <ostream>

#include "hv/errors.hpp"

namespace hv {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw ArithmeticError("rational with zero denominator");
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  std::string num;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    if (text[pos] == '-') num.push_back('-');
    ++pos;
  }
  const std::size_t digits_begin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) num.push_back(text[pos++]);
  if (pos == digits_begin) throw ParseError("expected digits in rational '" + std::string(text) + "'", pos);
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    const std::size_t den_begin = pos;
    den.clear();
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) den.push_back(text[pos++]);
    if (pos == den_begin) throw ParseError("expected denominator in rational '" + std::string(text) + "'", pos);
  }
  if (pos != text.size()) throw ParseError("trailing characters in rational '" + std::string(text) + "'", pos);
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw ArithmeticError("rational with zero denominator");
  return Rational(mpq_class(n, d));
}

long Rational::to_long() const {
  if (!is_integer() || !q_.get_num().fits_slong_p()) throw ArithmeticError(str() + " is not a machine integer");
  return q_.get_num().get_si();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace hv
