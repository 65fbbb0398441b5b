#include "cdv/rational.hpp"

#include <cctype>
#include <cmath>

#include "cdv/errors.hpp"

namespace cdv {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw PreconditionError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw PreconditionError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  auto digits = [&](std::size_t from) {
    std::size_t k = from;
    while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
    return k;
  };
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  const std::size_t num_end = digits(pos);
  if (num_end == pos) throw ParseError("expected digits in rational '" + std::string(text) + "'", pos);
  std::string num(text.substr(0, num_end));
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  std::string den = "1";
  pos = num_end;
  if (pos < text.size()) {
    if (text[pos] != '/') throw ParseError("unexpected character in rational", pos);
    const std::size_t den_end = digits(pos + 1);
    if (den_end == pos + 1) throw ParseError("expected denominator digits", pos + 1);
    if (den_end != text.size()) throw ParseError("unexpected character in rational", den_end);
    den = std::string(text.substr(pos + 1, den_end - pos - 1));
  }
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw ParseError("zero denominator in rational '" + std::string(text) + "'", pos + 1);
  return Rational(mpq_class(n, d));
}

Rational Rational::approximate(double x, std::int64_t max_denominator) {
  if (!std::isfinite(x)) throw PreconditionError("cannot approximate a non-finite value");
  if (max_denominator < 1) throw PreconditionError("denominator cap must be positive");
  // Convergents h/k of the continued fraction of x.
  mpz_class h_prev = 1, h = static_cast<long>(std::floor(x));
  mpz_class k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  for (int step = 0; step < 64 && frac > 1e-15; ++step) {
    const double inv = 1.0 / frac;
    const double a_d = std::floor(inv);
    if (a_d > 1e12) break;
    const mpz_class a = static_cast<long>(a_d);
    const mpz_class k_next = a * k + k_prev;
    if (k_next > max_denominator) break;
    const mpz_class h_next = a * h + h_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    frac = inv - a_d;
  }
  return Rational(mpq_class(h, k));
}

}  // namespace cdv
