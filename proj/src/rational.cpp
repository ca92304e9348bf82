#include "tasep/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tasep {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("expected a rational p/q, got '" + std::string(text) + "'");
  }
  const mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(mpz_class(std::string(num[0] == '+' ? num.substr(1) : num), 10), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal(const Rational& q, int digits) {
  if (digits < 0) throw std::invalid_argument("negative precision");
  mpz_class scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // Round half away from zero at the requested precision.
  const mpz_class num = abs(q.get_num()) * scale * 2 + q.get_den();
  const mpz_class scaled = num / (q.get_den() * 2);
  std::string body = scaled.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return (sgn(q) < 0 && scaled != 0 ? "-" : "") + body;
}

void RateParams::validate() const {
  auto check = [](const Rational& r, const char* name) {
    if (r <= 0 || r > 1) {
      throw std::invalid_argument(std::string(name) + " must lie in (0, 1], got " + to_string(r));
    }
  };
  check(alpha, "alpha");
  check(beta, "beta");
}

const Rational& RateParams::value(Rate r) const {
  static const Rational one{1};
  switch (r) {
    case Rate::Alpha: return alpha;
    case Rate::Beta: return beta;
    case Rate::One: return one;
  }
  return one;
}

}  // namespace tasep
