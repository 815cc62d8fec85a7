#include "mixcut/rational.hpp"

#include <cctype>

#include "mixcut/errors.hpp"

namespace mixcut {
namespace {

bool is_integer_text(const std::string& s) {
  size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start >= s.size()) return false;
  for (size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  const size_t slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' ||
      den[0] == '+') {
    throw ValidationError("not an exact rational: \"" + text + "\"");
  }
  Integer d(den);
  if (d == 0) throw ValidationError("zero denominator: \"" + text + "\"");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::vector<Rational> parse_rationals(const std::vector<std::string>& texts) {
  std::vector<Rational> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_rational(t));
  return out;
}

std::vector<std::string> to_strings(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

Rational floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rational(q);
}

std::string to_decimal(const Rational& r, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const bool negative = r < 0;
  Rational a = negative ? Rational(-r) : r;
  // half-up on the magnitude
  Rational scaled = a * scale + Rational(1, 2);
  Integer n = floor(scaled).get_num();
  Integer whole = n / scale;
  Integer frac = n % scale;
  std::string out = (negative && n != 0 ? "-" : "") + whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    while (static_cast<int>(f.size()) < digits) f = "0" + f;
    out += "." + f;
  }
  return out;
}

Rational ratio(long num, long den) {
  if (den == 0) throw ValidationError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace mixcut
