#include "ranklab/rational.hpp"

#include <cctype>
#include <sstream>

namespace ranklab {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  std::string s = text;
  // trim
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) return std::nullopt;

  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = (s[0] == '-');
    s.erase(s.begin());
  }
  if (s.empty()) return std::nullopt;

  Rational value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    mpz_class d(den, 10);
    if (d == 0) return std::nullopt;
    value = Rational(mpz_class(num, 10), d);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if (!whole.empty() && !all_digits(whole)) return std::nullopt;
    if (!frac.empty() && !all_digits(frac)) return std::nullopt;
    mpz_class scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    mpz_class w = whole.empty() ? mpz_class(0) : mpz_class(whole, 10);
    mpz_class f = frac.empty() ? mpz_class(0) : mpz_class(frac, 10);
    value = Rational(w * scale + f, scale);
  } else {
    if (!all_digits(s)) return std::nullopt;
    value = Rational(mpz_class(s, 10));
  }
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

std::string fraction_string(const Rational& q) {
  return q.get_str();
}

double as_double(const Rational& q) {
  return q.get_d();
}

std::string decimal_string(const Rational& q, int digits) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << as_double(q);
  return out.str();
}

}  // namespace ranklab
