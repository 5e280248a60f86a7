#include "zonospline/rational.hpp"

#include <cctype>

namespace zonospline {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  // trim
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty number");

  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    s.erase(s.begin());
  }

  auto bad = [&text]() -> Rational {
    throw std::invalid_argument("cannot parse exact number: '" + text + "'");
  };

  Rational value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return bad();
    BigInt d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    value = Rational(BigInt(num), d);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string intpart = s.substr(0, dot), frac = s.substr(dot + 1);
    if (intpart.empty()) intpart = "0";
    if (frac.empty()) frac = "0";
    if (!all_digits(intpart) || !all_digits(frac)) return bad();
    BigInt den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    value = Rational(BigInt(intpart) * den + BigInt(frac), den);
  } else {
    if (!all_digits(s)) return bad();
    value = Rational(BigInt(s));
  }
  return neg ? -value : value;
}

std::string rational_to_string(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

}  // namespace zonospline
