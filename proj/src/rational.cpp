#include "radonlink/rational.hpp"

#include <algorithm>
#include <cctype>

#include "radonlink/errors.hpp"

namespace radonlink {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

[[noreturn]] void bad(std::string_view text, const char* why) {
  throw ParseError("invalid rational '" + std::string(text) + "': " + why);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) bad(text, "empty");

  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text, "expected p/q with unsigned digit strings");
    Integer d(std::string(den), 10);
    if (d == 0) bad(text, "zero denominator");
    value = Rational(Integer(std::string(num), 10), d);
    value.canonicalize();
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad(text, "no digits");
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) {
      bad(text, "malformed decimal");
    }
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer num(whole.empty() ? std::string("0") : std::string(whole), 10);
    num *= scale;
    if (!frac.empty()) num += Integer(std::string(frac), 10);
    value = Rational(num, scale);
    value.canonicalize();
  } else {
    if (!all_digits(body)) bad(text, "expected an integer, p/q or a decimal");
    value = Rational(Integer(std::string(body), 10));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace radonlink
