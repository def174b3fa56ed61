#include "bcds/rational.hpp"

#include <cctype>
#include <cmath>

#include "bcds/errors.hpp"

namespace bcds {

namespace mp = boost::multiprecision;

Rational harmonic(int x) {
  if (x < 1) throw InputError("harmonic number needs x >= 1, got " + std::to_string(x));
  Rational sum = 0;
  for (int i = 1; i <= x; ++i) sum += Rational(1, i);
  return sum;
}

namespace {

mp::cpp_int parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw InputError("malformed number '" + std::string(whole) + "'");
  mp::cpp_int value = 0;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw InputError("malformed number '" + std::string(whole) + "'");
    }
    value = value * 10 + (ch - '0');
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    mp::cpp_int num = parse_digits(body.substr(0, slash), text);
    mp::cpp_int den = parse_digits(body.substr(slash + 1), text);
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    value = Rational(num, den);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = body.substr(0, dot);
    std::string_view frac_part = body.substr(dot + 1);
    mp::cpp_int whole = int_part.empty() ? mp::cpp_int(0) : parse_digits(int_part, text);
    mp::cpp_int frac = frac_part.empty() ? mp::cpp_int(0) : parse_digits(frac_part, text);
    if (int_part.empty() && frac_part.empty()) throw InputError("malformed number '" + std::string(text) + "'");
    mp::cpp_int scale = mp::pow(mp::cpp_int(10), static_cast<unsigned>(frac_part.size()));
    value = Rational(whole * scale + frac, scale);
  } else {
    value = Rational(parse_digits(body, text));
  }
  return negative ? Rational(-value) : value;
}

std::string to_fraction_string(const Rational& r) {
  if (mp::denominator(r) == 1) return mp::numerator(r).str();
  return mp::numerator(r).str() + "/" + mp::denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

double round6(double x) { return std::round(x * 1e6) / 1e6; }

std::int64_t ceil_int(const Rational& r) {
  mp::cpp_int num = mp::numerator(r);
  mp::cpp_int den = mp::denominator(r);
  mp::cpp_int q = num / den;  // truncates toward zero
  if (num > 0 && q * den != num) ++q;
  return q.convert_to<std::int64_t>();
}

}  // namespace bcds
