#include "entropic/rational.hpp"

#include <boost/integer/common_factor.hpp>

#include <cctype>
#include <limits>

#include "entropic/errors.hpp"

namespace entropic {

Rat make_rat(long long num, long long den) {
  if (den == 0) throw usage_error("rational with zero denominator");
  return Rat(BigInt(num), BigInt(den));
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_big(const std::string& s, const std::string& original) {
  std::string digits = s;
  bool negative = false;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
    negative = digits[0] == '-';
    digits.erase(digits.begin());
  }
  if (!all_digits(digits)) {
    throw usage_error("malformed rational literal: '" + original + "'");
  }
  BigInt value(digits);
  return negative ? -value : value;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  std::string s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw usage_error("empty rational literal");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    BigInt num = parse_big(s.substr(0, slash), text);
    BigInt den = parse_big(s.substr(slash + 1), text);
    if (den == 0) throw usage_error("rational with zero denominator: '" + text + "'");
    return Rat(num, den);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string head = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (!all_digits(frac)) {
      throw usage_error("malformed rational literal: '" + text + "'");
    }
    bool negative = !head.empty() && head[0] == '-';
    BigInt integral = head.empty() || head == "-" || head == "+" ? BigInt(0) : parse_big(head, text);
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt num = boost::multiprecision::abs(integral) * scale + BigInt(frac.empty() ? "0" : frac);
    if (negative) num = -num;
    return Rat(num, scale);
  }
  return Rat(parse_big(s, text));
}

std::string rational_to_string(const Rat& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += "/" + denominator(value).str();
  }
  return out;
}

bool is_integer(const Rat& value) { return denominator(value) == 1; }

long long to_int64(const Rat& value) {
  if (!is_integer(value)) {
    throw usage_error("expected an integer, got " + rational_to_string(value));
  }
  BigInt num = numerator(value);
  if (num > std::numeric_limits<long long>::max() || num < std::numeric_limits<long long>::min()) {
    throw usage_error("integer out of range: " + num.str());
  }
  return num.convert_to<long long>();
}

double to_double(const Rat& value) { return value.convert_to<double>(); }

BigInt denominator_lcm(const std::vector<Rat>& values) {
  BigInt l = 1;
  for (const Rat& v : values) {
    l = boost::integer::lcm(l, BigInt(denominator(v)));
  }
  return l;
}

}  // namespace entropic
