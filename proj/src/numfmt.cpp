#include "lpz/numfmt.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string_view>

namespace lpz {

namespace {

/// Digits of |v| with the decimal point at `point` (digits[0..point) are the
/// integer part), from the shortest round-trip form.
struct Decimal {
  std::string digits;
  int point = 0;
  bool negative = false;
};

Decimal to_decimal(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific);
  std::string_view s(buf, res.ptr - buf);
  Decimal d;
  if (s.front() == '-') {
    d.negative = true;
    s.remove_prefix(1);
  }
  const auto e = s.find('e');
  const int exp = std::stoi(std::string(s.substr(e + 1)));
  for (char c : s.substr(0, e)) {
    if (c != '.') d.digits.push_back(c);
  }
  d.point = exp + 1;
  return d;
}

std::string fixed_digits(double v, int precision, bool& negative) {
  negative = false;
  if (v == 0 || !std::isfinite(v)) return std::string(1, '0') + (precision > 0 ? "." + std::string(precision, '0') : "");
  Decimal d = to_decimal(v);
  negative = d.negative;
  // Left-pad so the integer part has at least one digit.
  if (d.point <= 0) {
    d.digits.insert(0, static_cast<std::size_t>(1 - d.point), '0');
    d.point = 1;
  }
  const std::size_t keep = static_cast<std::size_t>(d.point + precision);
  if (d.digits.size() < keep) d.digits.append(keep - d.digits.size(), '0');
  const bool up = d.digits.size() > keep && d.digits[keep] >= '5';
  d.digits.resize(keep);
  if (up) {
    int i = static_cast<int>(keep) - 1;
    while (i >= 0 && d.digits[i] == '9') d.digits[i--] = '0';
    if (i < 0) {
      d.digits.insert(0, 1, '1');
      ++d.point;
    } else {
      ++d.digits[i];
    }
  }
  std::string out = d.digits.substr(0, d.point);
  if (precision > 0) out += "." + d.digits.substr(d.point);
  if (out.find_first_not_of("0.") == std::string::npos) negative = false;
  return out;
}

}  // namespace

std::string format_fixed(double v, int precision) {
  bool negative = false;
  std::string s = fixed_digits(v, precision, negative);
  return negative ? "-" + s : s;
}

double round_half_away(double v, int precision) {
  const std::string s = format_fixed(v, precision);
  double out = 0;
  std::from_chars(s.data(), s.data() + s.size(), out);
  return out;
}

std::string format_sig6(double v) {
  if (v == 0 || !std::isfinite(v)) return "0";
  const int magnitude = static_cast<int>(std::floor(std::log10(std::abs(v))));
  if (magnitude > 5) {
    const double unit = std::pow(10.0, magnitude - 5);
    v = round_half_away(v / unit, 0) * unit;
  }
  const int decimals = std::max(0, 5 - magnitude);
  std::string s = format_fixed(v, decimals);
  // Rounding may have carried into a new digit (9.999995 -> 10.00000).
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

}  // namespace lpz
