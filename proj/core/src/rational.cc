// Copyright 2026 The xeq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "xeq/rational.h"

#include <charconv>
#include <cmath>
#include <cctype>
#include <limits>
#include <stdexcept>
#include <system_error>

namespace xeq {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string_view digits = s;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+'))
    digits.remove_prefix(1);
  if (!all_digits(digits))
    throw ParseError("not an integer: '" + std::string(s) + "'");
  mpz_class out(std::string(digits), 10);
  if (!s.empty() && s[0] == '-') out = -out;
  return out;
}

Rational parse_decimal(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    mpz_class exp_value = parse_integer(exp_text);
    if (!exp_value.fits_slong_p() || abs(exp_value) > 4096)
      throw ParseError("exponent out of range");
    exponent = exp_value.get_si();
    s = s.substr(0, e);
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty())
    throw ParseError("empty number");
  if ((!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part)))
    throw ParseError("malformed decimal");
  std::string digits = std::string(int_part) + std::string(frac_part);
  mpz_class numer(digits.empty() ? std::string("0") : digits, 10);
  exponent -= static_cast<long>(frac_part.size());
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  Rational out = exponent >= 0 ? Rational(numer * scale) : Rational(numer, scale);
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash));
    mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational out(num, den);
    out.canonicalize();
    return out;
  }
  return parse_decimal(text);
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite value");
  Rational out(value);
  out.canonicalize();
  return out;
}

Rational rational_from_decimal_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite value");
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw std::invalid_argument("to_chars failed");
  return parse_decimal(std::string_view(buf, end - buf));
}

Rational approximate_rational(double value, long max_den) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite value");
  // Continued-fraction convergents, with the final semiconvergent check.
  long double x = value;
  bool negative = x < 0;
  if (negative) x = -x;
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  long double frac = x;
  for (int iter = 0; iter < 64; ++iter) {
    long double a_ld = std::floor(frac);
    if (a_ld > 1e18L) break;
    mpz_class a(static_cast<unsigned long>(a_ld));
    mpz_class p2 = a * p1 + p0;
    mpz_class q2 = a * q1 + q0;
    if (q2 > max_den) {
      mpz_class k = (mpz_class(max_den) - q0) / q1;
      mpz_class ps = k * p1 + p0, qs = k * q1 + q0;
      Rational semi(ps, qs), conv(p1, q1);
      semi.canonicalize();
      conv.canonicalize();
      Rational target = rational_from_double(static_cast<double>(x));
      Rational best = abs(semi - target) < abs(conv - target) ? semi : conv;
      return negative ? Rational(-best) : best;
    }
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    long double rem = frac - a_ld;
    if (rem < 1e-18L) break;
    frac = 1.0L / rem;
  }
  Rational out(p1, q1);
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

RealMatrix to_real(const RationalMatrix& m) {
  RealMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).get_d();
  return out;
}

std::vector<double> to_real(const RationalVector& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_d());
  return out;
}

Rational total(const RationalMatrix& m) {
  Rational sum = 0;
  for (const auto& x : m.data()) sum += x;
  return sum;
}

Rational total(const RationalVector& v) {
  Rational sum = 0;
  for (const auto& x : v) sum += x;
  return sum;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ", ";
      os << to_string(m(r, c));
    }
    os << ']';
  }
  return os << ']';
}

std::ostream& operator<<(std::ostream& os, const RationalVector& v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << to_string(v[i]);
  }
  return os << ']';
}

}  // namespace xeq
