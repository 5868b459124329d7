/*
   Copyright 2026 The otcohom Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "otcohom/scalar.hpp"

#include "otcohom/errors.hpp"

#include <algorithm>
#include <cctype>

namespace otcohom {

namespace {

Rational parse_decimal(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) negative = text[pos++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_digit = false, seen_point = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) --scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw Error(ErrorKind::MalformedSpec, "not a number: '" + text + "'");
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    std::size_t used = 0;
    long exponent = 0;
    try {
      exponent = std::stol(text.substr(pos + 1), &used);
    } catch (const std::exception&) {
      throw Error(ErrorKind::MalformedSpec, "bad exponent in '" + text + "'");
    }
    pos += 1 + used;
    scale += exponent;
  }
  if (pos != text.size()) throw Error(ErrorKind::MalformedSpec, "trailing characters in '" + text + "'");
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  Rational value{Integer(digits)};
  Integer ten_power = mp::pow(Integer(10), static_cast<unsigned>(scale < 0 ? -scale : scale));
  value = scale < 0 ? value / Rational(ten_power) : value * Rational(ten_power);
  return negative ? -value : value;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  const std::string text = trim(raw);
  auto slash = text.find('/');
  if (slash == std::string::npos) return parse_decimal(text);
  Rational num = parse_decimal(text.substr(0, slash));
  Rational den = parse_decimal(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::MalformedSpec, "zero denominator in '" + text + "'");
  return num / den;
}

std::string to_string(const Rational& q) { return q.str(); }

}  // namespace otcohom
