// Copyright 2026 The grapheq Authors
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

#include "grapheq/rational.h"

#include <cctype>
#include <cstdlib>
#include <limits>

#include "grapheq/error.h"

namespace grapheq {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedRational: return "MalformedRational";
    case ErrorCode::kMalformedDocument: return "MalformedDocument";
    case ErrorCode::kTypeLength: return "TypeLength";
    case ErrorCode::kWeightSum: return "WeightSum";
    case ErrorCode::kInvalidGenerator: return "InvalidGenerator";
    case ErrorCode::kInvolvementMismatch: return "InvolvementMismatch";
    case ErrorCode::kInvalidGraph: return "InvalidGraph";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kUnknownGame: return "UnknownGame";
    case ErrorCode::kUnsupported: return "Unsupported";
    case ErrorCode::kConditioningOnImpossibleType:
      return "ConditioningOnImpossibleType";
    case ErrorCode::kEmptyEquilibriumSet: return "EmptyEquilibriumSet";
    case ErrorCode::kSizeLimit: return "SizeLimit";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void malformed(std::string_view text) {
  throw Error(ErrorCode::kMalformedRational,
              "cannot parse '" + std::string(text) + "' as a rational");
}

Rational parse_decimal(std::string_view text) {
  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    std::string_view exp_text = text.substr(e + 1);
    bool negative = false;
    if (!exp_text.empty() && (exp_text[0] == '+' || exp_text[0] == '-')) {
      negative = exp_text[0] == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) malformed(text);
    exponent = std::strtol(std::string(exp_text).c_str(), nullptr, 10);
    if (negative) exponent = -exponent;
  }
  std::string digits;
  long scale = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view whole = mantissa.substr(0, dot);
    std::string_view frac = mantissa.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)) || (whole.empty() && frac.empty())) {
      malformed(text);
    }
    digits = std::string(whole) + std::string(frac);
    scale = static_cast<long>(frac.size());
  } else {
    if (!all_digits(mantissa)) malformed(text);
    digits = std::string(mantissa);
  }
  exponent -= scale;
  Integer numerator(digits, 10);
  Integer ten_power;
  mpz_ui_pow_ui(ten_power.get_mpz_t(), 10,
                static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational result = exponent < 0 ? Rational(numerator, ten_power)
                                 : Rational(numerator * ten_power);
  result.canonicalize();
  return result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text.empty()) malformed(text);
  bool negative = false;
  std::string_view body = text;
  if (body[0] == '-' || body[0] == '+') {
    negative = body[0] == '-';
    body.remove_prefix(1);
  }
  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) malformed(text);
    Integer d(std::string(den), 10);
    if (d == 0) malformed(text);
    result = Rational(Integer(std::string(num), 10), d);
    result.canonicalize();
  } else if (all_digits(body)) {
    result = Rational(Integer(std::string(body), 10));
  } else {
    result = parse_decimal(body);
  }
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_fixed(const Rational& value, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = abs(value) * scale;
  // floor(x + 1/2) for the magnitude, sign reapplied afterwards.
  Rational shifted = scaled + Rational(1, 2);
  Integer rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  Integer whole = rounded / scale;
  Integer frac = rounded % scale;
  std::string frac_text = frac.get_str();
  if (static_cast<int>(frac_text.size()) < digits) {
    frac_text.insert(0, static_cast<std::size_t>(digits) - frac_text.size(), '0');
  }
  std::string out = (value < 0 && rounded != 0) ? "-" : "";
  out += whole.get_str();
  if (digits > 0) out += "." + frac_text;
  return out;
}

double to_double(const Rational& value) { return value.get_d(); }

Rational pow(const Rational& base, unsigned exponent) {
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational result(num, den);
  result.canonicalize();
  return result;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

std::int64_t to_int64(const Integer& value) {
  if (!value.fits_slong_p()) {
    throw Error(ErrorCode::kSizeLimit,
                "integer " + value.get_str() + " does not fit in 64 bits");
  }
  return value.get_si();
}

}  // namespace grapheq
