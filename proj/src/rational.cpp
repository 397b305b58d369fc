// Copyright 2026 the pathhom authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rational.hpp"

#include <cctype>
#include <cstddef>

#include "error.hpp"

namespace pathhom {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// mpz_class(string) defaults to base 0, which reads a leading zero as octal;
// force base 10 (all_digits has already vetted the characters).
mpz_class decimal(const std::string& s) { return mpz_class(s, 10); }

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  if (s.empty()) throw Error(Code::Parse, "empty rational literal '" + text + "'");

  Rational value;
  std::size_t slash = s.find('/');
  std::size_t dot = s.find('.');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw Error(Code::Parse, "bad rational literal '" + text + "'");
    mpz_class d = decimal(den);
    if (d == 0) throw Error(Code::Parse, "zero denominator in '" + text + "'");
    value = Rational(decimal(num), d);
  } else if (dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (frac.empty() || !all_digits(whole) || !all_digits(frac))
      throw Error(Code::Parse, "bad decimal literal '" + text + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    value = Rational(decimal(whole) * scale + decimal(frac), scale);
  } else {
    if (!all_digits(s)) throw Error(Code::Parse, "bad rational literal '" + text + "'");
    value = Rational(decimal(s));
  }
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

std::string render_rational(const Rational& q) {
  mpz_class den = q.get_den();
  // Strip the factors of 2 and 5; a finite decimal exists iff nothing is left.
  unsigned long twos = 0, fives = 0;
  mpz_class rest = den;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), 2)) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), 2);
    ++twos;
  }
  while (mpz_divisible_ui_p(rest.get_mpz_t(), 5)) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), 5);
    ++fives;
  }
  if (rest != 1) return render_fraction(q);

  unsigned long k = twos > fives ? twos : fives;
  if (k == 0) return q.get_num().get_str();

  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, k);
  mpz_class digits = q.get_num() * (pow10 / den);
  bool negative = digits < 0;
  if (negative) digits = -digits;
  std::string ds = digits.get_str();
  if (ds.size() <= k) ds.insert(0, k + 1 - ds.size(), '0');
  ds.insert(ds.size() - k, ".");
  return (negative ? "-" : "") + ds;
}

std::string render_fraction(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace pathhom
