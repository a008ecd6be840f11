// Copyright 2026 The freetree Authors
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

#pragma once

#include <gmpxx.h>

#include <cstdio>
#include <stdexcept>
#include <string>

namespace freetree {

// All arithmetic in the library is exact. Rat is always kept in canonical
// reduced form (positive denominator, gcd(|num|, den) = 1); gmpxx maintains
// this for arithmetic results, and parse_rational canonicalizes on input.
using Rat = mpq_class;

// Accepts "p/q", plain integers, and decimal strings ("1.25", "-0.5").
inline Rat parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::string t = s;
  if (t.front() == '+') t.erase(t.begin());
  auto bad = [&]() -> std::invalid_argument {
    return std::invalid_argument("cannot parse rational: '" + s + "'");
  };
  auto digits_only = [](const std::string& d) {
    if (d.empty()) return false;
    for (char c : d)
      if (c < '0' || c > '9') return false;
    return true;
  };
  bool neg = false;
  if (!t.empty() && t.front() == '-') {
    neg = true;
    t.erase(t.begin());
  }
  Rat r;
  if (auto slash = t.find('/'); slash != std::string::npos) {
    std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    if (!digits_only(num) || !digits_only(den)) throw bad();
    mpz_class n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    r = Rat(n, d);
    r.canonicalize();
  } else if (auto dot = t.find('.'); dot != std::string::npos) {
    std::string ip = t.substr(0, dot), fp = t.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (!digits_only(ip) || (!fp.empty() && !digits_only(fp))) throw bad();
    mpz_class n(ip + fp);
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, fp.size());
    r = Rat(n, d);
    r.canonicalize();
  } else {
    if (!digits_only(t)) throw bad();
    r = Rat(mpz_class(t));
  }
  if (neg) r = -r;
  return r;
}

// "p/q", or just "p" for integers.
inline std::string to_fraction(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// 12-significant-digit decimal approximation for human readers.
inline std::string to_decimal(const Rat& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", r.get_d());
  return buf;
}

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

}  // namespace freetree
