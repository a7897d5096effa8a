#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "chordrig/error.hpp"

namespace chordrig {

/// Exact rational scalar. GMP keeps results of arithmetic in lowest terms with
/// a positive denominator; values built from raw numerator/denominator pairs
/// must go through `frac` so the same holds.
using Rational = mpq_class;
using Vector = std::vector<Rational>;

inline Rational frac(long num, long den) {
  if (den == 0) throw Error(Errc::invalid_parameters, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p", "-p", "p/q" or "-p/q" (decimal digits only). Non-reduced input
/// such as "2/4" is accepted and reduced.
inline Rational parse_rational(std::string_view text) {
  auto bad = [&](const char* why) {
    return Error(Errc::parse_error, "invalid rational '" + std::string(text) + "': " + why);
  };
  if (text.empty()) throw bad("empty");
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view body = text;
  if (body.front() == '-' || body.front() == '+') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!digits(num)) throw bad("numerator is not an integer");
  if (slash != std::string_view::npos && !digits(den)) throw bad("denominator is not a positive integer");

  mpz_class n(std::string(num), 10);
  if (text.front() == '-') n = -n;
  mpz_class d = 1;
  if (slash != std::string_view::npos) {
    d = mpz_class(std::string(den), 10);
    if (d == 0) throw bad("zero denominator");
  }
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// Lowest-terms text: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(10); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(Errc::dimension_mismatch, "dot product of unequal lengths");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace chordrig
