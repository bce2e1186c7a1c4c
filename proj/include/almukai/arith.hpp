#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace almukai {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct PrimePower {
  Integer prime;
  unsigned multiplicity = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// n = prod prime^multiplicity, primes strictly increasing.
struct Factorization {
  Integer n;
  std::vector<PrimePower> factors;

  // omega(n), the number of distinct primes
  std::size_t distinct_primes() const { return factors.size(); }
};

// A pair (d, s) with s | d and gcd(s, d/s) = 1.
class ExactDivisor {
 public:
  static ExactDivisor make(const Integer& d, const Integer& s);

  const Integer& d() const { return d_; }
  const Integer& s() const { return s_; }
  Integer complement() const { return d_ / s_; }

  friend bool operator==(const ExactDivisor&, const ExactDivisor&) = default;

 private:
  ExactDivisor(Integer d, Integer s) : d_(std::move(d)), s_(std::move(s)) {}
  Integer d_;
  Integer s_;
};

// Trial division. Throws InvalidArgument for n < 1.
Factorization factorize(const Integer& n);

// s || d
bool is_exact_divisor(const Integer& s, const Integer& d);

// Sorted by s; 2^omega(d) entries.
std::vector<ExactDivisor> exact_divisors(const Integer& d);

// s*t / gcd(s,t)^2, the product of the Atkin-Lehner coset labels.
Integer star(const Integer& s, const Integer& t);

// Least nonnegative residue of a mod m (m > 0).
Integer mod(const Integer& a, const Integer& m);

// Inverse of a modulo m in [0, m). m = 1 yields 0. Throws NotInvertible.
Integer mod_inverse(const Integer& a, const Integer& m);

struct ExtendedGcd {
  Integer g;  // nonnegative
  Integer x;
  Integer y;  // a*x + b*y = g
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

// Exact square root of a nonnegative perfect square.
std::optional<Integer> exact_sqrt(const Integer& n);

Integer pow2(std::size_t k);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

// Accepts "p" or "p/q" with optional leading sign. Throws ParseError.
Integer parse_integer(const std::string& text);
Rational parse_rational(const std::string& text);

bool is_integral(const Rational& q);

}  // namespace almukai
