#include "almukai/arith.hpp"

#include <algorithm>
#include <cctype>

#include "almukai/errors.hpp"

namespace almukai {

namespace mp = boost::multiprecision;

ExactDivisor ExactDivisor::make(const Integer& d, const Integer& s) {
  if (!is_exact_divisor(s, d)) {
    throw InvalidLevel(to_string(s) + " is not an exact divisor of " + to_string(d));
  }
  return ExactDivisor(d, s);
}

Factorization factorize(const Integer& n) {
  if (n < 1) throw InvalidArgument("factorize: n must be positive, got " + to_string(n));
  Factorization f{n, {}};
  Integer rest = n;
  for (Integer p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    unsigned k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    if (k > 0) f.factors.push_back({p, k});
  }
  if (rest > 1) f.factors.push_back({rest, 1});
  return f;
}

bool is_exact_divisor(const Integer& s, const Integer& d) {
  if (s < 1 || d < 1 || d % s != 0) return false;
  return mp::gcd(s, d / s) == 1;
}

std::vector<ExactDivisor> exact_divisors(const Integer& d) {
  if (d < 1) throw InvalidArgument("exact_divisors: d must be positive, got " + to_string(d));
  // Every exact divisor is a product of full prime powers p^k || d.
  std::vector<Integer> values{1};
  for (const auto& [p, k] : factorize(d).factors) {
    const Integer q = mp::pow(p, k);
    const std::size_t count = values.size();
    for (std::size_t i = 0; i < count; ++i) values.push_back(values[i] * q);
  }
  std::sort(values.begin(), values.end());
  std::vector<ExactDivisor> out;
  out.reserve(values.size());
  for (auto& s : values) out.push_back(ExactDivisor::make(d, s));
  return out;
}

Integer star(const Integer& s, const Integer& t) {
  if (s < 1 || t < 1) throw InvalidArgument("star: arguments must be positive");
  const Integer g = mp::gcd(s, t);
  return (s / g) * (t / g);
}

Integer mod(const Integer& a, const Integer& m) {
  if (m < 1) throw InvalidArgument("mod: modulus must be positive");
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_x = 1, x = 0;
  Integer old_y = 0, y = 1;
  while (r != 0) {
    const Integer q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_x -= q * x;
    std::swap(old_x, x);
    old_y -= q * y;
    std::swap(old_y, y);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  return {old_r, old_x, old_y};
}

Integer mod_inverse(const Integer& a, const Integer& m) {
  if (m < 1) throw InvalidArgument("mod_inverse: modulus must be positive");
  if (m == 1) return 0;
  const auto eg = extended_gcd(mod(a, m), m);
  if (eg.g != 1) {
    throw NotInvertible(to_string(a) + " is not invertible modulo " + to_string(m));
  }
  return mod(eg.x, m);
}

std::optional<Integer> exact_sqrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  Integer r = mp::sqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

Integer pow2(std::size_t k) { return Integer(1) << k; }

std::string to_string(const Integer& n) { return n.str(); }

std::string to_string(const Rational& q) {
  return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

namespace {

bool is_decimal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer decimal(const std::string& s) {
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Integer parse_integer(const std::string& text) {
  if (!is_decimal(text)) throw ParseError("not an integer: '" + text + "'");
  return decimal(text);
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_decimal(num) || !is_decimal(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("not a rational: '" + text + "'");
  }
  const Integer q = decimal(den);
  if (q == 0) throw ParseError("zero denominator: '" + text + "'");
  return Rational(decimal(num), q);
}

bool is_integral(const Rational& q) { return mp::denominator(q) == 1; }

}  // namespace almukai
