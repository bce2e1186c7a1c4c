#include "almukai/modgroup.hpp"

#include <algorithm>
#include <set>

#include "almukai/errors.hpp"

namespace almukai {

namespace mp = boost::multiprecision;

namespace {

void require_level(const Integer& d, const Integer& s) {
  if (d < 1) throw InvalidLevel("level d must be positive, got " + to_string(d));
  if (!is_exact_divisor(s, d)) {
    throw InvalidLevel(to_string(s) + " is not an exact divisor of " + to_string(d));
  }
}

// Flip the whole tuple so the first nonzero of (a, c, b, e) is positive.
void normalize_sign(Integer& a, Integer& b, Integer& c, Integer& e) {
  for (const Integer* x : {&a, &c, &b, &e}) {
    if (*x == 0) continue;
    if (*x < 0) {
      a = -a;
      b = -b;
      c = -c;
      e = -e;
    }
    return;
  }
}

Integer exact_div(const Integer& num, const Integer& den, const char* what) {
  if (num % den != 0) {
    throw InternalClosureViolation(std::string("al_mul: ") + what + " not divisible");
  }
  return num / den;
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

ALElement ALElement::make(Integer d, Integer s, Integer a, Integer b, Integer c, Integer e) {
  require_level(d, s);
  if (a * e * s - b * c * (d / s) != 1) {
    throw InvalidDeterminant("a*e*s - b*c*(d/s) != 1 for (d=" + almukai::to_string(d) +
                             ", s=" + almukai::to_string(s) + ", " + almukai::to_string(a) + ", " +
                             almukai::to_string(b) + ", " + almukai::to_string(c) + ", " +
                             almukai::to_string(e) + ")");
  }
  normalize_sign(a, b, c, e);
  return ALElement(std::move(d), std::move(s), std::move(a), std::move(b), std::move(c),
                   std::move(e));
}

std::array<std::array<Integer, 2>, 2> ALElement::scaled_matrix() const {
  return {{{a_ * s_, b_}, {c_ * d_, e_ * s_}}};
}

std::string ALElement::to_string() const {
  using almukai::to_string;
  return "W(d=" + to_string(d_) + ", s=" + to_string(s_) + "; " + to_string(a_) + ", " +
         to_string(b_) + ", " + to_string(c_) + ", " + to_string(e_) + ")";
}

CosetLabel coset_label(const ALElement& w) { return {w.d(), w.s()}; }

ALElement al_identity(const Integer& d) { return ALElement::make(d, 1, 1, 0, 0, 1); }

ALElement al_from_tuple(const Integer& d, const Integer& s, const Integer& a, const Integer& b,
                        const Integer& c, const Integer& e) {
  return ALElement::make(d, s, a, b, c, e);
}

ALElement al_mul(const ALElement& w1, const ALElement& w2) {
  if (w1.d() != w2.d()) {
    throw LevelMismatch("al_mul: levels " + to_string(w1.d()) + " and " + to_string(w2.d()));
  }
  const Integer& d = w1.d();
  const auto x = w1.scaled_matrix();
  const auto y = w2.scaled_matrix();
  // (1/sqrt(s1 s2)) X Y with sqrt(s1 s2) = g sqrt(t)
  const Integer g = mp::gcd(w1.s(), w2.s());
  const Integer t = star(w1.s(), w2.s());
  const Integer p11 = exact_div(x[0][0] * y[0][0] + x[0][1] * y[1][0], g, "(1,1) by gcd");
  const Integer p12 = exact_div(x[0][0] * y[0][1] + x[0][1] * y[1][1], g, "(1,2) by gcd");
  const Integer p21 = exact_div(x[1][0] * y[0][0] + x[1][1] * y[1][0], g, "(2,1) by gcd");
  const Integer p22 = exact_div(x[1][0] * y[0][1] + x[1][1] * y[1][1], g, "(2,2) by gcd");
  try {
    return ALElement::make(d, t, exact_div(p11, t, "(1,1) by level"), p12,
                           exact_div(p21, d, "(2,1) by d"), exact_div(p22, t, "(2,2) by level"));
  } catch (const InvalidDeterminant& ex) {
    throw InternalClosureViolation(std::string("al_mul: ") + ex.what());
  }
}

ALElement al_inverse(const ALElement& w) {
  return ALElement::make(w.d(), w.s(), w.e(), -w.b(), -w.c(), w.a());
}

bool is_fricke_level(const Integer& d, const Integer& s) { return s == 1 || s == d; }

bool is_fricke(const ALElement& w) { return is_fricke_level(w.d(), w.s()); }

ALElement base_element(const Integer& d, const Integer& s) {
  require_level(d, s);
  if (s == 1) return al_identity(d);
  if (s == d) return ALElement::make(d, s, 0, -1, 1, 0);
  // a = c = 1: e*s - b*(d/s) = 1
  const Integer co = d / s;
  const Integer e = mod_inverse(s, co);
  const Integer b = (e * s - 1) / co;
  return ALElement::make(d, s, 1, b, 1, e);
}

ALElement random_gamma0(const Integer& d, Rng& rng, int bound) {
  if (d < 1) throw InvalidLevel("level d must be positive, got " + to_string(d));
  const int shift_bound = std::max(bound, 0);
  const int a_bound = std::max(bound, 1);
  for (;;) {
    const int c_mult = uniform(rng, -shift_bound, shift_bound);
    const Integer lower = Integer(c_mult) * d;
    const Integer a = uniform(rng, -a_bound, a_bound);
    if (mp::gcd(a, lower) != 1) continue;
    // a*x + lower*y = 1  ->  [[a, -y], [lower, x]] has determinant 1
    const auto eg = extended_gcd(a, lower);
    Integer m11 = a, m12 = -eg.y, m21 = lower, m22 = eg.x;
    const int left = uniform(rng, -shift_bound, shift_bound);
    const int right = uniform(rng, -shift_bound, shift_bound);
    // T^left * M
    m11 += left * m21;
    m12 += left * m22;
    // M * T^right
    m12 += right * m11;
    m22 += right * m21;
    return ALElement::make(d, 1, m11, m12, Integer(c_mult), m22);
  }
}

ALElement random_al(const Integer& d, const Integer& s, Rng& rng, int bound) {
  require_level(d, s);
  const ALElement left = random_gamma0(d, rng, bound);
  const ALElement right = random_gamma0(d, rng, bound);
  return al_mul(al_mul(left, base_element(d, s)), right);
}

std::size_t fricke_coset_count(const Integer& d) {
  std::set<Integer> seen;
  std::size_t orbits = 0;
  for (const auto& div : exact_divisors(d)) {
    if (seen.contains(div.s())) continue;
    ++orbits;
    seen.insert(div.s());
    seen.insert(star(div.s(), d));
  }
  return orbits;
}

}  // namespace almukai
