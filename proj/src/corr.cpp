#include "almukai/corr.hpp"

#include "almukai/errors.hpp"

namespace almukai {

namespace mp = boost::multiprecision;

IsometryN represent(const ALElement& w) {
  const Integer& d = w.d();
  const Integer& s = w.s();
  const Integer co = w.co_level();
  const Integer &a = w.a(), &b = w.b(), &c = w.c(), &e = w.e();

  // Products of the real entries alpha = a sqrt(s), beta = b / sqrt(s),
  // gamma = c (d/s) sqrt(s), delta = e sqrt(s).
  const Rational aa = Rational(a * a * s);
  const Rational bb = Rational(b * b, s);
  const Rational cc = Rational(c * c * co * co * s);
  const Rational ee = Rational(e * e * s);
  const Rational ab = Rational(a * b);
  const Rational ac = Rational(a * c * co * s);
  const Rational ae = Rational(a * e * s);
  const Rational bc = Rational(b * c * co);
  const Rational be = Rational(b * e);
  const Rational ce = Rational(c * e * co * s);
  const Rational rd = Rational(d);

  Matrix3 m{};
  m[0] = {ee, 2 * ce, cc / rd};
  m[1] = {be, ae + bc, ac / rd};
  m[2] = {rd * bb, 2 * rd * ab, aa};

  IsometryN g(d, m);
  if (!g.integral()) {
    throw IntegralityViolation("represent: non-integral image " + to_string(g) + " of " +
                               w.to_string());
  }
  return g;
}

ALElement descend(const IsometryN& g) {
  const Integer& d = g.d();
  if (!g.integral()) throw NotInImage("descend: not integral: " + to_string(g));
  if (!is_isometry(g)) throw NotInImage("descend: not an isometry: " + to_string(g));
  const Rational det = g.det();
  if (det != 1 && det != -1) throw NotInImage("descend: determinant not +-1: " + to_string(g));
  // R lands in SO+, the determinant +1 representative of {g, -g}.
  const IsometryN target = det == 1 ? g : -g;
  auto entry = [&](int i, int j) { return mp::numerator(target(i, j)); };

  for (const auto& div : exact_divisors(d)) {
    const Integer& s = div.s();
    const Integer co = div.complement();
    auto root = [](const Integer& value, const Integer& by) -> std::optional<Integer> {
      if (value % by != 0) return std::nullopt;
      return exact_sqrt(value / by);
    };
    const auto a = root(entry(2, 2), s);
    const auto e = root(entry(0, 0), s);
    const auto c = root(entry(0, 2), co);
    const auto b = root(entry(2, 0), co);
    if (!a || !b || !c || !e) continue;

    for (int signs = 0; signs < 16; ++signs) {
      const Integer sa = (signs & 1) ? Integer(-*a) : *a;
      const Integer sb = (signs & 2) ? Integer(-*b) : *b;
      const Integer sc = (signs & 4) ? Integer(-*c) : *c;
      const Integer se = (signs & 8) ? Integer(-*e) : *e;
      if (sa * se * s - sb * sc * co != 1) continue;
      const ALElement w = ALElement::make(d, s, sa, sb, sc, se);
      if (represent(w) == target) return w;
    }
  }
  throw NotInImage("descend: no Atkin-Lehner preimage for " + to_string(g));
}

CosetLabel classify_coset(const IsometryN& g) { return coset_label(descend(g)); }

void audit_sample(const ALElement& w, const IsometryN& image,
                  std::vector<CorrespondenceFailure>& out) {
  const std::string input = w.to_string();
  auto fail = [&](const std::string& check) { out.push_back({input, check}); };

  if (image.d() != w.d()) {
    fail("level");
    return;
  }
  const bool integral = image.integral();
  const bool isometry = is_isometry(image);
  if (!integral) fail("integral");
  if (!isometry) {
    fail("isometry");
    return;
  }
  if (image.det() != 1) fail("determinant");
  if (!is_orientation_preserving(image)) fail("orientation");
  if (integral) {
    try {
      const DiscriminantUnit u = discriminant_unit(image);
      const bool plus_minus_one = u.is_plus_one() || u.is_minus_one();
      if (plus_minus_one != is_fricke(w)) fail("fricke_discriminant");
    } catch (const Error&) {
      fail("discriminant");
    }
  }
  try {
    if (descend(image) != w) fail("round_trip");
  } catch (const NotInImage&) {
    fail("round_trip");
  }
}

CorrespondenceReport verify_dolgachev(const Integer& d, std::size_t samples_per_coset, Rng& rng) {
  CorrespondenceReport report{d, samples_per_coset, 0, {}};
  for (const auto& div : exact_divisors(d)) {
    for (std::size_t i = 0; i < samples_per_coset; ++i) {
      const ALElement w = random_al(d, div.s(), rng);
      ++report.checked;
      try {
        audit_sample(w, represent(w), report.failures);
      } catch (const IntegralityViolation&) {
        report.failures.push_back({w.to_string(), "represent"});
      }
    }
  }
  return report;
}

CorrespondenceReport merge(CorrespondenceReport lhs, const CorrespondenceReport& rhs) {
  if (lhs.d != rhs.d) throw LevelMismatch("merge: reports for different levels");
  lhs.samples_per_coset += rhs.samples_per_coset;
  lhs.checked += rhs.checked;
  lhs.failures.insert(lhs.failures.end(), rhs.failures.begin(), rhs.failures.end());
  return lhs;
}

}  // namespace almukai
