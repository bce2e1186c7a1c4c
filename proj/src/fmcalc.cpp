#include "almukai/fmcalc.hpp"

#include "almukai/errors.hpp"

namespace almukai {

namespace {

void require_exact(const Integer& d, const Integer& r) {
  if (!is_exact_divisor(r, d)) {
    throw InvalidLevel(to_string(r) + " is not an exact divisor of " + to_string(d));
  }
}

// The coset class {t, d/t} of a transform between partners a and b is the
// class of star(a, b).
bool coset_consistent(const PartnerLabel& a, const PartnerLabel& b, const ALElement& image) {
  const Integer expected = star(a.r(), b.r());
  return image.s() == expected || image.s() == star(expected, a.d());
}

InducedTransform with_rank_data(PartnerLabel source, PartnerLabel target, ALElement image) {
  RankData data = rank_data(image);
  return {std::move(source), std::move(target), std::move(image), std::move(data.r),
          std::move(data.n_Y), std::move(data.n_X)};
}

}  // namespace

LatticeVector MukaiVector::to_lattice() const {
  return LatticeVector(d, {Rational(r), Rational(n), Rational(s)});
}

PartnerLabel PartnerLabel::of(const Integer& d, const Integer& r) {
  require_exact(d, r);
  const Integer other = d / r;
  return PartnerLabel(d, r <= other ? r : other);
}

std::string PartnerLabel::moduli() const {
  return "M_L(" + to_string(r_) + "+L+" + to_string(s()) + ")";
}

PartnerCensus partner_census(const Integer& d) {
  PartnerCensus census{d, {}, 0};
  for (const auto& div : exact_divisors(d)) {
    if (div.s() <= div.complement()) census.labels.push_back(PartnerLabel::of(d, div.s()));
  }
  census.fm_number = census.labels.size();
  return census;
}

MukaiVector isotropic_vector(const Integer& d, const Integer& r) {
  require_exact(d, r);
  return {d, r, 1, d / r};
}

Integer derive_n_Y(const Integer& d, const Integer& r) {
  require_exact(d, r);
  // s n = -1 (mod r); gcd(s, r) = 1 because r || d
  const Integer s = d / r;
  return mod(-mod_inverse(s, r), r);
}

InducedTransform induced_transform(const Integer& d, const Integer& r) {
  const Integer n = derive_n_Y(d, r);
  const Integer numerator = r + d * n;
  if (numerator % (r * r) != 0) {
    throw InternalClosureViolation("(r + d n)/r^2 not integral for d=" + to_string(d) +
                                   ", r=" + to_string(r));
  }
  const Integer s = d / r;
  ALElement image = ALElement::make(d, s, 1, -(numerator / (r * r)), 1, -n);
  InducedTransform t = with_rank_data(PartnerLabel::of(d, r), PartnerLabel::self(d), image);
  // The universal family has Mukai vector (r, 1, s), so n_X = 1.
  if (t.r != r || t.n_Y != n || t.n_X != 1) {
    throw InternalClosureViolation("induced_transform: rank data mismatch for d=" + to_string(d) +
                                   ", r=" + to_string(r));
  }
  return t;
}

InducedTransform translation_transform(const PartnerLabel& at, const Integer& m) {
  return with_rank_data(at, at, ALElement::make(at.d(), 1, 1, m, 0, 1));
}

InducedTransform autoequivalence(const PartnerLabel& at, const ALElement& w) {
  if (w.d() != at.d()) throw LevelMismatch("autoequivalence: level mismatch");
  if (!is_fricke(w)) {
    throw InvalidArgument("autoequivalence: " + w.to_string() + " is not in the Fricke group");
  }
  return with_rank_data(at, at, w);
}

RankData rank_data(const ALElement& image) {
  return {image.c() * image.c() * image.co_level(), -image.e() * image.c(),
          image.a() * image.c()};
}

MukaiVector image_of_point(const InducedTransform& t) {
  const ALElement& w = t.image;
  return {w.d(), t.r, t.n_X, w.a() * w.a() * w.s()};
}

MukaiVector preimage_of_point(const InducedTransform& t) {
  const ALElement& w = t.image;
  return {w.d(), t.r, t.n_Y, w.e() * w.e() * w.s()};
}

bool same_partner(const InducedTransform& t) { return is_fricke(t.image); }

InducedTransform compose(const InducedTransform& t1, const InducedTransform& t2) {
  if (t1.image.d() != t2.image.d()) throw LevelMismatch("compose: transforms of different level");
  if (t1.source != t2.target) {
    throw EndpointMismatch("compose: " + t1.source.moduli() + " != " + t2.target.moduli());
  }
  InducedTransform out = with_rank_data(t2.source, t1.target, al_mul(t1.image, t2.image));
  if (!coset_consistent(out.source, out.target, out.image)) {
    throw InternalClosureViolation("compose: image " + out.image.to_string() +
                                   " inconsistent with endpoints " + out.source.moduli() +
                                   " -> " + out.target.moduli());
  }
  return out;
}

InducedTransform inverse(const InducedTransform& t) {
  return with_rank_data(t.target, t.source, al_inverse(t.image));
}

}  // namespace almukai
