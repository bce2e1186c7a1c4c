#include <doctest.h>

#include "almukai/corr.hpp"
#include "almukai/errors.hpp"
#include "almukai/fmcalc.hpp"
#include "almukai/verify.hpp"
#include "oracles.hpp"

using namespace almukai;

namespace {

std::vector<Integer> label_values(const PartnerCensus& c) {
  std::vector<Integer> out;
  for (const auto& l : c.labels) out.push_back(l.r());
  return out;
}

}  // namespace

TEST_CASE("partner census") {
  const PartnerCensus one = partner_census(1);
  CHECK(label_values(one) == std::vector<Integer>{1});
  CHECK(one.fm_number == 1);
  CHECK(one.labels[0].moduli() == "M_L(1+L+1)");
  CHECK(label_values(partner_census(6)) == std::vector<Integer>{1, 2});
  CHECK(partner_census(6).fm_number == 2);
  CHECK(label_values(partner_census(30)) == std::vector<Integer>{1, 2, 3, 5});
  CHECK(partner_census(30).fm_number == 4);
}

TEST_CASE("census identity against brute force") {
  for (oracle::i64 d = 1; d <= 300; ++d) {
    const PartnerCensus c = partner_census(d);
    CHECK(c.fm_number == oracle::partner_classes(d));
    CHECK(c.fm_number == fricke_coset_count(d));
    for (const auto& l : c.labels) CHECK(l.r() <= l.s());
  }
}

TEST_CASE("partner labels") {
  CHECK(PartnerLabel::of(6, 3) == PartnerLabel::of(6, 2));
  CHECK(PartnerLabel::of(6, 6) == PartnerLabel::self(6));
  CHECK(PartnerLabel::of(6, 3).moduli() == "M_L(2+L+3)");
  CHECK_THROWS_AS(PartnerLabel::of(12, 2), InvalidLevel);
}

TEST_CASE("isotropic vectors") {
  CHECK(isotropic_vector(7, 1) == MukaiVector{7, 1, 1, 7});
  const MukaiVector v = isotropic_vector(6, 2);
  CHECK(v == MukaiVector{6, 2, 1, 3});
  CHECK(v.self_pairing() == 0);
  CHECK(isotropic_vector(7, 7) == MukaiVector{7, 7, 1, 1});
  CHECK(mukai_pairing(v.to_lattice(), v.to_lattice()) == 0);
  CHECK_THROWS_AS(isotropic_vector(12, 6), InvalidLevel);
}

TEST_CASE("derive_n_Y") {
  CHECK(derive_n_Y(13, 1) == 0);
  CHECK(derive_n_Y(6, 2) == 1);
  CHECK(derive_n_Y(6, 3) == 1);
  CHECK_THROWS_AS(derive_n_Y(12, 2), InvalidLevel);
  for (oracle::i64 d = 1; d <= 400; ++d) {
    for (oracle::i64 r : oracle::exact_divisors(d)) {
      const Integer n = derive_n_Y(d, r);
      CHECK(n == oracle::min_n(d, r));
      CHECK((r + d * n) % (r * r) == 0);
    }
  }
}

TEST_CASE("induced transforms") {
  const InducedTransform t61 = induced_transform(6, 1);
  CHECK(t61.image == al_from_tuple(6, 6, 1, -1, 1, 0));
  CHECK(t61.source == PartnerLabel::self(6));
  CHECK(same_partner(t61));

  const InducedTransform t62 = induced_transform(6, 2);
  CHECK(t62.image == al_from_tuple(6, 3, 1, -2, 1, -1));
  CHECK(classify_coset(represent(t62.image)).s == 3);
  CHECK(t62.source == PartnerLabel::of(6, 2));
  CHECK(t62.target == PartnerLabel::self(6));
  CHECK(t62.r == 2);
  CHECK(t62.n_Y == 1);
  CHECK(t62.n_X == 1);
  CHECK_FALSE(same_partner(t62));

  CHECK(induced_transform(2, 1).image == al_from_tuple(2, 2, 1, -1, 1, 0));
  CHECK_THROWS_AS(induced_transform(12, 2), InvalidLevel);
}

TEST_CASE("inverse transform carries the displayed inverse matrix") {
  // M(Phi^{-1}) has real entries n sqrt(s), -(r+dn)/(r^2 sqrt(s)), r sqrt(s), -sqrt(s)
  for (oracle::i64 d = 1; d <= 120; ++d) {
    for (oracle::i64 r : oracle::exact_divisors(d)) {
      const InducedTransform t = induced_transform(d, r);
      const InducedTransform inv = inverse(t);
      const oracle::i64 n = oracle::min_n(d, r);
      CHECK(inv.image == al_from_tuple(d, d / r, n, -(r + d * n) / (r * r), 1, -1));
      CHECK(inv.source == t.target);
      CHECK(inv.target == t.source);
      CHECK(inv.n_X == t.n_Y);
      CHECK(inv.n_Y == t.n_X);
      // the (2,1) entry of R(M(Phi^{-1})) is (r + dn)/r^2
      CHECK(represent(inv.image)(1, 0) == Rational((r + d * n) / (r * r)));
    }
  }
}

TEST_CASE("point images") {
  const InducedTransform t = induced_transform(6, 2);
  // v(Phi(O_y)) = (r, 1, s), v(Phi^{-1}(O_x)) = (r, n, s n^2)
  CHECK(image_of_point(t) == MukaiVector{6, 2, 1, 3});
  CHECK(preimage_of_point(t) == MukaiVector{6, 2, 1, 3});
  const InducedTransform u = induced_transform(30, 5);
  const Integer n = derive_n_Y(30, 5);
  CHECK(preimage_of_point(u) == MukaiVector{30, 5, n, 6 * n * n});
  CHECK(preimage_of_point(u).is_isotropic());
  // the point class goes to the third column of R
  const IsometryN g = represent(u.image);
  const LatticeVector pt(30, {Rational(0), Rational(0), Rational(1)});
  CHECK(g.apply(pt) == image_of_point(u).to_lattice());
}

TEST_CASE("translations and autoequivalences") {
  const InducedTransform t = translation_transform(PartnerLabel::of(6, 2), 3);
  CHECK(t.r == 0);
  CHECK(t.image.s() == 1);
  CHECK(t.image.b() == 3);
  CHECK(same_partner(t));
  Rng rng(41);
  CHECK_THROWS_AS(autoequivalence(PartnerLabel::self(6), random_al(6, 2, rng)), InvalidArgument);
  CHECK(same_partner(autoequivalence(PartnerLabel::self(6), random_al(6, 6, rng))));
}

TEST_CASE("composition") {
  const InducedTransform t62 = induced_transform(6, 2);
  const InducedTransform t63 = induced_transform(6, 3);
  const InducedTransform id = translation_transform(PartnerLabel::self(6), 0);

  const InducedTransform same = compose(id, t62);
  CHECK(same.image == t62.image);
  CHECK(same.source == t62.source);

  const InducedTransform loop = compose(t62, inverse(t62));
  CHECK(loop.image == al_identity(6));
  CHECK(loop.source == loop.target);
  CHECK(same_partner(loop));

  // W_3 * W_2 = W_6 between distinct-level transforms
  const InducedTransform f = compose(t62, inverse(t63));
  CHECK(f.image.s() == 6);
  CHECK(same_partner(f));
  CHECK(f.source == f.target);

  CHECK_THROWS_AS(compose(t62, t62), EndpointMismatch);
  CHECK_THROWS_AS(compose(t62, induced_transform(5, 1)), LevelMismatch);
}

TEST_CASE("same_partner agrees with endpoints on random composites") {
  Rng rng(42);
  for (int d : {1, 2, 6, 12, 30, 210}) {
    for (int i = 0; i < 60; ++i) {
      const InducedTransform t = random_composite(d, rng, 1 + i % 6);
      CHECK(same_partner(t) == (t.source == t.target));
      const RankData data = rank_data(t.image);
      CHECK(data.r == t.r);
      CHECK(t.r >= 0);
    }
  }
}
