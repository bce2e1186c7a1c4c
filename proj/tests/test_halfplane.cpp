#include <doctest.h>

#include <cmath>

#include "almukai/corr.hpp"
#include "almukai/errors.hpp"
#include "almukai/halfplane.hpp"
#include "almukai/verify.hpp"

using namespace almukai;

namespace {

constexpr double kLocal = 1e-12;
constexpr double kComposed = 1e-9;

bool close(Complex a, Complex b, double tol) { return relative_error(a, b) <= tol; }

}  // namespace

TEST_CASE("half plane points") {
  CHECK_THROWS_AS(HalfPlanePoint::make(0.0, 0.0), NotInUpperHalfPlane);
  CHECK_THROWS_AS(HalfPlanePoint::make(1.0, -2.0), NotInUpperHalfPlane);
  CHECK_THROWS_AS(HalfPlanePoint::make(NAN, 1.0), NotInUpperHalfPlane);
  CHECK(HalfPlanePoint::make(0.5, 2.0).z() == Complex(0.5, 2.0));
}

TEST_CASE("embed") {
  const TubeVector i7 = embed(HalfPlanePoint::make(0, 1), 7);
  CHECK(i7.components[0] == Complex(1.0));
  CHECK(i7.components[1] == Complex(0.0, 1.0));
  CHECK(i7.components[2] == Complex(-7.0));

  const TubeVector v = embed(HalfPlanePoint::make(1, 1), 2);
  CHECK(close(v.components[2], Complex(0.0, 4.0), kLocal));

  Rng rng(51);
  for (int i = 0; i < 200; ++i) {
    const HalfPlanePoint z = random_point(rng);
    const TubeVector t = embed(z, 6);
    CHECK(std::abs(t.self_pairing()) <= kLocal * std::max(1.0, std::norm(z.z()) * 12));
    CHECK(t.hermitian_norm() > 0);
    CHECK(std::abs(t.hermitian_norm() - 24 * z.v() * z.v()) <= kLocal * 24 * (1 + std::norm(z.z())));
  }
  // grows like t^2 up the imaginary axis
  const double small = embed(HalfPlanePoint::make(0, 10), 3).hermitian_norm();
  const double large = embed(HalfPlanePoint::make(0, 100), 3).hermitian_norm();
  CHECK(large / small == doctest::Approx(100.0));
}

TEST_CASE("mobius") {
  Rng rng(52);
  const HalfPlanePoint z = HalfPlanePoint::make(0.3, 0.7);
  CHECK(close(mobius(al_identity(5), z).z(), z.z(), kLocal));
  CHECK(close(mobius(al_from_tuple(5, 1, 1, 1, 0, 1), z).z(), z.z() + 1.0, kLocal));
  // the Fricke involution fixes i/sqrt(d); at d = 1 the base element is the identity
  for (int d : {2, 6, 30}) {
    const HalfPlanePoint fixed = HalfPlanePoint::make(0, 1 / std::sqrt(double(d)));
    CHECK(close(mobius(base_element(d, d), fixed).z(), fixed.z(), kLocal));
    CHECK(close(mobius(base_element(d, d), z).z(), -1.0 / (double(d) * z.z()), kLocal));
  }
}

TEST_CASE("mobius is compatible with the group law") {
  Rng rng(53);
  for (int d : {1, 2, 6, 30}) {
    const auto divs = exact_divisors(d);
    for (int i = 0; i < 100; ++i) {
      const ALElement x = random_al(d, divs[i % divs.size()].s(), rng, 3);
      const ALElement y = random_al(d, divs[(i / 2) % divs.size()].s(), rng, 3);
      const HalfPlanePoint z = random_point(rng);
      const Complex lhs = mobius(al_mul(x, y), z).z();
      const Complex rhs = mobius(x, mobius(y, z)).z();
      CHECK(std::abs(lhs - rhs) <= kComposed * std::abs(rhs));
    }
  }
}

TEST_CASE("kawlem action") {
  const HalfPlanePoint i = HalfPlanePoint::make(0, 1);
  CHECK(close(kawlem_action(2, 1, 0, 1, i).z(), Complex(1.0, 0.5), kLocal));
  CHECK_THROWS_AS(kawlem_action(2, 0, 0, 1, i), ZeroRank);

  Rng rng(54);
  for (int d = 1; d <= 50; ++d) {
    for (const auto& div : exact_divisors(d)) {
      const InducedTransform t = induced_transform(d, div.s());
      for (int k = 0; k < 5; ++k) {
        const HalfPlanePoint z = random_point(rng);
        const HalfPlanePoint a = kawlem_action(d, t.r, t.n_Y, t.n_X, z);
        const HalfPlanePoint b = mobius(t.image, z);
        CHECK(std::abs(a.z() - b.z()) <= kLocal * std::abs(b.z()));
        CHECK(a.v() > 0);
      }
    }
  }
  // any element with nonzero lower-left entry, through its rank data
  for (int k = 0; k < 1000; ++k) {
    const ALElement w = random_al(30, 6, rng, 3);
    const RankData data = rank_data(w);
    if (data.r == 0) continue;
    const HalfPlanePoint z = random_point(rng);
    const HalfPlanePoint a = kawlem_action(30, data.r, data.n_Y, data.n_X, z);
    CHECK(a.v() > 0);
    CHECK(std::abs(a.z() - mobius(w, z).z()) <= kComposed * std::abs(mobius(w, z).z()));
  }
}

TEST_CASE("central charge") {
  Rng rng(55);
  const MukaiVector point{6, 0, 0, 1};
  for (int k = 0; k < 50; ++k) {
    const HalfPlanePoint z = random_point(rng);
    CHECK(close(central_charge(z.u(), z.v(), point), Complex(-1.0), kLocal));
  }
  for (int d : {1, 2, 6, 30}) {
    for (const auto& div : exact_divisors(d)) {
      const MukaiVector v = isotropic_vector(d, div.s());
      for (int k = 0; k < 20; ++k) {
        const double t = 0.1 + 0.2 * k;
        const Complex direct = central_charge(0.0, t, v);
        CHECK(close(direct, central_charge_isotropic(0.0, t, v), kLocal));
        const HalfPlanePoint z = random_point(rng);
        CHECK(close(central_charge(z.u(), z.v(), v), central_charge_isotropic(z.u(), z.v(), v),
                    kLocal));
      }
    }
  }
  // the expanded form holds for any vector with r != 0; bilinearity
  for (int k = 0; k < 200; ++k) {
    const int r = std::uniform_int_distribution<int>(1, 9)(rng);
    const int n = std::uniform_int_distribution<int>(-9, 9)(rng);
    const int s = std::uniform_int_distribution<int>(-9, 9)(rng);
    const MukaiVector v{6, r, n, s};
    const MukaiVector w{6, -r + 1, n + 2, s - 3};
    const MukaiVector sum{6, 1, 2 * n + 2, 2 * s - 3};
    const HalfPlanePoint z = random_point(rng);
    CHECK(close(central_charge(z.u(), z.v(), v), central_charge_expanded(z.u(), z.v(), v), kLocal * 10));
    CHECK(close(central_charge(z.u(), z.v(), sum),
                central_charge(z.u(), z.v(), v) + central_charge(z.u(), z.v(), w), kLocal * 10));
  }
}

TEST_CASE("central charge product identity") {
  Rng rng(56);
  for (int d : {1, 2, 6, 30, 210}) {
    for (const auto& div : exact_divisors(d)) {
      const InducedTransform t = induced_transform(d, div.s());
      const MukaiVector v_y = preimage_of_point(t);
      const MukaiVector v_x = image_of_point(t);
      for (int k = 0; k < 20; ++k) {
        const HalfPlanePoint z = random_point(rng);
        const HalfPlanePoint w = mobius(t.image, z);
        const Complex product = central_charge(z.u(), z.v(), v_y) * central_charge(w.u(), w.v(), v_x);
        CHECK(std::abs(product - 1.0) <= kComposed);
      }
    }
  }
}

TEST_CASE("equivariance of R and the Mobius action") {
  Rng rng(57);
  const HalfPlanePoint z = HalfPlanePoint::make(-0.4, 1.3);
  CHECK(equivariance_defect(al_identity(6), z) == 0.0);
  for (int d : {1, 2, 6, 30}) {
    for (const auto& div : exact_divisors(d)) {
      for (int k = 0; k < 50; ++k) {
        const ALElement w = random_al(d, div.s(), rng);
        CHECK(equivariance_defect(w, random_point(rng)) < kComposed);
      }
    }
  }
  const ALElement w = base_element(6, 2);
  Matrix3 m = represent(w).matrix();
  m[1][0] += 5;
  CHECK(equivariance_defect(IsometryN(6, m), w, z) > 1e-3);
}
