#pragma once

#include <array>
#include <complex>

#include "almukai/fmcalc.hpp"
#include "almukai/lattice.hpp"
#include "almukai/modgroup.hpp"

namespace almukai {

// Floating-point layer: the upper half plane, the tube domain it parametrizes,
// and the numerical cross-checks between the 2x2 and 3x3 pictures.

using Complex = std::complex<double>;
using RealMatrix2 = std::array<std::array<double, 2>, 2>;

class HalfPlanePoint {
 public:
  // Throws NotInUpperHalfPlane unless v > 0 and both parts are finite.
  static HalfPlanePoint make(double u, double v);
  static HalfPlanePoint from_complex(Complex z) { return make(z.real(), z.imag()); }

  double u() const { return u_; }
  double v() const { return v_; }
  Complex z() const { return {u_, v_}; }

 private:
  HalfPlanePoint(double u, double v) : u_(u), v_(v) {}
  double u_;
  double v_;
};

// exp(zL) = (1, z, d z^2) in the basis (e0, l, e4).
struct TubeVector {
  Integer d;
  std::array<Complex, 3> components;

  // Complex-bilinear Mukai self-pairing; zero on the tube domain.
  Complex self_pairing() const;
  // <Z, conj Z>, positive on the tube domain (equals 4 d v^2).
  double hermitian_norm() const;
};

TubeVector embed(const HalfPlanePoint& z, const Integer& d);

// (1/sqrt(s)) [[a s, b], [c d, e s]]
RealMatrix2 real_matrix(const ALElement& w);

// Fractional-linear action. Throws NumericalPole.
HalfPlanePoint mobius(const ALElement& w, const HalfPlanePoint& z);

// -1 / (d |r| (z - n_Y/r)) + n_X / r. Throws ZeroRank for r = 0.
HalfPlanePoint kawlem_action(const Integer& d, const Integer& r, const Integer& n_Y,
                             const Integer& n_X, const HalfPlanePoint& z);

// Z_(beta, omega)(v) = <exp(beta + i omega), v> with beta = uL, omega = vL.
Complex central_charge(double beta, double omega, const MukaiVector& v);

// v^2/(2r) + (r/2) (omega + i(n/r - beta))^2 L^2; requires r != 0.
Complex central_charge_expanded(double beta, double omega, const MukaiVector& v);

// For isotropic v: (r/2) (omega + i(n/r - beta))^2 L^2.
Complex central_charge_isotropic(double beta, double omega, const MukaiVector& v);

// Projective distance between g exp(zL) and exp(w(z) L), both scaled by the
// coordinate where exp(w(z) L) is largest. Throws NumericalPole.
double equivariance_defect(const IsometryN& g, const ALElement& w, const HalfPlanePoint& z);
double equivariance_defect(const ALElement& w, const HalfPlanePoint& z);

// |a - b| / max(1, |b|)
double relative_error(Complex a, Complex b);

}  // namespace almukai
