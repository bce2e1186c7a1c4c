#include "almukai/halfplane.hpp"

#include <cmath>

#include "almukai/corr.hpp"
#include "almukai/errors.hpp"

namespace almukai {

namespace {

double to_double(const Integer& n) { return n.convert_to<double>(); }
double to_double(const Rational& q) { return q.convert_to<double>(); }

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

HalfPlanePoint HalfPlanePoint::make(double u, double v) {
  if (!std::isfinite(u) || !std::isfinite(v) || !(v > 0)) {
    throw NotInUpperHalfPlane("point (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") is not in the upper half plane");
  }
  return HalfPlanePoint(u, v);
}

Complex TubeVector::self_pairing() const {
  const auto& x = components;
  return 2.0 * to_double(d) * x[1] * x[1] - x[0] * x[2] - x[2] * x[0];
}

double TubeVector::hermitian_norm() const {
  const auto& x = components;
  const Complex value = 2.0 * to_double(d) * x[1] * std::conj(x[1]) - x[0] * std::conj(x[2]) -
                        x[2] * std::conj(x[0]);
  return value.real();
}

TubeVector embed(const HalfPlanePoint& z, const Integer& d) {
  if (d < 1) throw InvalidArgument("embed: level must be positive");
  const Complex w = z.z();
  return {d, {Complex(1.0), w, to_double(d) * w * w}};
}

RealMatrix2 real_matrix(const ALElement& w) {
  const double root = std::sqrt(to_double(w.s()));
  return {{{to_double(w.a()) * root, to_double(w.b()) / root},
           {to_double(w.c()) * to_double(w.co_level()) * root, to_double(w.e()) * root}}};
}

HalfPlanePoint mobius(const ALElement& w, const HalfPlanePoint& z) {
  const RealMatrix2 m = real_matrix(w);
  const Complex num = m[0][0] * z.z() + m[0][1];
  const Complex den = m[1][0] * z.z() + m[1][1];
  const double den_norm = std::norm(den);
  if (den_norm == 0.0) throw NumericalPole("mobius: pole at " + w.to_string());
  // Im = v det / |den|^2 with det = 1, avoiding the cancellation in num/den
  const Complex out((num * std::conj(den)).real() / den_norm, z.v() / den_norm);
  if (!finite(out) || !(out.imag() > 0)) throw NumericalPole("mobius: degenerate image");
  return HalfPlanePoint::from_complex(out);
}

HalfPlanePoint kawlem_action(const Integer& d, const Integer& r, const Integer& n_Y,
                             const Integer& n_X, const HalfPlanePoint& z) {
  if (r == 0) throw ZeroRank("kawlem_action: rank zero transforms are translations");
  const double rr = to_double(r);
  const Complex shifted = z.z() - to_double(n_Y) / rr;
  const Complex out = -1.0 / (to_double(d) * std::abs(rr) * shifted) + to_double(n_X) / rr;
  if (!finite(out) || !(out.imag() > 0)) throw NumericalPole("kawlem_action: degenerate image");
  return HalfPlanePoint::from_complex(out);
}

Complex central_charge(double beta, double omega, const MukaiVector& v) {
  const TubeVector exp_z = embed(HalfPlanePoint::make(beta, omega), v.d);
  const auto& x = exp_z.components;
  return 2.0 * to_double(v.d) * x[1] * to_double(v.n) - x[0] * to_double(v.s) -
         x[2] * to_double(v.r);
}

Complex central_charge_expanded(double beta, double omega, const MukaiVector& v) {
  if (v.r == 0) throw ZeroRank("central_charge_expanded: rank zero");
  const double r = to_double(v.r);
  const Complex inner(omega, to_double(v.n) / r - beta);
  return to_double(v.self_pairing()) / (2.0 * r) + (r / 2.0) * inner * inner * (2.0 * to_double(v.d));
}

Complex central_charge_isotropic(double beta, double omega, const MukaiVector& v) {
  if (v.r == 0) throw ZeroRank("central_charge_isotropic: rank zero");
  const double r = to_double(v.r);
  const Complex inner(omega, to_double(v.n) / r - beta);
  return (r / 2.0) * inner * inner * (2.0 * to_double(v.d));
}

double equivariance_defect(const IsometryN& g, const ALElement& w, const HalfPlanePoint& z) {
  if (g.d() != w.d()) throw LevelMismatch("equivariance_defect: level mismatch");
  const auto source = embed(z, w.d()).components;
  const auto target = embed(mobius(w, z), w.d()).components;
  std::array<Complex, 3> moved{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) moved[i] += to_double(g(i, k)) * source[k];

  int pivot = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(target[i]) > std::abs(target[pivot])) pivot = i;
  if (moved[pivot] == Complex(0.0) || target[pivot] == Complex(0.0)) {
    throw NumericalPole("equivariance_defect: degenerate projectivization");
  }
  double defect = 0.0;
  for (int i = 0; i < 3; ++i) {
    defect = std::max(defect, std::abs(moved[i] / moved[pivot] - target[i] / target[pivot]));
  }
  if (!std::isfinite(defect)) throw NumericalPole("equivariance_defect: non-finite defect");
  return defect;
}

double equivariance_defect(const ALElement& w, const HalfPlanePoint& z) {
  return equivariance_defect(represent(w), w, z);
}

double relative_error(Complex a, Complex b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

}  // namespace almukai
