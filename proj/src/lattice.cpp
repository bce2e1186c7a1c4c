#include "almukai/lattice.hpp"

#include "almukai/errors.hpp"

namespace almukai {

namespace mp = boost::multiprecision;

Matrix3 gram_matrix(const Integer& d) {
  Matrix3 g{};
  g[0][2] = -1;
  g[1][1] = Rational(2 * d);
  g[2][0] = -1;
  return g;
}

Matrix3 identity_matrix3() {
  Matrix3 m{};
  for (int i = 0; i < 3; ++i) m[i][i] = 1;
  return m;
}

Matrix3 operator*(const Matrix3& x, const Matrix3& y) {
  Matrix3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i][j] += x[i][k] * y[k][j];
  return out;
}

Vector3 operator*(const Matrix3& m, const Vector3& v) {
  Vector3 out{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) out[i] += m[i][k] * v[k];
  return out;
}

Matrix3 operator-(const Matrix3& m) {
  Matrix3 out = m;
  for (auto& row : out)
    for (auto& x : row) x = -x;
  return out;
}

Matrix3 transpose(const Matrix3& m) {
  Matrix3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = m[j][i];
  return out;
}

Rational determinant(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Signature signature(const Matrix3& a) {
  // det(x I - A) = x^3 + k2 x^2 + k1 x + k0
  const Rational trace = a[0][0] + a[1][1] + a[2][2];
  const Rational minors = (a[0][0] * a[1][1] - a[0][1] * a[1][0]) +
                          (a[0][0] * a[2][2] - a[0][2] * a[2][0]) +
                          (a[1][1] * a[2][2] - a[1][2] * a[2][1]);
  const std::array<Rational, 4> coeffs{1, -trace, minors, -determinant(a)};

  Signature sig;
  std::size_t degree = 3;
  while (degree > 0 && coeffs[degree] == 0) {
    ++sig.zero;
    --degree;
  }
  auto sign_changes = [&](bool flip_odd) {
    int changes = 0;
    int last = 0;
    for (std::size_t i = 0; i <= degree; ++i) {
      // coefficient of x^(3-i); substituting -x flips odd powers
      int sg = coeffs[i].sign();
      if (flip_odd && ((3 - i) % 2 == 1)) sg = -sg;
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++changes;
      last = sg;
    }
    return changes;
  };
  sig.positive = sign_changes(false);
  sig.negative = sign_changes(true);
  return sig;
}

LatticeVector::LatticeVector(Integer d, Vector3 coords) : d_(std::move(d)), coords_(coords) {
  if (d_ < 1) throw InvalidArgument("lattice level must be positive");
}

Rational mukai_pairing(const LatticeVector& u, const LatticeVector& v) {
  if (u.d() != v.d()) throw LevelMismatch("mukai_pairing: vectors of different level");
  const auto& x = u.coords();
  const auto& y = v.coords();
  return Rational(2 * u.d()) * x[1] * y[1] - x[0] * y[2] - x[2] * y[0];
}

IsometryN::IsometryN(Integer d, Matrix3 m) : d_(std::move(d)), m_(std::move(m)) {
  if (d_ < 1) throw InvalidArgument("lattice level must be positive");
}

IsometryN IsometryN::identity(const Integer& d) { return IsometryN(d, identity_matrix3()); }

bool IsometryN::integral() const {
  for (const auto& row : m_)
    for (const auto& x : row)
      if (!is_integral(x)) return false;
  return true;
}

LatticeVector IsometryN::apply(const LatticeVector& v) const {
  if (v.d() != d_) throw LevelMismatch("IsometryN::apply: vector of different level");
  return LatticeVector(d_, m_ * v.coords());
}

IsometryN operator*(const IsometryN& g, const IsometryN& h) {
  if (g.d() != h.d()) throw LevelMismatch("IsometryN product of different levels");
  return IsometryN(g.d(), g.matrix() * h.matrix());
}

IsometryN operator-(const IsometryN& g) { return IsometryN(g.d(), -g.matrix()); }

bool is_isometry(const IsometryN& g) {
  const Matrix3 sigma = gram_matrix(g.d());
  return transpose(g.matrix()) * sigma * g.matrix() == sigma;
}

IsometryN isometry_inverse(const IsometryN& g) {
  if (!is_isometry(g)) throw NotAnIsometry("isometry_inverse: " + to_string(g));
  Matrix3 sigma_inv{};
  sigma_inv[0][2] = -1;
  sigma_inv[1][1] = Rational(1, 2 * g.d());
  sigma_inv[2][0] = -1;
  return IsometryN(g.d(), sigma_inv * transpose(g.matrix()) * gram_matrix(g.d()));
}

bool is_orientation_preserving(const IsometryN& g) {
  if (!is_isometry(g)) throw NotAnIsometry("is_orientation_preserving: " + to_string(g));
  const Integer& d = g.d();
  // real and imaginary parts of exp(sqrt(-1) L)
  const std::array<LatticeVector, 2> plane{LatticeVector(d, {Rational(1), Rational(0), Rational(-d)}),
                                           LatticeVector(d, {Rational(0), Rational(1), Rational(0)})};
  std::array<std::array<Rational, 2>, 2> gram{}, pairing{};
  for (int i = 0; i < 2; ++i) {
    const LatticeVector image = g.apply(plane[i]);
    for (int j = 0; j < 2; ++j) {
      pairing[i][j] = mukai_pairing(image, plane[j]);
      gram[i][j] = mukai_pairing(plane[i], plane[j]);
    }
  }
  // det(pairing * gram^{-1})
  const Rational det_pairing = pairing[0][0] * pairing[1][1] - pairing[0][1] * pairing[1][0];
  const Rational det_gram = gram[0][0] * gram[1][1] - gram[0][1] * gram[1][0];
  return det_pairing / det_gram > 0;
}

DiscriminantUnit DiscriminantUnit::make(const Integer& d, const Integer& u) {
  if (d < 1) throw InvalidArgument("discriminant unit: level must be positive");
  const Integer modulus = 2 * d;
  Integer rep = mod(u, modulus);
  if (mp::gcd(rep, modulus) != 1 || mod(rep * rep - 1, 4 * d) != 0) {
    throw InvalidArgument("discriminant unit: " + to_string(u) + " is not an isometry of Z/" +
                          to_string(modulus));
  }
  return DiscriminantUnit(d, std::move(rep));
}

bool DiscriminantUnit::is_plus_one() const { return u_ == mod(Integer(1), 2 * d_); }
bool DiscriminantUnit::is_minus_one() const { return u_ == mod(Integer(-1), 2 * d_); }

DiscriminantUnit discriminant_unit(const IsometryN& g) {
  if (!is_isometry(g)) throw NotAnIsometry("discriminant_unit: " + to_string(g));
  if (!g.integral()) throw NotIntegral("discriminant_unit: " + to_string(g));
  const Integer modulus = 2 * g.d();
  // g(l) = x e0 + y l + z e4, so g(l/2d) = (x/2d) e0 + y (l/2d) + (z/2d) e4
  const Integer x = mp::numerator(g(0, 1));
  const Integer y = mp::numerator(g(1, 1));
  const Integer z = mp::numerator(g(2, 1));
  if (x % modulus != 0 || z % modulus != 0) {
    throw ActionNotDiagonal("discriminant_unit: g(l/2d) leaves the cyclic group: " + to_string(g));
  }
  try {
    return DiscriminantUnit::make(g.d(), y);
  } catch (const InvalidArgument& ex) {
    throw ActionNotDiagonal(ex.what());
  }
}

bool in_star_kernel(const IsometryN& g) { return discriminant_unit(g).is_plus_one(); }

std::string to_string(const IsometryN& g) {
  std::string out = "[";
  for (int i = 0; i < 3; ++i) {
    out += i ? "; " : "";
    for (int j = 0; j < 3; ++j) {
      out += j ? ", " : "";
      out += g(i, j).str();
    }
  }
  return out + "] (d=" + to_string(g.d()) + ")";
}

}  // namespace almukai
