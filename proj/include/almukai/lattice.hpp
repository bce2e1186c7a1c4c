#pragma once

#include <array>
#include <string>

#include "almukai/arith.hpp"

namespace almukai {

// The rank-3 lattice N_d = Z e0 + Z l + Z e4 with Gram matrix
//   [[0, 0, -1], [0, 2d, 0], [-1, 0, 0]].
// Coordinates are always in the basis order (e0, l, e4).

using Vector3 = std::array<Rational, 3>;
using Matrix3 = std::array<std::array<Rational, 3>, 3>;

Matrix3 gram_matrix(const Integer& d);
Matrix3 identity_matrix3();
Matrix3 operator*(const Matrix3& x, const Matrix3& y);
Vector3 operator*(const Matrix3& m, const Vector3& v);
Matrix3 operator-(const Matrix3& m);
Matrix3 transpose(const Matrix3& m);
Rational determinant(const Matrix3& m);

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

// Inertia of a symmetric matrix via Descartes' rule on its characteristic
// polynomial (exact for real-rooted polynomials).
Signature signature(const Matrix3& symmetric);

class LatticeVector {
 public:
  LatticeVector(Integer d, Vector3 coords);

  const Integer& d() const { return d_; }
  const Vector3& coords() const { return coords_; }

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;

 private:
  Integer d_;
  Vector3 coords_;
};

// <u, v> = 2d u_l v_l - u_0 v_4 - u_4 v_0. Throws LevelMismatch.
Rational mukai_pairing(const LatticeVector& u, const LatticeVector& v);

// A 3x3 rational matrix acting on N_d; columns are the images of e0, l, e4.
// Whether it really is an isometry is a property checked by is_isometry.
class IsometryN {
 public:
  IsometryN(Integer d, Matrix3 m);

  static IsometryN identity(const Integer& d);

  const Integer& d() const { return d_; }
  const Matrix3& matrix() const { return m_; }
  const Rational& operator()(int row, int col) const { return m_[row][col]; }

  bool integral() const;
  Rational det() const { return determinant(m_); }

  LatticeVector apply(const LatticeVector& v) const;

  friend bool operator==(const IsometryN&, const IsometryN&) = default;

 private:
  Integer d_;
  Matrix3 m_;
};

IsometryN operator*(const IsometryN& g, const IsometryN& h);
IsometryN operator-(const IsometryN& g);

// Inverse of an isometry, Sigma^{-1} g^T Sigma. Throws NotAnIsometry.
IsometryN isometry_inverse(const IsometryN& g);

// g^T Sigma g == Sigma
bool is_isometry(const IsometryN& g);

// Orientation of the positive 2-plane spanned by (1, 0, -d) and (0, 1, 0).
// Throws NotAnIsometry.
bool is_orientation_preserving(const IsometryN& g);

// A_{N_d} = N_d^dual / N_d is cyclic of order 2d, generated by l/2d. An
// integral isometry acts on it by a unit u with u^2 = 1 mod 4d.
class DiscriminantUnit {
 public:
  static DiscriminantUnit make(const Integer& d, const Integer& u);

  const Integer& d() const { return d_; }
  // representative in [0, 2d)
  const Integer& u() const { return u_; }

  bool is_plus_one() const;
  bool is_minus_one() const;

  friend bool operator==(const DiscriminantUnit&, const DiscriminantUnit&) = default;

 private:
  DiscriminantUnit(Integer d, Integer u) : d_(std::move(d)), u_(std::move(u)) {}
  Integer d_;
  Integer u_;
};

// Throws NotAnIsometry, NotIntegral, ActionNotDiagonal.
DiscriminantUnit discriminant_unit(const IsometryN& g);

// g in O(N_d)^*: integral isometry acting trivially on A_{N_d}.
bool in_star_kernel(const IsometryN& g);

std::string to_string(const IsometryN& g);

}  // namespace almukai
