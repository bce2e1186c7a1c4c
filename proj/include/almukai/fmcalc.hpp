#pragma once

#include <string>
#include <vector>

#include "almukai/lattice.hpp"
#include "almukai/modgroup.hpp"

namespace almukai {

// Mukai vector r + nL + s on a K3 surface of Picard rank one with L^2 = 2d.
struct MukaiVector {
  Integer d;
  Integer r;
  Integer n;
  Integer s;

  // 2d n^2 - 2 r s
  Integer self_pairing() const { return 2 * d * n * n - 2 * r * s; }
  bool is_isotropic() const { return self_pairing() == 0; }
  LatticeVector to_lattice() const;

  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
};

// A Fourier-Mukai partner of X, labelled by the class {r, d/r} of an exact
// divisor. The canonical representative satisfies r <= d/r.
class PartnerLabel {
 public:
  // Any exact divisor of d; canonicalized to min(r, d/r). Throws InvalidLevel.
  static PartnerLabel of(const Integer& d, const Integer& r);
  static PartnerLabel self(const Integer& d) { return of(d, 1); }

  const Integer& d() const { return d_; }
  const Integer& r() const { return r_; }
  Integer s() const { return d_ / r_; }

  // "M_L(r+L+s)"
  std::string moduli() const;

  friend bool operator==(const PartnerLabel&, const PartnerLabel&) = default;

 private:
  PartnerLabel(Integer d, Integer r) : d_(std::move(d)), r_(std::move(r)) {}
  Integer d_;
  Integer r_;
};

// Numerical shadow of a Fourier-Mukai transformation D(source) -> D(target):
// its image in AL_d together with the rank r and the L-coefficients of
// v(Phi(O_y)) = (r, n_X, .) and v(Phi^{-1}(O_x)) = (r, n_Y, .).
struct InducedTransform {
  PartnerLabel source;
  PartnerLabel target;
  ALElement image;
  Integer r;
  Integer n_Y;
  Integer n_X;
};

struct PartnerCensus {
  Integer d;
  std::vector<PartnerLabel> labels;
  std::size_t fm_number = 0;
};

PartnerCensus partner_census(const Integer& d);

// (r, 1, d/r). Throws InvalidLevel unless r || d.
MukaiVector isotropic_vector(const Integer& d, const Integer& r);

// Least nonnegative n with (d/r) n = -1 mod r, i.e. (r + d n)/r^2 integral.
Integer derive_n_Y(const Integer& d, const Integer& r);

// The universal-family transform D(M_L(r+L+d/r)) -> D(X). Its image is the
// level d/r element (1, -(r + d n)/r^2, 1, -n).
InducedTransform induced_transform(const Integer& d, const Integer& r);

// The r = 0 case: tensoring with mL on `at`, a translation z -> z + m.
InducedTransform translation_transform(const PartnerLabel& at, const Integer& m);

// An autoequivalence of `at` realizing a Fricke element. Throws InvalidArgument
// if w is not in Fr_d.
InducedTransform autoequivalence(const PartnerLabel& at, const ALElement& w);

// Rank data (r, n_Y, n_X) read off the image: the third columns of R(w) and
// R(w^{-1}) are v(Phi(O_y)) and v(Phi^{-1}(O_x)).
struct RankData {
  Integer r;
  Integer n_Y;
  Integer n_X;
};
RankData rank_data(const ALElement& image);

// v(Phi(O_y)) and v(Phi^{-1}(O_x)) as Mukai vectors.
MukaiVector image_of_point(const InducedTransform& t);
MukaiVector preimage_of_point(const InducedTransform& t);

// Source and target are the same partner iff the image is Fricke.
bool same_partner(const InducedTransform& t);

// t1 after t2. Throws EndpointMismatch unless t1.source == t2.target.
InducedTransform compose(const InducedTransform& t1, const InducedTransform& t2);

InducedTransform inverse(const InducedTransform& t);

}  // namespace almukai
