#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>

#include "almukai/arith.hpp"

namespace almukai {

using Rng = std::mt19937_64;

inline constexpr int kDefaultSampleBound = 10;

/// An element of the Atkin-Lehner coset W_s of level d.
///
/// Stored as the integer quintuple (s, a, b, c, e); the real matrix is
/// (1/sqrt(s)) [[a*s, b], [c*d, e*s]] and has determinant
/// a*e*s - b*c*(d/s) = 1. Elements live in PSL2(R), so the tuple is kept in
/// a canonical sign: the first nonzero of (a, c, b, e) is positive.
class ALElement {
 public:
  // Validates and sign-normalizes. Throws InvalidLevel / InvalidDeterminant.
  static ALElement make(Integer d, Integer s, Integer a, Integer b, Integer c, Integer e);

  const Integer& d() const { return d_; }
  const Integer& s() const { return s_; }
  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& e() const { return e_; }

  // d / s
  Integer co_level() const { return d_ / s_; }

  // Integer matrix [[a*s, b], [c*d, e*s]]; the real matrix divided by sqrt(s).
  std::array<std::array<Integer, 2>, 2> scaled_matrix() const;

  std::string to_string() const;

  friend bool operator==(const ALElement&, const ALElement&) = default;

 private:
  ALElement(Integer d, Integer s, Integer a, Integer b, Integer c, Integer e)
      : d_(std::move(d)), s_(std::move(s)), a_(std::move(a)), b_(std::move(b)),
        c_(std::move(c)), e_(std::move(e)) {}

  Integer d_, s_, a_, b_, c_, e_;
};

// Label of the coset W_s inside AL_d.
struct CosetLabel {
  Integer d;
  Integer s;

  friend bool operator==(const CosetLabel&, const CosetLabel&) = default;
};

CosetLabel coset_label(const ALElement& w);

ALElement al_identity(const Integer& d);
ALElement al_from_tuple(const Integer& d, const Integer& s, const Integer& a, const Integer& b,
                        const Integer& c, const Integer& e);

// Exact product; level of the result is star(w1.s, w2.s).
ALElement al_mul(const ALElement& w1, const ALElement& w2);
ALElement al_inverse(const ALElement& w);

// w in Fr_d = W_1 u W_d
bool is_fricke(const ALElement& w);
bool is_fricke_level(const Integer& d, const Integer& s);

// Canonical element of W_s: identity for s = 1, (0,-1,1,0) for s = d,
// otherwise (1, b, 1, e) with e = s^{-1} mod d/s.
ALElement base_element(const Integer& d, const Integer& s);

// Random element of Gamma_0(d) = W_1; entries driven by `bound`.
ALElement random_gamma0(const Integer& d, Rng& rng, int bound = kDefaultSampleBound);

// random_gamma0 * base_element(d, s) * random_gamma0
ALElement random_al(const Integer& d, const Integer& s, Rng& rng, int bound = kDefaultSampleBound);

// Number of cosets of Fr_d in AL_d, counted by orbits of s -> s*d on the
// coset labels.
std::size_t fricke_coset_count(const Integer& d);

}  // namespace almukai
