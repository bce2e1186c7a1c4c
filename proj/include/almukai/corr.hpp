#pragma once

#include <string>
#include <vector>

#include "almukai/lattice.hpp"
#include "almukai/modgroup.hpp"

namespace almukai {

// R: PSL2(R) -> SO+(N_d) evaluated on an Atkin-Lehner element. All square
// roots of s cancel, so the result is exact. Throws IntegralityViolation if
// an entry fails to be an integer.
IsometryN represent(const ALElement& w);

// Inverse of R up to sign: the unique w with R(w) in {g, -g}.
// Throws NotInImage.
ALElement descend(const IsometryN& g);

CosetLabel classify_coset(const IsometryN& g);

struct CorrespondenceFailure {
  std::string input;
  std::string check;

  friend bool operator==(const CorrespondenceFailure&, const CorrespondenceFailure&) = default;
};

struct CorrespondenceReport {
  Integer d;
  std::size_t samples_per_coset = 0;
  std::size_t checked = 0;
  std::vector<CorrespondenceFailure> failures;

  bool passed() const { return failures.empty(); }
};

// Runs every correspondence check on the pair (w, image) where image is
// expected to be R(w); appends failures to `out`.
void audit_sample(const ALElement& w, const IsometryN& image,
                  std::vector<CorrespondenceFailure>& out);

// For each s || d, samples_per_coset random W_s elements are pushed through
// R and back and checked against the Fricke criterion.
CorrespondenceReport verify_dolgachev(const Integer& d, std::size_t samples_per_coset, Rng& rng);

// Concatenates failures and sums counts; levels must match.
CorrespondenceReport merge(CorrespondenceReport lhs, const CorrespondenceReport& rhs);

}  // namespace almukai
