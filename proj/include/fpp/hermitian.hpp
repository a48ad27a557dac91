#pragma once

// Hermitian 3x3 forms over Q(zeta_7): exact signature and ball membership.

#include <string>

#include "fpp/cyclic_algebra.hpp"

namespace fpp {

using HermMatrix = Mat3<CycElt>;

bool is_hermitian(const HermMatrix& h);

/// Inertia of a hermitian form.
///
/// `negatives_first()` renders (negatives, positives), so the ball signature
/// reads (2,1); `standard_convention()` renders (positives, negatives).
struct Signature {
  int positives = 0;
  int negatives = 0;
  int zeros = 0;

  std::string standard_convention() const;
  std::string negatives_first() const;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Matrix of an iota-invariant b under the embedding; throws NotHermitian otherwise.
HermMatrix build_H_b(const AlgElt& b);
/// diag(c, c^sigma, c^sigma^2) for c = zeta + zeta^-1.
HermMatrix build_H_c();

/// Leading principal minors d1, d2, d3.
std::array<CycElt, 3> leading_minors(const HermMatrix& h);

/// Exact signature via leading minors; falls back to Descartes' rule on the
/// characteristic polynomial (exact for real-rooted polynomials) when a minor vanishes.
Signature signature(const HermMatrix& h);

/// H(l, l) = l^* H l.
CycElt hermitian_value(const HermMatrix& h, const Vec3<CycElt>& l);
/// True iff H(l, l) > 0; throws ZeroVector for l = 0.
bool in_ball(const HermMatrix& h, const Vec3<CycElt>& l);

}  // namespace fpp
