#pragma once

// Chern and Hodge bookkeeping, Kodaira dimension rules, elliptic fibration accounting.

#include <map>
#include <string>
#include <vector>

#include "fpp/exact_scalars.hpp"

namespace fpp {

struct SurfaceInvariants {
  std::string label;
  Rat c2;
  Rat c1_sq;
  Rat q_irr;
  Rat p_g;
  Rat chi;
  Rat signature;
  std::map<int, long> plurigenera;
  bool minimal = false;

  /// Noether, the signature theorem and chi = 1 - q + p_g.
  bool consistent() const;
};

/// c1^2 = 3 c2, chi = signature = c2/3, p_g = chi - 1 + q. The canonical class
/// of a smooth compact ball quotient is ample, so P_k = chi + k(k-1)/2 c1^2 for k >= 2.
SurfaceInvariants ball_quotient_invariants(const Rat& c2, const Rat& q_irr);

/// Invariants from Euler number and signature: c1^2 = 3 sign + 2 e, chi = (c1^2 + c2)/12.
SurfaceInvariants invariants_from_topology(const Rat& euler, const Rat& signature, const Rat& q_irr, const Rat& p_g,
                                           std::map<int, long> plurigenera);

inline constexpr int kKodairaMinusInfinity = -1;
std::string kodaira_to_string(int kappa);

bool is_fake_projective_plane(const SurfaceInvariants& s, int kodaira_dim);

struct KodairaResult {
  int kappa = kKodairaMinusInfinity;
  std::vector<std::string> trace;
  SurfaceInvariants invariants;  // with the minimality flag updated
};

/// Rule-exclusion engine over kappa in {-inf, 0, 1, 2}; throws Ambiguous unless exactly one value survives.
KodairaResult kodaira_classify(const SurfaceInvariants& s);

struct KodairaFiber {
  enum class Kind { smooth, I };
  std::string label;
  Kind kind = Kind::smooth;
  int n = 0;  // for I_n
  int multiplicity = 1;
  std::vector<std::string> components;

  Rat euler() const { return kind == Kind::I ? Rat(n) : Rat(0); }
};

std::string to_string(const KodairaFiber& f);

bool fibration_euler_check(const std::vector<KodairaFiber>& fibers, const Rat& expected_c2);

struct ExceptionalCurve {
  std::string label;
  int self_intersection = -2;
};

struct AccountingReport {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Each (-2)-curve lies in exactly one fiber, no curve of self-intersection
/// <= -3 lies in any fiber, every I_n fiber lists exactly n components and
/// smooth fibers list none.
AccountingReport fiber_component_accounting(const std::vector<KodairaFiber>& fibers,
                                            const std::vector<ExceptionalCurve>& exceptional_curves);

/// Singular fibers of an elliptic fibration over P^1 and the exceptional curves of the resolution.
struct EllipticFibration {
  std::string surface;
  Rat expected_c2;
  std::vector<ExceptionalCurve> exceptional_curves;
  std::vector<KodairaFiber> fibers;
};

/// Resolution of the quotient by Gamma: one I_9, three I_1, multiple fibers of multiplicity 2 and 3.
EllipticFibration fibration_x_gamma();
/// Resolution of the quotient by the normalizer: four I_3, multiple fibers of multiplicity 2 and 3.
EllipticFibration fibration_x_gamma_tilde();

}  // namespace fpp
