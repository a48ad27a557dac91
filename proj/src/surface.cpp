#include "fpp/surface.hpp"

#include <algorithm>
#include <set>

namespace fpp {

namespace {

long plurigenus(const SurfaceInvariants& s, int k) {
  auto it = s.plurigenera.find(k);
  if (it == s.plurigenera.end()) throw std::invalid_argument("kodaira_classify: P_" + std::to_string(k) + " missing");
  return it->second;
}

}  // namespace

bool SurfaceInvariants::consistent() const {
  return chi == (c1_sq + c2) / 12 && signature == (c1_sq - 2 * c2) / 3 && chi == 1 - q_irr + p_g;
}

SurfaceInvariants ball_quotient_invariants(const Rat& c2, const Rat& q_irr) {
  if (sgn(c2) <= 0) throw std::invalid_argument("ball_quotient_invariants: c2 must be positive");
  SurfaceInvariants s;
  s.label = "ball quotient";
  s.c2 = c2;
  s.c1_sq = 3 * c2;
  s.chi = c2 / 3;
  s.signature = c2 / 3;
  s.q_irr = q_irr;
  s.p_g = s.chi - 1 + q_irr;
  s.minimal = true;
  for (int k = 2; k <= 3; ++k) {
    Rat pk = s.chi + make_rat(k * (k - 1), 2) * s.c1_sq;
    if (is_integer(pk)) s.plurigenera[k] = pk.get_num().get_si();
  }
  return s;
}

SurfaceInvariants invariants_from_topology(const Rat& euler, const Rat& signature, const Rat& q_irr, const Rat& p_g,
                                           std::map<int, long> plurigenera) {
  SurfaceInvariants s;
  s.label = "from topology";
  s.c2 = euler;
  s.signature = signature;
  s.c1_sq = 3 * signature + 2 * euler;
  s.chi = (s.c1_sq + s.c2) / 12;
  s.q_irr = q_irr;
  s.p_g = p_g;
  s.plurigenera = std::move(plurigenera);
  return s;
}

std::string kodaira_to_string(int kappa) { return kappa == kKodairaMinusInfinity ? "-inf" : std::to_string(kappa); }

bool is_fake_projective_plane(const SurfaceInvariants& s, int kodaira_dim) {
  return s.c2 == 3 && s.c1_sq == 9 && is_zero(s.q_irr) && is_zero(s.p_g) && kodaira_dim == 2;
}

KodairaResult kodaira_classify(const SurfaceInvariants& s) {
  KodairaResult r;
  r.invariants = s;
  std::set<int> alive{kKodairaMinusInfinity, 0, 1, 2};
  const long p2 = plurigenus(s, 2);
  const long p3 = plurigenus(s, 3);
  auto exclude = [&](std::initializer_list<int> kappas, const std::string& why) {
    std::string which;
    for (int k : kappas)
      if (alive.erase(k)) which += (which.empty() ? "" : ",") + kodaira_to_string(k);
    if (!which.empty()) r.trace.push_back("exclude kappa in {" + which + "}: " + why);
  };
  if (p2 < 2) exclude({2}, "P2 < 2, while Riemann-Roch gives P2 >= 2 in general type");
  bool some_above_one = std::any_of(s.plurigenera.begin(), s.plurigenera.end(), [](auto& kv) { return kv.second > 1; });
  if (some_above_one) exclude({0}, "some P_k > 1, while all plurigenera are <= 1 in Kodaira dimension 0");
  if (is_zero(s.q_irr) && is_zero(s.p_g) && p3 >= 1)
    exclude({0}, "q = p_g = 0 forces an Enriques surface in Kodaira dimension 0, which has P3 = 0");
  bool some_positive = std::any_of(s.plurigenera.begin(), s.plurigenera.end(), [](auto& kv) { return kv.second > 0; });
  if (some_positive) exclude({kKodairaMinusInfinity}, "some P_k > 0, while all plurigenera vanish for kappa = -inf");
  if (is_zero(s.q_irr) && p2 == 0) exclude({0, 1, 2}, "q = P2 = 0: rational by Castelnuovo's criterion");
  if (s.minimal && sgn(s.c1_sq) > 0) exclude({0, 1}, "minimal with c1^2 > 0, while minimal surfaces of kappa 0 or 1 have c1^2 = 0");
  if (alive.size() != 1) {
    std::string left;
    for (int k : alive) left += " " + kodaira_to_string(k);
    throw Ambiguous("kodaira_classify: surviving values:" + (left.empty() ? std::string(" none") : left));
  }
  r.kappa = *alive.begin();
  r.trace.push_back("kappa = " + kodaira_to_string(r.kappa));
  if (r.kappa >= 0 && r.kappa <= 1 && is_zero(s.c1_sq) && !s.minimal) {
    r.invariants.minimal = true;
    r.trace.push_back("c1^2 = 0 with kappa >= 0: no (-1)-curves can be contracted, the surface is minimal");
  }
  return r;
}

std::string to_string(const KodairaFiber& f) {
  std::string kind = f.kind == KodairaFiber::Kind::I ? "I_" + std::to_string(f.n) : "smooth";
  return (f.multiplicity > 1 ? std::to_string(f.multiplicity) : "") + kind;
}

bool fibration_euler_check(const std::vector<KodairaFiber>& fibers, const Rat& expected_c2) {
  Rat total = 0;
  for (const auto& f : fibers) total += f.euler();
  return total == expected_c2;
}

AccountingReport fiber_component_accounting(const std::vector<KodairaFiber>& fibers,
                                            const std::vector<ExceptionalCurve>& curves) {
  AccountingReport r;
  auto problem = [&](std::string text) {
    r.ok = false;
    r.problems.push_back(std::move(text));
  };
  for (const auto& f : fibers) {
    std::set<std::string> unique(f.components.begin(), f.components.end());
    if (unique.size() != f.components.size()) problem("fiber " + f.label + " lists a component twice");
    if (f.kind == KodairaFiber::Kind::I && static_cast<int>(f.components.size()) != f.n)
      problem("fiber " + f.label + " of type I_" + std::to_string(f.n) + " lists " +
              std::to_string(f.components.size()) + " components");
    if (f.kind == KodairaFiber::Kind::smooth && !f.components.empty())
      problem("smooth fiber " + f.label + " lists components");
  }
  for (const auto& c : curves) {
    int count = 0;
    for (const auto& f : fibers) count += static_cast<int>(std::count(f.components.begin(), f.components.end(), c.label));
    if (c.self_intersection == -2 && count != 1)
      problem("(-2)-curve " + c.label + " appears in " + std::to_string(count) + " fibers");
    if (c.self_intersection <= -3 && count != 0)
      problem("(" + std::to_string(c.self_intersection) + ")-curve " + c.label + " appears in a fiber");
  }
  return r;
}

namespace {

KodairaFiber fiber_I(std::string label, std::vector<std::string> components) {
  KodairaFiber f;
  f.label = std::move(label);
  f.kind = KodairaFiber::Kind::I;
  f.n = static_cast<int>(components.size());
  f.components = std::move(components);
  return f;
}

KodairaFiber multiple_fiber(int multiplicity) {
  KodairaFiber f;
  f.label = "m" + std::to_string(multiplicity);
  f.multiplicity = multiplicity;
  return f;
}

}  // namespace

EllipticFibration fibration_x_gamma() {
  EllipticFibration e;
  e.surface = "resolved X_Gamma";
  e.expected_c2 = 12;
  std::vector<std::string> c0;
  for (int i = 1; i <= 3; ++i) {
    const std::string s = std::to_string(i);
    e.exceptional_curves.push_back({"E" + s + ",1", -3});
    e.exceptional_curves.push_back({"E" + s + ",2", -2});
    e.exceptional_curves.push_back({"E" + s + ",3", -2});
    c0.insert(c0.end(), {"E" + s + ",2", "E" + s + ",3", "D" + s + ",0"});
  }
  e.fibers.push_back(fiber_I("C0", c0));
  for (int i = 1; i <= 3; ++i) e.fibers.push_back(fiber_I("A" + std::to_string(i), {"D'" + std::to_string(i)}));
  e.fibers.push_back(multiple_fiber(2));
  e.fibers.push_back(multiple_fiber(3));
  return e;
}

EllipticFibration fibration_x_gamma_tilde() {
  EllipticFibration e;
  e.surface = "resolved X_Gamma_tilde";
  e.expected_c2 = 12;
  e.exceptional_curves = {{"A1", -3}, {"A2", -2}, {"A3", -2}};
  e.fibers.push_back(fiber_I("B0", {"A2", "A3", "D0"}));
  for (int i = 1; i <= 3; ++i) {
    const std::string s = std::to_string(i);
    e.exceptional_curves.push_back({"F" + s + ",1", -2});
    e.exceptional_curves.push_back({"F" + s + ",2", -2});
    e.fibers.push_back(fiber_I("B" + s, {"F" + s + ",1", "F" + s + ",2", "D" + s}));
  }
  e.fibers.push_back(multiple_fiber(2));
  e.fibers.push_back(multiple_fiber(3));
  return e;
}

}  // namespace fpp
