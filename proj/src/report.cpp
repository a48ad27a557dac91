#include "fpp/report.hpp"

#include <cstdint>
#include <cstdio>
#include <functional>
#include <sstream>

#include "fpp/hermitian.hpp"
#include "fpp/lfunctions.hpp"
#include "fpp/order.hpp"

#ifndef FPP_VERSION
#define FPP_VERSION "0.0.0"
#endif

namespace fpp {

namespace {

ReportEntry compare(std::string anchor, Json expected, Json computed, std::string note = {}) {
  ReportEntry e;
  e.anchor = std::move(anchor);
  e.status = expected == computed ? Status::match : Status::mismatch;
  e.expected = std::move(expected);
  e.computed = std::move(computed);
  e.note = std::move(note);
  return e;
}

// A known deviation: flagged (with the explanation) when it differs, match when it agrees.
ReportEntry flag_if_different(std::string anchor, Json expected, Json computed, std::string note) {
  ReportEntry e = compare(std::move(anchor), std::move(expected), std::move(computed));
  if (e.status == Status::mismatch) {
    e.status = Status::flagged;
    e.note = std::move(note);
  }
  return e;
}

// Quantities with no stated value; `consistent` covers internal cross-checks.
ReportEntry derived(std::string anchor, Json computed, bool consistent = true, std::string note = {}) {
  ReportEntry e;
  e.anchor = std::move(anchor);
  e.computed = std::move(computed);
  e.status = consistent ? Status::derived_only : Status::mismatch;
  e.note = std::move(note);
  return e;
}

Json points_json(const std::vector<CyclicSingularity>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(to_string(p));
  return out;
}

Json heights_json(const OrbifoldSurface& x) {
  return {{"euler", to_string(euler_height(x))}, {"signature", to_string(signature_height(x))}};
}

Json resolved_json(const ResolvedInvariants& r) {
  return {{"euler", to_string(r.euler)}, {"signature", to_string(r.signature)}, {"curves", r.blowups}};
}

std::string scientific(const Rat& q) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", q.get_d());
  return buf;
}

Json accounting_json(const AccountingReport& a) { return {{"ok", a.ok}, {"problems", a.problems}}; }

ClassDataset load_dataset(const std::filesystem::path& path, const std::function<ClassDataset()>& build) {
  return path.empty() ? build() : dataset_from_json(read_json_file(path));
}

long require_long(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ConfigError(std::string("config: ") + what + " must be an integer");
  return j.get<long>();
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::match: return "match";
    case Status::mismatch: return "mismatch";
    case Status::derived_only: return "derived-only";
    case Status::flagged: return "flagged";
  }
  return "?";
}

std::string version() { return FPP_VERSION; }

Config default_config() {
  Json j = {{"algebra", {{"cyclotomic_modulus", 7}, {"alpha", "lambda/lambda_bar"}}},
            {"local_factors", {{"2", "3"}, {"7", "1"}}},
            {"indices", {{"congruence", 7}, {"normalizer", 3}}}};
  return parse_config(j, {});
}

Config parse_config(const Json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  Config c;
  Json canonical = Json::object();
  if (j.contains("algebra")) {
    const Json& a = j.at("algebra");
    if (a.contains("cyclotomic_modulus")) c.cyclotomic_modulus = static_cast<int>(require_long(a.at("cyclotomic_modulus"), "algebra.cyclotomic_modulus"));
    if (c.cyclotomic_modulus != 7) throw ConfigError("config: only cyclotomic_modulus 7 is supported");
    if (a.contains("alpha")) {
      if (!a.at("alpha").is_string()) throw ConfigError("config: algebra.alpha must be an expression string");
      c.alpha_expression = a.at("alpha").get<std::string>();
    }
  }
  c.alpha_value = parse_cyc_expression(c.alpha_expression);
  if (c.alpha_value.is_zero() || !in_K(c.alpha_value))
    throw ConfigError("config: alpha must be a nonzero element of Q(sqrt(-7))");
  auto read_expressions = [](const Json& parent, const char* key, auto& out) {
    if (!parent.contains(key)) return;
    const Json& arr = parent.at(key);
    if (!arr.is_array() || arr.size() != out.size())
      throw ConfigError(std::string("config: '") + key + "' must list " + std::to_string(out.size()) + " expressions");
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (!arr[i].is_string()) throw ConfigError(std::string("config: '") + key + "' entries must be strings");
      out[i] = arr[i].get<std::string>();
      parse_cyc_expression(out[i]);
    }
  };
  if (j.contains("algebra")) read_expressions(j.at("algebra"), "b", c.b_expressions);
  if (j.contains("order")) read_expressions(j.at("order"), "block_scales", c.block_scale_expressions);
  canonical["algebra"] = {{"cyclotomic_modulus", c.cyclotomic_modulus},
                          {"alpha", c.alpha_expression},
                          {"alpha_value", to_json(c.alpha_value)},
                          {"b", c.b_expressions}};
  canonical["order"] = {{"block_scales", c.block_scale_expressions}};

  if (!j.contains("local_factors")) throw ConfigError("config: missing 'local_factors'");
  const Json& lf = j.at("local_factors");
  if (!lf.is_object()) throw ConfigError("config: 'local_factors' must map primes to rationals");
  for (const auto& [prime, value] : lf.items()) c.local_factors[prime] = rat_from_json(value);
  for (const auto& [prime, value] : c.local_factors) canonical["local_factors"][prime] = to_string(value);
  if (c.local_factors.empty()) canonical["local_factors"] = Json::object();

  if (j.contains("indices")) {
    const Json& ix = j.at("indices");
    if (ix.contains("congruence")) c.congruence_index = require_long(ix.at("congruence"), "indices.congruence");
    if (ix.contains("normalizer")) c.normalizer_index = require_long(ix.at("normalizer"), "indices.normalizer");
  }
  if (c.congruence_index < 1 || c.normalizer_index < 1) throw ConfigError("config: indices must be positive");
  canonical["indices"] = {{"congruence", c.congruence_index}, {"normalizer", c.normalizer_index}};

  canonical["datasets"] = Json::object();
  if (j.contains("datasets")) {
    const Json& d = j.at("datasets");
    auto path_of = [&](const char* key, std::filesystem::path& out) {
      if (!d.contains(key)) return;
      if (!d.at(key).is_string()) throw ConfigError(std::string("config: datasets.") + key + " must be a path");
      const std::string rel = d.at(key).get<std::string>();
      out = std::filesystem::path(rel).is_absolute() ? std::filesystem::path(rel) : base_dir / rel;
      canonical["datasets"][key] = rel;
    };
    path_of("gamma", c.gamma_dataset);
    path_of("gamma_tilde", c.gamma_tilde_dataset);
  }
  c.canonical = std::move(canonical);
  return c;
}

Config load_config(const std::filesystem::path& path) {
  return parse_config(read_json_file(path), path.parent_path());
}

AlgElt configured_b(const Config& c) {
  return AlgElt(c.alpha_value, parse_cyc_expression(c.b_expressions[0]), parse_cyc_expression(c.b_expressions[1]),
                parse_cyc_expression(c.b_expressions[2]));
}

OrderBasis configured_order(const Config& c) {
  OrderBasis basis = unscaled_order_basis();
  for (auto& x : basis.elements) x = AlgElt(c.alpha_value, x[0], x[1], x[2]);
  basis = scale_block(basis, 1, parse_cyc_expression(c.block_scale_expressions[0]));
  basis = scale_block(basis, 2, parse_cyc_expression(c.block_scale_expressions[1]));
  basis.label = "configured order";
  return basis;
}

bool VerificationReport::has_mismatch() const {
  for (const auto& e : entries)
    if (e.status == Status::mismatch) return true;
  return false;
}

Json VerificationReport::body() const {
  Json list = Json::array();
  for (const auto& e : entries) {
    Json je = {{"id", e.id},
               {"anchor", e.anchor},
               {"expected", e.expected},
               {"computed", e.computed},
               {"status", to_string(e.status)}};
    if (!e.note.empty()) je["note"] = e.note;
    list.push_back(je);
  }
  return {{"entries", list}, {"config", config}, {"version", version}};
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

VerificationReport run_all(const Config& cfg) {
  VerificationReport rep;
  rep.config = cfg.canonical;
  rep.version = version();

  auto step = [&](const std::string& id, const std::function<ReportEntry()>& fn) {
    try {
      ReportEntry e = fn();
      e.id = id;
      rep.entries.push_back(std::move(e));
    } catch (const ConfigError& e) {
      throw ConfigError("[" + id + "] " + e.what());
    } catch (const std::exception& e) {
      throw Error("[" + id + "] " + e.what());
    }
  };

  const CycElt& alpha = cfg.alpha_value;
  const AlgElt b = configured_b(cfg);
  const OrderBasis order = configured_order(cfg);

  // the algebra and its hermitian forms
  step("algebra.division", [&] {
    DivisionWitness w = is_division_algebra(alpha);
    Json places = Json::array();
    for (const auto& p : w.places)
      places.push_back({{"prime", p.prime.label()}, {"valuation", p.valuation}, {"residue_degree", p.residue_degree},
                        {"local_norm", p.local_norm}});
    ReportEntry e = compare("D(L, sigma, alpha) is a division algebra", true, w.is_division);
    e.computed = {{"is_division", w.is_division}, {"places", places}};
    e.expected = {{"is_division", true}};
    e.status = w.is_division ? Status::match : Status::mismatch;
    return e;
  });
  step("hermitian.b_signature", [&] {
    Signature s = signature(build_H_b(b));
    return compare("H_b has signature (2,1)", "(2,1)", s.negatives_first(),
                   "written (negatives,positives); standard " + s.standard_convention());
  });
  step("hermitian.c_ball_points", [&] {
    HermMatrix hc = build_H_c();
    Json inside = Json::array();
    for (int i = 0; i < 3; ++i) {
      Vec3<CycElt> e = Vec3<CycElt>::Zero();
      e(i) = 1;
      if (in_ball(hc, e)) inside.push_back("e" + std::to_string(i + 1));
    }
    return compare("exactly one eigenline of diag(zeta, zeta^2, zeta^4) lies in the ball of H_c", 1,
                   static_cast<int>(inside.size()), "inside: " + inside.dump());
  });

  // the order
  step("order.closed_under_multiplication", [&] {
    return compare("O is an order", true, is_closed_under_multiplication(order));
  });
  step("order.discriminant", [&] {
    DiscriminantReport d = discriminant(order);
    ReportEntry e;
    e.anchor = "disc(O) = (2^6)";
    e.expected = {{"ideal", "(2)^6"}, {"two_exponent", 6}};
    e.computed = {{"ideal", d.ideal_string()}, {"norm", d.ideal_norm.get_str()}, {"two_exponent", d.two_exponent}};
    if (d.equals_expected) {
      e.status = Status::match;
    } else if (d.two_exponent == 6) {
      e.status = Status::flagged;
      e.note = "2-primary part agrees; det(trd(x_i x_j)) over the o_K-basis also carries the ramified prime above 7";
    } else {
      e.status = Status::mismatch;
    }
    return e;
  });
  step("order.iota_invariant", [&] { return compare("iota(O) = O", true, iota_invariance(order).invariant); });
  step("order.iota_b_invariant", [&] {
    InvarianceReport r = iota_b_invariance(order, b);
    return flag_if_different(
        "iota_b(O) = O", {{"invariant", true}},
        {{"invariant", r.invariant}, {"failing_basis_images", r.failing.size()}, {"worst_denominator", r.worst_denominator.get_str()}},
        "nrd(b) = 3, so b is not a unit of O and conjugation by b leaves the lattice");
  });
  step("order.torsion_orders", [&] {
    TorsionReport t = torsion_orders(-7);
    return compare("torsion elements of reduced norm 1 have order 1 or 7", Json::array({1, 7}), t.allowed_orders);
  });
  step("order.congruence_index", [&] {
    return compare("[Gamma_0 : Gamma] = N(p_2)^2 + N(p_2) + 1", cfg.congruence_index, congruence_index(2, 3).get_si(),
                   "expected value is indices.congruence from the configuration");
  });
  step("order.torsion_free", [&] {
    return compare("the principal congruence subgroup at a prime above 2 is torsion free", true, torsion_free_check(2, 7));
  });

  // L-values and the covolume
  const DirichletCharacter chi = DirichletCharacter::from_discriminant(-7);
  step("lvalue.bernoulli", [&] { return derived("B_{3,chi_-7}", to_string(generalized_bernoulli(3, chi))); });
  const SymbolicReal l3 = dirichlet_L_value(3, chi);
  step("lvalue.closed_form", [&] {
    return flag_if_different("L(3, chi_-7) in closed form", to_string(printed_l_value()), to_string(l3),
                             "the stated constant is negative; the functional equation gives 32 * 7^(-7/2) * pi^3");
  });
  step("lvalue.series_oracle", [&] {
    SeriesEstimate s = l_series_oracle(3, chi, 1000000);
    RatInterval enc = sr_enclose(l3, 200);
    const Rat err = s.total_error();
    const bool agrees = s.partial_sum >= enc.lo() - err && s.partial_sum <= enc.hi() + err;
    return derived("truncated Dirichlet series agrees with the closed form",
                   {{"terms", s.terms}, {"partial_sum", FloatApprox{s.partial_sum, err}.to_decimal(15)},
                    {"error_bound", scientific(err)}, {"agrees", agrees}},
                   agrees);
  });
  step("lvalue.zeta2", [&] { return compare("zeta(2) = pi^2/6", "1/6*pi^2", to_string(riemann_zeta(2))); });
  VolumeInput vin = default_volume_input();
  vin.local_factors = cfg.local_factors;
  const Rat vol = covolume(vin);
  step("volume.covolume", [&] {
    return compare("covolume of Gamma_0 = 3/7", "3/7", to_string(vol),
                   "local factor product " + to_string(vin.local_factor_product()));
  });
  step("volume.with_stated_l_value", [&] {
    VolumeInput alt = vin;
    alt.l_value = printed_l_value();
    return derived("covolume evaluated with the stated L-value constant", to_string(covolume(alt)), true,
                   "negative, so the stated constant cannot be the L-value");
  });
  const Rat c2 = euler_number_of_cover(vol, cfg.congruence_index);
  step("volume.euler_number", [&] { return compare("c_2(X) = [Gamma_0 : Gamma] * covolume = 3", "3", to_string(c2)); });
  step("surface.fake_plane", [&] {
    SurfaceInvariants s = ball_quotient_invariants(c2, 0);
    Json computed = {{"c1_sq", to_string(s.c1_sq)}, {"chi", to_string(s.chi)}, {"p_g", to_string(s.p_g)},
                     {"kappa", nullptr}, {"fake_plane", false}};
    // non-integral invariants leave the plurigenera undefined
    if (s.plurigenera.contains(2) && s.plurigenera.contains(3)) {
      KodairaResult k = kodaira_classify(s);
      computed["kappa"] = k.kappa;
      computed["fake_plane"] = is_fake_projective_plane(s, k.kappa);
    }
    return compare("X is a fake projective plane", {{"c1_sq", "9"}, {"chi", "1"}, {"p_g", "0"}, {"kappa", 2}, {"fake_plane", true}},
                   computed);
  });

  // the quotient by Gamma
  const ClassDataset gamma = load_dataset(cfg.gamma_dataset, [] { return build_gamma_dataset(); });
  step("singularities.gamma_rotation", [&] {
    const FixedPointClass* first = nullptr;
    for (const auto& c : gamma.classes)
      if (c.r == 0) {
        first = &c;
        break;
      }
    if (first == nullptr) throw NotInImage("dataset has no isolated fixed points");
    CyclicSingularity t = singularity_type_from_rotation(first->normal_eigenvalues[0], first->normal_eigenvalues[1]);
    return compare("the fixed points of X_Gamma are of type (7,3)", "(7,3)", to_string(t.canonical()));
  });
  step("singularities.hj_7_3", [&] {
    return compare("resolution string of (7,3)", "(-3)(-2)(-2)", to_string(hj_expand(CyclicSingularity(7, 3))));
  });
  step("singularities.x_gamma_heights", [&] {
    return compare("orbifold heights of X_Gamma", {{"euler", "3/7"}, {"signature", "1/7"}}, heights_json(x_gamma()));
  });
  step("singularities.x_gamma_cover", [&] {
    return compare("c_2 and signature of X are [Gamma_0 : Gamma] times the heights", true,
                   check_cover_multiplicativity(c2, 1, x_gamma(), cfg.congruence_index));
  });
  step("singularities.x_gamma_resolved", [&] {
    return compare("resolved X_Gamma has e = 12, signature = -8", {{"euler", "12"}, {"signature", "-8"}, {"curves", 9}},
                   resolved_json(resolve_invariants(x_gamma())));
  });
  step("dimension.gamma_dataset", [&] {
    return compare("class dataset for Gamma agrees with its derivation", true,
                   to_json(gamma) == to_json(build_gamma_dataset()));
  });
  const long g2 = dimension(gamma, 2);
  const long g3 = dimension(gamma, 3);
  step("dimension.gamma_k2", [&] { return compare("P_2 of resolved X_Gamma", 1, g2); });
  step("dimension.gamma_k3", [&] { return compare("P_3 of resolved X_Gamma", 4, g3); });
  step("surface.x_gamma_kodaira", [&] {
    KodairaResult k = kodaira_classify(invariants_from_topology(12, -8, 0, 0, {{2, g2}, {3, g3}}));
    return compare("resolved X_Gamma is a minimal properly elliptic surface", {{"kappa", 1}, {"minimal", true}},
                   {{"kappa", k.kappa}, {"minimal", k.invariants.minimal}});
  });
  step("surface.x_gamma_fibration", [&] {
    EllipticFibration f = fibration_x_gamma();
    return compare("fibers of resolved X_Gamma account for e = 12 and its (-2)-curves",
                   {{"euler", true}, {"accounting", {{"ok", true}, {"problems", Json::array()}}}},
                   {{"euler", fibration_euler_check(f.fibers, f.expected_c2)},
                    {"accounting", accounting_json(fiber_component_accounting(f.fibers, f.exceptional_curves))}});
  });

  // the quotient by the normalizer
  step("singularities.x_gamma_tilde_heights", [&] {
    return compare("orbifold heights of X_Gamma_tilde", {{"euler", "1/7"}, {"signature", "1/21"}},
                   heights_json(x_gamma_tilde()));
  });
  step("singularities.x_gamma_tilde_cover", [&] {
    return compare("heights of X_Gamma are [Gamma_tilde : Gamma] times those of X_Gamma_tilde", true,
                   check_cover_multiplicativity(euler_height(x_gamma()), signature_height(x_gamma()), x_gamma_tilde(),
                                                cfg.normalizer_index));
  });
  step("singularities.branch_points", [&] {
    const OrbifoldSurface x = x_gamma_tilde();
    BranchSearch s = solve_branch_data(x.euler, x.signature, {CyclicSingularity(7, 3)}, euler_height(x),
                                       signature_height(x), 12);
    Json sols = Json::array();
    for (const auto& sol : s.solutions) sols.push_back(points_json(sol));
    ReportEntry e = compare("the remaining branch points are three of type (3,2)",
                            Json::array({Json::array({"(3,2)", "(3,2)", "(3,2)"})}), sols);
    e.note = std::to_string(s.euler_candidates.size()) + " multisets satisfy the Euler height equation";
    return e;
  });
  step("singularities.hj_3_2", [&] {
    return compare("resolution string of (3,2)", "(-2)(-2)", to_string(hj_expand(CyclicSingularity(3, 2))));
  });
  step("singularities.x_gamma_tilde_resolved", [&] {
    return compare("resolved X_Gamma_tilde has e = 12, signature = -8",
                   {{"euler", "12"}, {"signature", "-8"}, {"curves", 9}}, resolved_json(resolve_invariants(x_gamma_tilde())));
  });
  step("singularities.signature_defects", [&] {
    return derived("signature defects", {{"(7,3)", to_string(signature_defect(CyclicSingularity(7, 3)))},
                                         {"(3,2)", to_string(signature_defect(CyclicSingularity(3, 2)))}});
  });
  const ClassDataset gamma_tilde = load_dataset(cfg.gamma_tilde_dataset, [] { return build_gamma_tilde_dataset(); });
  step("dimension.gamma_tilde_dataset", [&] {
    return compare("class dataset for Gamma_tilde agrees with its derivation", true,
                   to_json(gamma_tilde) == to_json(build_gamma_tilde_dataset()));
  });
  const long t2 = dimension(gamma_tilde, 2);
  const long t3 = dimension(gamma_tilde, 3);
  step("dimension.gamma_tilde_k2", [&] { return compare("P_2 of resolved X_Gamma_tilde", 1, t2); });
  step("dimension.gamma_tilde_k3", [&] {
    return flag_if_different("P_3 of resolved X_Gamma_tilde", 1, t3,
                             "the dimension formula gives 2 under the only integral j-normalization; "
                             "the canonical bundle formula for the elliptic fibration gives P_3 = 1");
  });
  step("surface.x_gamma_tilde_kodaira", [&] {
    KodairaResult k = kodaira_classify(invariants_from_topology(12, -8, 0, 0, {{2, t2}, {3, t3}}));
    return compare("resolved X_Gamma_tilde is a minimal properly elliptic surface", {{"kappa", 1}, {"minimal", true}},
                   {{"kappa", k.kappa}, {"minimal", k.invariants.minimal}});
  });
  step("surface.x_gamma_tilde_fibration", [&] {
    EllipticFibration f = fibration_x_gamma_tilde();
    return compare("fibers of resolved X_Gamma_tilde account for e = 12 and its (-2)-curves",
                   {{"euler", true}, {"accounting", {{"ok", true}, {"problems", Json::array()}}}},
                   {{"euler", fibration_euler_check(f.fibers, f.expected_c2)},
                    {"accounting", accounting_json(fiber_component_accounting(f.fibers, f.exceptional_curves))}});
  });
  return rep;
}

std::string render_json(const VerificationReport& report, const std::string& timestamp) {
  const Json body = report.body();
  Json out = {{"report", body},
              {"metadata",
               {{"config_hash", fnv1a_hex(report.config.dump())},
                {"report_hash", fnv1a_hex(body.dump())},
                {"version", report.version},
                {"timestamp", timestamp}}}};
  return out.dump(2) + "\n";
}

std::string render_markdown(const VerificationReport& report) {
  auto cell = [](const Json& j) {
    std::string s = j.is_null() ? "" : j.is_string() ? j.get<std::string>() : j.dump();
    std::string out;
    for (char c : s) out += c == '|' ? std::string("\\|") : std::string(1, c);
    return out;
  };
  std::ostringstream md;
  md << "# Verification report\n\n";
  md << "version " << report.version << ", config hash " << fnv1a_hex(report.config.dump()) << "\n\n";
  md << "| id | claim | expected | computed | status |\n|---|---|---|---|---|\n";
  for (const auto& e : report.entries)
    md << "| " << e.id << " | " << cell(e.anchor) << " | " << cell(e.expected) << " | " << cell(e.computed) << " | "
       << to_string(e.status) << " |\n";
  bool notes = false;
  for (const auto& e : report.entries) {
    if (e.note.empty()) continue;
    if (!notes) md << "\n## Notes\n\n";
    notes = true;
    md << "- `" << e.id << "`: " << e.note << "\n";
  }
  return md.str();
}

}  // namespace fpp
