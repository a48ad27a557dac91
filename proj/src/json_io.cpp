#include "fpp/json_io.hpp"

#include <cctype>
#include <fstream>

namespace fpp {

namespace {

template <class T>
T field(const Json& j, const char* key, const char* context) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError(std::string(context) + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string(context) + ": field '" + key + "': " + e.what());
  }
}

Rat rat_field(const Json& j, const char* key, const char* context) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError(std::string(context) + ": missing field '" + key + "'");
  return rat_from_json(j.at(key));
}

class ExprParser {
 public:
  explicit ExprParser(std::string text) : s_(std::move(text)) {}

  CycElt parse() {
    CycElt v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError("expression '" + s_ + "' at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  CycElt expr() {
    CycElt v = term();
    for (;;) {
      if (accept('+')) v += term();
      else if (accept('-')) v -= term();
      else return v;
    }
  }
  CycElt term() {
    CycElt v = factor();
    for (;;) {
      if (accept('*')) {
        v *= factor();
      } else if (accept('/')) {
        CycElt d = factor();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }
  CycElt factor() {
    if (accept('-')) return -factor();
    CycElt b = base();
    if (accept('^')) {
      bool neg = accept('-');
      long e = integer();
      if (neg && b.is_zero()) fail("zero to a negative power");
      b = b.pow(neg ? -e : e);
    }
    return b;
  }
  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 9) fail("integer exponent too large");
    return std::stol(s_.substr(start, pos_ - start));
  }
  CycElt base() {
    skip();
    if (accept('(')) {
      CycElt v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return CycElt(Rat(Int(s_.substr(start, pos_ - start))));
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    const std::string id = s_.substr(start, pos_ - start);
    if (id == "lambda") return lambda();
    if (id == "lambda_bar") return lambda_bar();
    if (id == "zeta") return CycElt::zeta(7);
    if (id == "alpha") return alpha();
    pos_ = start;
    fail(id.empty() ? "expected a value" : "unknown name '" + id + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Json to_json(const Rat& q) { return to_string(q); }

Json to_json(const SymbolicReal& x) {
  Json out = Json::array();
  for (const auto& [key, coeff] : x.terms())
    out.push_back({{"pi", key.pi_power},
                   {"seven_half", key.seven_half_power},
                   {"num", coeff.get_num().get_str()},
                   {"den", coeff.get_den().get_str()}});
  return out;
}

Json to_json(const CycElt& a) {
  Json coeffs = Json::array();
  for (const Rat& c : a.coeffs()) coeffs.push_back(to_string(c));
  return {{"modulus", a.modulus()}, {"coeffs", coeffs}};
}

Json to_json(const AlgElt& a) { return {{"alpha", to_json(a.alpha())}, {"x", {to_json(a[0]), to_json(a[1]), to_json(a[2])}}}; }

Json to_json(const RootOfUnity& r) {
  RootOfUnity n = r.normalized();
  return Json::array({n.modulus, n.exponent});
}

Json to_json(const FixedPointClass& c) {
  Json nus = Json::array();
  for (const auto& nu : c.normal_eigenvalues) nus.push_back(to_json(nu));
  return {{"label", c.label},        {"r", c.r}, {"virtual_euler", to_string(c.virtual_euler)},
          {"j", to_json(c.j)},       {"m", c.m}, {"normal_eigenvalues", nus}};
}

Json to_json(const ClassDataset& d) {
  Json classes = Json::array();
  for (const auto& c : d.classes) classes.push_back(to_json(c));
  return {{"label", d.label},
          {"cyclotomic_modulus", d.cyclotomic_modulus},
          {"j_normalization", d.j_normalization},
          {"classes", classes}};
}

Json to_json(const OrbifoldSurface& x) {
  Json points = Json::array();
  for (const auto& p : x.points) points.push_back({{"label", p.label}, {"n", p.type.n}, {"q", p.type.q}});
  return {{"label", x.label}, {"euler", to_string(x.euler)}, {"signature", to_string(x.signature)}, {"points", points}};
}

Json to_json(const SurfaceInvariants& s) {
  Json pk = Json::object();
  for (const auto& [k, v] : s.plurigenera) pk[std::to_string(k)] = v;
  return {{"label", s.label},          {"c2", to_string(s.c2)},     {"c1_sq", to_string(s.c1_sq)},
          {"q", to_string(s.q_irr)},   {"p_g", to_string(s.p_g)},   {"chi", to_string(s.chi)},
          {"signature", to_string(s.signature)}, {"plurigenera", pk}, {"minimal", s.minimal}};
}

Json to_json(const EllipticFibration& f) {
  Json curves = Json::array();
  for (const auto& c : f.exceptional_curves) curves.push_back({{"label", c.label}, {"self_intersection", c.self_intersection}});
  Json fibers = Json::array();
  for (const auto& k : f.fibers) {
    Json fj = {{"label", k.label}, {"kind", k.kind == KodairaFiber::Kind::I ? "I" : "smooth"},
               {"multiplicity", k.multiplicity}, {"components", k.components}};
    if (k.kind == KodairaFiber::Kind::I) fj["n"] = k.n;
    fibers.push_back(fj);
  }
  return {{"surface", f.surface}, {"expected_c2", to_string(f.expected_c2)}, {"exceptional_curves", curves},
          {"fibers", fibers}};
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long long>())));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw ConfigError("expected a rational as an integer or a \"p/q\" string, got " + j.dump());
}

SymbolicReal symbolic_from_json(const Json& j) {
  if (!j.is_array()) throw ConfigError("symbolic real: expected an array of terms");
  SymbolicReal out;
  for (const Json& t : j) {
    const Rat coeff = parse_rat(field<std::string>(t, "num", "symbolic term") + "/" +
                                field<std::string>(t, "den", "symbolic term"));
    out = out + SymbolicReal::monomial(coeff, field<int>(t, "pi", "symbolic term"),
                                       field<int>(t, "seven_half", "symbolic term"));
  }
  return out;
}

CycElt cyc_from_json(const Json& j) {
  if (j.is_string()) return parse_cyc_expression(j.get<std::string>());
  int modulus = field<int>(j, "modulus", "cyclotomic element");
  if (modulus < 1) throw ConfigError("cyclotomic element: modulus must be positive");
  std::vector<Rat> coeffs;
  for (const Json& c : field<Json>(j, "coeffs", "cyclotomic element")) coeffs.push_back(rat_from_json(c));
  return CycElt(modulus, std::move(coeffs));
}

AlgElt alg_from_json(const Json& j) {
  Json x = field<Json>(j, "x", "algebra element");
  if (!x.is_array() || x.size() != 3) throw ConfigError("algebra element: 'x' must hold three coefficients");
  return AlgElt(cyc_from_json(field<Json>(j, "alpha", "algebra element")), cyc_from_json(x[0]), cyc_from_json(x[1]),
                cyc_from_json(x[2]));
}

RootOfUnity root_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw ConfigError("root of unity: expected [modulus, exponent], got " + j.dump());
  int modulus = j[0].get<int>();
  if (modulus < 1) throw ConfigError("root of unity: modulus must be positive");
  return RootOfUnity{modulus, j[1].get<long>()}.normalized();
}

ClassDataset dataset_from_json(const Json& j) {
  ClassDataset d;
  d.label = field<std::string>(j, "label", "dataset");
  d.cyclotomic_modulus = field<int>(j, "cyclotomic_modulus", "dataset");
  d.j_normalization = field<std::string>(j, "j_normalization", "dataset");
  for (const Json& cj : field<Json>(j, "classes", "dataset")) {
    FixedPointClass c;
    c.label = field<std::string>(cj, "label", "class");
    c.r = field<int>(cj, "r", "class");
    c.virtual_euler = rat_field(cj, "virtual_euler", "class");
    c.j = root_from_json(field<Json>(cj, "j", "class"));
    c.m = field<int>(cj, "m", "class");
    for (const Json& nu : field<Json>(cj, "normal_eigenvalues", "class")) c.normal_eigenvalues.push_back(root_from_json(nu));
    try {
      c.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    d.classes.push_back(std::move(c));
  }
  return d;
}

OrbifoldSurface orbifold_from_json(const Json& j) {
  OrbifoldSurface x;
  x.label = field<std::string>(j, "label", "orbifold");
  x.euler = rat_field(j, "euler", "orbifold");
  x.signature = rat_field(j, "signature", "orbifold");
  for (const Json& p : field<Json>(j, "points", "orbifold")) {
    try {
      x.points.push_back({field<std::string>(p, "label", "point"),
                          CyclicSingularity(field<int>(p, "n", "point"), field<int>(p, "q", "point"))});
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("orbifold point: ") + e.what());
    }
  }
  return x;
}

EllipticFibration fibration_from_json(const Json& j) {
  EllipticFibration f;
  f.surface = field<std::string>(j, "surface", "fibers");
  f.expected_c2 = rat_field(j, "expected_c2", "fibers");
  for (const Json& c : field<Json>(j, "exceptional_curves", "fibers"))
    f.exceptional_curves.push_back({field<std::string>(c, "label", "curve"), field<int>(c, "self_intersection", "curve")});
  for (const Json& fj : field<Json>(j, "fibers", "fibers")) {
    KodairaFiber k;
    k.label = field<std::string>(fj, "label", "fiber");
    const auto kind = field<std::string>(fj, "kind", "fiber");
    if (kind == "I") {
      k.kind = KodairaFiber::Kind::I;
      k.n = field<int>(fj, "n", "fiber");
      if (k.n < 1) throw ConfigError("fiber " + k.label + ": I_n needs n >= 1");
    } else if (kind != "smooth") {
      throw ConfigError("fiber " + k.label + ": unsupported kind '" + kind + "'");
    }
    k.multiplicity = fj.value("multiplicity", 1);
    k.components = fj.value("components", std::vector<std::string>{});
    f.fibers.push_back(std::move(k));
  }
  return f;
}

SurfaceInvariants invariants_from_json(const Json& j) {
  SurfaceInvariants s;
  if (j.contains("ball_quotient")) {
    const Json& b = j.at("ball_quotient");
    s = ball_quotient_invariants(rat_field(b, "c2", "ball_quotient"), rat_field(b, "q", "ball_quotient"));
  } else {
    std::map<int, long> pk;
    const Json plurigenera = field<Json>(j, "plurigenera", "invariants");
    for (const auto& [k, v] : plurigenera.items()) {
      try {
        pk[std::stoi(k)] = v.get<long>();
      } catch (const std::exception&) {
        throw ConfigError("invariants: bad plurigenus entry '" + k + "'");
      }
    }
    s = invariants_from_topology(rat_field(j, "euler", "invariants"), rat_field(j, "signature", "invariants"),
                                 rat_field(j, "q", "invariants"), rat_field(j, "p_g", "invariants"), std::move(pk));
    s.minimal = j.value("minimal", false);
  }
  s.label = j.value("label", s.label);
  return s;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

CycElt parse_cyc_expression(const std::string& text) { return ExprParser(text).parse(); }

}  // namespace fpp
