#include "padeu/json_io.hpp"

#include <fstream>
#include <sstream>

namespace padeu {

namespace {

[[noreturn]] void bad(const std::string& what) { throw parse_error("bad JSON: " + what); }

const ojson& field(const ojson& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

double num(const ojson& j, const char* what) {
  if (!j.is_number()) bad(std::string(what) + " must be a number");
  return j.get<double>();
}

int integer(const ojson& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

Mode mode_from_string(const std::string& s) {
  if (s == "exact") return Mode::exact;
  if (s == "float") return Mode::floating;
  bad("mode must be \"exact\" or \"float\"");
}

}  // namespace

ojson double_to_json(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double double_from_json(const ojson& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  bad("expected a number or inf/nan string");
}

ojson scalar_to_json(const ComplexScalar& v) {
  if (v.is_exact()) return ojson::array({rat_str(v.xval().re), rat_str(v.xval().im)});
  Cd z = v.fval();
  return ojson::array({z.real(), z.imag()});
}

ComplexScalar scalar_from_json(const ojson& j, Mode m) {
  if (!j.is_array() || j.size() != 2) bad("scalar must be a [re, im] pair");
  if (m == Mode::exact) {
    if (!j[0].is_string() || !j[1].is_string()) bad("exact scalar parts must be \"num/den\" strings");
    return ComplexScalar(
        ExactComplex{rat_parse(j[0].get<std::string>()), rat_parse(j[1].get<std::string>())});
  }
  return ComplexScalar(Cd(num(j[0], "re"), num(j[1], "im")));
}

ojson cd_to_json(Cd z) { return ojson::array({z.real(), z.imag()}); }

Cd cd_from_json(const ojson& j) {
  if (!j.is_array() || j.size() != 2) bad("point must be a [x, y] pair");
  return {num(j[0], "x"), num(j[1], "y")};
}

ojson poly_to_json(const Polynomial& p) {
  ojson j;
  j["mode"] = mode_name(p.mode());
  ojson cs = ojson::array();
  for (const auto& c : p.coeffs()) cs.push_back(scalar_to_json(c));
  j["coeffs"] = cs;
  return j;
}

Polynomial poly_from_json(const ojson& j) {
  Mode m = mode_from_string(field(j, "mode").get<std::string>());
  const ojson& cs = field(j, "coeffs");
  if (!cs.is_array()) bad("coeffs must be an array");
  std::vector<ComplexScalar> v;
  for (const auto& c : cs) v.push_back(scalar_from_json(c, m));
  return Polynomial(std::move(v), m);
}

ojson rational_to_json(const RationalFunction& r) {
  ojson j;
  j["num"] = poly_to_json(r.num());
  j["den"] = poly_to_json(r.den());
  return j;
}

RationalFunction rational_from_json(const ojson& j) {
  return RationalFunction(poly_from_json(field(j, "num")), poly_from_json(field(j, "den")));
}

ojson jet_to_json(const TaylorJet& jet) {
  ojson j;
  j["mode"] = mode_name(jet.mode());
  j["center"] = scalar_to_json(jet.center);
  ojson cs = ojson::array();
  for (const auto& c : jet.coeffs) cs.push_back(scalar_to_json(c));
  j["coeffs"] = cs;
  return j;
}

TaylorJet jet_from_json(const ojson& j) {
  Mode m = mode_from_string(field(j, "mode").get<std::string>());
  TaylorJet jet;
  jet.center = scalar_from_json(field(j, "center"), m);
  const ojson& cs = field(j, "coeffs");
  if (!cs.is_array()) bad("coeffs must be an array");
  for (const auto& c : cs) jet.coeffs.push_back(scalar_from_json(c, m));
  jet.check();
  return jet;
}

ojson grid_to_json(const GridSpec& g) {
  ojson j;
  j["x0"] = g.x0;
  j["x1"] = g.x1;
  j["y0"] = g.y0;
  j["y1"] = g.y1;
  j["h"] = g.h;
  return j;
}

GridSpec grid_from_json(const ojson& j) {
  GridSpec g;
  g.x0 = num(field(j, "x0"), "x0");
  g.x1 = num(field(j, "x1"), "x1");
  g.y0 = num(field(j, "y0"), "y0");
  g.y1 = num(field(j, "y1"), "y1");
  g.h = num(field(j, "h"), "h");
  if (!g.valid()) bad("invalid grid");
  return g;
}

ojson sample_to_json(const CompactSample& s) {
  ojson j;
  j["label"] = s.label;
  j["grid"] = grid_to_json(s.grid);
  ojson pts = ojson::array();
  for (Cd z : s.points) pts.push_back(cd_to_json(z));
  j["points"] = pts;
  return j;
}

CompactSample sample_from_json(const ojson& j) {
  CompactSample s;
  s.label = field(j, "label").get<std::string>();
  s.grid = grid_from_json(field(j, "grid"));
  const ojson& pts = field(j, "points");
  if (!pts.is_array()) bad("points must be an array");
  for (const auto& p : pts) s.points.push_back(cd_from_json(p));
  s.normalize();
  return s;
}

ojson region_to_json(const Region& r) {
  ojson j;
  switch (r.kind) {
    case Region::Kind::disk:
      j["type"] = "disk";
      j["center"] = cd_to_json(r.center);
      j["r"] = r.r0;
      j["closed"] = r.closed;
      break;
    case Region::Kind::halfplane:
      j["type"] = "halfplane";
      j["normal"] = cd_to_json(r.normal);
      j["offset"] = r.offset;
      j["closed"] = r.closed;
      break;
    case Region::Kind::annulus:
      j["type"] = "annulus";
      j["center"] = cd_to_json(r.center);
      j["r0"] = r.r0;
      j["r1"] = r.r1;
      j["closed"] = r.closed;
      break;
    case Region::Kind::sector:
      j["type"] = "sector";
      j["center"] = cd_to_json(r.center);
      j["r0"] = r.r0;
      j["r1"] = r.r1;
      j["theta0"] = r.th0;
      j["theta1"] = r.th1;
      j["closed"] = r.closed;
      break;
    case Region::Kind::runion:
    case Region::Kind::rintersection: {
      j["type"] = r.kind == Region::Kind::runion ? "union" : "intersection";
      ojson parts = ojson::array();
      for (const auto& c : r.children) parts.push_back(region_to_json(c));
      j["parts"] = parts;
      break;
    }
    case Region::Kind::rcomplement:
      j["type"] = "complement";
      j["of"] = region_to_json(r.children.at(0));
      break;
  }
  return j;
}

Region region_from_json(const ojson& j) {
  std::string type = field(j, "type").get<std::string>();
  bool closed = j.value("closed", true);
  if (type == "disk")
    return Region::disk(cd_from_json(field(j, "center")), num(field(j, "r"), "r"), closed);
  if (type == "halfplane")
    return Region::halfplane(cd_from_json(field(j, "normal")), num(field(j, "offset"), "offset"),
                             closed);
  if (type == "annulus")
    return Region::annulus(cd_from_json(field(j, "center")), num(field(j, "r0"), "r0"),
                           num(field(j, "r1"), "r1"), closed);
  if (type == "sector")
    return Region::sector(cd_from_json(field(j, "center")), num(field(j, "r0"), "r0"),
                          num(field(j, "r1"), "r1"), num(field(j, "theta0"), "theta0"),
                          num(field(j, "theta1"), "theta1"), closed);
  if (type == "union" || type == "intersection") {
    const ojson& parts = field(j, "parts");
    if (!parts.is_array() || parts.empty()) bad("parts must be a nonempty array");
    std::vector<Region> rs;
    for (const auto& p : parts) rs.push_back(region_from_json(p));
    return type == "union" ? Region::unite(std::move(rs)) : Region::intersect(std::move(rs));
  }
  if (type == "complement") return Region::complement(region_from_json(field(j, "of")));
  bad("unknown region type '" + type + "'");
}

ojson hankel_to_json(const HankelReport& h) {
  ojson j;
  j["p"] = h.p;
  j["q"] = h.q;
  j["zeta"] = scalar_to_json(h.zeta);
  j["det"] = scalar_to_json(h.det);
  j["in_D"] = h.in_D;
  j["margin"] = double_to_json(h.margin);
  return j;
}

ojson pade_to_json(const PadeApproximant& p) {
  ojson j;
  j["p"] = p.p;
  j["q"] = p.q;
  j["zeta"] = scalar_to_json(p.zeta);
  j["A"] = poly_to_json(p.A);
  j["B"] = poly_to_json(p.B);
  j["source"] = p.source == PadeSource::jacobi ? "jacobi" : "solve";
  return j;
}

ojson prop22_to_json(const Prop22Report& r) {
  ojson j;
  j["k"] = r.k;
  j["lambda"] = r.lambda;
  j["in_D"] = r.in_D;
  j["reproduced"] = r.reproduced;
  return j;
}

ojson tol_to_json(const Tolerances& t) {
  ojson j;
  j["tau_root"] = t.tau_root;
  j["tau_inclusion"] = t.tau_inclusion;
  j["tau_hankel"] = t.tau_hankel;
  j["tau_E"] = t.tau_E;
  j["tau_pole"] = t.tau_pole;
  j["tau_verify"] = t.tau_verify;
  j["rationalize_max_bits"] = t.rationalize_max_bits;
  return j;
}

Tolerances tol_from_json(const ojson& j) {
  Tolerances t;
  t.tau_root = j.value("tau_root", t.tau_root);
  t.tau_inclusion = j.value("tau_inclusion", t.tau_inclusion);
  t.tau_hankel = j.value("tau_hankel", t.tau_hankel);
  t.tau_E = j.value("tau_E", t.tau_E);
  t.tau_pole = j.value("tau_pole", t.tau_pole);
  t.tau_verify = j.value("tau_verify", t.tau_verify);
  t.rationalize_max_bits = j.value("rationalize_max_bits", t.rationalize_max_bits);
  return t;
}

ojson fset_to_json(const IndexSetF& f) {
  ojson j;
  ojson pairs = ojson::array();
  for (auto [p, q] : f.pairs) pairs.push_back(ojson::array({p, q}));
  j["pairs"] = pairs;
  ojson rules = ojson::array();
  for (const auto& r : f.rules) {
    ojson rj;
    if (r.kind == FRule::Kind::diagonal) {
      rj["kind"] = "diagonal";
    } else {
      rj["kind"] = "fixed_q";
      rj["q"] = r.q;
    }
    rules.push_back(rj);
  }
  j["rules"] = rules;
  return j;
}

IndexSetF fset_from_json(const ojson& j) {
  IndexSetF f;
  const ojson& pairs = field(j, "pairs");
  if (!pairs.is_array()) bad("F.pairs must be an array");
  for (const auto& p : pairs) {
    if (!p.is_array() || p.size() != 2) bad("F pair must be [p, q]");
    f.pairs.emplace_back(integer(p[0], "p"), integer(p[1], "q"));
  }
  if (j.contains("rules")) {
    for (const auto& r : j.at("rules")) {
      std::string kind = field(r, "kind").get<std::string>();
      if (kind == "diagonal")
        f.rules.push_back({FRule::Kind::diagonal, 0});
      else if (kind == "fixed_q")
        f.rules.push_back({FRule::Kind::fixed_q, integer(field(r, "q"), "q")});
      else
        bad("unknown F rule kind '" + kind + "'");
    }
  }
  return f;
}

ojson problem_to_json(const ConstructionProblem& p) {
  ojson j;
  j["L"] = sample_to_json(p.L);
  j["K"] = sample_to_json(p.K);
  j["g"] = rational_to_json(p.g);
  j["h"] = rational_to_json(p.h);
  j["F"] = fset_to_json(p.F);
  j["s"] = p.s;
  j["eps"] = p.eps;
  j["metric"] = metric_name(p.metric);
  return j;
}

ConstructionProblem problem_from_json(const ojson& j) {
  ConstructionProblem p;
  p.L = sample_from_json(field(j, "L"));
  p.K = sample_from_json(field(j, "K"));
  p.g = rational_from_json(field(j, "g"));
  p.h = rational_from_json(field(j, "h"));
  p.F = fset_from_json(field(j, "F"));
  p.s = integer(field(j, "s"), "s");
  p.eps = num(field(j, "eps"), "eps");
  std::string metric = j.value("metric", "chordal");
  if (metric == "chordal")
    p.metric = Metric::chordal;
  else if (metric == "euclidean")
    p.metric = Metric::euclidean;
  else
    bad("metric must be \"chordal\" or \"euclidean\"");
  return p;
}

ojson cert_to_json(const Certificate& c) {
  ojson j;
  j["p"] = c.p;
  j["q"] = c.q;
  j["s"] = c.s;
  j["eps"] = c.eps;
  j["metric"] = c.metric;
  j["arithmetic"] = c.arithmetic;
  j["passes"] = c.passes;
  j["all_in_D"] = c.all_in_D;
  j["exact_reproduction"] = c.exact_reproduction;
  j["hankel_min_margin"] = double_to_json(c.hankel_min_margin);
  j["e_margin"] = double_to_json(c.e_margin);
  j["err_ii"] = double_to_json(c.err_ii);
  ojson per_l = ojson::array();
  for (double v : c.err_ii_per_l) per_l.push_back(double_to_json(v));
  j["err_ii_per_l"] = per_l;
  j["err_iii"] = double_to_json(c.err_iii);
  j["err_fit"] = double_to_json(c.err_fit);
  j["perturbation"] = double_to_json(c.perturbation);
  j["d"] = cd_to_json(c.d);
  j["T"] = c.T;
  ojson hm = ojson::array();
  for (double v : c.hankel_margins) hm.push_back(double_to_json(v));
  j["hankel_margins"] = hm;
  ojson e2 = ojson::array();
  for (double v : c.err_ii_by_sample) e2.push_back(double_to_json(v));
  j["err_ii_by_sample"] = e2;
  ojson e3 = ojson::array();
  for (double v : c.err_iii_by_sample) e3.push_back(double_to_json(v));
  j["err_iii_by_sample"] = e3;
  j["failures"] = c.failures;
  j["tolerances"] = tol_to_json(c.tol);
  return j;
}

Certificate cert_from_json(const ojson& j) {
  Certificate c;
  c.p = integer(field(j, "p"), "p");
  c.q = integer(field(j, "q"), "q");
  c.s = j.value("s", 0);
  c.eps = j.value("eps", 0.0);
  c.metric = j.value("metric", "chordal");
  c.arithmetic = j.value("arithmetic", "exact");
  c.passes = j.value("passes", false);
  c.all_in_D = j.value("all_in_D", false);
  c.exact_reproduction = j.value("exact_reproduction", false);
  if (j.contains("hankel_min_margin")) c.hankel_min_margin = double_from_json(j.at("hankel_min_margin"));
  if (j.contains("e_margin")) c.e_margin = double_from_json(j.at("e_margin"));
  if (j.contains("err_ii")) c.err_ii = double_from_json(j.at("err_ii"));
  if (j.contains("err_ii_per_l"))
    for (const auto& v : j.at("err_ii_per_l")) c.err_ii_per_l.push_back(double_from_json(v));
  if (j.contains("err_iii")) c.err_iii = double_from_json(j.at("err_iii"));
  if (j.contains("err_fit")) c.err_fit = double_from_json(j.at("err_fit"));
  if (j.contains("perturbation")) c.perturbation = double_from_json(j.at("perturbation"));
  if (j.contains("d")) c.d = cd_from_json(j.at("d"));
  c.T = j.value("T", 0);
  if (j.contains("hankel_margins"))
    for (const auto& v : j.at("hankel_margins")) c.hankel_margins.push_back(double_from_json(v));
  if (j.contains("err_ii_by_sample"))
    for (const auto& v : j.at("err_ii_by_sample")) c.err_ii_by_sample.push_back(double_from_json(v));
  if (j.contains("err_iii_by_sample"))
    for (const auto& v : j.at("err_iii_by_sample")) c.err_iii_by_sample.push_back(double_from_json(v));
  if (j.contains("failures"))
    for (const auto& f : j.at("failures")) c.failures.push_back(f.get<std::string>());
  if (j.contains("tolerances")) c.tol = tol_from_json(j.at("tolerances"));
  return c;
}

ojson witness_to_json(const UniversalWitness& w) {
  ojson j;
  j["f"] = rational_to_json(w.f);
  j["certificate"] = cert_to_json(w.cert);
  ojson ladder;
  ojson ds = ojson::array();
  for (double v : w.ladder_d) ds.push_back(double_to_json(v));
  ladder["d"] = ds;
  ojson ps = ojson::array();
  for (double v : w.ladder_perturbation) ps.push_back(double_to_json(v));
  ladder["perturbation"] = ps;
  j["ladder"] = ladder;
  return j;
}

UniversalWitness witness_from_json(const ojson& j) {
  UniversalWitness w;
  w.f = rational_from_json(field(j, "f"));
  w.cert = cert_from_json(field(j, "certificate"));
  if (j.contains("ladder")) {
    const ojson& l = j.at("ladder");
    if (l.contains("d"))
      for (const auto& v : l.at("d")) w.ladder_d.push_back(double_from_json(v));
    if (l.contains("perturbation"))
      for (const auto& v : l.at("perturbation")) w.ladder_perturbation.push_back(double_from_json(v));
  }
  return w;
}

ojson parse_json_text(const std::string& text) {
  ojson j = ojson::parse(text, nullptr, false);
  if (j.is_discarded()) throw parse_error("malformed JSON input");
  return j;
}

ojson load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_json_text(os.str());
}

}  // namespace padeu
