#include <CLI11.hpp>
#include <functional>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "padeu/compacta.hpp"
#include "padeu/json_io.hpp"

using namespace padeu;

namespace {

struct RunConfig {
  unsigned seed = 1;  // reserved for sweep drivers; CLI commands are deterministic
  std::string mode = "input";
  std::string out;
  std::string format = "json";
  Tolerances tol;
};

Cd parse_cd(const std::string& s) {
  std::istringstream is(s);
  double re = 0, im = 0;
  char c = 0;
  if (!(is >> re)) throw parse_error("bad complex literal: " + s);
  if (is >> c) {
    if (c != ',' || !(is >> im)) throw parse_error("bad complex literal: " + s);
  }
  return {re, im};
}

std::string with_suffix(const std::string& path, const std::string& tag) {
  auto dot = path.rfind('.');
  auto slash = path.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return path + "_" + tag;
  return path.substr(0, dot) + "_" + tag;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw pipeline_error("cannot write file: " + path);
  f << text;
}

void emit_text(const RunConfig& rc, const std::string& text) {
  if (rc.out.empty())
    std::cout << text;
  else
    write_file(rc.out, text);
}

void emit_json(const RunConfig& rc, const ojson& j) { emit_text(rc, j.dump(2) + "\n"); }

std::string g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string samples_csv(const std::vector<CompactSample>& ss) {
  std::string out = "label,re,im\n";
  for (const auto& s : ss)
    for (Cd z : s.points)
      out += s.label + "," + g17(z.real()) + "," + g17(z.imag()) + "\n";
  return out;
}

std::string samples_table(const std::vector<CompactSample>& ss) {
  std::string out;
  char buf[128];
  for (const auto& s : ss) {
    out += s.label + " (" + std::to_string(s.points.size()) + " points)\n";
    for (Cd z : s.points) {
      std::snprintf(buf, sizeof buf, "  %24.17g %24.17g\n", z.real(), z.imag());
      out += buf;
    }
  }
  return out;
}

// One file per sample when --out names a path; otherwise a JSON array.
void emit_samples(const RunConfig& rc, const std::vector<CompactSample>& ss) {
  if (rc.format == "csv") {
    emit_text(rc, samples_csv(ss));
    return;
  }
  if (rc.format == "table") {
    emit_text(rc, samples_table(ss));
    return;
  }
  if (rc.out.empty()) {
    ojson arr = ojson::array();
    for (const auto& s : ss) arr.push_back(sample_to_json(s));
    std::cout << arr.dump(2) << "\n";
    return;
  }
  ojson written = ojson::array();
  for (const auto& s : ss) {
    std::string path = with_suffix(rc.out, s.label + ".json");
    write_file(path, sample_to_json(s).dump(2) + "\n");
    written.push_back(path);
  }
  ojson summary;
  summary["written"] = written;
  std::cout << summary.dump(2) << "\n";
}

std::string err_table(const std::vector<double>& v) {
  std::string out = "# index error\n";
  for (size_t i = 0; i < v.size(); ++i) out += std::to_string(i) + " " + g17(v[i]) + "\n";
  return out;
}

void emit_witness(const RunConfig& rc, const UniversalWitness& w) {
  ojson j = witness_to_json(w);
  if (rc.out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  write_file(rc.out, j.dump(2) + "\n");
  std::string t2 = with_suffix(rc.out, "err_ii.txt");
  std::string t3 = with_suffix(rc.out, "err_iii.txt");
  write_file(t2, err_table(w.cert.err_ii_by_sample));
  write_file(t3, err_table(w.cert.err_iii_by_sample));
  ojson summary;
  summary["written"] = ojson::array({rc.out, t2, t3});
  summary["passes"] = w.cert.passes;
  std::cout << summary.dump(2) << "\n";
}

TaylorJet jet_convert(const TaylorJet& jet, const std::string& mode) {
  if (mode == "input") return jet;
  Mode want = mode == "exact" ? Mode::exact : Mode::floating;
  if (jet.mode() == want) return jet;
  TaylorJet out;
  if (want == Mode::floating) {
    out.center = jet.center.to_float();
    for (const auto& c : jet.coeffs) out.coeffs.push_back(c.to_float());
  } else {
    out.center = ComplexScalar::exact_from_cd(jet.center.to_cd());
    for (const auto& c : jet.coeffs) out.coeffs.push_back(ComplexScalar::exact_from_cd(c.to_cd()));
  }
  return out;
}

RationalFunction rational_convert(const RationalFunction& r, const std::string& mode) {
  if (mode == "input" || mode_name(r.mode()) == mode) return r;
  if (mode == "float") return r.to_float();
  auto embed = [](const Polynomial& p) {
    std::vector<ComplexScalar> c;
    for (const auto& x : p.coeffs()) c.push_back(ComplexScalar::exact_from_cd(x.to_cd()));
    return Polynomial(std::move(c), Mode::exact);
  };
  return RationalFunction(embed(r.num()), embed(r.den()));
}

struct PadeArgs {
  std::string jet_file, rational_file, zeta = "0";
  int p = 0, q = 0, order = -1;
};

TaylorJet load_jet(const PadeArgs& a, const RunConfig& rc) {
  if (!a.jet_file.empty()) return jet_convert(jet_from_json(load_json_file(a.jet_file)), rc.mode);
  if (a.rational_file.empty()) throw parse_error("need --jet or --rational");
  RationalFunction r = rational_convert(rational_from_json(load_json_file(a.rational_file)), rc.mode);
  Cd z = parse_cd(a.zeta);
  ComplexScalar zc = r.mode() == Mode::exact ? ComplexScalar::exact_from_cd(z) : ComplexScalar(z);
  int M = a.order >= 0 ? a.order : a.p + a.q;
  return jet_of_rational(r, zc, M, rc.tol);
}

GridSpec grid_from_flags(double x0, double x1, double y0, double y1, double h) {
  GridSpec g;
  g.x0 = x0;
  g.x1 = x1;
  g.y0 = y0;
  g.y1 = y1;
  g.h = h;
  if (!g.valid()) throw precondition_error("invalid grid flags");
  return g;
}

int run(int argc, char** argv) {
  CLI::App app{"Pade approximant certificates, compact-set constructions, universal witnesses"};
  app.require_subcommand(1);

  RunConfig rc;
  app.add_option("--seed", rc.seed, "seed for randomized sweeps (reserved)");
  app.add_option("--mode", rc.mode, "arithmetic for converted inputs")
      ->check(CLI::IsMember({"exact", "float", "input"}));
  app.add_option("--out", rc.out, "output path (some commands add suffixes)");
  app.add_option("--format", rc.format, "json|csv|table where applicable")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--tau-root", rc.tol.tau_root);
  app.add_option("--tau-inclusion", rc.tol.tau_inclusion);
  app.add_option("--tau-hankel", rc.tol.tau_hankel);
  app.add_option("--tau-e", rc.tol.tau_E);
  app.add_option("--tau-pole", rc.tol.tau_pole);
  app.add_option("--tau-verify", rc.tol.tau_verify);
  app.add_option("--rationalize-bits", rc.tol.rationalize_max_bits);

  // ---- pade ----
  auto* pade = app.add_subcommand("pade", "compute and test Pade approximants");
  pade->require_subcommand(1);
  PadeArgs pa;

  auto add_pade_io = [&](CLI::App* cmd, bool need_pq) {
    cmd->add_option("--jet", pa.jet_file, "Taylor jet JSON file");
    cmd->add_option("--rational", pa.rational_file, "rational function JSON file");
    cmd->add_option("--zeta", pa.zeta, "expansion center re[,im]");
    cmd->add_option("--order", pa.order, "jet order when expanding a rational input");
    auto* po = cmd->add_option("--p", pa.p, "numerator degree bound");
    auto* qo = cmd->add_option("--q", pa.q, "denominator degree bound");
    if (need_pq) {
      po->required();
      qo->required();
    }
  };

  auto* pc = pade->add_subcommand("compute", "emit the [p/q] approximant");
  add_pade_io(pc, true);
  pc->callback([&] { emit_json(rc, pade_to_json(pade_jacobi(load_jet(pa, rc), pa.p, pa.q, rc.tol))); });

  auto* ph = pade->add_subcommand("hankel", "emit the Hankel existence report");
  add_pade_io(ph, true);
  ph->callback([&] { emit_json(rc, hankel_to_json(hankel_det(load_jet(pa, rc), pa.p, pa.q, rc.tol))); });

  auto* pv = pade->add_subcommand("verify-prop22", "rational reproduction check");
  add_pade_io(pv, true);
  pv->callback([&] {
    if (pa.rational_file.empty()) throw parse_error("verify-prop22 needs --rational");
    RationalFunction phi =
        rational_convert(rational_from_json(load_json_file(pa.rational_file)), rc.mode);
    Cd z = parse_cd(pa.zeta);
    ComplexScalar zc =
        phi.mode() == Mode::exact ? ComplexScalar::exact_from_cd(z) : ComplexScalar(z);
    emit_json(rc, prop22_to_json(verify_prop22(phi, zc, pa.p, pa.q, rc.tol)));
  });

  // ---- compacta ----
  auto* comp = app.add_subcommand("compacta", "grid compact-set constructions");
  comp->require_subcommand(1);
  struct {
    std::string region, sample, omega, sreg, treg;
    int n = 1, m = 1;
    bool closure = false;
    double x0 = -2, x1 = 2, y0 = -2, y1 = 2, h = 0.125;
  } ca;

  auto add_grid_flags = [&](CLI::App* cmd) {
    cmd->add_option("--x0", ca.x0);
    cmd->add_option("--x1", ca.x1);
    cmd->add_option("--y0", ca.y0);
    cmd->add_option("--y1", ca.y1);
    cmd->add_option("--grid-h", ca.h, "grid spacing");
  };

  auto* ce = comp->add_subcommand("exhaust", "exhausting sequence L_1..L_n");
  ce->add_option("--region", ca.region, "region JSON file")->required();
  ce->add_option("--n", ca.n)->required();
  add_grid_flags(ce);
  ce->callback([&] {
    Region om = region_from_json(load_json_file(ca.region));
    auto ls = exhausting_sequence(om, grid_from_flags(ca.x0, ca.x1, ca.y0, ca.y1, ca.h), ca.n);
    emit_samples(rc, ls);
  });

  auto* cf = comp->add_subcommand("fill-holes", "adjoin bounded holes inside the region");
  cf->add_option("--sample", ca.sample, "CompactSample JSON file")->required();
  cf->add_option("--region", ca.region, "region JSON file")->required();
  cf->callback([&] {
    CompactSample s = sample_from_json(load_json_file(ca.sample));
    Region om = region_from_json(load_json_file(ca.region));
    emit_samples(rc, {fill_holes(s, om)});
  });

  auto* cc = comp->add_subcommand("complement", "complement exhaustion K_1..K_m");
  cc->add_option("--region", ca.region)->required();
  cc->add_option("--m", ca.m)->required();
  cc->add_flag("--closure", ca.closure, "exhaust the complement of the closure");
  add_grid_flags(cc);
  cc->callback([&] {
    Region om = region_from_json(load_json_file(ca.region));
    auto ks = complement_exhaustion(om, grid_from_flags(ca.x0, ca.x1, ca.y0, ca.y1, ca.h),
                                    ca.closure ? ComplementMode::off_closure : ComplementMode::off_omega,
                                    ca.m);
    emit_samples(rc, ks);
  });

  auto* cs = comp->add_subcommand("split", "boundary-split families around S and T");
  cs->add_option("--omega", ca.omega)->required();
  cs->add_option("--s-region", ca.sreg)->required();
  cs->add_option("--t-region", ca.treg)->required();
  cs->add_option("--n", ca.n)->required();
  add_grid_flags(cs);
  cs->callback([&] {
    Region om = region_from_json(load_json_file(ca.omega));
    Region S = region_from_json(load_json_file(ca.sreg));
    Region T = region_from_json(load_json_file(ca.treg));
    SplitSequences r =
        split_boundary_sequences(om, S, T, grid_from_flags(ca.x0, ca.x1, ca.y0, ca.y1, ca.h), ca.n);
    std::vector<CompactSample> all;
    for (auto& l : r.L) all.push_back(l);
    for (auto& k : r.K) all.push_back(k);
    if (rc.format != "json" || !rc.out.empty()) {
      emit_samples(rc, all);
      return;
    }
    ojson j;
    ojson ls = ojson::array(), ks = ojson::array(), as = ojson::array();
    for (const auto& l : r.L) ls.push_back(sample_to_json(l));
    for (const auto& k : r.K) ks.push_back(sample_to_json(k));
    for (double a : r.a) as.push_back(a);
    j["L"] = ls;
    j["K"] = ks;
    j["a"] = as;
    j["disjoint"] = true;  // construction throws otherwise
    std::cout << j.dump(2) << "\n";
  });

  auto* c46 = comp->add_subcommand("example46", "half-disk boundary example sets");
  c46->add_option("--n", ca.n)->required();
  add_grid_flags(c46);
  c46->callback([&] {
    auto [L, K] = example_46_sets(grid_from_flags(ca.x0, ca.x1, ca.y0, ca.y1, ca.h), ca.n);
    if (rc.format != "json" || !rc.out.empty()) {
      emit_samples(rc, {L, K});
      return;
    }
    ojson j;
    j["L"] = sample_to_json(L);
    j["K"] = sample_to_json(K);
    j["disjoint"] = samples_disjoint(L, K, 0.0);
    std::cout << j.dump(2) << "\n";
  });

  // ---- universal ----
  auto* uni = app.add_subcommand("universal", "universal witness construction and verification");
  uni->require_subcommand(1);
  struct {
    std::string problem, witness;
    double eps = 1e-3;
    int n = 2;
    double h = 0.125;
  } ua;

  auto* uc = uni->add_subcommand("construct", "rational-target construction");
  uc->add_option("--problem", ua.problem)->required();
  uc->callback([&] {
    emit_witness(rc, construct_candidate(problem_from_json(load_json_file(ua.problem)), rc.tol));
  });

  auto* up = uni->add_subcommand("construct-poly", "polynomial-target construction");
  up->add_option("--problem", ua.problem)->required();
  up->callback([&] {
    emit_witness(rc, construct_candidate_poly(problem_from_json(load_json_file(ua.problem)), rc.tol));
  });

  auto* uv = uni->add_subcommand("verify", "re-run the certificate for a witness");
  uv->add_option("--problem", ua.problem)->required();
  uv->add_option("--witness", ua.witness)->required();
  uv->callback([&] {
    ConstructionProblem pr = problem_from_json(load_json_file(ua.problem));
    UniversalWitness w = witness_from_json(load_json_file(ua.witness));
    Certificate c = verify_certificate(w.f, w.cert.p, w.cert.q, pr.L, pr.K, pr.h, pr.s, pr.eps,
                                       pr.metric, rc.tol);
    emit_json(rc, cert_to_json(c));
  });

  auto* ud = uni->add_subcommand("demo", "worked demonstrations");
  ud->require_subcommand(1);
  auto* ub = ud->add_subcommand("boundary-split", "universal on one boundary arc, faithful on the other");
  ub->add_option("--eps", ua.eps, "target accuracy");
  ub->add_option("--n", ua.n, "example46 index n");
  ub->add_option("--grid-h", ua.h, "grid spacing");
  ub->callback([&] {
    GridSpec grid = grid_from_flags(-2, 2, -2, 2, ua.h);
    auto [L, K] = example_46_sets(grid, ua.n);
    // Outer/lower patch of K_1, far enough from L that a moderate-degree
    // monomial fit can hold g on L and h on K simultaneously.
    CompactSample Kcut;
    Kcut.label = K.label;
    Kcut.grid = K.grid;
    for (Cd z : K.points)
      if (std::abs(z - Cd{1.8, -1.8}) <= 0.45) Kcut.points.push_back(z);
    Kcut.normalize();
    ConstructionProblem pr;
    pr.L = L;
    pr.K = Kcut;
    pr.g = RationalFunction::zero(Mode::exact);
    pr.h = RationalFunction::from_poly(
        Polynomial::monomial(2, ComplexScalar::one(Mode::exact)));
    pr.F = IndexSetF::fixed_q(1);
    pr.s = 1;
    pr.eps = ua.eps;
    pr.metric = Metric::euclidean;
    emit_witness(rc, construct_candidate_poly(pr, rc.tol));
  });

  // Let global flags (--out, --mode, ...) appear after the subcommand too.
  std::function<void(CLI::App*)> allow_globals = [&](CLI::App* a) {
    a->fallthrough();
    for (CLI::App* s : a->get_subcommands([](CLI::App*) { return true; })) allow_globals(s);
  };
  allow_globals(&app);

  try {
    app.parse(argc, argv);
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    ojson err;
    err["error"] = {{"kind", "parse"}, {"message", e.what()}};
    std::cout << err.dump(2) << "\n";
    return 4;
  }
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const parse_error& e) {
    ojson err;
    err["error"] = {{"kind", "parse"}, {"message", e.what()}};
    std::cout << err.dump(2) << "\n";
    return 4;
  } catch (const precondition_error& e) {
    ojson err;
    err["error"] = {{"kind", "precondition"}, {"message", e.what()}};
    std::cout << err.dump(2) << "\n";
    return 2;
  } catch (const pipeline_error& e) {
    ojson err;
    err["error"] = {{"kind", "pipeline"}, {"message", e.what()}};
    std::cout << err.dump(2) << "\n";
    return 3;
  } catch (const std::exception& e) {
    ojson err;
    err["error"] = {{"kind", "internal"}, {"message", e.what()}};
    std::cout << err.dump(2) << "\n";
    return 1;
  }
}
