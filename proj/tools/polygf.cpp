#include <CLI11.hpp>
#include <fmt/format.h>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "polygf/expression.hpp"
#include "polygf/geometry.hpp"
#include "polygf/harness.hpp"
#include "polygf/jumps.hpp"

using namespace polygf;
using json = nlohmann::ordered_json;

namespace {

json cjson(Complex z) { return json{{"re", double(z.real())}, {"im", double(z.imag())}}; }

struct Args {
  std::string tau = "i";
  std::vector<std::string> z;
  std::vector<std::string> zpos;  // positional, after --z values
  std::string format = "json";
  long long nmax_override = 0;
};

std::vector<Complex> parse_z(const Args& a, Complex tau) {
  std::vector<Complex> out;
  for (const auto& s : a.z) out.push_back(parse_complex(s, tau));
  for (const auto& s : a.zpos) out.push_back(parse_complex(s, tau));
  return out;
}

void need(const std::vector<Complex>& z, std::size_t n, const std::string& what) {
  if (z.size() != n)
    throw ConfigError(what + " takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s") + ", got " +
                      std::to_string(z.size()));
}

SeriesValue evaluate(const std::string& f, const std::vector<Complex>& z, const ModularPoint& tau,
                     const LatticeSumOptions& opt) {
  auto plain = [](Complex v) {
    SeriesValue s;
    s.value = v;
    return s;
  };
  std::map<std::string, std::size_t> arity{
      {"eta", 0},  {"theta", 1},     {"mu", 2},        {"A", 2},         {"R", 1},        {"Ahat", 2},
      {"muhat", 2}, {"T", 1},        {"f1", 1},        {"f1_theta", 1},  {"f2", 2},       {"f2_closed", 2},
      {"f3", 2},   {"f3_closed", 2}, {"f3_hat", 2},    {"f4", 3},        {"f4_closed", 3}, {"f4_hat", 3},
      {"g4", 3},   {"g4_closed", 3}, {"g4_F_star", 3}, {"f5", 4},        {"F", 3},        {"F_star", 3},
      {"F_closed", 3}, {"F_star_closed", 3}};
  auto it = arity.find(f);
  if (it == arity.end()) {
    std::string names;
    for (const auto& [k, v] : arity) names += (names.empty() ? "" : ", ") + k;
    throw ConfigError("unknown function '" + f + "' (known: " + names + ")");
  }
  need(z, it->second, f);
  if (f == "eta") return eta_series(tau);
  if (f == "theta") {
    // the series runs at the reduced point; value and tail carry the quasi period factor
    Real l = std::round(z[0].imag() / tau.v());
    Complex z0 = z[0] - l * tau.tau();
    Real m = std::round(z0.real());
    z0 -= m;
    SeriesValue s = theta_series(z0, tau);
    Real fac = std::abs(e2pi(-l * l * tau.tau() / Real(2) - l * z0));
    s.value = theta(z[0], tau);
    s.tail_bound *= fac;
    s.abs_sum *= fac;
    return s;
  }
  if (f == "mu") return plain(mu(z[0], z[1], tau));
  if (f == "A") return appell_A_series(z[0], z[1], tau);
  if (f == "R") return R_series(z[0], tau);
  if (f == "Ahat") return plain(appell_A_hat(z[0], z[1], tau));
  if (f == "muhat") return plain(mu_hat(z[0], z[1], tau));
  if (f == "T") return plain(theta_quotient_T(z[0], tau));
  if (f == "f1") return f1_series(z[0], tau, opt);
  if (f == "f1_theta") return plain(f1_theta_form(z[0], tau));
  if (f == "f2") return f2_series({z[0], z[1]}, tau, opt);
  if (f == "f2_closed") return plain(f2_closed({z[0], z[1]}, tau));
  if (f == "f3") return f3_series({z[0], z[1]}, tau, opt);
  if (f == "f3_closed") return plain(f3_closed({z[0], z[1]}, tau));
  if (f == "f3_hat") return plain(f3_hat({z[0], z[1]}, tau));
  if (f == "f4") return f4_series({z[0], z[1], z[2]}, tau, opt);
  if (f == "f4_closed") return plain(f4_closed({z[0], z[1], z[2]}, tau));
  if (f == "f4_hat") return plain(f4_hat({z[0], z[1], z[2]}, tau));
  if (f == "g4") return g4_series({z[0], z[1], z[2]}, tau, opt);
  if (f == "g4_closed") return plain(g4_closed({z[0], z[1], z[2]}, tau));
  if (f == "g4_F_star") return plain(g4_via_F_star_series({z[0], z[1], z[2]}, tau));
  if (f == "f5") return f5_series({z[0], z[1], z[2], z[3]}, tau, opt);
  if (f == "F") return F_series(z[0], z[1], z[2], tau);
  if (f == "F_star") return F_star_series(z[0], z[1], z[2], tau);
  if (f == "F_closed") return plain(F_closed(z[0], z[1], z[2], tau));
  return plain(F_star_closed(z[0], z[1], z[2], tau));
}

JumpReport run_limit(const std::string& c, const std::vector<Complex>& z, const ModularPoint& tau) {
  using namespace limits;
  auto z3 = [&] {
    need(z, 3, c);
    return Vec3{z[0], z[1], z[2]};
  };
  auto two = [&] { need(z, 2, c); };
  if (c == "f2.jump.pole_weighted") return two(), f2_pole_jump(z[0], z[1], tau);
  if (c == "f2.limit.pole_weighted") return two(), f2_pole_limit(z[0], z[1], tau);
  if (c == "f2.jump.generic") return two(), f2_jump(z[0], z[1], tau);
  if (c == "f2.limit.generic") return two(), f2_limit(z[0], z[1], tau);
  if (c == "f3.limit.general") return two(), f3_limit(z[0], z[1], tau);
  if (c == "f3.limit.lattice_point") {
    two();
    // z2 = l tau + m
    Complex w = z[1];
    long long l = std::llround(w.imag() / tau.v());
    long long m = std::llround((w - Real(l) * tau.tau()).real());
    return f3_limit_lattice(z[0], l, m, tau);
  }
  if (c == "f3.jump") return two(), f3_jump(z[0], z[1], tau);
  if (c == "g4.jump.z3") return g4_jump_z3(z3(), tau);
  if (c == "g4.jump.z1") return g4_jump_z1(z3(), tau);
  if (c == "g4.jump.z2") return g4_jump_z2(z3(), tau);
  if (c == "f4.jump.z3") return f4_jump_z3(z3(), tau);
  if (c == "f4.jump.z1_minus") return f4_jump_z1_minus(z3(), tau);
  if (c == "f4.jump.z1_plus") return f4_jump_z1_plus(z3(), tau);
  if (c == "f4.jump.z1_both") return f4_jump_z1_both(z3(), tau);
  if (c == "g4.limit.z3_zero") return two(), g4_limit_z3_zero(z[0], z[1], tau);
  if (c == "g4.limit.z3_zero_below") return two(), g4_limit_z3_zero_below(z[0], z[1], tau);
  if (c == "g4.limit.z1_to_z3") return two(), g4_limit_z1_to_z3(z[0], z[1], tau);
  if (c == "g4.limit.z2_to_z3") return two(), g4_limit_z2_to_z3(z[0], z[1], tau);
  throw ConfigError("unknown limit case '" + c + "'");
}

json jump_json(const JumpReport& r) {
  json j{{"case", r.name},
         {"limit", cjson(r.limit.value)},
         {"convergence", double(r.limit.convergence)},
         {"closed_form", cjson(r.closed_form)},
         {"residual", double(r.residual)}};
  if (r.quoted_form) {
    j["quoted_form"] = cjson(*r.quoted_form);
    j["quoted_residual"] = double(*r.quoted_residual);
  }
  json s = json::array();
  for (std::size_t k = 0; k < r.limit.samples.size(); ++k)
    s.push_back({{"eps", double(r.limit.eps[k])}, {"value", cjson(r.limit.samples[k])}});
  j["samples"] = s;
  return j;
}

// alpha, beta of the --z values, or the explicit --alpha/--beta lists
void class_data(const Args& a, const std::vector<Real>& alpha_in, const std::vector<Real>& beta_in, int r,
                std::vector<Real>& alpha, std::vector<Real>& beta) {
  if (!a.z.empty()) {
    ModularPoint tau(parse_complex(a.tau));
    auto z = parse_z(a, tau.tau());
    need(z, static_cast<std::size_t>(r), "this shape");
    for (auto w : z) {
      auto e = elliptic_coords(w, tau);
      alpha.push_back(e.alpha);
      beta.push_back(e.beta);
    }
    return;
  }
  alpha = alpha_in;
  beta = beta_in.empty() ? std::vector<Real>(alpha.size(), 0) : beta_in;
  if (alpha.size() != static_cast<std::size_t>(r) || beta.size() != alpha.size())
    throw ConfigError("this shape needs " + std::to_string(r) + " alpha (and beta) values");
}

json match_json(const geometry::MatchReport& m) {
  json mm = json::array();
  for (const auto& x : m.mismatches) mm.push_back({{"n", x.n}, {"what", x.what}});
  return json{{"shape", m.shape},
              {"mode", m.mode},
              {"geometric_terms", m.geometric_terms},
              {"algebraic_terms", m.algebraic_terms},
              {"matched", m.matched},
              {"only_geometric", m.only_geometric},
              {"only_algebraic", m.only_algebraic},
              {"sign_mismatch", m.sign_mismatch},
              {"max_area_error", double(m.max_area_error)},
              {"max_linear_error", double(m.max_linear_error)},
              {"overall_sign", m.overall_sign},
              {"radius", m.radius},
              {"perfect", m.perfect()},
              {"mismatches", mm}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generating functions of lattice polygons: evaluation, limits and verification suites"};
  app.require_subcommand(1);
  Args a;
  auto common = [&](CLI::App* s) {
    s->add_option("--tau", a.tau, "modular variable, e.g. 1.3i or 0.1+i")->capture_default_str();
    s->add_option("--z", a.z, "elliptic variable (repeatable), expressions in tau, i, pi allowed");
    s->add_option("--format", a.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  };

  std::string fname;
  auto* ev = app.add_subcommand("eval", "evaluate a function");
  ev->add_option("function", fname, "theta, eta, mu, A, R, f1 ... f5, g4, *_closed, *_hat, ...")->required();
  ev->add_option("args", a.zpos, "elliptic arguments, same syntax as --z");
  common(ev);
  ev->add_option("--nmax-override", a.nmax_override, "truncate lattice sums to |n_j| <= N");

  std::string lcase;
  auto* li = app.add_subcommand("limit", "extrapolated one sided limit or jump against its closed form");
  li->add_option("case", lcase, "e.g. f2.jump.pole_weighted, f3.limit.general, g4.jump.z1")->required();
  li->add_option("args", a.zpos, "elliptic arguments, same syntax as --z");
  common(li);

  std::string suite = "all", config;
  std::uint64_t seed = 1;
  double tol = 0, area_max = 12;
  bool timing = false;
  long long nmax = 0;
  auto* su = app.add_subcommand("suite", "run verification suites");
  su->add_option("--suite", suite, "suite name or all")->capture_default_str();
  su->add_option("--seed", seed, "run seed");
  su->add_option("--tol", tol, "tolerance override for every case");
  su->add_option("--area-max", area_max, "oracle cutoff on Q(n + alpha) (area limit / (sqrt3/2))");
  su->add_option("--nmax-override", nmax, "forwarded to the cases");
  su->add_option("--config", config, "JSON config file");
  su->add_option("--format", a.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  su->add_flag("--timing", timing, "include wall times");
  auto* ls = app.add_subcommand("list", "list verification cases");

  std::string shape, mode = "union";
  std::vector<Real> alpha_in, beta_in;
  auto* cc = app.add_subcommand("crosscheck", "geometric enumeration against the algebraic sum");
  auto* en = app.add_subcommand("enumerate", "list the polygons of one class");
  for (auto* s : {cc, en}) {
    s->add_option("--shape", shape, "triangle, parallelogram, trapezoid, pentagon, hexagon")->required();
    s->add_option("--alpha", alpha_in, "class of the lengths (instead of --z)");
    s->add_option("--area-max", area_max, "cutoff on Q(n + alpha)");
    common(s);
  }
  cc->add_option("--beta", beta_in, "linear exponents (instead of --z)");
  cc->add_option("--mode", mode, "pentagon: union (f4) or single (g4)")->check(CLI::IsMember({"union", "single"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (a.format == "csv") std::cout.precision(17);
  try {
    if (ev->parsed()) {
      ModularPoint tau(parse_complex(a.tau));
      auto z = parse_z(a, tau.tau());
      LatticeSumOptions opt;
      opt.nmax_override = a.nmax_override;
      SeriesValue s = evaluate(fname, z, tau, opt);
      json args = json::array();
      for (auto w : z) args.push_back(cjson(w));
      json j{{"function", fname},     {"tau", cjson(tau.tau())},           {"z", args}, {"value", cjson(s.value)},
             {"tail_bound", double(s.tail_bound)}, {"terms", s.terms}};
      if (a.format == "json")
        std::cout << j.dump(2) << "\n";
      else if (a.format == "csv")
        std::cout << "function,re,im,tail_bound,terms\n"
                  << fname << "," << double(s.value.real()) << "," << double(s.value.imag()) << ","
                  << double(s.tail_bound) << "," << s.terms << "\n";
      else
        std::cout << fname << " = " << double(s.value.real()) << (s.value.imag() < 0 ? " - " : " + ")
                  << std::abs(double(s.value.imag())) << "i  (tail " << double(s.tail_bound) << ", " << s.terms
                  << " terms)\n";
      return 0;
    }
    if (li->parsed()) {
      ModularPoint tau(parse_complex(a.tau));
      auto r = run_limit(lcase, parse_z(a, tau.tau()), tau);
      if (a.format == "json") {
        std::cout << jump_json(r).dump(2) << "\n";
      } else if (a.format == "csv") {
        std::cout << "eps,re,im\n";
        for (std::size_t k = 0; k < r.limit.samples.size(); ++k)
          std::cout << double(r.limit.eps[k]) << "," << double(r.limit.samples[k].real()) << ","
                    << double(r.limit.samples[k].imag()) << "\n";
        std::cout << "limit," << double(r.limit.value.real()) << "," << double(r.limit.value.imag()) << "\n"
                  << "closed_form," << double(r.closed_form.real()) << "," << double(r.closed_form.imag()) << "\n";
      } else {
        auto c = [](Complex w) { return fmt::format("{:.15g} {:+.15g}i", double(w.real()), double(w.imag())); };
        std::cout << fmt::format("{}\n  limit        {}\n  closed form  {}\n  residual {:.3e}, spread {:.3e}\n",
                                 r.name, c(r.limit.value), c(r.closed_form), double(r.residual),
                                 double(r.limit.convergence));
        if (r.quoted_form)
          std::cout << fmt::format("  alternative  {}  (residual {:.3e})\n", c(*r.quoted_form),
                                   double(*r.quoted_residual));
      }
      return r.limit.convergence < 1e-6 ? 0 : 1;
    }
    if (ls->parsed()) {
      for (const auto& c : harness::registry())
        std::cout << c.suite << "\t" << c.id << "\t" << c.summary << (c.informational ? "  [info]" : "") << "\n";
      return 0;
    }
    if (su->parsed()) {
      harness::RunConfig cfg;
      if (!config.empty()) harness::load_config(cfg, config);
      if (su->count("--seed")) cfg.seed = seed;
      if (su->count("--tol")) cfg.tolerance_overrides["*"] = tol;
      if (su->count("--area-max")) cfg.area_max = area_max;
      if (su->count("--nmax-override")) cfg.nmax_override = nmax;
      cfg.validate();
      auto rep = suite == "all" ? harness::run_all(cfg) : harness::run_suite(suite, cfg);
      if (a.format == "json")
        std::cout << rep.to_json(timing) << "\n";
      else if (a.format == "csv")
        std::cout << rep.to_csv(timing);
      else
        std::cout << rep.to_text(timing);
      return rep.passed() ? 0 : 1;
    }
    geometry::Shape s = geometry::parse_shape(shape);
    const auto& spec = geometry::shape_spec(s);
    std::vector<Real> alpha, beta;
    class_data(a, alpha_in, beta_in, spec.r, alpha, beta);
    if (cc->parsed()) {
      auto m = geometry::crosscheck(s, alpha, beta, area_max,
                                    mode == "single" ? geometry::PentagonMode::single_g4 : geometry::PentagonMode::union_f4);
      if (a.format == "json") {
        std::cout << match_json(m).dump(2) << "\n";
      } else {
        if (a.format == "csv") std::cout << "shape,mode,geometric,algebraic,matched,sign_mismatch,perfect\n";
        std::cout << fmt::format(fmt::runtime(a.format == "csv" ? "{},{},{},{},{},{},{}\n"
                                                   : "{} ({}): {} geometric, {} algebraic, {} matched, {} sign mismatches, perfect {}\n"),
                                 m.shape, m.mode, m.geometric_terms, m.algebraic_terms, m.matched, m.sign_mismatch,
                                 m.perfect());
      }
      return m.perfect() ? 0 : 1;
    }
    auto ref = geometry::make_reference(s, alpha);
    geometry::EnumerationOptions opt;
    opt.q_cut = area_max;
    auto e = geometry::enumerate(ref, opt);
    if (a.format == "csv")
      geometry::write_csv(std::cout, e.instances);
    else
      std::cout << geometry::to_json(e.instances) << "\n";
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
