#include "polygf/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <json.hpp>
#include <sstream>
#include <thread>

namespace polygf::harness {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::info:
      return "info";
  }
  return "?";
}

Profile profile_from_env() {
  const char* p = std::getenv("POLYGF_PRECISION_PROFILE");
  if (!p || std::string(p).empty() || std::string(p) == "default") return Profile::standard;
  if (std::string(p) == "fast") return Profile::fast;
  throw ConfigError(std::string("POLYGF_PRECISION_PROFILE must be 'default' or 'fast', got '") + p + "'");
}

std::string to_string(Profile p) { return p == Profile::fast ? "fast" : "default"; }

void Outcome::add(Real r) {
  ++points;
  if (!std::isfinite(r)) r = std::numeric_limits<Real>::infinity();
  max_residual = std::max(max_residual, r);
}

void Outcome::require(bool ok, const std::string& what) {
  if (ok) return;
  if (detail.size() < 400) detail += (detail.empty() ? "" : "; ") + what;
  exact = false;
}

int RunContext::points(int standard) const {
  if (profile == Profile::fast) return std::max(2, standard / 4);
  return standard;
}

std::vector<SL2Matrix> default_panel() {
  return {SL2Matrix::make(1, 0, 0, 1), SL2Matrix::make(1, 2, 0, 1), SL2Matrix::make(1, 0, 6, 1),
          SL2Matrix::make(7, 2, 24, 7)};
}

void RunConfig::validate() const {
  for (const auto& [id, tol] : tolerance_overrides) {
    if (!(tol >= min_tolerance))
      throw ConfigError("tolerance " + std::to_string(tol) + " for '" + id + "' is below the certifiable 1e-14");
    if (id != "*") find_case(id);
  }
  if (!(area_max > 0)) throw ConfigError("area cutoff must be positive");
  if (panel.empty()) throw ConfigError("matrix panel is empty");
  for (const auto& g : panel)
    if (!subgroup_member(g, Subgroup::Gamma0_3_cap_Gamma_2))
      throw ConfigError("panel matrix " + g.str() + " is not in Gamma0(3) cap Gamma(2)");
  if (nmax_override < 0) throw ConfigError("nmax override must be >= 0");
}

std::vector<SL2Matrix> parse_panel(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("panel: ") + e.what());
  }
  if (!j.is_array()) throw ConfigError("panel must be a list of 4-tuples");
  std::vector<SL2Matrix> out;
  for (const auto& m : j) {
    if (!m.is_array() || m.size() != 4) throw ConfigError("panel entries must be [a,b,c,d]");
    for (const auto& x : m)
      if (!x.is_number_integer()) throw ConfigError("panel entries must be integers");
    SL2Matrix g;
    try {
      g = SL2Matrix::make(m[0].get<long long>(), m[1].get<long long>(), m[2].get<long long>(), m[3].get<long long>());
    } catch (const std::exception& e) {
      throw ConfigError(std::string("panel: ") + e.what());
    }
    if (!subgroup_member(g, Subgroup::Gamma0_3_cap_Gamma_2))
      throw ConfigError("panel matrix " + g.str() + " is not in Gamma0(3) cap Gamma(2)");
    out.push_back(g);
  }
  return out;
}

void load_config(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(ss.str());
  } catch (const std::exception& e) {
    throw ConfigError("config '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [k, v] : j.items()) {
    if (k == "seed") {
      if (!v.is_number_unsigned()) throw ConfigError("seed must be a non-negative integer");
      cfg.seed = v.get<std::uint64_t>();
    } else if (k == "area_max") {
      if (!v.is_number()) throw ConfigError("area_max must be a number");
      cfg.area_max = v.get<Real>();
    } else if (k == "panel") {
      cfg.panel = parse_panel(v.dump());
    } else if (k == "tolerances") {
      if (!v.is_object()) throw ConfigError("tolerances must be an object");
      for (const auto& [id, t] : v.items()) {
        if (!t.is_number()) throw ConfigError("tolerance for '" + id + "' must be a number");
        cfg.tolerance_overrides[id] = t.get<Real>();
      }
    } else if (k == "profile") {
      if (v == "fast")
        cfg.profile = Profile::fast;
      else if (v == "default")
        cfg.profile = Profile::standard;
      else
        throw ConfigError("profile must be 'default' or 'fast'");
    } else if (k == "nmax_override") {
      if (!v.is_number_unsigned()) throw ConfigError("nmax_override must be a non-negative integer");
      cfg.nmax_override = v.get<long long>();
    } else {
      throw ConfigError("unknown config key '" + k + "'");
    }
  }
  cfg.validate();
}

const VerificationCase& find_case(const std::string& id) {
  for (const auto& c : registry())
    if (c.id == id) return c;
  throw ConfigError("unknown case '" + id + "'");
}

namespace {

CaseResult execute(const VerificationCase& c, const RunConfig& cfg) {
  CaseResult r;
  r.id = c.id;
  r.suite = c.suite;
  r.summary = c.summary;
  r.tolerance = c.tolerance;
  if (auto it = cfg.tolerance_overrides.find(c.id); it != cfg.tolerance_overrides.end())
    r.tolerance = it->second;
  else if (auto all = cfg.tolerance_overrides.find("*"); all != cfg.tolerance_overrides.end())
    r.tolerance = all->second;
  r.seed = derive_seed(cfg.seed, c.id);
  RunContext ctx{Rng(r.seed), r.seed, cfg.profile, &cfg.panel, cfg.area_max, cfg.nmax_override};
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    Outcome o = c.run(ctx);
    r.max_residual = o.max_residual;
    r.points = o.points;
    r.detail = o.detail;
    ok = o.exact && o.max_residual <= r.tolerance;
  } catch (const std::exception& e) {
    r.detail = std::string("error: ") + e.what();
    r.max_residual = std::numeric_limits<Real>::infinity();
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  r.status = c.informational ? Status::info : (ok ? Status::pass : Status::fail);
  if (c.informational && !ok && r.detail.empty()) r.detail = "does not hold";
  return r;
}

std::string fmt_real(Real x) {
  if (std::isinf(x)) return "inf";
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << double(x);
  return os.str();
}

}  // namespace

Report run_cases(const std::vector<const VerificationCase*>& cases, const RunConfig& cfg, std::string label) {
  cfg.validate();
  Report rep;
  rep.label = std::move(label);
  rep.seed = cfg.seed;
  rep.profile = cfg.profile;
  rep.cases.resize(cases.size());
  unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, cases.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k; (k = next++) < cases.size();) rep.cases[k] = execute(*cases[k], cfg);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return rep;
}

Report run_suite(const std::string& suite, const RunConfig& cfg) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw ConfigError("unknown suite '" + suite + "'");
  std::vector<const VerificationCase*> sel;
  for (const auto& c : registry())
    if (c.suite == suite) sel.push_back(&c);
  return run_cases(sel, cfg, suite);
}

Report run_all(const RunConfig& cfg) {
  std::vector<const VerificationCase*> sel;
  for (const auto& c : registry()) sel.push_back(&c);
  return run_cases(sel, cfg, "all");
}

bool Report::passed() const {
  return std::none_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.status == Status::fail; });
}

std::string Report::to_json(bool timing) const {
  nlohmann::ordered_json j;
  j["schema"] = report_schema;
  j["suite"] = label;
  j["seed"] = seed;
  j["profile"] = to_string(profile);
  j["passed"] = passed();
  long long np = 0, nf = 0, ni = 0;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : cases) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["suite"] = c.suite;
    e["status"] = to_string(c.status);
    if (std::isfinite(c.max_residual))
      e["max_residual"] = c.max_residual;
    else
      e["max_residual"] = nullptr;
    e["tolerance"] = c.tolerance;
    e["points"] = c.points;
    e["seed"] = c.seed;
    if (!c.detail.empty()) e["detail"] = c.detail;
    if (timing) e["wall_ms"] = c.wall_ms;
    arr.push_back(e);
    (c.status == Status::pass ? np : c.status == Status::fail ? nf : ni)++;
  }
  j["counts"] = {{"pass", np}, {"fail", nf}, {"info", ni}};
  j["cases"] = arr;
  return j.dump(2) + "\n";
}

std::string Report::to_text(bool timing) const {
  std::ostringstream os;
  for (const auto& c : cases) {
    std::string st = to_string(c.status);
    std::transform(st.begin(), st.end(), st.begin(), ::toupper);
    os << st << "  " << c.id << "  residual " << fmt_real(c.max_residual) << " (tol " << fmt_real(c.tolerance)
       << ", " << c.points << " pts)";
    if (timing) os << "  " << static_cast<long long>(c.wall_ms) << " ms";
    if (!c.detail.empty()) os << "  " << c.detail;
    os << "\n";
  }
  os << (passed() ? "suite " + label + ": pass" : "suite " + label + ": FAIL") << "\n";
  return os.str();
}

std::string Report::to_csv(bool timing) const {
  std::ostringstream os;
  os << "id,suite,status,max_residual,tolerance,points,seed" << (timing ? ",wall_ms" : "") << "\n";
  os.precision(17);
  for (const auto& c : cases) {
    os << c.id << ',' << c.suite << ',' << to_string(c.status) << ',' << double(c.max_residual) << ','
       << double(c.tolerance) << ',' << c.points << ',' << c.seed;
    if (timing) os << ',' << c.wall_ms;
    os << "\n";
  }
  return os.str();
}

}  // namespace polygf::harness
