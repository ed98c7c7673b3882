#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "polygf/numerics.hpp"
#include "polygf/sampling.hpp"

namespace polygf::harness {

inline constexpr const char* report_schema = "polygf.report/1";
inline constexpr Real min_tolerance = Real(1e-14);

enum class Status { pass, fail, info };
std::string to_string(Status s);

// "default" or "fast" (POLYGF_PRECISION_PROFILE); fast trims point counts
enum class Profile { standard, fast };
Profile profile_from_env();
std::string to_string(Profile p);

struct Outcome {
  Real max_residual = 0;
  long long points = 0;
  bool exact = true;  // all combinatorial sub-checks held
  std::string detail;
  void add(Real residual);
  void require(bool ok, const std::string& what);
};

struct RunContext {
  Rng rng;
  std::uint64_t seed;
  Profile profile;
  const std::vector<SL2Matrix>* panel;
  Real area_max;
  long long nmax_override;
  int points(int standard) const;
};

struct VerificationCase {
  std::string id;
  std::string suite;
  std::string summary;
  Real tolerance;
  bool informational = false;
  std::function<Outcome(RunContext&)> run;
};

const std::vector<VerificationCase>& registry();
const std::vector<std::string>& suite_names();
const VerificationCase& find_case(const std::string& id);

// the four default matrices, all in Gamma0(3) cap Gamma(2)
std::vector<SL2Matrix> default_panel();

struct RunConfig {
  std::uint64_t seed = 1;
  std::map<std::string, Real> tolerance_overrides;  // case id or "*"
  std::vector<SL2Matrix> panel = default_panel();
  Real area_max = 12;
  long long nmax_override = 0;
  Profile profile = profile_from_env();
  unsigned threads = 0;
  void validate() const;
};

// {"seed": n, "area_max": x, "panel": [[a,b,c,d], ...], "tolerances": {"id": tol}, "profile": "fast"}
void load_config(RunConfig& cfg, const std::string& path);
std::vector<SL2Matrix> parse_panel(const std::string& json_text);

struct CaseResult {
  std::string id;
  std::string suite;
  std::string summary;
  Status status = Status::fail;
  Real max_residual = 0;
  Real tolerance = 0;
  long long points = 0;
  std::uint64_t seed = 0;
  std::string detail;
  double wall_ms = 0;
};

struct Report {
  std::string label;
  std::uint64_t seed = 0;
  Profile profile = Profile::standard;
  std::vector<CaseResult> cases;
  bool passed() const;
  std::string to_json(bool timing) const;
  std::string to_text(bool timing) const;
  std::string to_csv(bool timing) const;
};

Report run_cases(const std::vector<const VerificationCase*>& cases, const RunConfig& cfg, std::string label);
Report run_suite(const std::string& suite, const RunConfig& cfg);
Report run_all(const RunConfig& cfg);

}  // namespace polygf::harness
