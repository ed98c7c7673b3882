#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

#include "polygf/harness.hpp"
#include "polygf/jumps.hpp"

using namespace polygf;
using namespace polygf::harness;

TEST(Config, RejectsTinyTolerance) {
  RunConfig cfg;
  cfg.tolerance_overrides["*"] = 1e-15;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg.tolerance_overrides["*"] = 1e-14;
  EXPECT_NO_THROW(cfg.validate());
}

TEST(Config, RejectsUnknownSuite) {
  RunConfig cfg;
  EXPECT_THROW(run_suite("no-such-suite", cfg), ConfigError);
}

TEST(Config, PanelMembershipChecked) {
  EXPECT_NO_THROW(parse_panel("[[1,0,0,1],[1,2,0,1]]"));
  EXPECT_THROW(parse_panel("[[0,-1,1,0]]"), ConfigError);
  EXPECT_THROW(parse_panel("[[1,1,1,1]]"), std::exception);
}

TEST(Config, FileOverrides) {
  std::string path = testing::TempDir() + "polygf_cfg.json";
  {
    std::ofstream f(path);
    f << R"({"seed": 9, "area_max": 8, "tolerances": {"f2.closed_form": 1e-9}})";
  }
  RunConfig cfg;
  load_config(cfg, path);
  EXPECT_EQ(cfg.seed, 9u);
  EXPECT_EQ(cfg.area_max, 8);
  EXPECT_EQ(cfg.tolerance_overrides.at("f2.closed_form"), 1e-9);
}

TEST(Report, DeterministicJson) {
  RunConfig cfg;
  cfg.seed = 7;
  cfg.profile = Profile::fast;
  auto a = run_suite("parallelograms", cfg).to_json(false);
  cfg.threads = 1;
  auto b = run_suite("parallelograms", cfg).to_json(false);
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("polygf.report/1"), std::string::npos);
}

TEST(Report, SeedChangesSamples) {
  RunConfig cfg;
  cfg.profile = Profile::fast;
  cfg.seed = 1;
  auto a = run_suite("triangles", cfg).to_json(false);
  cfg.seed = 2;
  EXPECT_NE(a, run_suite("triangles", cfg).to_json(false));
}

TEST(Report, FailingToleranceFlips) {
  RunConfig cfg;
  cfg.profile = Profile::fast;
  cfg.tolerance_overrides["f2.closed_form"] = 1e-14;
  auto r = run_suite("parallelograms", cfg);
  bool seen = false;
  for (const auto& c : r.cases)
    if (c.id == "f2.closed_form") {
      seen = true;
      if (c.max_residual > 1e-14) EXPECT_EQ(c.status, Status::fail);
    }
  EXPECT_TRUE(seen);
}

TEST(Report, InformationalCasesNeverFail) {
  RunConfig cfg;
  cfg.profile = Profile::fast;
  auto r = run_suite("preliminaries", cfg);
  for (const auto& c : r.cases) {
    const auto& vc = find_case(c.id);
    if (vc.informational) EXPECT_EQ(c.status, Status::info) << c.id;
  }
}

// every identity the library exposes, mapped to the case that checks it
TEST(Coverage, ManifestCasesInExactlyOneSuite) {
  const std::vector<std::string> manifest{
      // theta and eta
      "theta.odd", "theta.quasi_period", "theta.eta_cube", "theta.modular", "theta.zero_set",
      "theta.series_vs_product", "eta.series_vs_product", "eta.translation", "numerics.nu_eta_vs_eta",
      // Appell functions
      "appell.bilateral_zeta_sum", "appell.diagonal_shift", "appell.mu_shift", "appell.mu_relations",
      "appell.half_period", "appell.completion_elliptic", "appell.completion_modular", "appell.F_closed",
      "appell.F_star_closed", "appell.quadrant_sum", "appell.F_star_minus_F", "appell.T_quotient",
      "indefinite.elliptic_exact",
      // polygon series
      "f1.theta_form", "f1.elliptic", "f1.modular", "f2.symmetry", "f2.closed_form", "f2.elliptic", "f2.modular",
      "f2.jump.pole_weighted", "f2.limit.pole_weighted", "f2.jump.generic", "f2.limit.generic", "f3.appell_form",
      "f3.elliptic", "f3.completion_modular", "f3.completion_elliptic", "f3.limit.general", "f3.limit.lattice_point",
      "f3.jump", "f4.symmetry", "g4.F_star_form", "f4.split", "f4.elliptic", "g4.elliptic", "f4.completion_modular",
      "f4.completion_elliptic", "g4.jump.z3", "g4.jump.z1", "g4.jump.z2", "f4.jump.z3", "f4.jump.z1_minus",
      "f4.jump.z1_plus", "f4.jump.z1_both", "g4.limit.z3_zero", "g4.limit.z1_to_z3", "g4.limit.z2_to_z3",
      "f5.brute_force", "f5.elliptic_exact", "f5.sign_symmetry",
      // geometry oracle
      "oracle.triangle", "oracle.parallelogram", "oracle.trapezoid", "oracle.pentagon", "oracle.area_consistency",
      "oracle.edge_determinism", "oracle.translation_invariance", "oracle.chi_equivalence", "oracle.geometric_sum"};
  std::map<std::string, int> count;
  std::set<std::string> suites(suite_names().begin(), suite_names().end());
  for (const auto& c : registry()) {
    ++count[c.id];
    EXPECT_TRUE(suites.count(c.suite)) << c.id << " in unknown suite " << c.suite;
  }
  for (const auto& id : manifest) {
    EXPECT_EQ(count[id], 1) << id;
    if (count[id] == 1) EXPECT_FALSE(find_case(id).informational) << id;
  }
  for (const auto& [id, n] : count) EXPECT_EQ(n, 1) << "duplicate id " << id;
}

TEST(Coverage, SuiteNames) {
  std::vector<std::string> want{"preliminaries", "triangles", "parallelograms", "trapezoids",
                                "pentagons",     "oracle",    "hexagon-explore"};
  EXPECT_EQ(suite_names(), want);
}

TEST(Limits, ReportCarriesSamples) {
  auto r = limits::f2_pole_jump(Complex(0.2, 0.3), Complex(1.0 / 3, 0), ModularPoint(0, 1.4));
  EXPECT_EQ(r.limit.eps.size(), 9u);
  EXPECT_EQ(r.limit.samples.size(), 9u);
  EXPECT_NEAR(r.limit.eps.front(), 1.4 / 16, 1e-15);
  EXPECT_NEAR(r.limit.eps.back(), 1.4 / 4096, 1e-15);
}
