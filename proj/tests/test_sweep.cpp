#include "naed/sweep.hpp"

#include <doctest.h>

#include "naed/circuits.hpp"

using namespace naed;

namespace {

SweepConfig small_config() {
  SweepConfig config;
  config.n_list = {2, 3};
  config.q_list = {1, 2};
  config.shots = 256;
  config.reps = 3;
  config.master_seed = 42;
  return config;
}

}  // namespace

TEST_CASE("noiseless sweep reports 100 everywhere") {
  const SweepResult result = run_sweep(small_config());
  REQUIRE(result.cells.size() == 4);
  for (const auto& cell : result.cells) {
    CHECK(cell.mean_mu_full == 100.0);
    REQUIRE(cell.mean_mu_naed.has_value());
    CHECK(*cell.mean_mu_naed == 100.0);
    CHECK(cell.mean_p_kept == 100.0);
    for (const auto& rep : cell.reps) {
      CHECK(rep.tally.total == 256);
      CHECK(rep.tally.ra == 0);
      CHECK(rep.tally.rb == 0);
    }
  }
}

TEST_CASE("sweep output is byte identical across runs and thread counts") {
  SweepConfig config = small_config();
  config.noise = StochasticModel{0.05, 0.02, 9, "XYZ"};
  const std::string a = sweep_to_json(run_sweep(config));
  const std::string b = sweep_to_json(run_sweep(config));
  CHECK(a == b);

  config.threads = 3;
  const std::string c = sweep_to_json(run_sweep(config));
  CHECK(a == c);

  const std::string csv_a = sweep_to_csv(run_sweep(config));
  const std::string csv_b = sweep_to_csv(run_sweep(config));
  CHECK(csv_a == csv_b);
}

TEST_CASE("unsatisfiable grids are rejected with the offending cells") {
  SweepConfig config = small_config();
  config.n_list = {2, 6};
  config.q_list = {5};
  try {
    run_sweep(config);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("(6,5)") != std::string::npos);
    CHECK(msg.find("(2,5)") == std::string::npos);
  }
  config.n_list = {1};
  CHECK_THROWS_AS(run_sweep(config), ConfigError);
  config.n_list = {2};
  config.reps = 0;
  CHECK_THROWS_AS(run_sweep(config), ConfigError);
}

TEST_CASE("JSON and CSV round-trip through the readers") {
  SweepConfig config = small_config();
  config.noise = StochasticModel{0.03, 0.0, 5, "XYZ"};
  const SweepResult result = run_sweep(config);

  const SweepResult from_json = read_sweep_json(sweep_to_json(result));
  REQUIRE(from_json.cells.size() == result.cells.size());
  for (std::size_t i = 0; i < result.cells.size(); ++i) {
    CHECK(from_json.cells[i].n == result.cells[i].n);
    CHECK(from_json.cells[i].q == result.cells[i].q);
    CHECK(from_json.cells[i].mean_mu_full == result.cells[i].mean_mu_full);
    REQUIRE(from_json.cells[i].reps.size() == result.cells[i].reps.size());
    CHECK(from_json.cells[i].reps[0].tally.r0 ==
          result.cells[i].reps[0].tally.r0);
  }

  const SweepResult from_csv = read_sweep_csv(sweep_to_csv(result));
  REQUIRE(from_csv.cells.size() == result.cells.size());
  for (std::size_t i = 0; i < result.cells.size(); ++i) {
    CHECK(from_csv.cells[i].mean_mu_full ==
          doctest::Approx(result.cells[i].mean_mu_full).epsilon(1e-12));
  }
}

TEST_CASE("plotdata reshapes means into an N-by-Q matrix") {
  const SweepResult result = run_sweep(small_config());
  const std::string csv = plotdata_csv(result, "mu_full");
  CHECK(csv == "N\\Q,1,2\n2,100,100\n3,100,100\n");
  CHECK_THROWS_AS(plotdata_csv(result, "banana"), ConfigError);
}

TEST_CASE("inject_study reports exact rates") {
  const InjectReport x_report = inject_study(2, 2, ErrorKind::X);
  CHECK(!x_report.cells.empty());
  for (const auto& cell : x_report.cells) {
    CHECK(cell.rejection_rate == doctest::Approx(1.0).epsilon(1e-12));
  }

  const InjectReport z_report = inject_study(2, 2, ErrorKind::Z);
  for (const auto& cell : z_report.cells) {
    CHECK(cell.rejection_rate == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(cell.corruption_rate == doctest::Approx(0.0).epsilon(1e-12));
  }

  // Q=1 has no invalid subspace: nothing is ever rejected.
  const InjectReport bare = inject_study(3, 1, ErrorKind::X);
  for (const auto& cell : bare.cells) {
    CHECK(cell.rejection_rate == 0.0);
  }
}
