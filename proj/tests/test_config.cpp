#include <string>

#include "doctest.h"
#include "gks3d/config.hpp"

using namespace gks;

TEST_CASE("full config round trip") {
  const std::string text = R"(# a comment
[case]
case = tgv            # trailing comment
gamma = 1.4
prandtl = 0.71
re = 1600
mach = 0.08

[grid]
nx = 32
ny = 32
nz = 32

[scheme]
cfl = 0.3
mode = linear5
projection = characteristic
epsilon = 1e-5
positivity_fallback = false

[run]
t_end = 2.5
output_dir = results/tgv32
diag_every = 5
field_interval = 0.5
checkpoint_every = 100
threads = 2
seed = 42
)";
  const RunConfig c = parse_config(text);
  CHECK(c.case_id == "tgv");
  CHECK(c.params.prandtl == doctest::Approx(0.71));
  CHECK(c.params.reynolds == doctest::Approx(1600));
  CHECK(c.params.mach == doctest::Approx(0.08));
  CHECK(c.params.seed == 42);
  CHECK(c.nx == 32);
  CHECK(c.cfl == doctest::Approx(0.3));
  CHECK(c.mode == ReconMode::linear5);
  CHECK(c.mode_set);
  CHECK(c.projection == Projection::characteristic);
  CHECK(c.weno_epsilon == doctest::Approx(1e-5));
  CHECK_FALSE(c.positivity_fallback);
  CHECK(c.t_end == doctest::Approx(2.5));
  CHECK(c.output_dir == "results/tgv32");
  CHECK(c.diag_every == 5);
  CHECK(c.field_interval == doctest::Approx(0.5));
  CHECK(c.checkpoint_every == 100);
  CHECK(c.threads == 2);
}

TEST_CASE("defaults when only the case is given") {
  const RunConfig c = parse_config("case = sod3d\n");
  CHECK(c.case_id == "sod3d");
  CHECK(c.nx == 0);
  CHECK(c.t_end < 0);
  CHECK(c.cfl == doctest::Approx(0.4));
  // shock-dominated cases default to characteristic projection
  CHECK(c.projection == Projection::characteristic);
  CHECK(parse_config("case = tgv\n").projection == Projection::component);
  CHECK(parse_config("case = rayleigh_taylor\n").projection == Projection::characteristic);
}

TEST_CASE("errors carry the line number") {
  auto expect_error = [](const std::string& text, int line) {
    try {
      parse_config(text);
      FAIL("expected ConfigError for: " << text);
    } catch (const ConfigError& e) {
      CHECK(e.line == line);
    }
  };
  expect_error("case = tgv\nbogus_key = 1\n", 2);
  expect_error("case = tgv\ncfl = 1.5\n", 2);          // out of (0, 1)
  expect_error("case = tgv\ncfl = oops\n", 2);         // unparsable number
  expect_error("case = tgv\ngamma = 0.9\n", 2);        // out of (1, 5/3]
  expect_error("case = nosuchcase\n", 1);              // unknown case id
  expect_error("case = tgv\nnx = -4\n", 2);
  expect_error("case = tgv\n[grid\nnx = 8\n", 2);      // malformed section
  expect_error("case = tgv\ncase = tgv\n", 2);         // duplicate key
  expect_error("cfl = 0.4\n", 0);                      // missing case
  expect_error("case = tgv\nmode = weird\n", 2);
  expect_error("case = rayleigh_taylor\natwood = 1.5\n", 2);
}

TEST_CASE("unknown case id message names the offender") {
  try {
    parse_config("case = vortex_street\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("unknown case") != std::string::npos);
    CHECK(std::string(e.what()).find("vortex_street") != std::string::npos);
  }
}
