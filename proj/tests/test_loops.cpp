#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "hqc/connection.hpp"
#include "hqc/holonomy.hpp"
#include "hqc/loop.hpp"
#include "oracles.hpp"

using Catch::Matchers::ContainsSubstring;
using hqc::DiscretizedPath;
using hqc::PolygonalLoop;
using hqc::StepRule;
using hqc::System;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("loop construction and validation", "[loops]") {
  const PolygonalLoop loop(System::OneQubit, {}, {1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(loop.dim() == 4);
  CHECK(loop.vertex_count() == 2);
  CHECK(loop.edge_count() == 3);
  CHECK(loop.basepoint()[0] == 0.0);
  CHECK(loop.vertex(1)[3] == 8.0);
  CHECK_THROWS_AS(loop.vertex(2), std::out_of_range);

  CHECK_THROWS_AS(PolygonalLoop(System::OneQubit, {1, 2}, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(PolygonalLoop(System::OneQubit, {}, {1, 2, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(PolygonalLoop(System::OneQubit, {},
                                {1, 2, 3, std::nan("")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      hqc::make_loop(System::TwoQubit, {}, {{1, 2, 3, 4}}),
      std::invalid_argument);

  // A vertex-free loop still has the closing edge.
  const PolygonalLoop trivial(System::TwoQubit, {}, {});
  CHECK(trivial.vertex_count() == 0);
  CHECK(trivial.edge_count() == 1);
}

TEST_CASE("discretization covers the loop and closes", "[loops]") {
  std::mt19937_64 rng(41);
  const PolygonalLoop loop = testutil::random_loop(System::OneQubit, 3, rng, kPi);
  const int n = 200;
  const DiscretizedPath path = hqc::discretize(loop, n);
  REQUIRE(path.size() == static_cast<std::size_t>(4 * n));
  CHECK(path.dim() == 4);

  // Increments telescope to zero around the closed loop.
  for (int j = 0; j < 4; ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < path.size(); ++i) {
      sum += path.step(i)[j];
    }
    CHECK(std::abs(sum) < 1e-12);
  }

  // Midpoint rule: first sample sits half a step into the first edge.
  const auto bp = loop.basepoint();
  const auto v0 = loop.vertex(0);
  for (int j = 0; j < 4; ++j) {
    const double delta = (v0[j] - bp[j]) / n;
    CHECK(path.point(0)[j] == bp[j] + 0.5 * delta);
    CHECK(path.step(0)[j] == delta);
  }

  CHECK_THROWS_AS(hqc::discretize(loop, 0), std::invalid_argument);
}

TEST_CASE("step doubling revisits the coarse lattice exactly", "[loops]") {
  std::mt19937_64 rng(42);
  const PolygonalLoop loop = testutil::random_loop(System::TwoQubit, 2, rng, kPi);
  const int n = 25;

  // Midpoint samples at n steps/edge are the odd left-endpoint samples at
  // 2n steps/edge, bit for bit.
  const DiscretizedPath mid = hqc::discretize(loop, n, StepRule::Midpoint);
  const DiscretizedPath fine =
      hqc::discretize(loop, 2 * n, StepRule::LeftEndpoint);
  for (int e = 0; e < loop.edge_count(); ++e) {
    for (int s = 0; s < n; ++s) {
      const auto coarse_pt = mid.point(static_cast<std::size_t>(e) * n + s);
      const auto fine_pt =
          fine.point(static_cast<std::size_t>(e) * 2 * n + 2 * s + 1);
      for (int j = 0; j < loop.dim(); ++j) {
        CHECK(coarse_pt[j] == fine_pt[j]);
      }
    }
  }

  // Left-endpoint samples at n survive into the 2n lattice unchanged.
  const DiscretizedPath left = hqc::discretize(loop, n, StepRule::LeftEndpoint);
  for (int e = 0; e < loop.edge_count(); ++e) {
    for (int s = 0; s < n; ++s) {
      const auto coarse_pt = left.point(static_cast<std::size_t>(e) * n + s);
      const auto fine_pt =
          fine.point(static_cast<std::size_t>(e) * 2 * n + 2 * s);
      for (int j = 0; j < loop.dim(); ++j) {
        CHECK(coarse_pt[j] == fine_pt[j]);
      }
    }
  }
}

TEST_CASE("reverse flips the vertex order and keeps the basepoint", "[loops]") {
  const PolygonalLoop loop =
      hqc::make_loop(System::OneQubit, {0.5, 0, 0, 0},
                     {{1, 2, 3, 4}, {5, 6, 7, 8}, {9, 10, 11, 12}});
  const PolygonalLoop rev = hqc::reverse(loop);
  CHECK(rev.basepoint()[0] == 0.5);
  CHECK(rev.vertex(0)[0] == 9.0);
  CHECK(rev.vertex(1)[0] == 5.0);
  CHECK(rev.vertex(2)[0] == 1.0);

  const PolygonalLoop twice = hqc::reverse(rev);
  for (int i = 0; i < loop.vertex_count(); ++i) {
    for (int j = 0; j < loop.dim(); ++j) {
      CHECK(twice.vertex(i)[j] == loop.vertex(i)[j]);
    }
  }
}

TEST_CASE("save and load round-trip bit-exactly", "[loops]") {
  std::mt19937_64 rng(43);
  const PolygonalLoop loop = testutil::random_loop(System::TwoQubit, 3, rng, kPi);
  hqc::LoopMetadata meta;
  meta.gate = "cphase(3.14)";
  meta.f_final = 1.2345678901234567e-9;
  meta.f_refined = 1.3e-9;
  meta.seed = 1234567890123456789ull;
  meta.restarts = 17;
  meta.iterations = 123456789L;

  std::stringstream stream;
  hqc::save_loop(loop, stream, meta);
  const hqc::LoadedLoop loaded = hqc::load_loop(stream);

  REQUIRE(loaded.loop.system() == System::TwoQubit);
  REQUIRE(loaded.loop.vertex_count() == 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 9; ++j) {
      CHECK(loaded.loop.vertex(i)[j] == loop.vertex(i)[j]);
    }
  }
  CHECK(loaded.meta.gate == meta.gate);
  CHECK(loaded.meta.f_final == meta.f_final);
  CHECK(loaded.meta.f_refined == meta.f_refined);
  CHECK(loaded.meta.seed == meta.seed);
  CHECK(loaded.meta.restarts == meta.restarts);
  CHECK(loaded.meta.iterations == meta.iterations);

  // File round trip, and the temp file of the atomic write is gone.
  namespace fs = std::filesystem;
  const fs::path file = fs::path("roundtrip_test.loop");
  hqc::save_loop(loop, file, meta);
  CHECK(!fs::exists(file.string() + ".tmp"));
  const hqc::LoadedLoop from_file = hqc::load_loop(file);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 9; ++j) {
      CHECK(from_file.loop.vertex(i)[j] == loop.vertex(i)[j]);
    }
  }
  fs::remove(file);
}

TEST_CASE("loader reports malformed input with line context", "[loops]") {
  const auto load = [](const std::string& text) {
    std::istringstream in(text);
    return hqc::load_loop(in, "test.loop");
  };

  CHECK_THROWS_WITH(load(""), ContainsSubstring("test.loop:1"));
  CHECK_THROWS_WITH(load("not-a-header\n"), ContainsSubstring("bad header"));
  CHECK_THROWS_WITH(load("hqc-loop v1\nsystem one-qubit\nwhatever 1\n"),
                    ContainsSubstring("test.loop:3") &&
                        ContainsSubstring("unknown key"));
  CHECK_THROWS_WITH(load("hqc-loop v1\nvertex 1 2 3 4\n"),
                    ContainsSubstring("before the 'system' line"));
  CHECK_THROWS_WITH(load("hqc-loop v1\nsystem one-qubit\nvertex 1 2 3\n"),
                    ContainsSubstring("3 coordinates, expected 4"));
  CHECK_THROWS_WITH(load("hqc-loop v1\nsystem one-qubit\nvertex 1 2 3 x\n"),
                    ContainsSubstring("expected a number"));
  CHECK_THROWS_WITH(
      load("hqc-loop v1\nsystem one-qubit\nsystem two-qubit\n"),
      ContainsSubstring("duplicate 'system'"));
  CHECK_THROWS_WITH(load("hqc-loop v1\nsystem martian\n"),
                    ContainsSubstring("unknown system"));
  CHECK_THROWS_WITH(load("hqc-loop v1\n"), ContainsSubstring("missing 'system'"));
  CHECK_THROWS_AS(hqc::load_loop(std::filesystem::path("does_not_exist.loop")),
                  hqc::LoopFileError);

  // Comments, blank lines, and CRLF endings are tolerated.
  const hqc::LoadedLoop ok = load(
      "hqc-loop v1\r\n# comment\n\nsystem one-qubit\r\n"
      "basepoint 0 0 0 0\nvertex 1 2 3 4\n");
  CHECK(ok.loop.vertex_count() == 1);
  CHECK(ok.loop.vertex(0)[2] == 3.0);
}

TEST_CASE("vertex-free loop evaluates to the identity", "[loops]") {
  std::istringstream in(
      "hqc-loop v1\nsystem one-qubit\nbasepoint 0.5 0.25 0 0\n");
  const hqc::LoadedLoop loaded = hqc::load_loop(in, "basepoint-only");
  CHECK(loaded.loop.vertex_count() == 0);
  CHECK(loaded.loop.edge_count() == 1);
  const hqc::GateMatrix u =
      hqc::holonomy(loaded.loop, hqc::ConnectionField::one_qubit());
  CHECK(hqc::frob_dist(u, hqc::Matrix::Identity(2, 2)) == 0.0);
}

TEST_CASE("path table layout", "[loops]") {
  std::mt19937_64 rng(44);
  const PolygonalLoop loop = testutil::random_loop(System::OneQubit, 2, rng, 1.0);
  std::ostringstream out;
  hqc::write_path_table(loop, 10, StepRule::Midpoint, out);
  std::istringstream lines(out.str());
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == "theta1\ttheta2\tphi1\tphi2");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
  }
  CHECK(rows == 30);  // 10 steps x 3 edges

  // A vertex-free loop yields N identical rows at the basepoint.
  const PolygonalLoop still(System::OneQubit, {0.5, 0.25, 0, 0}, {});
  std::ostringstream out2;
  hqc::write_path_table(still, 5, StepRule::LeftEndpoint, out2);
  std::istringstream lines2(out2.str());
  std::getline(lines2, line);
  std::string first;
  std::getline(lines2, first);
  rows = 1;
  while (std::getline(lines2, line)) {
    ++rows;
    CHECK(line == first);
  }
  CHECK(rows == 5);
}
