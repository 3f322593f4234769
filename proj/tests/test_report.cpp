#include "zonal/suites.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using namespace zonal;

TEST(Report, Fnv1aKnownValues) {
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
}

TEST(Report, DigestIsCanonical) {
  RadialExpr a = RadialExpr::dot(2, 2) + RadialExpr::constant(2, 2, 1);
  RadialExpr b = RadialExpr::constant(2, 2, 1) + RadialExpr::dot(2, 2);
  EXPECT_EQ(digest(a), digest(b));
  EXPECT_NE(digest(a), digest(RadialExpr::dot(2, 2)));
  EXPECT_EQ(radial_from_json(to_json(a)), a);
}

TEST(Report, RunTasksKeepsOrderAndCatchesExceptions) {
  std::vector<CellTask> tasks;
  for (int i = 0; i < 20; ++i)
    tasks.push_back([i] {
      if (i == 7) throw std::domain_error("boom");
      CellOutput o;
      o.cell.params = {{"i", i}};
      return o;
    });
  for (int threads : {1, 4}) {
    auto out = run_tasks(tasks, threads);
    ASSERT_EQ(out.size(), 20u);
    for (int i = 0; i < 20; ++i) {
      if (i == 7) {
        EXPECT_EQ(out[i].cell.status, "fail");
        EXPECT_EQ(out[i].cell.witness["what"], "boom");
      } else {
        EXPECT_EQ(out[i].cell.params["i"], i);
      }
    }
  }
}

TEST(Report, SchemaAndDeterminism) {
  SuiteOptions o;
  o.kmax = 3;
  o.threads = 1;
  SuiteReport a = run_suite("gegenbauer", o);
  o.threads = 3;
  SuiteReport b = run_suite("gegenbauer", o);
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
  Json j = a.to_json();
  for (const char* key : {"suite", "seed", "cells", "passed", "findings"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_FALSE(j["cells"][0].contains("elapsed_ms"));
  EXPECT_TRUE(a.to_json(true)["cells"][0].contains("elapsed_ms"));
}

TEST(Report, FailingCellsCarryWitnesses) {
  SuiteOptions o;
  o.n = 3;
  o.kmax = 2;
  o.crosscheck = CrossCheck::none;
  SuiteReport r = run_suite("kelvin", o);
  EXPECT_FALSE(r.passed());
  for (const auto& c : r.cells)
    if (c.status == "fail") {
      EXPECT_FALSE(c.witness.is_null());
      EXPECT_TRUE(c.witness.contains("lhs_minus_rhs"));
    }
  EXPECT_FALSE(r.findings.empty());
}

TEST(Report, DegenerateRangesPass) {
  SuiteOptions o;
  o.kmax = 0;
  EXPECT_TRUE(run_suite("gegenbauer", o).passed());
  EXPECT_THROW(run_suite("nope", o), std::invalid_argument);
}

TEST(Report, MonteCarloSeedsRecorded) {
  SuiteOptions o;
  o.n = 2;
  o.k = 2;
  o.samples = 20000;
  SuiteReport r = run_suite("reproducing", o);
  ASSERT_EQ(r.cells.size(), 1u);
  EXPECT_TRUE(r.cells[0].params.contains("seed"));
  EXPECT_TRUE(r.cells[0].params.contains("three_sigma_relative"));
}
