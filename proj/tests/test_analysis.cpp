// attainment-lab - attainment diagnostics for second-order cone programs
// Copyright 2026 attainment-lab contributors
// Licensed under Apache 2.0

#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace attainment;
using testsupport::Rng;

TEST_CASE("recession cone of canonical instances") {
  const auto rc2 = recession_cone(build_canonical(2));
  const auto* e2 = std::get_if<EmbeddedSocCone>(&rc2.rep);
  REQUIRE(e2 != nullptr);
  CHECK(e2->dim == 2);
  CHECK(recession_contains({1, -1}, rc2, 0.0));  // boundary ray
  CHECK(recession_contains({1, 0.5}, rc2, 0.0));
  CHECK_FALSE(recession_contains({0.5, 1}, rc2, 0.0));

  const auto rc3 = recession_cone(build_canonical(3));
  CHECK(std::get<EmbeddedSocCone>(rc3.rep).dim == 3);
  CHECK(recession_contains({1, 0.6, 0.6}, rc3, 1e-12));

  // A non-canonical operator is rejected rather than approximated.
  CanonicalInstance mangled = build_canonical(2);
  mangled.problem.constraint.A.at(0, 0) = 0.5;
  CHECK_THROWS_AS(recession_cone(mangled), UnsupportedError);
}

TEST_CASE("embedded and generic recession representations agree") {
  Rng rng;
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto inst = build_canonical(n);
    const auto embedded = recession_cone(inst);
    const auto generic = recession_cone_generic(inst);
    for (int i = 0; i < 1000; ++i) {
      const Vec h = rng.vec(n, -3.0, 3.0);
      CHECK(recession_contains(h, embedded, 0.0) ==
            recession_contains(h, generic, 0.0));
    }
  }
}

TEST_CASE("copositivity certificate closed form vs dense grid") {
  const auto cone2 = recession_cone(build_canonical(2));

  SECTION("all-ones objective on the planar cone: zero, not strict") {
    const auto cert = copositivity_certificate({1, 1}, cone2, 1e-9);
    CHECK(std::abs(cert.min_value) <= 1e-9);
    CHECK(cert.copositive);
    CHECK_FALSE(cert.strict);
    const double inv_r2 = 1.0 / std::sqrt(2.0);
    CHECK(cert.argmin_direction[0] == Catch::Approx(inv_r2).margin(1e-9));
    CHECK(cert.argmin_direction[1] == Catch::Approx(-inv_r2).margin(1e-9));
  }

  SECTION("c = (1, 0): strictly copositive, dense alpha-grid oracle") {
    const auto cert = copositivity_certificate({1, 0}, cone2, 1e-9);
    CHECK(cert.strict);
    CHECK(cert.min_value == Catch::Approx(std::sqrt(2.0) / 2.0).margin(1e-12));
    double grid_min = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 1000000; ++i) {
      const double a = (std::numbers::pi / 4.0) * i / 1000000.0;
      grid_min = std::min(grid_min, std::cos(a));  // tail term vanishes
    }
    CHECK(cert.min_value == Catch::Approx(grid_min).margin(1e-9));
  }

  SECTION("all-ones objective in R^3: negative certificate") {
    const auto cone3 = recession_cone(build_canonical(3));
    const auto cert = copositivity_certificate({1, 1, 1}, cone3, 1e-9);
    CHECK(cert.min_value ==
          Catch::Approx(std::sqrt(2.0) / 2.0 - 1.0).margin(1e-12));
    CHECK_FALSE(cert.copositive);
    // Expected direction (sqrt(2), -1, -1)/2.
    CHECK(cert.argmin_direction[0] == Catch::Approx(std::sqrt(0.5)).margin(1e-12));
    CHECK(cert.argmin_direction[1] == Catch::Approx(-0.5).margin(1e-12));
    CHECK(cert.argmin_direction[2] == Catch::Approx(-0.5).margin(1e-12));
  }

  SECTION("negative first coefficient uses the interior critical point") {
    const auto cert = copositivity_certificate({-2, 1}, cone2, 1e-9);
    // Unconstrained angle: the full minimum -||c|| is reached inside [0, pi/4].
    CHECK(cert.min_value == Catch::Approx(-std::sqrt(5.0)).margin(1e-12));
    double grid_min = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 200000; ++i) {
      const double a = (std::numbers::pi / 4.0) * i / 200000.0;
      grid_min = std::min(grid_min, -2.0 * std::cos(a) - std::sin(a));
    }
    CHECK(cert.min_value == Catch::Approx(grid_min).margin(1e-9));
  }

  SECTION("zero objective") {
    const auto cert = copositivity_certificate({0, 0}, cone2, 1e-9);
    CHECK(cert.min_value == 0.0);
    CHECK_FALSE(cert.strict);
    CHECK(cert.copositive);
    CHECK(norm(cert.argmin_direction) == Catch::Approx(1.0).margin(1e-12));
  }

  SECTION("generic representation is rejected") {
    CHECK_THROWS_AS(
        copositivity_certificate({1, 1}, recession_cone_generic(build_canonical(2)),
                                 1e-9),
        UnsupportedError);
  }
}

TEST_CASE("certificate soundness and tightness properties") {
  Rng rng;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(2, 6));
    const Vec c = rng.vec(n, -3.0, 3.0);
    const RecessionCone cone{EmbeddedSocCone{n}};
    const auto cert = copositivity_certificate(c, cone, 1e-9);

    CHECK(norm(cert.argmin_direction) == Catch::Approx(1.0).margin(1e-9));
    CHECK(recession_contains(cert.argmin_direction, cone, 1e-9));
    CHECK(dot(c, cert.argmin_direction) ==
          Catch::Approx(cert.min_value).margin(1e-9));

    for (int s = 0; s < 10000; ++s) {
      const Vec h = rng.cone_member(n);
      if (dot(c, h) < cert.min_value - 1e-9) {
        CAPTURE(c, h, cert.min_value);
        REQUIRE(dot(c, h) >= cert.min_value - 1e-9);
      }
    }
  }
}

TEST_CASE("slater probe finds strict witnesses") {
  const auto p2 = slater_probe(build_canonical(2));
  CHECK(p2.holds);
  REQUIRE(p2.witness.has_value());
  CHECK(*p2.witness == Vec{2, 0});
  CHECK(*p2.margin == Catch::Approx(1.0).margin(1e-12));

  const auto p3 = slater_probe(build_canonical(3));
  CHECK(p3.holds);
  CHECK(*p3.witness == Vec{2, 0, 0});
  CHECK(*p3.margin == Catch::Approx(1.0).margin(1e-12));

  const auto cone_case = slater_probe(make_hyperboloid_instance(2, 0.0, ones(2)));
  CHECK(cone_case.holds);
  CHECK(*cone_case.witness == Vec{1, 0});
  CHECK(*cone_case.margin == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("dual construction") {
  const auto inst2 = build_canonical(2);
  const auto dual2 = dual_build(inst2.problem);
  CHECK(dual2.objective == Vec{-1, 0, 0});
  CHECK(dual2.rhs == Vec{1, 1});
  CHECK(dual2.cone == inst2.problem.constraint.cone);

  Rng rng;
  for (int i = 0; i < 100; ++i) {
    const Vec y = rng.vec(3, -5.0, 5.0);
    CHECK(matvec(dual2.adjoint, y) == Vec{y[2], y[1]});
    const Vec x = rng.vec(2, -5.0, 5.0);
    const double lhs = dot(matvec(inst2.problem.constraint.A, x), y);
    const double rhs = dot(x, matvec(dual2.adjoint, y));
    CHECK(std::abs(lhs - rhs) <= 1e-12);
  }

  const auto dual3 = dual_build(build_canonical(3).problem);
  for (int i = 0; i < 100; ++i) {
    const Vec y = rng.vec(4, -5.0, 5.0);
    CHECK(matvec(dual3.adjoint, y) == Vec{y[3], y[1], y[2]});
  }
}

TEST_CASE("dual closed-form solve") {
  SECTION("planar instance: the unique dual point") {
    const auto sol = dual_solve_canonical(dual_build(build_canonical(2).problem));
    CHECK(sol.status == DualStatus::Unique);
    REQUIRE(sol.point.has_value());
    CHECK(*sol.point == Vec{0, 1, 1});
    CHECK(*sol.value == 0.0);
  }

  SECTION("three-dimensional instance: dual infeasible") {
    const auto sol = dual_solve_canonical(dual_build(build_canonical(3).problem));
    CHECK(sol.status == DualStatus::Infeasible);
    CHECK_FALSE(sol.point.has_value());
  }

  SECTION("slack objective: an interval of dual points") {
    const auto inst = make_hyperboloid_instance(2, 1.0, Vec{2, 0});
    const auto sol = dual_solve_canonical(dual_build(inst.problem));
    CHECK(sol.status == DualStatus::Interval);
    CHECK(sol.y1_lo == Catch::Approx(-2.0).margin(1e-12));
    CHECK(sol.y1_hi == Catch::Approx(2.0).margin(1e-12));
    REQUIRE(sol.point.has_value());
    CHECK((*sol.point)[0] == Catch::Approx(-2.0).margin(1e-12));
    CHECK(*sol.value == Catch::Approx(2.0).margin(1e-12));
    // The maximizing point stays in the cone.
    CHECK(soc_contains(*sol.point, inst.problem.constraint.cone, 1e-12));
  }

  SECTION("non-canonical dual is rejected") {
    auto dual = dual_build(build_canonical(2).problem);
    dual.adjoint.at(0, 0) = 7.0;
    CHECK_THROWS_AS(dual_solve_canonical(dual), UnsupportedError);
  }
}

TEST_CASE("weak duality and value agreement for the planar instance") {
  Rng rng;
  const auto inst = build_canonical(2);
  const auto sol = dual_solve_canonical(dual_build(inst.problem));
  REQUIRE(sol.value.has_value());
  const double dual_value = *sol.value;
  CHECK(dual_value == 0.0);

  for (int i = 0; i < 5000; ++i) {
    const Vec x = rng.hyperboloid_member(2, 1.0, 50.0);
    const double f = dot(inst.problem.c, x);
    CHECK(f >= dual_value - 1e-9);
    CHECK(f > 0.0);
  }

  // Primal infimum estimate from the minimizing sequence meets the dual value.
  const double inf_estimate = minimizing_sequence(1000000).f;
  CHECK(std::abs(inf_estimate - dual_value) <= 1e-6);
}

TEST_CASE("classifier decision table") {
  const auto path20 = [](const CanonicalInstance& inst) {
    return regularization_path(inst, doubling_schedule(20), 1e-12);
  };

  SECTION("planar counterexample: attainment suspect with strong evidence") {
    const auto inst = build_canonical(2);
    const auto report = classify(inst, path20(inst), 1e-9);
    CHECK(report.classification == Classification::AttainmentSuspect);
    REQUIRE(report.evidence.has_value());
    CHECK(report.evidence->strength == EvidenceStrength::Strong);
    CHECK(report.evidence->values_decreasing);
    CHECK(report.evidence->norms_increasing);
    REQUIRE(report.dual_summary.has_value());
    CHECK(report.dual_summary->status == "unique");
    CHECK(*report.dual_summary->value == 0.0);

    bool found_slater_note = false;
    for (const auto& d : report.paper_discrepancies)
      if (d.id == "strict_interior_point_found" && d.section == "4.3")
        found_slater_note = true;
    CHECK(found_slater_note);
  }

  SECTION("n = 3: unbounded, with a discrepancy note") {
    const auto inst = build_canonical(3);
    const auto report = classify(inst, path20(inst), 1e-9);
    CHECK(report.classification == Classification::Unbounded);
    bool found = false;
    for (const auto& d : report.paper_discrepancies)
      if (d.id == "copositivity_certificate_negative" && d.section == "3.1")
        found = true;
    CHECK(found);
    CHECK(report.dual_summary->status == "infeasible");
  }

  SECTION("strict certificate: solvable") {
    const auto inst = make_hyperboloid_instance(2, 1.0, Vec{1, 0});
    const auto report = classify(inst, path20(inst), 1e-9);
    CHECK(report.classification == Classification::SolvableCertain);
    // Regularized solves converge to the attained minimizer with bounded norms.
    REQUIRE(report.evidence.has_value());
    CHECK(report.evidence->max_norm <= 1.0 + 1e-9);
    CHECK(report.evidence->strength == EvidenceStrength::None);
  }

  SECTION("polyhedral planar cone: solvable via the polyhedral branch") {
    const auto inst = make_hyperboloid_instance(2, 0.0, ones(2));
    const auto report = classify(inst, std::nullopt, 1e-9);
    CHECK(std::abs(report.copositivity.min_value) <= 1e-9);
    CHECK(report.polyhedral);
    CHECK(report.classification == Classification::SolvableCertain);
  }

  SECTION("classification is deterministic byte-for-byte") {
    const auto inst = build_canonical(2);
    const auto r1 = classify(inst, path20(inst), 1e-9);
    const auto r2 = classify(inst, path20(inst), 1e-9);
    CHECK(r1 == r2);
    RunConfig cfg;
    cfg.command = "analyze";
    CHECK(render_analysis_json(r1, cfg) == render_analysis_json(r2, cfg));
  }
}
