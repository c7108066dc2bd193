// attainment-lab - attainment diagnostics for second-order cone programs
// Copyright 2026 attainment-lab contributors
// Licensed under Apache 2.0

#pragma once

#include <cstddef>
#include <variant>

#include "attainment/canonical.hpp"
#include "attainment/cones.hpp"

namespace attainment {

// Recession cone { h : h_1 >= ||(h_2, ..., h_n)|| } embedded in R^n.
struct EmbeddedSocCone {
  std::size_t dim = 2;

  friend bool operator==(const EmbeddedSocCone&, const EmbeddedSocCone&) = default;
};

// Generic form { h : A h in cone }.  Kept as a representation only; the exact
// copositivity certificate requires the embedded form, because the image of a
// second-order cone under a linear map need not be closed and a generic
// numeric minimization over this set would be unsound.
struct GenericRecessionCone {
  Mat A;
  SecondOrderCone cone;

  friend bool operator==(const GenericRecessionCone&,
                         const GenericRecessionCone&) = default;
};

struct RecessionCone {
  std::variant<EmbeddedSocCone, GenericRecessionCone> rep;

  friend bool operator==(const RecessionCone&, const RecessionCone&) = default;
};

inline bool recession_contains(const Vec& h, const RecessionCone& cone,
                               double tol = 0.0) {
  if (const auto* e = std::get_if<EmbeddedSocCone>(&cone.rep)) {
    return soc_contains(h, make_soc(e->dim, Dominant::First), tol);
  }
  const auto& g = std::get<GenericRecessionCone>(cone.rep);
  return soc_contains(matvec(g.A, h), g.cone, tol);
}

/// Recession cone of a canonical instance's feasible set.
///
/// The hyperboloid set { x_1 >= sqrt(rho^2 + ||x_tail||^2) } recedes exactly
/// along { h_1 >= ||h_tail|| } for every rho >= 0, so the embedded form is
/// returned.  Problems whose operator is not the canonical one are rejected.
inline RecessionCone recession_cone(const CanonicalInstance& instance) {
  if (!is_canonical_operator(instance.problem.constraint.A) ||
      instance.problem.constraint.cone.dominant != Dominant::Last) {
    throw UnsupportedError("recession_cone: generic recession cones unsupported");
  }
  return RecessionCone{EmbeddedSocCone{instance.feasible_set.n}};
}

/// The generic representation { h : A h in cone } of the same instance, used
/// to cross-check the embedded form.
inline RecessionCone recession_cone_generic(const CanonicalInstance& instance) {
  return RecessionCone{GenericRecessionCone{instance.problem.constraint.A,
                                            instance.problem.constraint.cone}};
}

}  // namespace attainment
