// attainment-lab - attainment diagnostics for second-order cone programs
// Copyright 2026 attainment-lab contributors
// Licensed under Apache 2.0

#pragma once

#include "attainment/canonical.hpp"
#include "attainment/commands.hpp"
#include "attainment/cones.hpp"
#include "attainment/conic_problem.hpp"
#include "attainment/config.hpp"
#include "attainment/copositivity.hpp"
#include "attainment/csv.hpp"
#include "attainment/diagnosis.hpp"
#include "attainment/dual.hpp"
#include "attainment/errors.hpp"
#include "attainment/hyperboloid.hpp"
#include "attainment/linalg.hpp"
#include "attainment/lp.hpp"
#include "attainment/polyhedral.hpp"
#include "attainment/recession.hpp"
#include "attainment/regularization.hpp"
#include "attainment/robust.hpp"
#include "attainment/sequence.hpp"
#include "attainment/serialize.hpp"
#include "attainment/svg.hpp"
#include "attainment/version.hpp"
