// attainment-lab - attainment diagnostics for second-order cone programs
// Copyright 2026 attainment-lab contributors
// Licensed under Apache 2.0

#pragma once

namespace attainment {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace attainment
