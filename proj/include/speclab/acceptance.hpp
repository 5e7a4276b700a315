#pragma once

#include "speclab/report.hpp"

namespace speclab {

inline constexpr int kAcceptanceCriteria = 12;

// One end-to-end verification per criterion, index 1..12.
CheckResult run_criterion(int index);

// All criteria, aggregated into a report (command = "all").
VerificationReport run_acceptance();

}  // namespace speclab
