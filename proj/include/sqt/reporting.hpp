#pragma once

#include <string>

#include "sqt/experiments.hpp"

namespace sqt {

// Fixed 12-significant-digit formatting used in every tabular artifact.
std::string format_g12(double v);

inline constexpr const char* kSweepCsvHeader = "r,tau,e_npt,concurrence,eof,s_linear,purity";

// Row-major rows (r outer) under kSweepCsvHeader; byte-stable.
std::string sweep_csv(const SweepResult& result);

// "alpha,beta,e_npt" rows, alpha outer; byte-stable.
std::string prep_scan_csv(const PrepScanResult& result);

}  // namespace sqt
