#pragma once

#include <filesystem>
#include <vector>

#include "ppsf/sweep.hpp"

namespace ppsf {

/// Slope-vs-r line chart with the four reference lines: density D, sharp
/// target D/(1-eps), and the non-sharp bounds (1+eps)D and D/(1-2eps).
/// Purely a convenience artifact; the CSV is the contract.
void write_sweep_svg(const std::filesystem::path& path,
                     const std::vector<SweepRecord>& records);

} // namespace ppsf
