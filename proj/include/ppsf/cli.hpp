#pragma once

#include <filesystem>

#include "ppsf/config.hpp"

namespace ppsf {

/// Entry point behind main(). Subcommands: eig, construct, sweep, verify,
/// slepian. Exit codes: 0 success, 1 validation error, 2 numerical or
/// verification failure, 3 I/O error.
int run_cli(int argc, const char* const* argv);

/// Individual commands; out_dir already resolved and created. Each throws the
/// error types in errors.hpp.
void cmd_eig(const RunConfig& cfg, const std::filesystem::path& out_dir);
void cmd_construct(const RunConfig& cfg, const std::filesystem::path& out_dir);
void cmd_sweep(const RunConfig& cfg, const std::filesystem::path& out_dir);
void cmd_verify(const RunConfig& cfg);
void cmd_slepian(const RunConfig& cfg, const std::filesystem::path& out_dir,
                 std::size_t j_max);

} // namespace ppsf
