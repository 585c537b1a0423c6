#pragma once

#include "pzt/types.hpp"

#include <filesystem>

namespace pzt {

// Parsed command-line configuration.  run() executes it and returns the
// process exit code for the success/tolerance-failure cases (0 / 4); schema
// and solver failures leave as exceptions and are mapped by run_cli
// (SchemaError -> 2, everything else -> 3).
struct RunConfig {
    enum class Command { solve, control, verify, sweep };

    Command command = Command::solve;
    std::filesystem::path material_path;
    std::filesystem::path problem_path;
    std::filesystem::path schedule_path;
    std::filesystem::path out_path;
    int samples = 201;  // thickness resolution of CSV output
    int grid_n = 1024;  // fine finite-difference grid for verify
    double tol = 1e-8;  // acceptance threshold for the command's residual
    Exec exec = Exec::parallel;
};

int run(const RunConfig& cfg);

int run_cli(int argc, char** argv);

} // namespace pzt
