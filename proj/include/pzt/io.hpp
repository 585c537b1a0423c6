#pragma once

#include "pzt/control.hpp"
#include "pzt/quasistatic.hpp"
#include "pzt/verify.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>

namespace pzt {

// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);

// --- JSON input (strict: every required key present, unknown keys rejected,
// all failures are SchemaError with the offending context in the message) ---

Material material_from_json(const nlohmann::json& j);
Material load_material(const std::filesystem::path& path);

struct ControlRequest {
    FreeDatum free_datum = FreeDatum::qbar;
    TargetField target_field = TargetField::temperature;
    double x_target = 0;
    double target_value = 0;
};

// Contents of a problem file: panel setup, optionally the ten boundary data,
// optionally a control request.  When a control request is present the free
// datum must be omitted from "data" (its value would be discarded); commands
// that need full data reject a file without "data".
struct ProblemInput {
    Orientation orientation = Orientation::thickness3;
    Variant variant = Variant::charge;
    double h = 0;
    std::optional<BoundaryData> data;
    std::optional<ControlRequest> control;
};

ProblemInput problem_from_json(const nlohmann::json& j);
ProblemInput load_problem(const std::filesystem::path& path);

Schedule schedule_from_json(const nlohmann::json& j, Variant v);
Schedule load_schedule(const std::filesystem::path& path, Variant v);

// --- output -----------------------------------------------------------------

// Profile CSV: header x,T,phi,u1,u2,u3,t1..t6,D1..D3,q1..q3, one row per
// sample, every number in round-trip form.
void write_profile_csv(std::ostream& os, std::span<const StateSample> samples);
void write_profile_csv(const std::filesystem::path& path, std::span<const StateSample> samples);

// Sweep CSV: same columns preceded by tau; samples-per-instant rows per
// schedule entry.
void write_sweep_csv(const std::filesystem::path& path, std::span<const SweepEntry> entries,
                     int samples, Exec exec);

nlohmann::ordered_json report_solution(const PanelSolution& sol);
nlohmann::ordered_json report_control(const ControlQuery& query, const ControlResult& result);
nlohmann::ordered_json report_verify(const DiscreteSolution& coarse,
                                     const DiscreteSolution& fine, const ErrorReport& report);

void write_json(const std::filesystem::path& path, const nlohmann::ordered_json& j);

} // namespace pzt
