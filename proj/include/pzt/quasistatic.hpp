#pragma once

#include "pzt/bcp.hpp"

#include <span>
#include <vector>

namespace pzt {

// Slowly varying boundary data: samples at strictly increasing schedule
// times tau, interpolated linearly in between.  Time enters only through the
// data; each instant is an independent equilibrium problem.
struct Schedule {
    struct Sample {
        double tau = 0;
        BoundaryData data;
    };
    std::vector<Sample> samples;

    double front() const { return samples.front().tau; }
    double back() const { return samples.back().tau; }
};

// Structural checks: at least one sample, strictly increasing tau, all data
// finite.  SchemaError / NonFiniteData.
void check_schedule(const Schedule& schedule, Variant v);

// Piecewise-linear interpolation; OutOfSchedule outside [front, back].
BoundaryData sample_schedule(const Schedule& schedule, Variant v, double tau);

struct SweepEntry {
    double tau = 0;
    PanelSolution solution;
};

// Closed-form solve at each requested time with data interpolated from the
// schedule.  spec_template supplies material/orientation/variant/h; its own
// data slot is ignored.  Instants are independent, so the parallel path
// distributes them over OpenMP threads; both paths give bitwise-identical
// results.
std::vector<SweepEntry> sweep(const ProblemSpec& spec_template, const Schedule& schedule,
                              std::span<const double> times, Exec exec = Exec::parallel);

// Largest per-interval rate of change |d(datum)/d(tau)| found in the
// schedule, per datum; entries exceeding max_rate are returned so callers
// can flag data that vary too fast for a quasi-static treatment.
struct RateFlag {
    const char* datum = nullptr;
    std::size_t interval = 0; // between samples[interval] and samples[interval+1]
    double rate = 0;
};

std::vector<RateFlag> slowness_check(const Schedule& schedule, Variant v, double max_rate);

} // namespace pzt
