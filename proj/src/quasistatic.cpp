#include "pzt/quasistatic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <string>

namespace pzt {

void check_schedule(const Schedule& schedule, Variant v)
{
    if (schedule.samples.empty())
        fail(Errc::schema_error, "schedule has no samples");
    for (std::size_t i = 0; i < schedule.samples.size(); ++i) {
        const Schedule::Sample& s = schedule.samples[i];
        if (!std::isfinite(s.tau))
            fail(Errc::non_finite_data, "schedule time is not finite");
        if (i > 0 && !(s.tau > schedule.samples[i - 1].tau))
            fail(Errc::schema_error, "schedule times must be strictly increasing");
        for (const auto& f : boundary_fields(v))
            if (!std::isfinite(s.data.*(f.member)))
                fail(Errc::non_finite_data,
                     std::string("schedule datum ") + f.name + " is not finite");
    }
}

BoundaryData sample_schedule(const Schedule& schedule, Variant v, double tau)
{
    check_schedule(schedule, v);
    if (!std::isfinite(tau) || tau < schedule.front() || tau > schedule.back())
        fail(Errc::out_of_schedule,
             "time " + std::to_string(tau) + " lies outside the schedule span ["
                 + std::to_string(schedule.front()) + ", " + std::to_string(schedule.back())
                 + "]");

    const auto& samples = schedule.samples;
    if (samples.size() == 1)
        return samples.front().data;
    auto upper = std::upper_bound(samples.begin(), samples.end(), tau,
                                  [](double t, const Schedule::Sample& s) { return t < s.tau; });
    if (upper == samples.begin())
        return samples.front().data;
    if (upper == samples.end())
        return samples.back().data;
    const Schedule::Sample& lo = *(upper - 1);
    const Schedule::Sample& hi = *upper;
    const double w = (tau - lo.tau) / (hi.tau - lo.tau);

    BoundaryData out;
    for (const auto& f : boundary_fields(v))
        out.*(f.member) = (1.0 - w) * (lo.data.*(f.member)) + w * (hi.data.*(f.member));
    return out;
}

std::vector<SweepEntry> sweep(const ProblemSpec& spec_template, const Schedule& schedule,
                              std::span<const double> times, Exec exec)
{
    check_schedule(schedule, spec_template.variant);

    // Fail fast (and outside the parallel region) on anything that would
    // fail at every instant: bad material, bad geometry, out-of-span times.
    validate_material(spec_template.material);
    for (double tau : times)
        if (!std::isfinite(tau) || tau < schedule.front() || tau > schedule.back())
            fail(Errc::out_of_schedule,
                 "requested time " + std::to_string(tau) + " lies outside the schedule");

    const auto solve_at = [&](double tau) {
        ProblemSpec spec = spec_template;
        spec.data = sample_schedule(schedule, spec_template.variant, tau);
        return SweepEntry{tau, solve_panel(spec)};
    };

    std::vector<SweepEntry> out(times.size());
    const std::int64_t count = static_cast<std::int64_t>(times.size());
    if (exec == Exec::parallel) {
        std::exception_ptr err;
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < count; ++i) {
            try {
                out[static_cast<std::size_t>(i)] = solve_at(times[static_cast<std::size_t>(i)]);
            } catch (...) {
#pragma omp critical
                if (!err)
                    err = std::current_exception();
            }
        }
        if (err)
            std::rethrow_exception(err);
    } else {
        for (std::int64_t i = 0; i < count; ++i)
            out[static_cast<std::size_t>(i)] = solve_at(times[static_cast<std::size_t>(i)]);
    }
    return out;
}

std::vector<RateFlag> slowness_check(const Schedule& schedule, Variant v, double max_rate)
{
    check_schedule(schedule, v);
    if (!(max_rate > 0.0))
        fail(Errc::schema_error, "max_rate must be positive");

    std::vector<RateFlag> flags;
    const auto& samples = schedule.samples;
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
        const double dtau = samples[i + 1].tau - samples[i].tau;
        for (const auto& f : boundary_fields(v)) {
            const double rate =
                std::fabs((samples[i + 1].data.*(f.member)) - (samples[i].data.*(f.member)))
                / dtau;
            if (rate > max_rate)
                flags.push_back(RateFlag{f.name, i, rate});
        }
    }
    return flags;
}

} // namespace pzt
