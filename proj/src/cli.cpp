#include "pzt/cli.hpp"

#include "pzt/bcp.hpp"
#include "pzt/control.hpp"
#include "pzt/fd_oracle.hpp"
#include "pzt/io.hpp"
#include "pzt/quasistatic.hpp"
#include "pzt/verify.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace pzt {

namespace {

ProblemSpec make_spec(const Material& m, const ProblemInput& in)
{
    ProblemSpec spec;
    spec.material = m;
    spec.orientation = in.orientation;
    spec.variant = in.variant;
    spec.h = in.h;
    if (in.data)
        spec.data = *in.data;
    return spec;
}

void require_plain_data(const ProblemInput& in, const char* command)
{
    if (in.control)
        fail(Errc::schema_error,
             std::string("this problem file carries a control request; the ") + command
                 + " command expects plain boundary data (use the control command)");
    if (!in.data)
        fail(Errc::schema_error,
             std::string("the ") + command + " command needs the full \"data\" object");
}

int run_solve(const RunConfig& cfg, const Material& m, const ProblemInput& in)
{
    require_plain_data(in, "solve");
    const PanelSolution sol = solve_panel(make_spec(m, in));
    const std::vector<StateSample> rows = tabulate(sol, cfg.samples, cfg.exec);
    write_profile_csv(cfg.out_path, rows);

    std::filesystem::path report_path = cfg.out_path;
    report_path.replace_extension(".json");
    const nlohmann::ordered_json report = report_solution(sol);
    write_json(report_path, report);

    const double resid = report.at("boundary_residual").get<double>();
    std::cout << "wrote " << cfg.out_path.string() << " (" << cfg.samples << " samples) and "
              << report_path.string() << '\n'
              << "boundary residual " << format_double(resid) << '\n';
    if (!(resid <= cfg.tol)) {
        std::cerr << "verification failure: boundary residual " << format_double(resid)
                  << " exceeds tolerance " << format_double(cfg.tol) << '\n';
        return 4;
    }
    return 0;
}

int run_control(const RunConfig& cfg, const Material& m, const ProblemInput& in)
{
    if (!in.control)
        fail(Errc::schema_error, "the control command needs a \"control\" object in the "
                                 "problem file");
    ControlQuery query;
    query.spec = make_spec(m, in);
    query.free_datum = in.control->free_datum;
    query.target_field = in.control->target_field;
    query.x_target = in.control->x_target;
    query.target_value = in.control->target_value;

    const ControlResult result = invert(query);
    const nlohmann::ordered_json report = report_control(query, result);
    write_json(cfg.out_path, report);

    const double residual = report.at("residual").get<double>();
    std::cout << free_datum_name(query.free_datum) << " = "
              << format_double(result.free_value) << "  (sensitivity "
              << format_double(result.sensitivity) << ")\n"
              << "wrote " << cfg.out_path.string() << '\n'
              << "target residual " << format_double(residual) << '\n';
    if (!(residual <= cfg.tol)) {
        std::cerr << "verification failure: target residual " << format_double(residual)
                  << " exceeds tolerance " << format_double(cfg.tol) << '\n';
        return 4;
    }
    return 0;
}

int run_verify(const RunConfig& cfg, const Material& m, const ProblemInput& in)
{
    require_plain_data(in, "verify");
    if (cfg.grid_n < 16 || cfg.grid_n % 2 != 0)
        fail(Errc::schema_error, "--grid must be an even number of at least 16 intervals");

    const ProblemSpec spec = make_spec(m, in);
    const PanelSolution closed = solve_panel(spec);
    const DiscreteSolution coarse = solve_fd(spec, Grid{cfg.grid_n / 2, spec.h});
    const DiscreteSolution fine = solve_fd(spec, Grid{cfg.grid_n, spec.h});
    const ErrorReport report = compare(closed, coarse, fine);
    write_json(cfg.out_path, report_verify(coarse, fine, report));

    std::cout << "grids " << coarse.grid.n << "/" << fine.grid.n << ": max rel error "
              << format_double(report.overall_max_rel) << ", observed order "
              << format_double(report.overall_order) << '\n'
              << "wrote " << cfg.out_path.string() << '\n';
    if (!(report.overall_max_rel <= cfg.tol)) {
        std::cerr << "verification failure: max rel error "
                  << format_double(report.overall_max_rel) << " exceeds tolerance "
                  << format_double(cfg.tol) << '\n';
        return 4;
    }
    return 0;
}

int run_sweep(const RunConfig& cfg, const Material& m, const ProblemInput& in)
{
    if (in.control)
        fail(Errc::schema_error, "sweep does not accept a control request");
    const Schedule schedule = load_schedule(cfg.schedule_path, in.variant);

    std::vector<double> times;
    times.reserve(schedule.samples.size());
    for (const Schedule::Sample& s : schedule.samples)
        times.push_back(s.tau);

    const std::vector<SweepEntry> entries = sweep(make_spec(m, in), schedule, times, cfg.exec);
    write_sweep_csv(cfg.out_path, entries, cfg.samples, cfg.exec);
    std::cout << "wrote " << cfg.out_path.string() << " (" << entries.size() << " instants x "
              << cfg.samples << " samples)\n";
    return 0;
}

} // namespace

int run(const RunConfig& cfg)
{
    const Material m = load_material(cfg.material_path);
    const ProblemInput in = load_problem(cfg.problem_path);
    switch (cfg.command) {
    case RunConfig::Command::solve: return run_solve(cfg, m, in);
    case RunConfig::Command::control: return run_control(cfg, m, in);
    case RunConfig::Command::verify: return run_verify(cfg, m, in);
    case RunConfig::Command::sweep: return run_sweep(cfg, m, in);
    }
    fail(Errc::schema_error, "unknown command");
}

int run_cli(int argc, char** argv)
{
    RunConfig cfg;
    bool serial = false;

    CLI::App app{"Exact through-thickness solver for piezo-thermo-elastic plates "
                 "(hexagonal 6mm), with boundary control and a finite-difference "
                 "cross-check"};
    app.require_subcommand(1);

    auto add_io = [&](CLI::App* sub, bool with_schedule) {
        sub->add_option("--material", cfg.material_path, "material JSON file")
            ->required();
        sub->add_option("--problem", cfg.problem_path, "problem JSON file")->required();
        if (with_schedule)
            sub->add_option("--schedule", cfg.schedule_path, "schedule JSON file")
                ->required();
        sub->add_option("--out", cfg.out_path, "output file")->required();
        sub->add_flag("--serial", serial, "run the evaluation kernels serially");
    };

    CLI::App* solve = app.add_subcommand(
        "solve", "closed-form profile of one panel problem (CSV + JSON report)");
    add_io(solve, false);
    solve->add_option("--samples", cfg.samples, "rows in the profile CSV")
        ->default_val(201)
        ->check(CLI::Range(2, 100000000));
    solve->add_option("--tol", cfg.tol, "boundary-residual tolerance")->default_val(1e-8);

    CLI::App* control = app.add_subcommand(
        "control", "choose a free boundary datum to hit a pointwise target (JSON report)");
    add_io(control, false);
    control->add_option("--tol", cfg.tol, "target-residual tolerance")->default_val(1e-8);

    CLI::App* verify = app.add_subcommand(
        "verify", "compare the closed form against the finite-difference solve");
    add_io(verify, false);
    verify->add_option("--grid", cfg.grid_n, "fine grid intervals (coarse runs at half)")
        ->default_val(1024);
    verify->add_option("--tol", cfg.tol, "max-rel-error tolerance")->default_val(1e-4);

    CLI::App* sweep = app.add_subcommand(
        "sweep", "quasi-static sweep over a boundary-data schedule (CSV)");
    add_io(sweep, true);
    sweep->add_option("--samples", cfg.samples, "rows per schedule instant")
        ->default_val(21)
        ->check(CLI::Range(2, 100000000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    cfg.exec = serial ? Exec::serial : Exec::parallel;
    if (solve->parsed())
        cfg.command = RunConfig::Command::solve;
    else if (control->parsed())
        cfg.command = RunConfig::Command::control;
    else if (verify->parsed())
        cfg.command = RunConfig::Command::verify;
    else if (sweep->parsed())
        cfg.command = RunConfig::Command::sweep;

    try {
        return run(cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == Errc::schema_error ? 2 : 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}

} // namespace pzt
