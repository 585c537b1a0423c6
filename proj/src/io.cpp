#include "pzt/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <utility>

namespace pzt {

using nlohmann::json;
using nlohmann::ordered_json;

std::string format_double(double v)
{
    std::array<char, 40> buf;
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

namespace {

// Strict object access: every key must be consumed exactly once, leftovers
// are schema errors.
class ObjectReader {
public:
    ObjectReader(const json& j, std::string context) : j_(j), ctx_(std::move(context))
    {
        if (!j_.is_object())
            fail(Errc::schema_error, ctx_ + " must be a JSON object");
    }

    bool has(const std::string& key) const { return j_.contains(key); }

    const json& child(const std::string& key)
    {
        if (!j_.contains(key))
            fail(Errc::schema_error, ctx_ + " is missing required key \"" + key + "\"");
        seen_.insert(key);
        return j_.at(key);
    }

    double number(const std::string& key)
    {
        const json& v = child(key);
        if (!v.is_number())
            fail(Errc::schema_error, ctx_ + "." + key + " must be a number");
        return v.get<double>();
    }

    std::string str(const std::string& key)
    {
        const json& v = child(key);
        if (!v.is_string())
            fail(Errc::schema_error, ctx_ + "." + key + " must be a string");
        return v.get<std::string>();
    }

    void finish() const
    {
        for (const auto& item : j_.items())
            if (!seen_.contains(item.key()))
                fail(Errc::schema_error, ctx_ + " has unknown key \"" + item.key() + "\"");
    }

private:
    const json& j_;
    std::string ctx_;
    std::set<std::string> seen_;
};

const struct {
    const char* name;
    double Material::* member;
} material_fields[] = {
    {"c11", &Material::c11},           {"c12", &Material::c12},
    {"c13", &Material::c13},           {"c33", &Material::c33},
    {"c44", &Material::c44},           {"c66", &Material::c66},
    {"e15", &Material::e15},           {"e31", &Material::e31},
    {"e33", &Material::e33},           {"eps11", &Material::eps11},
    {"eps33", &Material::eps33},       {"omega1", &Material::omega1},
    {"omega2", &Material::omega2},     {"omega3", &Material::omega3},
    {"beta1", &Material::beta1},       {"beta2", &Material::beta2},
    {"beta3", &Material::beta3},       {"kappa11", &Material::kappa11},
    {"kappa33", &Material::kappa33},   {"kappaE11", &Material::kappaE11},
    {"kappaE33", &Material::kappaE33}, {"theta0", &Material::theta0},
    {"rho0", &Material::rho0},
};

json parse_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        fail(Errc::schema_error, "cannot open input file " + path.string());
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded())
        fail(Errc::schema_error, "invalid JSON in " + path.string());
    return j;
}

Orientation orientation_from_name(const std::string& name)
{
    if (name == "thickness1")
        return Orientation::thickness1;
    if (name == "thickness3")
        return Orientation::thickness3;
    fail(Errc::schema_error,
         "orientation must be \"thickness1\" or \"thickness3\", got \"" + name + "\"");
}

Variant variant_from_name(const std::string& name)
{
    if (name == "I")
        return Variant::charge;
    if (name == "II")
        return Variant::potential;
    fail(Errc::schema_error, "variant must be \"I\" or \"II\", got \"" + name + "\"");
}

BoundaryData data_from_json(const json& j, Variant v, const char* omitted)
{
    ObjectReader r(j, "data");
    BoundaryData out;
    for (const auto& f : boundary_fields(v)) {
        if (omitted && f.name == std::string(omitted)) {
            if (r.has(f.name))
                fail(Errc::schema_error,
                     std::string("data.") + f.name
                         + " is the control's free datum and must be omitted");
            continue;
        }
        out.*(f.member) = r.number(f.name);
    }
    r.finish();
    return out;
}

} // namespace

Material material_from_json(const json& j)
{
    ObjectReader r(j, "material");
    Material m;
    for (const auto& f : material_fields)
        m.*(f.member) = r.number(f.name);
    r.finish();
    return m;
}

Material load_material(const std::filesystem::path& path)
{
    return material_from_json(parse_file(path));
}

ProblemInput problem_from_json(const json& j)
{
    ObjectReader r(j, "problem");
    ProblemInput out;
    out.orientation = orientation_from_name(r.str("orientation"));
    out.variant = variant_from_name(r.str("variant"));
    out.h = r.number("h");
    if (!std::isfinite(out.h) || out.h <= 0.0)
        fail(Errc::schema_error, "problem.h must be a positive finite number");

    if (r.has("control")) {
        ObjectReader c(r.child("control"), "control");
        ControlRequest req;
        req.free_datum = free_datum_from_name(c.str("free_datum"));
        req.target_field = target_field_from_name(c.str("target_field"));
        req.x_target = c.number("x_target");
        req.target_value = c.number("target_value");
        c.finish();
        if (!std::isfinite(req.x_target) || !std::isfinite(req.target_value))
            fail(Errc::schema_error, "control.x_target and control.target_value must be finite");
        out.control = req;
    }

    if (r.has("data")) {
        const char* omitted = out.control ? free_datum_name(out.control->free_datum) : nullptr;
        out.data = data_from_json(r.child("data"), out.variant, omitted);
    } else if (out.control) {
        fail(Errc::schema_error,
             "a control run still needs \"data\" with the remaining nine boundary values");
    }
    r.finish();
    return out;
}

ProblemInput load_problem(const std::filesystem::path& path)
{
    return problem_from_json(parse_file(path));
}

Schedule schedule_from_json(const json& j, Variant v)
{
    if (!j.is_array())
        fail(Errc::schema_error, "schedule must be a JSON array of {tau, data} objects");
    Schedule out;
    for (const json& item : j) {
        ObjectReader r(item, "schedule entry");
        Schedule::Sample s;
        s.tau = r.number("tau");
        s.data = data_from_json(r.child("data"), v, nullptr);
        r.finish();
        out.samples.push_back(s);
    }
    check_schedule(out, v);
    return out;
}

Schedule load_schedule(const std::filesystem::path& path, Variant v)
{
    return schedule_from_json(parse_file(path), v);
}

namespace {

constexpr const char* profile_header = "x,T,phi,u1,u2,u3,t1,t2,t3,t4,t5,t6,D1,D2,D3,q1,q2,q3";

void write_row(std::ostream& os, const StateSample& s)
{
    os << format_double(s.x) << ',' << format_double(s.T) << ',' << format_double(s.phi);
    for (double v : s.u)
        os << ',' << format_double(v);
    for (double v : s.t)
        os << ',' << format_double(v);
    for (double v : s.D)
        os << ',' << format_double(v);
    for (double v : s.q)
        os << ',' << format_double(v);
    os << '\n';
}

std::ofstream open_out(const std::filesystem::path& path)
{
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("cannot open output file " + path.string());
    return os;
}

ordered_json data_to_json(const BoundaryData& d, Variant v)
{
    ordered_json j;
    for (const auto& f : boundary_fields(v))
        j[f.name] = d.*(f.member);
    return j;
}

} // namespace

void write_profile_csv(std::ostream& os, std::span<const StateSample> samples)
{
    os << profile_header << '\n';
    for (const StateSample& s : samples)
        write_row(os, s);
}

void write_profile_csv(const std::filesystem::path& path, std::span<const StateSample> samples)
{
    std::ofstream os = open_out(path);
    write_profile_csv(os, samples);
    if (!os.good())
        throw std::runtime_error("failed writing " + path.string());
}

void write_sweep_csv(const std::filesystem::path& path, std::span<const SweepEntry> entries,
                     int samples, Exec exec)
{
    std::ofstream os = open_out(path);
    os << "tau," << profile_header << '\n';
    for (const SweepEntry& entry : entries) {
        const std::string tau = format_double(entry.tau);
        for (const StateSample& s : tabulate(entry.solution, samples, exec)) {
            os << tau << ',';
            write_row(os, s);
        }
    }
    if (!os.good())
        throw std::runtime_error("failed writing " + path.string());
}

ordered_json report_solution(const PanelSolution& sol)
{
    const ReducedParams& p = sol.params;
    const SolutionCoefficients& c = sol.coeffs;
    const FaceSummary face = lower_face_summary(sol);
    ordered_json j;
    j["problem"] = {
        {"orientation", orientation_name(sol.spec.orientation)},
        {"variant", variant_name(sol.spec.variant)},
        {"h", sol.spec.h},
    };
    j["problem"]["data"] = data_to_json(sol.spec.data, sol.spec.variant);
    j["reduced"] = ordered_json{
        {"c", p.c},         {"e", p.e},   {"eprime", p.eprime}, {"beta", p.beta},
        {"omega", p.omega}, {"eps", p.eps}, {"k", p.k},         {"kprime", p.kprime},
        {"K", p.K},         {"A", p.A},   {"B", p.B},           {"a", p.a},
        {"V", p.V},         {"stable", p.stable},
    };
    j["coefficients"] = ordered_json{
        {"T1", c.T1},   {"T2", c.T2},   {"F1", c.F1},   {"F2", c.F2},
        {"U11", c.U11}, {"U12", c.U12}, {"U21", c.U21}, {"U22", c.U22},
        {"U31", c.U31}, {"U32", c.U32},
    };
    j["lower_face"] = ordered_json{{"T", face.T_lower}, {"phi", face.phi_lower}};
    j["boundary_residual"] = boundary_residual(sol);
    return j;
}

ordered_json report_control(const ControlQuery& query, const ControlResult& result)
{
    const StateSample s = evaluate_state(result.solution, query.x_target);
    const double achieved =
        query.target_field == TargetField::temperature ? s.T : s.phi;
    const double residual = std::fabs(achieved - query.target_value)
                            / std::max(1.0, std::fabs(query.target_value));
    ordered_json j;
    j["free_datum"] = free_datum_name(query.free_datum);
    j["target_field"] = target_field_name(query.target_field);
    j["x_target"] = query.x_target;
    j["target_value"] = query.target_value;
    j["free_value"] = result.free_value;
    j["sensitivity"] = result.sensitivity;
    j["achieved"] = achieved;
    j["residual"] = residual;
    j["solution"] = report_solution(result.solution);
    return j;
}

ordered_json report_verify(const DiscreteSolution& coarse, const DiscreteSolution& fine,
                           const ErrorReport& report)
{
    ordered_json j;
    j["grids"] = ordered_json{{"coarse", coarse.grid.n}, {"fine", fine.grid.n}};
    j["solver_residual"] = ordered_json{{"coarse", coarse.residual_norm},
                                        {"fine", fine.residual_norm}};
    ordered_json fields;
    for (std::size_t f = 0; f < report.fields.size(); ++f) {
        const FieldError& fe = report.fields[f];
        fields[ErrorReport::field_names[f]] = ordered_json{
            {"max_rel", fe.max_rel},
            {"l2_rel", fe.l2_rel},
            {"order", fe.order},
        };
    }
    j["fields"] = fields;
    j["overall"] = ordered_json{{"max_rel", report.overall_max_rel},
                                {"order", report.overall_order}};
    return j;
}

void write_json(const std::filesystem::path& path, const ordered_json& j)
{
    std::ofstream os = open_out(path);
    os << j.dump(2) << '\n';
    if (!os.good())
        throw std::runtime_error("failed writing " + path.string());
}

} // namespace pzt
