#include "tricontain/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tricontain/analysis.hpp"
#include "tricontain/closed_forms.hpp"
#include "tricontain/errors.hpp"
#include "tricontain/kernel.hpp"
#include "tricontain/montecarlo.hpp"
#include "tricontain/region_io.hpp"

namespace tricontain::cli {

namespace {

using nlohmann::json;

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

double parse_double(const std::string& s, const std::string& field) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size())
        throw ParseError(0, field, "not a number: '" + s + "'");
    return v;
}

AnchorPoint resolve_anchor(const io::RegionSpec& spec, const std::vector<std::string>& raw) {
    if (raw.empty()) return spec.anchor;
    if (raw.size() == 1) {
        if (raw[0] == "origin") return {0.0, 0.0};
        throw ParseError(0, "anchor", "expected 'origin' or two coordinates");
    }
    return {parse_double(raw[0], "anchor"), parse_double(raw[1], "anchor")};
}

json anchor_json(AnchorPoint a) { return json::array({a.x, a.y}); }

void emit(std::ostream& out, const std::string& output, const json& doc) {
    if (output == "json") {
        out << doc.dump(2) << "\n";
        return;
    }
    // text mode: flat `key = value` lines from the result object
    for (const auto& [key, value] : doc.at("result").items()) {
        if (value.is_number_float())
            out << key << " = " << fmt12(value.get<double>()) << "\n";
        else if (value.is_array() || value.is_object())
            continue; // traces and other bulk data are json-only
        else if (value.is_string())
            out << key << " = " << value.get<std::string>() << "\n";
        else
            out << key << " = " << value.dump() << "\n";
    }
}

struct ComputeOpts {
    std::string region;
    std::vector<std::string> anchor;
    std::string method = "eq15";
    double tol = 1e-10;
    double u = 0.0;
    int n_panels = 256;
    std::string output = "text";
};

int run_compute(const ComputeOpts& o, std::ostream& out) {
    const io::RegionSpec spec = io::resolve_region(o.region);
    const AnchorPoint anchor = resolve_anchor(spec, o.anchor);
    ProbabilityResult res;
    if (o.method == "eq15") {
        res = probability(spec.region, anchor, o.tol);
    } else if (o.method == "eq12") {
        res = probability_via_u(angular_density(spec.region, anchor), o.u, o.tol);
    } else if (o.method == "eq14") {
        res = probability_eq14(angular_density(spec.region, anchor), o.tol);
    } else { // "double-integral", enforced by CLI11 IsMember
        res = probability_double_integral(spec.region, anchor, o.n_panels);
    }
    json doc{{"command", "compute"},
             {"inputs",
              {{"region", o.region},
               {"anchor", anchor_json(anchor)},
               {"method", o.method},
               {"tol", o.tol},
               {"u", o.u},
               {"n_panels", o.n_panels}}},
             {"result",
              {{"value", res.value},
               {"method", method_name(res.method)},
               {"error_estimate", res.error_estimate},
               {"raw_value", res.raw_value}}}};
    emit(out, o.output, doc);
    return 0;
}

struct ClosedFormOpts {
    std::string family;
    double a = 0.0, u = 0.0, v = 0.0, r = 0.0;
    double alpha = 0.0, beta = 0.0, gamma = 0.0;
    int m = 1;
    std::string output = "text";
    CLI::Option* a_opt = nullptr;
    CLI::Option* u_opt = nullptr;
    CLI::Option* v_opt = nullptr;
    CLI::Option* r_opt = nullptr;
    CLI::Option* m_opt = nullptr;
    CLI::Option* bary_opt = nullptr;
};

int run_closed_form(const ClosedFormOpts& o, std::ostream& out) {
    auto need = [](const CLI::Option* opt, const char* name, const char* family) {
        if (opt == nullptr || opt->count() == 0)
            throw ParseError(0, name, std::string("closed-form ") + family +
                                          " requires --" + name);
    };
    json inputs{{"family", o.family}};
    json result;
    if (o.family == "limacon") {
        need(o.a_opt, "a", "limacon");
        inputs["a"] = o.a;
        result["value"] = closed_forms::limacon_probability(o.a);
    } else if (o.family == "regular-polygon") {
        need(o.m_opt, "m", "regular-polygon");
        inputs["m"] = o.m;
        result["value"] = closed_forms::regular_polygon_probability(o.m);
    } else if (o.family == "triangle") {
        need(o.bary_opt, "alpha", "triangle");
        inputs["alpha"] = o.alpha;
        inputs["beta"] = o.beta;
        inputs["gamma"] = o.gamma;
        result["value"] =
            closed_forms::triangle_probability({o.alpha, o.beta, o.gamma});
    } else if (o.family == "square") {
        need(o.u_opt, "u", "square");
        need(o.v_opt, "v", "square");
        inputs["u"] = o.u;
        inputs["v"] = o.v;
        result["value"] = closed_forms::square_probability(o.u, o.v);
    } else if (o.family == "square-diagonal") {
        need(o.u_opt, "u", "square-diagonal");
        inputs["u"] = o.u;
        result["value"] = closed_forms::square_diagonal_probability(o.u);
    } else if (o.family == "slice-disk") {
        need(o.a_opt, "a", "slice-disk");
        inputs["a"] = o.a;
        result["value"] = closed_forms::slice_disk_probability(o.a);
    } else if (o.family == "offset-disk") {
        need(o.r_opt, "r", "offset-disk");
        inputs["r"] = o.r;
        result["value"] = closed_forms::offset_disk_probability(o.r);
    } else { // "offset-disk-average", enforced by CLI11 IsMember
        const auto avg = closed_forms::offset_disk_average();
        result["value"] = avg.value;
        result["reference"] = avg.reference;
    }
    result["method"] = "closed_form";
    emit(out, o.output, json{{"command", "closed-form"}, {"inputs", inputs},
                             {"result", result}});
    return 0;
}

struct SimulateOpts {
    std::string region;
    std::vector<std::string> anchor;
    long long n = 1000000;
    std::uint64_t seed = 42;
    std::string output = "text";
};

int run_simulate(const SimulateOpts& o, bool sylvester, std::ostream& out) {
    const io::RegionSpec spec = io::resolve_region(o.region);
    const AnchorPoint anchor = resolve_anchor(spec, o.anchor);
    const mc::McEstimate est =
        sylvester ? mc::sylvester_nonconvex(spec.region, o.n, o.seed)
                  : mc::estimate_probability(spec.region, anchor, o.n, o.seed);
    json inputs{{"region", o.region}, {"n", o.n}, {"seed", o.seed}};
    if (!sylvester) inputs["anchor"] = anchor_json(anchor);
    json doc{{"command", sylvester ? "sylvester" : "simulate"},
             {"inputs", inputs},
             {"result",
              {{"p_hat", est.p_hat},
               {"std_err", est.std_err},
               {"n", est.n},
               {"seed", est.seed},
               {"method", "monte_carlo"}}}};
    emit(out, o.output, doc);
    return 0;
}

struct BoundsOpts {
    std::string region;
    std::vector<std::string> anchor;
    std::string output = "text";
};

int run_bounds(const BoundsOpts& o, std::ostream& out) {
    const io::RegionSpec spec = io::resolve_region(o.region);
    const AnchorPoint anchor = resolve_anchor(spec, o.anchor);
    const analysis::BoundsReport rep = analysis::bounds(spec.region, anchor);
    json doc{{"command", "bounds"},
             {"inputs", {{"region", o.region}, {"anchor", anchor_json(anchor)}}},
             {"result",
              {{"h", rep.h}, {"lower", rep.lower}, {"upper", rep.upper}, {"p", rep.p}}}};
    emit(out, o.output, doc);
    return 0;
}

struct MaximizeOpts {
    std::string region;
    int grid = 24;
    int refine_iters = 80;
    std::string output = "text";
};

int run_maximize(const MaximizeOpts& o, std::ostream& out) {
    const io::RegionSpec spec = io::resolve_region(o.region);
    const analysis::MaximizerReport rep =
        analysis::maximize(spec.region, o.grid, o.refine_iters);
    json trace = json::array();
    for (const auto& [pt, val] : rep.trace)
        trace.push_back({{"anchor", anchor_json(pt)}, {"p", val}});
    json doc{{"command", "maximize"},
             {"inputs",
              {{"region", o.region}, {"grid", o.grid}, {"refine_iters", o.refine_iters}}},
             {"result",
              {{"argmax_x", rep.argmax.x},
               {"argmax_y", rep.argmax.y},
               {"p_max", rep.p_max},
               {"trace_len", rep.trace.size()},
               {"trace", trace}}}};
    emit(out, o.output, doc);
    return 0;
}

struct SweepOpts {
    std::string family;
    std::vector<double> values;
    long long n = 0; // 0 = no Monte Carlo column
    std::uint64_t seed = 42;
};

struct SweepRow {
    double closed = 0.0;
    double quad = 0.0;
};

SweepRow sweep_case(const std::string& family, double value, Region& region_out_slot,
                    AnchorPoint& anchor_out) {
    // Builds the closed form + quadrature pair for one parameter value and
    // hands back the region/anchor so the MC column can reuse them.
    SweepRow row;
    if (family == "limacon") {
        row.closed = closed_forms::limacon_probability(value);
        region_out_slot = Region::limacon(value);
        anchor_out = {0.0, 0.0};
    } else if (family == "regular-polygon") {
        if (value != static_cast<int>(value))
            throw DomainError("regular-polygon sweep values must be integers");
        const int m = static_cast<int>(value);
        row.closed = closed_forms::regular_polygon_probability(m);
        region_out_slot = Region::regular_polygon(m);
        anchor_out = {0.0, 0.0};
    } else if (family == "offset-disk") {
        row.closed = closed_forms::offset_disk_probability(value);
        region_out_slot = Region::offset_disk(value);
        anchor_out = {0.0, 0.0};
    } else if (family == "square-diagonal") {
        row.closed = closed_forms::square_diagonal_probability(value);
        region_out_slot = Region::unit_square();
        anchor_out = {value, value};
    } else { // "slice-disk", enforced by CLI11 IsMember
        row.closed = closed_forms::slice_disk_probability(value);
        region_out_slot = Region::disk_slice(value);
        anchor_out = {0.0, 0.0};
    }
    row.quad = probability(region_out_slot, anchor_out, 1e-10).value;
    return row;
}

int run_sweep(const SweepOpts& o, std::ostream& out, std::ostream& err) {
    out << "family,parameter,p_closed_form,p_quadrature,p_mc,mc_std_err,n,seed\n";
    for (double value : o.values) {
        Region region = Region::unit_square(); // placeholder, overwritten per case
        AnchorPoint anchor{0.0, 0.0};
        SweepRow row;
        try {
            row = sweep_case(o.family, value, region, anchor);
        } catch (const DomainError& e) {
            err << "warning: skipping " << o.family << " parameter " << fmt12(value)
                << ": " << e.what() << "\n";
            continue;
        }
        out << o.family << "," << fmt12(value) << "," << fmt12(row.closed) << ","
            << fmt12(row.quad) << ",";
        if (o.n >= 1000) {
            const mc::McEstimate est = mc::estimate_probability(region, anchor, o.n, o.seed);
            out << fmt12(est.p_hat) << "," << fmt12(est.std_err) << "," << est.n << ","
                << est.seed;
        } else {
            out << ",,,";
        }
        out << "\n";
    }
    return 0;
}

void add_anchor_option(CLI::App* sub, std::vector<std::string>& slot) {
    sub->add_option("--anchor", slot,
                    "anchor point: 'origin' or two coordinates (default: region file "
                    "anchor, else origin)")
        ->expected(1, 2);
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"containment probability of a fixed point in a random triangle"};
    app.require_subcommand(1);

    ComputeOpts co;
    CLI::App* compute = app.add_subcommand(
        "compute", "P by quadrature of the angular boundary density");
    compute->add_option("--region", co.region, "region file or inline shorthand")
        ->required();
    add_anchor_option(compute, co.anchor);
    compute->add_option("--method", co.method, "formula to use")
        ->check(CLI::IsMember({"eq15", "eq12", "eq14", "double-integral"}))
        ->capture_default_str();
    compute->add_option("--tol", co.tol, "absolute quadrature tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    compute->add_option("--u", co.u, "base angle for --method eq12")
        ->capture_default_str();
    compute->add_option("--n-panels", co.n_panels, "grid size for --method double-integral")
        ->capture_default_str();
    compute->add_option("--output", co.output, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    ClosedFormOpts cf;
    CLI::App* closed = app.add_subcommand("closed-form", "exact family formulas");
    closed->add_option("family", cf.family, "one of the worked families")
        ->required()
        ->check(CLI::IsMember({"limacon", "regular-polygon", "triangle", "square",
                               "square-diagonal", "slice-disk", "offset-disk",
                               "offset-disk-average"}));
    cf.a_opt = closed->add_option("--a", cf.a, "limacon / slice-disk parameter");
    cf.m_opt = closed->add_option("--m", cf.m, "regular polygon index (2m+1 vertices)");
    cf.u_opt = closed->add_option("--u", cf.u, "square anchor x");
    cf.v_opt = closed->add_option("--v", cf.v, "square anchor y");
    cf.r_opt = closed->add_option("--r", cf.r, "offset-disk fraction");
    cf.bary_opt = closed->add_option("--alpha", cf.alpha, "barycentric alpha");
    closed->add_option("--beta", cf.beta, "barycentric beta")->needs(cf.bary_opt);
    closed->add_option("--gamma", cf.gamma, "barycentric gamma")->needs(cf.bary_opt);
    closed->add_option("--output", cf.output, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    SimulateOpts sim;
    CLI::App* simulate =
        app.add_subcommand("simulate", "Monte Carlo estimate of the containment event");
    simulate->add_option("--region", sim.region, "region file or inline shorthand")
        ->required();
    add_anchor_option(simulate, sim.anchor);
    simulate->add_option("--n", sim.n, "sample count (>= 1000)")->capture_default_str();
    simulate->add_option("--seed", sim.seed, "RNG seed")->capture_default_str();
    simulate->add_option("--output", sim.output, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    SimulateOpts syl;
    CLI::App* sylvester = app.add_subcommand(
        "sylvester", "Monte Carlo estimate of the four-point non-convexity event");
    sylvester->add_option("--region", syl.region, "region file or inline shorthand")
        ->required();
    sylvester->add_option("--n", syl.n, "sample count (>= 1000)")->capture_default_str();
    sylvester->add_option("--seed", syl.seed, "RNG seed")->capture_default_str();
    sylvester->add_option("--output", syl.output, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    BoundsOpts bo;
    CLI::App* bounds = app.add_subcommand("bounds", "half-mass sandwich bounds for P");
    bounds->add_option("--region", bo.region, "region file or inline shorthand")
        ->required();
    add_anchor_option(bounds, bo.anchor);
    bounds->add_option("--output", bo.output, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    MaximizeOpts mo;
    CLI::App* maximize =
        app.add_subcommand("maximize", "empirical maximizer of P over anchors");
    maximize->add_option("--region", mo.region, "region file or inline shorthand")
        ->required();
    maximize->add_option("--grid", mo.grid, "coarse grid resolution (>= 8)")
        ->capture_default_str();
    maximize->add_option("--refine-iters", mo.refine_iters, "Nelder-Mead iterations")
        ->capture_default_str();
    maximize->add_option("--output", mo.output, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    SweepOpts sw;
    CLI::App* sweep = app.add_subcommand("sweep", "CSV parameter sweep over a family");
    sweep->add_option("--family", sw.family, "parameter family")
        ->required()
        ->check(CLI::IsMember({"limacon", "regular-polygon", "offset-disk",
                               "square-diagonal", "slice-disk"}));
    sweep->add_option("--values", sw.values, "parameter values")
        ->required()
        ->delimiter(',');
    sweep->add_option("--n", sw.n, "Monte Carlo samples per row (0 = skip MC)")
        ->capture_default_str();
    sweep->add_option("--seed", sw.seed, "RNG seed")->capture_default_str();

    std::reverse(args.begin(), args.end()); // CLI11's vector parse pops from the back
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(compute)) return run_compute(co, out);
        if (app.got_subcommand(closed)) return run_closed_form(cf, out);
        if (app.got_subcommand(simulate)) return run_simulate(sim, false, out);
        if (app.got_subcommand(sylvester)) return run_simulate(syl, true, out);
        if (app.got_subcommand(bounds)) return run_bounds(bo, out);
        if (app.got_subcommand(maximize)) return run_maximize(mo, out);
        if (app.got_subcommand(sweep)) return run_sweep(sw, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

} // namespace tricontain::cli
