#include "orbiheat/cli.hpp"

#include "orbiheat/classifier.hpp"
#include "orbiheat/conway.hpp"
#include "orbiheat/flat_spectrum.hpp"
#include "orbiheat/golden_tables.hpp"
#include "orbiheat/heat_invariants.hpp"
#include "orbiheat/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

namespace orbiheat::cli {

namespace {

using json::Json;

enum class Format { Text, Json };

struct Options {
    Format format = Format::Text;

    std::string notation;
    std::string notation_b;

    double curvature = 0.0;
    std::optional<double> area;
    double mirror_length = 0.0;
    std::optional<double> mirror_scalar_integral;

    std::string class_name;
    std::vector<std::string> pair;
    Order bound = classify::kDefaultBound;

    std::string model;
    double t = 0.0;
    std::optional<double> cutoff;
    std::string samples_in;
    std::string samples_out;
    std::vector<std::string> degrees;

    int which = 0;
    Order family_bound = 12;
};

void print_double(std::ostream& out, double x) { out << std::setprecision(17) << x << '\n'; }

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void print_rational(std::ostream& out, Format f, const char* key, const Rational& r) {
    if (f == Format::Json) {
        print_json(out, {{key, json::to_json(r)}, {std::string(key) + "_text", r.str()}});
    } else {
        out << r.str() << '\n';
    }
}

int cmd_parse(const Options& o, std::ostream& out) {
    const auto sig = conway::parse(o.notation);
    Json j = json::to_json(sig);
    j["notation"] = conway::render(sig);
    print_json(out, j);
    return kOk;
}

int cmd_expansion(const Options& o, std::ostream& out) {
    const auto sig = conway::parse(o.notation);
    MetricData metric;
    if (o.area) {
        metric.curvature = o.curvature;
        metric.area = *o.area;
        metric.mirror_length = o.mirror_length;
    } else {
        if (o.curvature == 0.0) throw MetricError("--area is required when --curvature is 0");
        metric = MetricData::from_gauss_bonnet(sig, o.curvature, o.mirror_length);
    }
    metric.mirror_scalar_curvature_integral = o.mirror_scalar_integral;
    const HeatExpansion e = full_expansion(sig, metric);
    if (o.format == Format::Json) {
        print_json(out, json::to_json(e));
    } else {
        out << std::setprecision(17);
        out << "t^-1    " << e.minus_one << '\n'
            << "t^-1/2  " << e.minus_half << '\n'
            << "t^0     " << e.zero << '\n'
            << "t^1/2   " << e.half << '\n'
            << "t^1     " << e.one << '\n';
    }
    return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
    const auto kind = classify::class_from_string(o.class_name);
    const auto a = conway::parse(o.pair.at(0));
    const auto b = conway::parse(o.pair.at(1));
    std::string verdict;
    switch (kind) {
        case classify::ClassKind::SphericalConstantCurvature:
            verdict = to_string(classify::spherical_distinguish(a, b));
            break;
        case classify::ClassKind::NonnegativeChi:
            verdict = to_string(classify::positive_vs_zero_chi(a, b));
            break;
        default:
            verdict = spectral_c(a) != spectral_c(b) ? "ByC" : "NotDistinguished";
            break;
    }
    if (o.format == Format::Json) {
        print_json(out, {{"class", o.class_name},
                         {"a", conway::render(a)},
                         {"b", conway::render(b)},
                         {"c_a", json::to_json(spectral_c(a))},
                         {"c_b", json::to_json(spectral_c(b))},
                         {"verdict", verdict}});
    } else {
        out << verdict << '\n';
    }
    return kOk;
}

int cmd_scan(const Options& o, std::ostream& out) {
    const auto collisions = classify::injectivity_scan({classify::class_from_string(o.class_name), o.bound});
    if (o.format == Format::Json) {
        print_json(out, json::to_json(collisions));
    } else {
        for (const auto& c : collisions) {
            out << conway::render(c.a) << " | " << conway::render(c.b) << " | c = " << c.c << '\n';
        }
        out << collisions.size() << " collision(s)\n";
    }
    return kOk;
}

int cmd_trace(const Options& o, std::ostream& out) {
    const auto model = flat::model_from_string(o.model);
    const double value = o.cutoff ? flat::brute_force_trace(model, o.t, *o.cutoff) : flat::heat_trace(model, o.t);
    if (o.format == Format::Json) {
        Json j{{"model", o.model}, {"t", o.t}, {"trace", value}};
        if (o.cutoff) j["cutoff"] = *o.cutoff;
        print_json(out, j);
    } else {
        print_double(out, value);
    }
    return kOk;
}

int cmd_fit(const Options& o, std::ostream& out) {
    flat::TraceSamples samples;
    if (!o.samples_in.empty()) {
        std::ifstream in(o.samples_in);
        if (!in) throw std::invalid_argument("cannot open samples file '" + o.samples_in + "'");
        samples = flat::read_csv(in);
    } else if (!o.model.empty()) {
        samples = flat::sample_trace(flat::model_from_string(o.model));
    } else {
        throw std::invalid_argument("fit needs --model or --samples");
    }
    if (!o.samples_out.empty()) {
        std::ofstream os(o.samples_out);
        if (!os) throw std::invalid_argument("cannot write samples file '" + o.samples_out + "'");
        flat::write_csv(samples, os);
    }
    std::vector<Degree> degrees;
    for (const auto& d : o.degrees) degrees.push_back(degree_from_string(d));
    if (degrees.empty()) degrees.assign(flat::kFlatFitDegrees.begin(), flat::kFlatFitDegrees.end());

    const auto fit = flat::fit_expansion(samples, degrees);
    if (o.format == Format::Json) {
        Json coeffs = Json::object();
        for (const auto& [d, v] : fit.coefficients) coeffs[to_string(d)] = v;
        print_json(out, {{"coefficients", coeffs},
                         {"residual_norm", fit.residual_norm},
                         {"condition_number", fit.condition_number}});
    } else {
        out << std::setprecision(17);
        for (const auto& [d, v] : fit.coefficients) out << "t^" << to_string(d) << "  " << v << '\n';
        out << "residual " << fit.residual_norm << '\n';
    }
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto report = flat::verify_model(flat::model_from_string(o.model));
    if (o.format == Format::Json) {
        print_json(out, json::to_json(report));
    } else {
        out << std::setprecision(10);
        for (const auto& d : report.degrees) {
            out << "t^" << std::setw(5) << std::left << to_string(d.degree) << " fitted " << d.fitted << "  predicted "
                << d.predicted << "  abs_err " << d.abs_err << '\n';
        }
    }
    return kOk;
}

int cmd_tables(const Options& o, std::ostream& out) {
    tables::TableCheck check;
    Json rows = Json::array();
    if (o.which == 1) {
        check = tables::check_expansion_table(o.family_bound);
        for (const auto& e : tables::expansion_table(o.family_bound)) {
            const auto sig = conway::parse(e.notation);
            rows.push_back({{"row", e.row},
                            {"orbifold", conway::render(sig)},
                            {"degree_0", degree_zero_term(sig).str()},
                            {"mirror_term", has_half_integer_terms(sig)}});
        }
    } else {
        check = tables::check_pillow_table(o.family_bound);
        for (const auto& e : tables::pillow_table(o.family_bound)) {
            const auto sig = conway::parse(e.notation);
            rows.push_back({{"row", e.row},
                            {"orbifold", conway::render(sig)},
                            {"chi", euler_characteristic(sig).str()},
                            {"c", spectral_c(sig).str()}});
        }
    }
    Json diffs = Json::array();
    for (const auto& m : check.mismatches) {
        diffs.push_back({{"row", m.row},
                         {"orbifold", m.notation},
                         {"field", m.field},
                         {"expected", m.expected},
                         {"computed", m.computed}});
    }
    if (o.format == Format::Json) {
        print_json(out, {{"table", o.which}, {"entries", rows}, {"diffs", diffs}});
    } else {
        for (const auto& r : rows) {
            out << std::setw(34) << std::left << r["row"].get<std::string>() << ' ' << std::setw(12)
                << r["orbifold"].get<std::string>();
            if (o.which == 1) {
                out << " " << r["degree_0"].get<std::string>() << (r["mirror_term"].get<bool>() ? "  +ML" : "");
            } else {
                out << " chi " << r["chi"].get<std::string>() << "  c " << r["c"].get<std::string>();
            }
            out << '\n';
        }
        for (const auto& m : check.mismatches) {
            out << "DIFF " << m.row << " " << m.notation << " " << m.field << ": expected " << m.expected
                << ", computed " << m.computed << '\n';
        }
        out << check.entries_checked << " entries, " << check.mismatches.size() << " diff(s)\n";
    }
    return check.ok() ? kOk : kGoldenMismatch;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Heat-trace invariants of closed 2-orbifolds"};
    app.require_subcommand(1);
    Options o;
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto* parse = app.add_subcommand("parse", "Parse orbifold notation and print the canonical signature as JSON");
    parse->add_option("notation", o.notation, "Conway notation, e.g. '2,2x' or '*2,3,6'")->required();

    auto* chi = app.add_subcommand("chi", "Exact orbifold Euler characteristic");
    chi->add_option("notation", o.notation)->required();

    auto* c = app.add_subcommand("c", "Exact spectral invariant c (12 x degree-zero coefficient)");
    c->add_option("notation", o.notation)->required();

    auto* expansion = app.add_subcommand("expansion", "Heat-trace expansion coefficients of degrees -1..1");
    expansion->add_option("notation", o.notation)->required();
    expansion->add_option("--curvature", o.curvature, "Constant sectional curvature K")->required();
    expansion->add_option("--area", o.area, "Area (default 2 pi chi / K)");
    expansion->add_option("--mirror-length", o.mirror_length, "Total mirror-locus length")->check(CLI::NonNegativeNumber);
    expansion->add_option("--mirror-scalar-integral", o.mirror_scalar_integral,
                          "Integral of scalar curvature over the mirror locus (default 2 K L)");

    auto* classify_cmd = app.add_subcommand("classify", "Decide whether the spectrum separates two orbifolds");
    classify_cmd->add_option("--class", o.class_name,
                             "teardrops-footballs | triangular-pillows | class-c | spherical | nonnegative-chi")
        ->required();
    classify_cmd->add_option("--pair", o.pair, "Two orbifold notations")->required()->expected(2);

    auto* scan = app.add_subcommand("scan", "List pairs of class members with equal c");
    scan->add_option("--class", o.class_name)->required();
    scan->add_option("--bound", o.bound, "Largest order enumerated")->check(CLI::Range(Order{2}, Order{100000}));

    auto* trace = app.add_subcommand("trace", "Exact heat trace of a flat model");
    trace->add_option("--model", o.model, "torus | klein | pillowcase | square | mirror-torus")->required();
    trace->add_option("--t", o.t, "Time t > 0")->required()->check(CLI::PositiveNumber);
    trace->add_option("--cutoff", o.cutoff, "Use invariant-eigenfunction enumeration up to this eigenvalue");

    auto* fit = app.add_subcommand("fit", "Least-squares fit of expansion coefficients to trace samples");
    fit->add_option("--model", o.model, "Sample this flat model on t = 1e-2 * 0.7^i, i < 12");
    fit->add_option("--samples", o.samples_in, "Read samples from CSV (t,value)");
    fit->add_option("--samples-out", o.samples_out, "Write the samples used to CSV");
    fit->add_option("--degrees", o.degrees, "Degrees to fit (default -1 -0.5 0)");

    auto* verify = app.add_subcommand("verify", "Compare fitted and predicted coefficients of a flat model");
    verify->add_option("--model", o.model)->required();

    auto* tables_cmd = app.add_subcommand("tables", "Recompute the reference tables and diff against embedded values");
    tables_cmd->add_option("--which", o.which, "1: expansion constants, 2: triangular pillows")
        ->required()
        ->check(CLI::IsMember({1, 2}));
    tables_cmd->add_option("--family-bound", o.family_bound, "Largest order for parameterized rows")
        ->check(CLI::Range(Order{2}, Order{1000}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidInput;
    }
    o.format = format == "json" ? Format::Json : Format::Text;

    try {
        if (*parse) return cmd_parse(o, out);
        if (*chi) {
            print_rational(out, o.format, "chi", euler_characteristic(conway::parse(o.notation)));
            return kOk;
        }
        if (*c) {
            print_rational(out, o.format, "c", spectral_c(conway::parse(o.notation)));
            return kOk;
        }
        if (*expansion) return cmd_expansion(o, out);
        if (*classify_cmd) return cmd_classify(o, out);
        if (*scan) return cmd_scan(o, out);
        if (*trace) return cmd_trace(o, out);
        if (*fit) return cmd_fit(o, out);
        if (*verify) return cmd_verify(o, out);
        if (*tables_cmd) return cmd_tables(o, out);
    } catch (const conway::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const GaussBonnetViolation& e) {
        err << "error: GaussBonnetViolation: " << e.what() << '\n';
        return kGaussBonnet;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
    return kInvalidInput;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.emplace_back("orbiheat");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());
    argv.push_back(nullptr);
    return run(static_cast<int>(storage.size()), argv.data(), out, err);
}

}  // namespace orbiheat::cli
