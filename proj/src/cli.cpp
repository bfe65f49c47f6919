#include "hypergon/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "hypergon/errors.hpp"
#include "hypergon/hyperbolic_core.hpp"
#include "hypergon/lemma_verifier.hpp"
#include "hypergon/report_json.hpp"

namespace hypergon::cli {
namespace {

int parse_int(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw UsageError("invalid " + what + ": '" + text + "'");
    }
    if (used != text.size()) {
        throw UsageError("invalid " + what + ": '" + text + "'");
    }
    return value;
}

double parse_double(const std::string& text, const std::string& what) {
    std::istringstream is(text);
    is.imbue(std::locale::classic());
    double value = 0.0;
    is >> value;
    if (is.fail() || !is.eof()) {
        throw UsageError("invalid " + what + ": '" + text + "'");
    }
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, sep)) {
        parts.push_back(item);
    }
    return parts;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) {
        throw UsageError("cannot open output file '" + path + "'");
    }
    file << text;
}

Format parse_format(const std::string& text) {
    if (text == "json") return Format::json;
    if (text == "csv") return Format::csv;
    throw UsageError("unknown format '" + text + "'");
}

std::string shape_label(const Shape& shape) {
    std::string label;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        label += (i ? "-" : "") + std::to_string(shape[i]);
    }
    return label;
}

std::string report_csv(const VerificationReport& r) {
    std::ostringstream os;
    os << "field,value\n";
    os << "lemma_id," << to_string(r.lemma_id) << "\n";
    os << "passed," << (r.passed ? "true" : "false") << "\n";
    os << "worst_margin," << format_number(r.worst_margin) << "\n";
    os << "tolerance," << format_number(r.tolerance) << "\n";
    for (const auto& [k, v] : r.params) {
        os << "params." << k << "," << format_number(v) << "\n";
    }
    for (const auto& [k, v] : r.witness) {
        os << "witness." << k << "," << format_number(v) << "\n";
    }
    return os.str();
}

// Numeric flags accepted by `verify`, in the order shown in --help.
const std::vector<std::string> kVerifyFlags = {
    "n", "k", "m", "a", "x", "t", "t-lo", "t-hi", "x-lo", "x-hi", "c", "theta1", "theta2", "n-max",
    "k-max", "samples", "grid", "grid-x", "grid-y", "tol",
};

void validate_overrides(const VerifyOptions& options) {
    for (const auto& [key, value] : options.values) {
        if (!(value > 0.0)) {
            throw UsageError("--" + key + " must be positive");
        }
    }
    for (const char* key : {"grid", "grid-x", "grid-y"}) {
        const auto it = options.values.find(key);
        if (it != options.values.end() && it->second < kMinGrid) {
            throw UsageError(std::string("--") + key + " must be >= " + std::to_string(kMinGrid));
        }
    }
}

struct PlotFunction {
    std::function<double(double)> f;
    double lo;
    double hi;
};

PlotFunction plot_function(const std::string& id, const VerifyOptions& o) {
    if (id == "phi") {
        return {[](double x) { return perim_regular(8, x); }, 0.0, 18.0};
    }
    if (id == "phi_tilde") {
        return {phi_tilde, 8.0, 11.0};
    }
    if (id == "g_n") {
        const int n = o.integer("n", 8);
        return {[n](double x) { return perimeter_gap(n, x); }, 0.0, (n - 2) * kPi * 0.99};
    }
    if (id == "p_t") {
        const double t = o.real("t", 4.0 * kPi);
        return {[t](double x) { return p_t(t, x); }, t / kPi + 2.1, 60.0};
    }
    if (id == "H_x") {
        const double x = o.real("x", 2.0 * kPi);
        return {[x](double t) { return h_squared(x, t); }, 2.0 + x / kPi + 0.1, 50.0};
    }
    if (id == "psi") {
        const int n = o.integer("n", 6);
        const double t1 = o.real("theta1", kHalfPi);
        const double t2 = o.real("theta2", kHalfPi);
        const auto d = psi_domain(n, t1, t2);
        return {[=](double x) { return psi(n, t1, t2, x); }, d.b1, d.b2};
    }
    if (id == "f_2m") {
        const int m = o.integer("m", 4);
        const double a = o.real("a", 4.0 * kPi);
        return {[m, a](double x) { return f2m(m, a, x); }, 0.0, std::min(2.0 * kPi, a) * 0.999};
    }
    throw UsageError("unknown function id '" + id + "'");
}

std::pair<double, double> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw UsageError("range must be LO:HI");
    }
    const double lo = parse_double(text.substr(0, colon), "range");
    const double hi = parse_double(text.substr(colon + 1), "range");
    if (!(lo < hi)) {
        throw UsageError("range requires LO < HI");
    }
    return {lo, hi};
}

}  // namespace

GenusRange parse_genus_range(const std::string& text) {
    GenusRange range;
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        range.lo = range.hi = parse_int(text, "genus");
    } else {
        range.lo = parse_int(text.substr(0, dots), "genus");
        range.hi = parse_int(text.substr(dots + 2), "genus");
    }
    if (range.lo < 2) {
        throw UsageError("genus must be >= 2");
    }
    if (range.hi < range.lo) {
        throw UsageError("genus range requires LO <= HI");
    }
    return range;
}

Shape parse_shape(const std::string& text) {
    Shape shape;
    for (const auto& part : split(text, ',')) {
        const int m = parse_int(part, "shape entry");
        if (m < 2) {
            throw UsageError("shape entries must be >= 2");
        }
        shape.push_back(m);
    }
    if (shape.empty()) {
        throw UsageError("shape must not be empty");
    }
    return shape;
}

Partition parse_pieces(const std::string& text) {
    Partition p;
    for (const auto& part : split(text, ',')) {
        const auto colon = part.find(':');
        if (colon == std::string::npos) {
            throw UsageError("pieces must be M:AREA,M:AREA,...");
        }
        p.pieces.push_back(
            Piece{parse_int(part.substr(0, colon), "piece m"), parse_double(part.substr(colon + 1), "piece area")});
    }
    if (p.pieces.empty()) {
        throw UsageError("pieces must not be empty");
    }
    return p;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("HYPERGON_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError("HYPERGON_SEED must be a non-negative integer");
        }
    }
    return 0;
}

double VerifyOptions::real(const std::string& key, double fallback) const {
    const auto it = values.find(key);
    return it == values.end() ? fallback : it->second;
}

int VerifyOptions::integer(const std::string& key, int fallback) const {
    const auto it = values.find(key);
    if (it == values.end()) {
        return fallback;
    }
    if (it->second != std::floor(it->second)) {
        throw UsageError("--" + key + " must be an integer");
    }
    return static_cast<int>(it->second);
}

VerificationReport run_verification(LemmaId id, const VerifyOptions& o) {
    const int grid = o.integer("grid", kDefaultGridPoints);
    switch (id) {
        case LemmaId::L4_2:
            return verify_lemma_4_2(o.integer("grid-x", 64), o.integer("grid-y", 64));
        case LemmaId::L4_3: {
            const double x = o.real("x", 2.0 * kPi);
            const double t_lo = o.real("t-lo", 2.0 + x / kPi + 0.1);
            return verify_lemma_4_3(x, t_lo, o.real("t-hi", std::max(50.0, t_lo + 10.0)), grid);
        }
        case LemmaId::P4_1:
            return verify_prop_4_1(o.integer("n", 8), grid);
        case LemmaId::C4_4: {
            const int m = o.integer("m", 2);
            return verify_corollary_4_4(m, o.real("a", kPi), o.integer("n-max", std::max(12, 2 * m)),
                                        o.integer("grid", 128));
        }
        case LemmaId::L5_1: {
            const double t = o.real("t", 4.0 * kPi);
            const double x_lo = o.real("x-lo", t / kPi + 2.1);
            return verify_lemma_5_1(t, x_lo, o.real("x-hi", std::max(60.0, x_lo + 10.0)), grid);
        }
        case LemmaId::T5_2_instance:
            return verify_theorem_5_2_instance(o.integer("k", 6), o.integer("grid", 128));
        case LemmaId::L5_3:
            return verify_base_cases(o.integer("grid", 64));
        case LemmaId::P6_1:
            return verify_f2m_min(o.integer("m", 4), o.real("a", 4.0 * kPi), grid);
        case LemmaId::L6_2_phi:
            return verify_lemma_6_2_phi(o.real("a", 2.0 * kPi), grid);
        case LemmaId::L6_3:
            return verify_lemma_6_3(grid, o.real("tol", kDefaultRootTol));
        case LemmaId::L7_1:
            return verify_lemma_7_1(o.real("c", std::sqrt(2.0)), o.real("x-hi", 50.0), grid);
        case LemmaId::PSI_ENDPOINTS:
            return verify_psi_endpoints(o.integer("n", 6), o.real("theta1", kHalfPi), o.real("theta2", kHalfPi),
                                        grid);
        case LemmaId::ANGLE_BALANCE:
            return verify_angle_balance(o.integer("k-max", 5), o.integer("samples", 100), o.seed);
        case LemmaId::MAIN_THEOREM:
            if (o.pieces.empty()) {
                throw UsageError("MAIN_THEOREM requires --pieces M:AREA,...");
            }
            return verify_main_theorem(parse_pieces(o.pieces));
    }
    throw UsageError("unknown lemma id");
}

CertifySummary run_certify(const CertifyOptions& options) {
    if (options.k_max < 1) throw UsageError("--k-max must be >= 1");
    if (options.samples < 1) throw UsageError("--samples must be >= 1");
    if (options.grid < kMinGrid) throw UsageError("--grid must be >= " + std::to_string(kMinGrid));

    CertifySummary summary;
    summary.options = options;
    summary.passed = true;
    SplitSampler sampler(options.seed);
    for (int g = options.genus.lo; g <= options.genus.hi; ++g) {
        const double area = 4.0 * kPi * (g - 1);
        const double target = mg(g);
        for (int k = 1; k <= options.k_max; ++k) {
            for (const auto& shape : enumerate_partition_shapes(g, k)) {
                ShapeOutcome outcome;
                outcome.genus = g;
                outcome.shape = shape;
                outcome.samples = options.samples;
                outcome.worst_margin = std::numeric_limits<double>::infinity();
                outcome.best_margin = -std::numeric_limits<double>::infinity();
                outcome.passed = true;
                for (int s = 0; s < options.samples; ++s) {
                    const auto report = verify_main_theorem(sampler.split(shape, area));
                    outcome.worst_margin = std::min(outcome.worst_margin, report.worst_margin);
                    outcome.best_margin = std::max(outcome.best_margin, report.worst_margin);
                    outcome.passed = outcome.passed && report.passed;
                }
                int grid = options.grid;
                while (grid > 2 && simplex_lattice_size(shape.size(), grid) > kOracleLatticeBudget) {
                    grid /= 2;
                }
                const auto oracle = brute_force_min(shape, area, grid);
                outcome.oracle_min = oracle.min_value;
                outcome.oracle_grid = grid;
                outcome.oracle_margin = oracle.min_value - target;
                outcome.passed = outcome.passed && outcome.oracle_margin >= -1e-6;
                summary.passed = summary.passed && outcome.passed;
                summary.shapes.push_back(std::move(outcome));
            }
        }
    }
    return summary;
}

nlohmann::json to_json(const CertifySummary& summary) {
    nlohmann::json shapes = nlohmann::json::array();
    for (const auto& s : summary.shapes) {
        shapes.push_back({
            {"genus", s.genus},
            {"k", s.shape.size()},
            {"shape", s.shape},
            {"samples", s.samples},
            {"worst_margin", encode_number(s.worst_margin)},
            {"best_margin", encode_number(s.best_margin)},
            {"oracle_min", encode_number(s.oracle_min)},
            {"oracle_grid", s.oracle_grid},
            {"oracle_margin", encode_number(s.oracle_margin)},
            {"passed", s.passed},
        });
    }
    return nlohmann::json{
        {"schema", kReportSchema},
        {"command", "certify"},
        {"genus_lo", summary.options.genus.lo},
        {"genus_hi", summary.options.genus.hi},
        {"k_max", summary.options.k_max},
        {"samples", summary.options.samples},
        {"seed", summary.options.seed},
        {"grid", summary.options.grid},
        {"passed", summary.passed},
        {"shapes", shapes},
    };
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Regular hyperbolic polygon perimeters and grid certificates for the filling-pair length bound."};
    app.name("hypergon");
    app.require_subcommand(1);

    std::string format_text = "json";
    std::string out_path;
    std::string seed_text;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format_text, "Output format: json or csv");
        sub->add_option("--out", out_path, "Write output to PATH instead of stdout");
    };

    // mg
    auto* mg_cmd = app.add_subcommand("mg", "Table of m_g and the systole bound m_g/2");
    std::string genus_text = "2";
    mg_cmd->add_option("--genus", genus_text, "Genus G or range LO..HI");
    add_common(mg_cmd);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run one lemma verification");
    std::string lemma_text;
    verify_cmd->add_option("lemma_id", lemma_text, "Lemma id, e.g. L6_3")->required();
    std::map<std::string, double> verify_values;
    std::map<std::string, CLI::Option*> verify_opts;
    for (const auto& flag : kVerifyFlags) {
        verify_opts[flag] = verify_cmd->add_option("--" + flag, verify_values[flag]);
    }
    std::string pieces_text;
    verify_cmd->add_option("--pieces", pieces_text, "Partition M:AREA,... (MAIN_THEOREM)");
    verify_cmd->add_option("--seed", seed_text, "Random seed");
    add_common(verify_cmd);

    // certify
    auto* certify_cmd = app.add_subcommand("certify", "Main-theorem sweep over partition shapes");
    std::string certify_genus = "2";
    int k_max = 3;
    int samples = 50;
    int certify_grid = 64;
    certify_cmd->add_option("--genus", certify_genus, "Genus G or range LO..HI");
    certify_cmd->add_option("--k-max", k_max, "Largest face count");
    certify_cmd->add_option("--samples", samples, "Random area splits per shape");
    certify_cmd->add_option("--grid", certify_grid, "Brute-force oracle grid");
    certify_cmd->add_option("--seed", seed_text, "Random seed");
    add_common(certify_cmd);

    // plotdata
    auto* plot_cmd = app.add_subcommand("plotdata", "Emit (x, f(x)) samples for plotting");
    std::string function_id;
    std::string range_text;
    int plot_points = 200;
    double chord = 0.0;
    plot_cmd->add_option("function_id", function_id, "phi, phi_tilde, g_n, p_t, H_x, psi, f_2m")->required();
    plot_cmd->add_option("--range", range_text, "LO:HI");
    plot_cmd->add_option("--points", plot_points, "Number of samples");
    auto* chord_opt = plot_cmd->add_option("--chord", chord, "Chord from the origin to (A, phi(A)) (phi only)");
    std::map<std::string, double> plot_values;
    std::map<std::string, CLI::Option*> plot_opts;
    for (const char* flag : {"n", "t", "x", "m", "a", "theta1", "theta2"}) {
        plot_opts[flag] = plot_cmd->add_option(std::string("--") + flag, plot_values[flag]);
    }
    plot_cmd->add_option("--format", format_text, "Output format: csv or json");
    plot_cmd->add_option("--out", out_path, "Write output to PATH instead of stdout");

    // minimize
    auto* min_cmd = app.add_subcommand("minimize", "Brute-force minimum of the summed perimeters");
    std::string shape_text;
    double total_area = 0.0;
    std::string min_genus;
    int min_grid = 64;
    min_cmd->add_option("--shape", shape_text, "Half-side counts M1,M2,...")->required();
    auto* area_opt = min_cmd->add_option("--area", total_area, "Total area");
    min_cmd->add_option("--genus", min_genus, "Use area 4pi(g-1) and report m_g");
    min_cmd->add_option("--grid", min_grid, "Simplex grid resolution");
    add_common(min_cmd);

    std::vector<const char*> argv;
    argv.push_back("hypergon");
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (plot_cmd->parsed() && format_text == "json" && !plot_cmd->get_option("--format")->count()) {
            format_text = "csv";
        }
        const Format format = parse_format(format_text);
        const std::uint64_t seed = seed_text.empty() ? default_seed() : std::stoull(seed_text);

        if (mg_cmd->parsed()) {
            const auto range = parse_genus_range(genus_text);
            std::ostringstream os;
            if (format == Format::csv) {
                os << "g,N,mg,half_mg\n";
                for (int g = range.lo; g <= range.hi; ++g) {
                    os << g << "," << 8 * g - 4 << "," << format_number(mg(g)) << ","
                       << format_number(systole_lower_bound(g)) << "\n";
                }
            } else {
                nlohmann::json rows = nlohmann::json::array();
                for (int g = range.lo; g <= range.hi; ++g) {
                    rows.push_back({{"g", g}, {"N", 8 * g - 4}, {"mg", mg(g)}, {"half_mg", systole_lower_bound(g)}});
                }
                os << nlohmann::json{{"schema", kReportSchema}, {"command", "mg"}, {"rows", rows}}.dump(2) << "\n";
            }
            emit(os.str(), out_path, out);
            return kExitPass;
        }

        if (verify_cmd->parsed()) {
            const auto id = lemma_id_from_string(lemma_text);
            if (!id) {
                throw UsageError("unknown lemma id '" + lemma_text + "'");
            }
            VerifyOptions options;
            for (const auto& [flag, opt] : verify_opts) {
                if (opt->count()) {
                    options.values[flag] = verify_values[flag];
                }
            }
            options.pieces = pieces_text;
            options.seed = seed;
            validate_overrides(options);
            const auto report = run_verification(*id, options);
            emit(format == Format::csv ? report_csv(report) : report_to_json(report).dump(2) + "\n", out_path, out);
            return report.passed ? kExitPass : kExitFail;
        }

        if (certify_cmd->parsed()) {
            CertifyOptions options;
            options.genus = parse_genus_range(certify_genus);
            options.k_max = k_max;
            options.samples = samples;
            options.seed = seed;
            options.grid = certify_grid;
            const auto summary = run_certify(options);
            std::ostringstream os;
            if (format == Format::csv) {
                os << "genus,k,shape,samples,worst_margin,best_margin,oracle_min,oracle_grid,oracle_margin,passed\n";
                for (const auto& s : summary.shapes) {
                    os << s.genus << "," << s.shape.size() << "," << shape_label(s.shape) << "," << s.samples << ","
                       << format_number(s.worst_margin) << "," << format_number(s.best_margin) << ","
                       << format_number(s.oracle_min) << "," << s.oracle_grid << ","
                       << format_number(s.oracle_margin) << "," << (s.passed ? "true" : "false") << "\n";
                }
            } else {
                os << to_json(summary).dump(2) << "\n";
            }
            emit(os.str(), out_path, out);
            return summary.passed ? kExitPass : kExitFail;
        }

        if (plot_cmd->parsed()) {
            VerifyOptions params;
            for (const auto& [flag, opt] : plot_opts) {
                if (opt->count()) {
                    params.values[flag] = plot_values[flag];
                }
            }
            if (plot_points < 2) {
                throw UsageError("--points must be >= 2");
            }
            const auto fn = plot_function(function_id, params);
            auto [lo, hi] = range_text.empty() ? std::pair{fn.lo, fn.hi} : parse_range(range_text);
            const bool with_chord = chord_opt->count() > 0;
            if (with_chord && function_id != "phi") {
                throw UsageError("--chord applies to phi only");
            }
            const double chord_slope = with_chord ? perim_regular(8, chord) / chord : 0.0;

            std::ostringstream os;
            nlohmann::json rows = nlohmann::json::array();
            if (format == Format::csv) {
                os << (with_chord ? "x,f,chord\n" : "x,f\n");
            }
            for (int i = 0; i < plot_points; ++i) {
                const double x = i + 1 == plot_points ? hi : lo + (hi - lo) * i / (plot_points - 1);
                const double y = fn.f(x);
                if (format == Format::csv) {
                    os << format_number(x) << "," << format_number(y);
                    if (with_chord) {
                        os << "," << format_number(chord_slope * x);
                    }
                    os << "\n";
                } else {
                    nlohmann::json row = {x, y};
                    if (with_chord) {
                        row.push_back(chord_slope * x);
                    }
                    rows.push_back(row);
                }
            }
            if (format == Format::json) {
                os << nlohmann::json{{"schema", kReportSchema}, {"function", function_id}, {"rows", rows}}.dump() << "\n";
            }
            emit(os.str(), out_path, out);
            return kExitPass;
        }

        if (min_cmd->parsed()) {
            const auto shape = parse_shape(shape_text);
            nlohmann::json result{{"schema", kReportSchema}, {"command", "minimize"}, {"shape", shape}};
            if (!min_genus.empty()) {
                const int g = parse_genus_range(min_genus).lo;
                if (!area_opt->count()) {
                    total_area = 4.0 * kPi * (g - 1);
                }
                result["genus"] = g;
                result["mg"] = mg(g);
            } else if (!area_opt->count()) {
                throw UsageError("minimize requires --area or --genus");
            }
            if (min_grid < 2) {
                throw UsageError("--grid must be >= 2");
            }
            const auto best = brute_force_min(shape, total_area, min_grid);
            result["total_area"] = total_area;
            result["grid"] = best.grid;
            result["min_value"] = best.min_value;
            result["argmin"] = best.argmin;
            result["evaluations"] = best.evaluations;
            std::ostringstream os;
            if (format == Format::csv) {
                os << "field,value\nmin_value," << format_number(best.min_value) << "\n";
                for (std::size_t i = 0; i < best.argmin.size(); ++i) {
                    os << "a" << i + 1 << "," << format_number(best.argmin[i]) << "\n";
                }
            } else {
                os << result.dump(2) << "\n";
            }
            emit(os.str(), out_path, out);
            return kExitPass;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "parameter error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const HypothesisError& e) {
        err << "hypothesis error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IdentityViolationError& e) {
        err << "identity violation: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}

}  // namespace hypergon::cli
