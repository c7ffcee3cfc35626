#include "logcoef/cli.hpp"

#include "logcoef/errors.hpp"
#include "logcoef/extremal_search.hpp"
#include "logcoef/optimize.hpp"
#include "logcoef/random.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>

namespace logcoef::cli {

using Json = nlohmann::ordered_json;

namespace {

constexpr double kOracleAgreement = 1e-9;
constexpr double kCarlsonFuzzSlack = 1e-9;
constexpr double kUpperBoundSlack = 1e-9;
constexpr double kRemarkSlack = 1e-6;
constexpr int kCarlsonMaxDegree = 6;

/// Rounds to 12 significant digits so the JSON dump shows the same digits
/// as the text report.
double round12(double v)
{
    if (!std::isfinite(v)) {
        return v;
    }
    return std::stod(format_number(v));
}

Json number(double v)
{
    return round12(v);
}

Json complex_json(Complex z)
{
    return Json{{"re", round12(z.real())}, {"im", round12(z.imag())}};
}

Json point_json(RegionPoint p)
{
    return Json{{"x", round12(p.x)}, {"y", round12(p.y)}};
}

Json blaschke_json(const BlaschkeProduct& b)
{
    Json zeros = Json::array();
    for (const Complex& a : b.zeros()) {
        zeros.push_back(complex_json(a));
    }
    return Json{{"degree", b.degree()},
                {"zeros", std::move(zeros)},
                {"rotation", complex_json(b.rotation())}};
}

Json polynomial_json(const Polynomial& p)
{
    Json coeffs = Json::array();
    for (int k = 0; k <= p.degree(); ++k) {
        coeffs.push_back(round12(p.coefficient(k)));
    }
    return coeffs;
}

std::string scalar_text(const Json& v)
{
    if (v.is_number_float()) {
        return format_number(v.get<double>());
    }
    if (v.is_string()) {
        return v.get<std::string>();
    }
    return v.dump();
}

bool is_complex(const Json& v)
{
    return v.is_object() && v.size() == 2 && v.contains("re") && v.contains("im");
}

std::string complex_text(const Json& v)
{
    const double re = v["re"].get<double>();
    const double im = v["im"].get<double>();
    std::string s = format_number(re);
    s += im < 0.0 ? " - " : " + ";
    s += format_number(std::abs(im)) + "i";
    return s;
}

void render_text(const Json& doc, std::ostream& out, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [key, value] : doc.items()) {
        if (is_complex(value)) {
            out << pad << key << ": " << complex_text(value) << '\n';
        } else if (value.is_object()) {
            out << pad << key << ":\n";
            render_text(value, out, indent + 2);
        } else if (value.is_array() && !value.empty() && value.front().is_structured() &&
                   !is_complex(value.front())) {
            out << pad << key << ":\n";
            for (const auto& item : value) {
                out << pad << "  -\n";
                render_text(item, out, indent + 4);
            }
        } else if (value.is_array() && !value.empty() && value.front().is_string()) {
            out << pad << key << ":\n";
            for (const auto& item : value) {
                out << pad << "  - " << item.get<std::string>() << '\n';
            }
        } else if (value.is_array()) {
            out << pad << key << ": [";
            bool first = true;
            for (const auto& item : value) {
                out << (first ? "" : ", ")
                    << (is_complex(item) ? complex_text(item) : scalar_text(item));
                first = false;
            }
            out << "]\n";
        } else {
            out << pad << key << ": " << scalar_text(value) << '\n';
        }
    }
}

void render_csv_fields(const Json& doc, const std::string& prefix, std::ostream& out)
{
    for (const auto& [key, value] : doc.items()) {
        const std::string path = prefix.empty() ? key : prefix + "." + key;
        if (value.is_structured()) {
            render_csv_fields(value, path, out);
        } else {
            std::string text = scalar_text(value);
            if (text.find_first_of(",\"\n") != std::string::npos) {
                std::string quoted = "\"";
                for (char ch : text) {
                    quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
                }
                text = quoted + "\"";
            }
            out << path << ',' << text << '\n';
        }
    }
}

void emit(const Json& doc, OutputFormat format, std::ostream& out)
{
    switch (format) {
    case OutputFormat::Json:
        out << doc.dump(2) << '\n';
        break;
    case OutputFormat::Text:
        render_text(doc, out, 0);
        break;
    case OutputFormat::Csv:
        out << "field,value\n";
        render_csv_fields(doc, "", out);
        break;
    }
}

Family require_family(const RunConfig& config)
{
    if (!config.family) {
        throw std::invalid_argument("command '" + config.command + "' needs a family");
    }
    return *config.family;
}

int run_bound(const RunConfig& config, std::ostream& out)
{
    const Family family = require_family(config);
    if (config.format == OutputFormat::Csv) {
        out << "x,y,value\n";
        for (const auto& row : grid_samples(family, config.grid_step)) {
            out << format_number(row[0]) << ',' << format_number(row[1]) << ','
                << format_number(row[2]) << '\n';
        }
        return kExitOk;
    }

    const BoundReport report = global_bound(family, config.grid_step, config.newton_tol);
    Json interior = Json::array();
    for (const auto& p : report.interior_points) {
        interior.push_back(Json{{"x", number(p.point.x)},
                                {"y", number(p.point.y)},
                                {"value", number(p.value)},
                                {"negative_definite", p.negative_definite}});
    }
    Json edges = Json::array();
    for (std::size_t k = 0; k < report.edge_maxima.size(); ++k) {
        const EdgeMaximum& e = report.edge_maxima[k];
        const PublishedEdge& pub = report.published_edges[k];
        const char var = e.edge == Edge::Left ? 'y' : 'x';
        edges.push_back(Json{{"edge", std::string(edge_name(e.edge))},
                             {"argmax", point_json(e.argmax)},
                             {"value", number(e.value)},
                             {"restriction", e.restriction.to_string(var)},
                             {"restriction_coefficients", polynomial_json(e.restriction)},
                             {"published_value", number(pub.value)},
                             {"published_restriction", pub.restriction.to_string(var)}});
    }
    Json doc{{"command", "bound"},
             {"family", std::string(family_name(family))},
             {"global_max", number(report.global_max)},
             {"global_argmax", point_json(report.global_argmax)},
             {"gamma3_bound", number(report.gamma3_bound)},
             {"interior_points", std::move(interior)},
             {"edge_maxima", std::move(edges)},
             {"grid_max", number(report.grid_max)},
             {"notes", report.notes}};
    emit(doc, config.format, out);
    return report.grid_max <= report.global_max + kUpperBoundSlack ? kExitOk : kExitViolation;
}

int run_gamma(const RunConfig& config, std::ostream& out)
{
    const Family family = require_family(config);
    if (config.order < 4) {
        throw std::invalid_argument("gamma needs --order >= 4");
    }
    const SchwarzTriple c{config.c1, config.c2, config.c3};
    const Complex closed = gamma3_closed_form(family, c);
    const Complex via_coefficients =
        gamma3_from_coefficients(coefficients_from_schwarz(family, c));
    const TruncatedSeries w =
        TruncatedSeries::polynomial({0.0, c.c1, c.c2, c.c3}, config.order);
    const Complex oracle = gamma_sequence(member_series(family, w, config.order), 3)[2];
    const double delta = std::abs(closed - oracle);
    const CarlsonSlacks slacks = carlson_check(c);

    Json doc{{"command", "gamma"},
             {"family", std::string(family_name(family))},
             {"c1", complex_json(c.c1)},
             {"c2", complex_json(c.c2)},
             {"c3", complex_json(c.c3)},
             {"closed_form", complex_json(closed)},
             {"coefficient_route", complex_json(via_coefficients)},
             {"series_oracle", complex_json(oracle)},
             {"delta", number(delta)},
             {"abs_gamma3", number(std::abs(closed))},
             {"carlson_slacks", Json::array({number(slacks.first), number(slacks.second),
                                             number(slacks.third)})},
             {"carlson_feasible", slacks.feasible()}};
    emit(doc, config.format, out);
    return delta <= kOracleAgreement ? kExitOk : kExitViolation;
}

int run_verify_carlson(const RunConfig& config, std::ostream& out)
{
    if (config.samples < 1) {
        throw std::invalid_argument("verify-carlson needs --samples >= 1");
    }
    double worst = std::numeric_limits<double>::infinity();
    int worst_degree = 0;
    long worst_index = 0;
    for (long i = 0; i < config.samples; ++i) {
        const int degree = 1 + static_cast<int>(i % kCarlsonMaxDegree);
        const BlaschkeProduct b = sample_schwarz(
            derive_seed(config.seed, static_cast<std::uint64_t>(i)), degree, config.real_only);
        const double slack = carlson_check(schwarz_triple(b)).worst();
        if (slack < worst) {
            worst = slack;
            worst_degree = degree;
            worst_index = i;
        }
    }
    const bool pass = worst >= -kCarlsonFuzzSlack;
    Json doc{{"command", "verify-carlson"},
             {"status", pass ? "pass" : "fail"},
             {"samples", config.samples},
             {"seed", config.seed},
             {"worst_slack", number(worst)},
             {"worst_degree", worst_degree},
             {"worst_sample", worst_index}};
    emit(doc, config.format, out);
    return pass ? kExitOk : kExitViolation;
}

int run_search(const RunConfig& config, std::ostream& out)
{
    const Family family = require_family(config);
    SearchOptions options;
    options.iterations = config.iterations;
    options.seed = config.seed;
    options.real_only = config.real_only;
    options.max_degree = config.max_degree;
    options.restarts = config.restarts;
    const SearchResult result = search_lower_bound(family, options);
    const GapRecord gap = gap_report(family, result);

    bool ok = result.best_value <= result.upper_bound + kUpperBoundSlack;
    Json doc{{"command", "search"},
             {"family", std::string(family_name(family))},
             {"best_value", number(result.best_value)},
             {"witness", blaschke_json(result.witness)},
             {"iterations", result.iterations},
             {"seed", config.seed},
             {"real_only", result.real_only},
             {"upper_bound", number(result.upper_bound)}};
    if (result.remark_value) {
        doc["remark_value"] = number(*result.remark_value);
        ok = ok && result.best_value <= *result.remark_value + kRemarkSlack;
    }
    doc["gap"] = Json{{"absolute", number(gap.absolute)}, {"relative", number(gap.relative)}};
    doc["note"] = "the general bound is an upper bound; attainment is not claimed";
    emit(doc, config.format, out);
    return ok ? kExitOk : kExitViolation;
}

TruncatedSeries koebe(int order)
{
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    for (int k = 1; k <= order; ++k) {
        c[static_cast<std::size_t>(k)] = static_cast<double>(k);
    }
    return TruncatedSeries(std::move(c));
}

int run_milin(const RunConfig& config, std::ostream& out)
{
    if (config.n < 1) {
        throw std::invalid_argument("milin needs --n >= 1");
    }
    const int order = std::max(config.order, config.n + 1);
    TruncatedSeries f(order);
    if (config.function == "koebe") {
        f = koebe(order);
    } else if (config.function == "identity") {
        f = TruncatedSeries::identity(order);
    } else {
        throw std::invalid_argument("unknown --function '" + config.function +
                                    "' (expected koebe or identity)");
    }
    const double value = milin_functional(f, config.n);
    Json doc{{"command", "milin"},
             {"function", config.function},
             {"n", config.n},
             {"value", number(value)}};
    emit(doc, config.format, out);
    return kExitOk;
}

Complex parse_complex(const std::string& text)
{
    double re = 0.0;
    double im = 0.0;
    char tail = 0;
    if (std::sscanf(text.c_str(), " (%lf ,%lf ) %c", &re, &im, &tail) == 2 ||
        std::sscanf(text.c_str(), " %lf %c", &re, &tail) == 1) {
        return {re, im};
    }
    throw CLI::ValidationError("'" + text + "' is not a number or (re,im) pair");
}

}  // namespace

std::string format_number(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        if (config.command == "bound") {
            return run_bound(config, out);
        }
        if (config.command == "gamma") {
            return run_gamma(config, out);
        }
        if (config.command == "verify-carlson") {
            return run_verify_carlson(config, out);
        }
        if (config.command == "search") {
            return run_search(config, out);
        }
        if (config.command == "milin") {
            return run_milin(config, out);
        }
        err << "unknown command '" << config.command << "'\n";
        return kExitUsage;
    } catch (const CertificationMismatch& e) {
        err << "certification mismatch: " << e.what() << '\n';
        return kExitViolation;
    } catch (const LabError& e) {
        err << "error: " << e.what() << '\n';
        return kExitViolation;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Bounds on the third logarithmic coefficient for three close-to-convex classes",
                 "logcoef"};
    app.require_subcommand(1);

    RunConfig config;
    std::string family_text;
    std::string c1 = "0";
    std::string c2 = "0";
    std::string c3 = "0";
    std::string format_text = "text";

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format_text, "Output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };
    auto add_family = [&](CLI::App* sub) {
        sub->add_option("family", family_text, "f1, f2 or f3")->required();
    };

    auto* bound = app.add_subcommand("bound", "Maximize the objective over E and report the bound");
    add_family(bound);
    bound->add_option("--grid-step", config.grid_step, "Newton seed spacing (CSV: grid spacing)");
    bound->add_option("--newton-tol", config.newton_tol, "Gradient-norm convergence tolerance");
    add_format(bound);

    auto* gamma = app.add_subcommand("gamma", "Closed-form gamma_3 next to the series-log oracle");
    add_family(gamma);
    gamma->add_option("--c1", c1, "c1 as a real or (re,im)");
    gamma->add_option("--c2", c2, "c2 as a real or (re,im)");
    gamma->add_option("--c3", c3, "c3 as a real or (re,im)");
    gamma->add_option("--order", config.order, "Series truncation order");
    add_format(gamma);

    auto* carlson = app.add_subcommand("verify-carlson", "Fuzz Carlson's coefficient bounds");
    carlson->add_option("--samples", config.samples, "Number of random Blaschke products");
    carlson->add_option("--seed", config.seed, "Master seed");
    carlson->add_flag("--real-only", config.real_only, "Real zeros and rotation only");
    add_format(carlson);

    auto* search = app.add_subcommand("search", "Randomized lower bound for sup |gamma_3|");
    add_family(search);
    search->add_option("--iterations", config.iterations, "Evaluation budget per restart");
    search->add_option("--seed", config.seed, "Master seed");
    search->add_option("--max-degree", config.max_degree, "Largest Blaschke degree");
    search->add_option("--restarts", config.restarts, "Concurrent independent restarts");
    search->add_flag("--real-only", config.real_only, "Restrict to real a2 (real zeros)");
    add_format(search);

    auto* milin = app.add_subcommand("milin", "Milin functional of a reference function");
    milin->add_option("--function", config.function, "koebe or identity");
    milin->add_option("--n", config.n, "Outer summation limit");
    milin->add_option("--order", config.order, "Series truncation order");
    add_format(milin);

    try {
        app.parse(argc, argv);
        config.command = app.get_subcommands().front()->get_name();
        if (!family_text.empty()) {
            config.family = parse_family(family_text);
        }
        config.format = format_text == "json"  ? OutputFormat::Json
                        : format_text == "csv" ? OutputFormat::Csv
                                               : OutputFormat::Text;
        config.c1 = parse_complex(c1);
        config.c2 = parse_complex(c2);
        config.c3 = parse_complex(c3);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }
    return run(config, out, err);
}

}  // namespace logcoef::cli
