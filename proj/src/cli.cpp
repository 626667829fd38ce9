#include "laurent/cli.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "laurent/chebyshev.hpp"
#include "laurent/laurent_engine.hpp"
#include "laurent/normal_form.hpp"
#include "laurent/root_locator.hpp"
#include "laurent/trig_comb.hpp"

namespace laurent::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t");
    return std::string(s.substr(first, last - first + 1));
}

// Parses the whole of `text` as a double, or nullopt.
std::optional<double> parse_real(std::string_view text) {
    const std::string buf(text);
    if (buf.empty()) return std::nullopt;
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size() || errno == ERANGE || !std::isfinite(v)) return std::nullopt;
    return v;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json matrix_json(const Matrix2C& g) {
    Json rows = Json::array();
    for (int r = 0; r < 2; ++r) rows.push_back(Json::array({complex_json(g(r, 0)), complex_json(g(r, 1))}));
    return rows;
}

Json coeffs_json(const LaurentPoly& p) {
    Json list = Json::array();
    for (int k = -p.degree_bound(); k <= p.degree_bound(); ++k) {
        list.push_back(Json{{"k", k}, {"re", p.coeff(k).real()}, {"im", p.coeff(k).imag()}});
    }
    return list;
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

void write_csv(std::ostream& out, const Table& table) {
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
        out << '\n';
    };
    line(table.header);
    for (const auto& row : table.rows) line(row);
}

Table coeff_table(const LaurentPoly& p) {
    Table t{{"k", "re", "im"}, {}};
    for (int k = -p.degree_bound(); k <= p.degree_bound(); ++k) {
        t.rows.push_back({std::to_string(k), format_double(p.coeff(k).real()), format_double(p.coeff(k).imag())});
    }
    return t;
}

// Output of one subcommand: the JSON payload plus its CSV rendering.
struct Result {
    Json inputs = Json::object();
    Json data = Json::object();
    Table table;
    int exit_code = kExitOk;
};

struct Options {
    int n = 0;
    std::string matrix;
    std::string theta;
    std::string method = "trace";
    std::string z;
    std::string format = "json";
    bool verify = false;
    int samples = 0;
    int theta_grid = 0;
    int comb_degree = 8;
};

Result cmd_coeffs(const Options& opt, std::ostream& err) {
    Result res;
    const bool from_matrix = !opt.matrix.empty();
    std::optional<Matrix2C> g;
    double theta = 0.0;
    if (from_matrix) {
        g = parse_matrix(opt.matrix);
        res.inputs["matrix"] = matrix_json(*g);
    } else {
        theta = parse_theta(opt.theta);
        res.inputs["theta"] = theta;
        g = Matrix2C::canonical(theta);
    }
    res.inputs["n"] = opt.n;
    res.inputs["method"] = opt.method;

    auto closed = [&] {
        if (!from_matrix) return closed_form_coeffs(opt.n, theta);
        return closed_form_coeffs(opt.n, normal_form(*g));
    };

    LaurentPoly coeffs(0);
    if (opt.method == "trace") {
        coeffs = trace_power_coeffs(opt.n, *g);
    } else if (opt.method == "closed") {
        coeffs = closed();
    } else {
        coeffs = brute_force_coeffs(opt.n, *g);
    }
    res.data["n"] = opt.n;
    res.data["coefficients"] = coeffs_json(coeffs);
    res.table = coeff_table(coeffs);

    if (opt.verify) {
        const double tol = verify_tolerance();
        const LaurentPoly by_trace = opt.method == "trace" ? coeffs : trace_power_coeffs(opt.n, *g);
        const LaurentPoly by_closed = opt.method == "closed" ? coeffs : closed();
        const bool agree = laurent_close(by_trace, by_closed, tol);
        res.data["verify"] = Json{{"tolerance", tol},
                                  {"max_abs_diff", max_coeff_diff(by_trace, by_closed)},
                                  {"agree", agree}};
        if (!agree) {
            err << "verify: trace and closed-form coefficients disagree beyond tolerance " << format_double(tol) << '\n';
            res.exit_code = kExitVerifyFailed;
        }
    }
    return res;
}

Result cmd_normal_form(const Options& opt) {
    Result res;
    const Matrix2C g = parse_matrix(opt.matrix);
    res.inputs["matrix"] = matrix_json(g);
    const NormalForm f = normal_form(g);
    res.data = Json{{"R", f.scale}, {"rho", f.dilation}, {"theta", f.theta}, {"a_re", f.phase.real()},
                    {"a_im", f.phase.imag()}};
    res.table = {{"R", "rho", "theta", "a_re", "a_im"},
                 {{format_double(f.scale), format_double(f.dilation), format_double(f.theta),
                   format_double(f.phase.real()), format_double(f.phase.imag())}}};
    return res;
}

Result cmd_roots(const Options& opt) {
    Result res;
    res.inputs["n"] = opt.n;
    RootReport report;
    double theta = 0.0;
    double dilation = 1.0;
    if (!opt.matrix.empty()) {
        const Matrix2C g = parse_matrix(opt.matrix);
        res.inputs["matrix"] = matrix_json(g);
        const NormalForm f = normal_form(g);
        report = roots_general(opt.n, g);
        theta = f.theta;
        dilation = f.dilation;
        res.data["normal_form"] = Json{{"R", f.scale}, {"rho", f.dilation}, {"theta", f.theta}};
    } else {
        theta = parse_theta(opt.theta);
        res.inputs["theta"] = theta;
        report = roots_F_theta(opt.n, theta);
    }

    // Roots of a general G sit on |z| = 1/ρ; classify them after rescaling to the unit circle.
    const ArcSet arcs(theta);
    Json roots = Json::array();
    res.table.header = {"re", "im", "residual", "arc"};
    for (std::size_t i = 0; i < report.roots.size(); ++i) {
        const Complex z = report.roots[i];
        const std::string arc(to_string(arcs.classify(z * dilation)));
        roots.push_back(Json{{"re", z.real()}, {"im", z.imag()}, {"residual", report.residuals[i]}, {"arc", arc}});
        res.table.rows.push_back(
            {format_double(z.real()), format_double(z.imag()), format_double(report.residuals[i]), arc});
    }
    res.data["count"] = report.roots.size();
    res.data["roots"] = std::move(roots);
    res.data["min_pairwise_gap"] = report.min_pairwise_gap;
    return res;
}

Result cmd_eval(const Options& opt) {
    Result res;
    const double theta = parse_theta(opt.theta);
    const Complex z = parse_complex(opt.z);
    res.inputs = Json{{"n", opt.n}, {"theta", theta}, {"z", complex_json(z)}};

    const Complex closed = closed_form_eval(opt.n, theta, z);
    const Complex from_coeffs = eval_laurent(trace_power_coeffs(opt.n, Matrix2C::canonical(theta)), z);
    const double diff = std::abs(closed - from_coeffs);
    res.data = Json{{"closed_form", complex_json(closed)}, {"coefficients", complex_json(from_coeffs)}, {"abs_diff", diff}};
    res.table = {{"closed_re", "closed_im", "coeff_re", "coeff_im", "abs_diff"},
                 {{format_double(closed.real()), format_double(closed.imag()), format_double(from_coeffs.real()),
                   format_double(from_coeffs.imag()), format_double(diff)}}};
    return res;
}

Result cmd_trig(const Options& opt) {
    Result res;
    const double theta = parse_theta(opt.theta);
    res.inputs = Json{{"n", opt.n}, {"theta", theta}};

    const TrigPoly poly = tau_coeffs(opt.n, theta);
    const auto roots = tau_roots(opt.n, theta);
    const auto levels = tau_pm1_roots(opt.n, theta);
    const IntervalSystem system = interval_system(theta, -1, 1);

    res.table.header = {"kind", "index", "value", "level", "multiplicity", "lo", "hi"};
    Json coeffs = Json::array();
    for (int k = 0; k <= poly.degree(); ++k) {
        coeffs.push_back(Json{{"k", k}, {"value", poly.coeff(k)}});
        res.table.rows.push_back({"cos_coeff", std::to_string(k), format_double(poly.coeff(k)), "", "", "", ""});
    }
    Json root_list = Json::array();
    for (std::size_t j = 0; j < roots.size(); ++j) {
        root_list.push_back(roots[j]);
        res.table.rows.push_back({"root", std::to_string(j), format_double(roots[j]), "", "", "", ""});
    }
    Json level_list = Json::array();
    for (std::size_t j = 0; j < levels.size(); ++j) {
        const auto& r = levels[j];
        level_list.push_back(Json{{"t", r.t}, {"level", r.level}, {"multiplicity", r.multiplicity}});
        res.table.rows.push_back({"level_root", std::to_string(j), format_double(r.t), std::to_string(r.level),
                                  std::to_string(r.multiplicity), "", ""});
    }
    Json interval_list = Json::array();
    for (int p = system.p_min(); p <= system.p_max(); ++p) {
        const Interval iv = system.interval(p);
        interval_list.push_back(Json{{"p", p}, {"lo", iv.lo}, {"hi", iv.hi}});
        res.table.rows.push_back({"interval", std::to_string(p), "", "", "", format_double(iv.lo), format_double(iv.hi)});
    }
    res.data["cos_coeffs"] = std::move(coeffs);
    res.data["roots"] = std::move(root_list);
    res.data["level_roots"] = std::move(level_list);
    res.data["intervals"] = std::move(interval_list);
    res.data["comb_height"] = comb_height(theta);
    return res;
}

Result cmd_comb(const Options& opt) {
    Result res;
    const double theta = parse_theta(opt.theta);
    if (opt.samples < 1) throw UsageError("--samples must be >= 1");
    if (opt.comb_degree < 1) throw UsageError("--n must be >= 1");
    res.inputs = Json{{"theta", theta}, {"samples", opt.samples}, {"n", opt.comb_degree}};

    // Midpoint grid of the open period-0 interval (2θ, π - 2θ).
    const double lo = 2.0 * theta;
    const double width = kPi - 4.0 * theta;
    res.table.header = {"t", "u_re", "u_im", "residual"};
    Json rows = Json::array();
    for (int j = 0; j < opt.samples; ++j) {
        const double t = lo + width * (j + 0.5) / opt.samples;
        const Complex u = comb_map(t, theta);
        double residual = 0.0;
        for (int m = 1; m <= opt.comb_degree; ++m) {
            residual = std::max(residual, std::abs(std::cos(double(m) * u) - tau_eval(m, theta, t)));
        }
        rows.push_back(Json{{"t", t}, {"u_re", u.real()}, {"u_im", u.imag()}, {"residual", residual}});
        res.table.rows.push_back({format_double(t), format_double(u.real()), format_double(u.imag()), format_double(residual)});
    }
    res.data["comb_height"] = comb_height(theta);
    res.data["samples"] = std::move(rows);
    return res;
}

Result cmd_sweep(const Options& opt) {
    Result res;
    if (opt.theta_grid < 1) throw UsageError("--theta-grid must be >= 1");
    res.inputs = Json{{"n", opt.n}, {"theta_grid", opt.theta_grid}};

    res.table.header = {"theta", "k", "re", "im"};
    Json rows = Json::array();
    for (int i = 0; i < opt.theta_grid; ++i) {
        const double theta = opt.theta_grid == 1 ? 0.0 : kQuarterPi * i / (opt.theta_grid - 1);
        const LaurentPoly p = closed_form_coeffs(opt.n, theta);
        rows.push_back(Json{{"theta", theta}, {"value_at_one", eval_laurent(p, 1.0).real()}, {"coefficients", coeffs_json(p)}});
        for (int k = -opt.n; k <= opt.n; ++k) {
            res.table.rows.push_back({format_double(theta), std::to_string(k), format_double(p.coeff(k).real()),
                                      format_double(p.coeff(k).imag())});
        }
    }
    res.data["sweep"] = std::move(rows);
    return res;
}

void add_format(CLI::App* sub, Options& opt) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
}

void add_source(CLI::App* sub, Options& opt) {
    auto* m = sub->add_option("--matrix", opt.matrix, "Matrix \"a,b;c,d\" with complex entries");
    auto* t = sub->add_option("--theta", opt.theta, "Angle in radians, or pi/K");
    m->excludes(t);
}

}  // namespace

Complex parse_complex(std::string_view text) {
    const std::string s = trim(text);
    auto fail = [&]() -> ParseError { return ParseError("malformed complex literal '" + std::string(text) + "'"); };
    if (s.empty()) throw fail();

    if (s.back() != 'i') {
        const auto re = parse_real(s);
        if (!re) throw fail();
        return {*re, 0.0};
    }

    const std::string body = s.substr(0, s.size() - 1);
    // Split at the last sign that is not leading and not an exponent sign.
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    const std::string re_part = split == std::string::npos ? "" : body.substr(0, split);
    const std::string im_part = split == std::string::npos ? body : body.substr(split);

    double re = 0.0;
    if (!re_part.empty()) {
        const auto v = parse_real(re_part);
        if (!v) throw fail();
        re = *v;
    }
    double im = 0.0;
    if (im_part.empty() || im_part == "+") {
        im = 1.0;
    } else if (im_part == "-") {
        im = -1.0;
    } else {
        const auto v = parse_real(im_part);
        if (!v) throw fail();
        im = *v;
    }
    return {re, im};
}

Matrix2C parse_matrix(std::string_view text) {
    const std::string s(text);
    const auto semi = s.find(';');
    if (semi == std::string::npos || s.find(';', semi + 1) != std::string::npos) {
        throw ParseError("matrix '" + s + "' must have exactly two rows separated by ';'");
    }
    std::array<Complex, 4> entries{};
    std::size_t idx = 0;
    for (const std::string& row : {s.substr(0, semi), s.substr(semi + 1)}) {
        const auto comma = row.find(',');
        if (comma == std::string::npos || row.find(',', comma + 1) != std::string::npos) {
            throw ParseError("matrix row '" + row + "' must have exactly two entries separated by ','");
        }
        entries[idx++] = parse_complex(row.substr(0, comma));
        entries[idx++] = parse_complex(row.substr(comma + 1));
    }
    return {entries[0], entries[1], entries[2], entries[3]};
}

double parse_theta(std::string_view text) {
    const std::string s = trim(text);
    if (s.rfind("pi/", 0) == 0) {
        const std::string den = s.substr(3);
        const bool digits = !den.empty() && std::all_of(den.begin(), den.end(), [](char c) { return c >= '0' && c <= '9'; });
        const int k = digits && den.size() < 9 ? std::stoi(den) : 0;
        if (k < 1) throw ParseError("malformed angle token '" + s + "'");
        return kPi / k;
    }
    const auto v = parse_real(s);
    if (!v) throw ParseError("malformed angle '" + s + "'");
    return *v;
}

double verify_tolerance() {
    const char* raw = std::getenv(kTolEnvVar);
    if (raw == nullptr || *raw == '\0') return kDefaultVerifyTol;
    const auto v = parse_real(raw);
    if (!v || !(*v > 0.0)) throw ParseError(std::string(kTolEnvVar) + " must be a positive decimal, got '" + raw + "'");
    return *v;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Laurent polynomials tr(G diag(z, 1/z) G*)^n: coefficients, normal forms, roots", "trace-laurent"};
    app.require_subcommand(1);
    Options opt;

    auto* coeffs = app.add_subcommand("coeffs", "Coefficient table of L_n(z, G) or L_n(z, F_theta)");
    coeffs->add_option("--n", opt.n, "Degree n >= 1")->required();
    add_source(coeffs, opt);
    coeffs->add_option("--method", opt.method, "trace | closed | brute")->check(CLI::IsMember({"trace", "closed", "brute"}));
    coeffs->add_flag("--verify", opt.verify, "Cross-check trace and closed-form coefficients");
    add_format(coeffs, opt);

    auto* nf = app.add_subcommand("normal-form", "Normal form (R, rho, theta) of a generic matrix");
    nf->add_option("--matrix", opt.matrix, "Matrix \"a,b;c,d\"")->required();
    add_format(nf, opt);

    auto* roots = app.add_subcommand("roots", "All 2n roots with residuals and arc classification");
    roots->add_option("--n", opt.n, "Degree n >= 1")->required();
    add_source(roots, opt);
    add_format(roots, opt);

    auto* eval = app.add_subcommand("eval", "L_n(z, F_theta) by closed form and by coefficients");
    eval->add_option("--n", opt.n, "Degree n >= 1")->required();
    eval->add_option("--theta", opt.theta, "Angle in radians, or pi/K")->required();
    eval->add_option("--z", opt.z, "Point \"a+bi\"")->required();
    add_format(eval, opt);

    auto* trig = app.add_subcommand("trig", "Trigonometric polynomial tau_{n,theta}: coefficients, roots, intervals");
    trig->add_option("--n", opt.n, "Degree n >= 1")->required();
    trig->add_option("--theta", opt.theta, "Angle in radians, or pi/K")->required();
    add_format(trig, opt);

    auto* comb = app.add_subcommand("comb", "Comb map u_theta sampled on the open period-0 interval");
    comb->add_option("--theta", opt.theta, "Angle in radians, or pi/K")->required();
    comb->add_option("--samples", opt.samples, "Number of sample points")->required();
    comb->add_option("--n", opt.comb_degree, "Largest degree in the cos(n u) residual (default 8)");
    add_format(comb, opt);

    auto* sweep = app.add_subcommand("sweep", "Closed-form coefficient tables over a uniform theta grid of [0, pi/4]");
    sweep->add_option("--n", opt.n, "Degree n >= 1")->required();
    sweep->add_option("--theta-grid", opt.theta_grid, "Number of grid points")->required();
    add_format(sweep, opt);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    }

    CLI::App* selected = app.get_subcommands().front();
    const std::string command = selected->get_name();

    try {
        if ((selected == coeffs || selected == roots) && opt.matrix.empty() && opt.theta.empty()) {
            throw UsageError("one of --matrix or --theta is required");
        }
        if (opt.n < 1 && selected != comb && selected != nf) throw UsageError("--n must be >= 1");

        Result res;
        if (selected == coeffs) res = cmd_coeffs(opt, err);
        else if (selected == nf) res = cmd_normal_form(opt);
        else if (selected == roots) res = cmd_roots(opt);
        else if (selected == eval) res = cmd_eval(opt);
        else if (selected == trig) res = cmd_trig(opt);
        else if (selected == comb) res = cmd_comb(opt);
        else res = cmd_sweep(opt);

        if (opt.format == "csv") {
            write_csv(out, res.table);
        } else {
            Json doc{{"schema_version", kSchemaVersion}, {"command", command}, {"inputs", res.inputs}, {"data", res.data}};
            out << doc.dump(2) << '\n';
        }
        return res.exit_code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n' << selected->help();
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << '\n';
        return kExitDomain;
    }
}

}  // namespace laurent::cli
