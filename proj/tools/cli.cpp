#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>

#include "orbitkit/fiber.hpp"
#include "orbitkit/report_json.hpp"
#include "orbitkit/verify.hpp"

namespace orbitkit::cli {

namespace {

std::string strip_ws(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
    return out;
}

double parse_real(const std::string& token) {
    const std::string t = strip_ws(token);
    if (t.empty()) throw UsageError("malformed number: empty token");
    char* end = nullptr;
    double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size())
        throw UsageError("malformed number '" + token + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = s.find(sep, pos);
        if (next == std::string::npos) {
            parts.push_back(s.substr(pos));
            break;
        }
        parts.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return parts;
}

} // namespace

cplx parse_complex(const std::string& token) {
    const std::string t = strip_ws(token);
    auto bad = [&]() {
        return UsageError("malformed complex literal '" + token +
                          "': expected re,imi (e.g. \"1,-2.5i\")");
    };
    std::size_t comma = t.find(',');
    if (comma == std::string::npos || t.find(',', comma + 1) != std::string::npos)
        throw bad();
    std::string re_part = t.substr(0, comma);
    std::string im_part = t.substr(comma + 1);
    if (im_part.empty() || im_part.back() != 'i') throw bad();
    im_part.pop_back();
    try {
        return {parse_real(re_part), parse_real(im_part)};
    } catch (const UsageError&) {
        throw bad();
    }
}

Point3C parse_point_w(const std::string& text) {
    auto parts = split(strip_ws(text), ';');
    if (parts.size() != 3)
        throw UsageError("malformed point '" + text +
                         "': expected three complex literals separated by ';'");
    return w_point(parse_complex(parts[0]), parse_complex(parts[1]),
                   parse_complex(parts[2]));
}

Target parse_target(const std::string& text) {
    auto parts = split(strip_ws(text), ';');
    if (parts.size() != 3)
        throw UsageError("malformed target '" + text +
                         "': expected \"a; b; c\" with complex a, b and real c");
    return {parse_complex(parts[0]), parse_complex(parts[1]), parse_real(parts[2])};
}

namespace {

struct CommonOpts {
    int n = 1;
    double tol = kDefaultTol;
    std::uint64_t seed = 0;
    int samples = 10000;
    int grid = 2048;
    std::string format = "json";
};

void emit_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out << ',';
        out << cells[i];
    }
    out << '\n';
}

std::string fd(double v) { return format_double(v); }

int cmd_eval(const CommonOpts& o, const std::string& point_text, std::ostream& out) {
    Target t = factor_map(parse_point_w(point_text), o.n);
    if (o.format == "csv") {
        emit_csv_row(out, {"a_re", "a_im", "b_re", "b_im", "c"});
        emit_csv_row(out, {fd(t.a.real()), fd(t.a.imag()), fd(t.b.real()),
                           fd(t.b.imag()), fd(t.c)});
    } else {
        dump_json(to_json(t), out);
        out << '\n';
    }
    return 0;
}

int cmd_equiv(const CommonOpts& o, const std::string& x_text,
              const std::string& y_text, std::ostream& out) {
    Point3C x = parse_point_w(x_text);
    Point3C y = parse_point_w(y_text);
    double residual = orbit_residual(x, y, o.n);
    bool eq = residual <= o.tol;
    if (o.format == "csv") {
        emit_csv_row(out, {"equivalent", "residual"});
        emit_csv_row(out, {eq ? "true" : "false", fd(residual)});
    } else {
        ojson j;
        j["equivalent"] = eq;
        j["residual"] = residual;
        dump_json(j, out);
        out << '\n';
    }
    return 0;
}

int cmd_lift(const CommonOpts& o, const std::string& target_text, std::ostream& out) {
    Target t = parse_target(target_text);
    Point3C w = lift(t, o.n);
    double residual =
        target_distance(factor_map(w, o.n), t) / std::max(1.0, target_norm(t));
    if (o.format == "csv") {
        emit_csv_row(out, {"w1_re", "w1_im", "w2_re", "w2_im", "w3_re", "w3_im",
                           "residual"});
        emit_csv_row(out, {fd(w.c1.real()), fd(w.c1.imag()), fd(w.c2.real()),
                           fd(w.c2.imag()), fd(w.c3.real()), fd(w.c3.imag()),
                           fd(residual)});
    } else {
        ojson j;
        j["point"] = to_json(w);
        j["residual"] = residual;
        dump_json(j, out);
        out << '\n';
    }
    return 0;
}

int cmd_verify(const CommonOpts& o, const std::string& suite, std::ostream& out) {
    CampaignConfig cfg;
    cfg.n_values = {o.n};
    cfg.samples = o.samples;
    cfg.seed = o.seed;
    cfg.grid_size = o.grid;
    cfg.tol = o.tol;

    std::vector<CampaignReport> reports;
    if (suite == "all") {
        reports = run_all_suites(cfg);
    } else {
        SuiteRunner runner = find_suite(suite);
        if (runner == nullptr)
            throw UsageError("unknown suite '" + suite +
                             "': expected all | invariance | separation | "
                             "surjectivity | chain | monotonicity | intertwining");
        reports.push_back(runner(cfg));
    }

    bool all_passed =
        std::all_of(reports.begin(), reports.end(),
                    [](const CampaignReport& r) { return r.passed(); });

    if (o.format == "csv") {
        emit_csv_row(out, {"suite", "n", "samples", "seed", "cases", "indeterminate",
                           "failures", "max_residual", "threshold", "elapsed_ms",
                           "passed"});
        for (const auto& r : reports) {
            emit_csv_row(out, {r.suite, std::to_string(o.n),
                               std::to_string(r.samples), std::to_string(r.seed),
                               std::to_string(r.cases), std::to_string(r.indeterminate),
                               std::to_string(r.failures.size()), fd(r.max_residual),
                               fd(r.threshold), fd(r.elapsed_ms),
                               r.passed() ? "true" : "false"});
        }
    } else if (suite == "all") {
        ojson arr = ojson::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r));
        dump_json(arr, out);
        out << '\n';
    } else {
        dump_json(report_to_json(reports.front()), out);
        out << '\n';
    }
    return all_passed ? 0 : 1;
}

int cmd_sample_orbit(const CommonOpts& o, const std::string& point_text,
                     std::ostream& out) {
    Point3C x = parse_point_w(point_text);
    Target t = factor_map(x, o.n);
    std::vector<Point3C> orbit;
    orbit.reserve(static_cast<std::size_t>(o.samples));
    for (int i = 0; i < o.samples; ++i) {
        Rng rng = Rng::for_sample(o.seed, static_cast<std::uint64_t>(i));
        orbit.push_back(act_w(random_group_element(rng), x, o.n));
    }
    if (o.format == "csv") {
        emit_csv_row(out, {"index", "w1_re", "w1_im", "w2_re", "w2_im", "w3_re",
                           "w3_im"});
        for (int i = 0; i < o.samples; ++i) {
            const Point3C& w = orbit[static_cast<std::size_t>(i)];
            emit_csv_row(out, {std::to_string(i), fd(w.c1.real()), fd(w.c1.imag()),
                               fd(w.c2.real()), fd(w.c2.imag()), fd(w.c3.real()),
                               fd(w.c3.imag())});
        }
    } else {
        ojson j;
        j["n"] = o.n;
        j["seed"] = o.seed;
        j["point"] = to_json(x);
        j["target"] = to_json(t);
        ojson arr = ojson::array();
        for (const auto& w : orbit) arr.push_back(to_json(w));
        j["orbit"] = std::move(arr);
        dump_json(j, out);
        out << '\n';
    }
    return 0;
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numeric toolkit for the orbit map of the circle-and-flip group on C^3"};
    app.name("orbitkit");
    app.require_subcommand(1);

    CommonOpts o;
    std::string point_text, x_text, y_text, target_text, suite = "all";

    auto add_common = [&](CLI::App* cmd, bool with_campaign) {
        cmd->add_option("--n", o.n, "exponent n of the group G(1,1,n)")
            ->required()
            ->check(CLI::PositiveNumber);
        cmd->add_option("--tol", o.tol, "scaled-residual tolerance")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
        if (with_campaign) {
            cmd->add_option("--samples", o.samples, "samples per suite and n")
                ->check(CLI::PositiveNumber)
                ->capture_default_str();
            cmd->add_option("--seed", o.seed, "campaign seed")
                ->capture_default_str();
            cmd->add_option("--grid", o.grid, "circle discretization size")
                ->check(CLI::Range(8, 1 << 24))
                ->capture_default_str();
        }
    };

    CLI::App* eval = app.add_subcommand("eval", "evaluate the orbit map at a point");
    add_common(eval, false);
    eval->add_option("--point", point_text, "w-frame point \"re,imi; re,imi; re,imi\"")
        ->required();

    CLI::App* equiv = app.add_subcommand("equiv", "decide whether two points share an orbit");
    add_common(equiv, false);
    equiv->add_option("--x", x_text, "first point")->required();
    equiv->add_option("--y", y_text, "second point")->required();

    CLI::App* lift_cmd = app.add_subcommand("lift", "construct a preimage of a target");
    add_common(lift_cmd, false);
    lift_cmd->add_option("--target", target_text, "target \"re,imi; re,imi; c\"")
        ->required();

    CLI::App* verify = app.add_subcommand("verify", "run verification campaigns");
    add_common(verify, true);
    verify->add_option("--suite", suite, "suite name or 'all'")->capture_default_str();

    CLI::App* sample = app.add_subcommand("sample-orbit", "sample random orbit points");
    add_common(sample, true);
    sample->add_option("--point", point_text, "w-frame base point")->required();

    try {
        std::reverse(args.begin(), args.end()); // CLI11 vector parse pops from the back
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (eval->parsed()) return cmd_eval(o, point_text, out);
        if (equiv->parsed()) return cmd_equiv(o, x_text, y_text, out);
        if (lift_cmd->parsed()) return cmd_lift(o, target_text, out);
        if (verify->parsed()) return cmd_verify(o, suite, out);
        if (sample->parsed()) return cmd_sample_orbit(o, point_text, out);
        err << "error: no subcommand given\n";
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace orbitkit::cli
