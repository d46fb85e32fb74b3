#include "orbitkit/report_json.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

namespace orbitkit {

ojson to_json(const cplx& z) { return ojson::array({z.real(), z.imag()}); }

ojson to_json(const Point3C& p) {
    return ojson::array({to_json(p.c1), to_json(p.c2), to_json(p.c3)});
}

ojson to_json(const Target& t) {
    ojson j;
    j["a"] = to_json(t.a);
    j["b"] = to_json(t.b);
    j["c"] = t.c;
    return j;
}

ojson to_json(const CPoint& p) {
    ojson j;
    j["r"] = ojson::array({p.r1, p.r2, p.r3});
    j["v"] = ojson::array({to_json(p.v1), to_json(p.v2), to_json(p.v3)});
    return j;
}

ojson to_json(const GroupElement& g) {
    ojson j;
    j["theta"] = g.theta;
    j["eps"] = g.eps ? 1 : 0;
    return j;
}

ojson report_to_json(const CampaignReport& report) {
    ojson j;
    j["suite"] = report.suite;
    if (report.n_values.size() == 1)
        j["n"] = report.n_values.front();
    else
        j["n"] = report.n_values;
    j["samples"] = report.samples;
    j["seed"] = report.seed;
    ojson fails = ojson::array();
    for (const auto& f : report.failures) {
        ojson e;
        e["input"] = f.input;
        e["residual"] = f.residual;
        fails.push_back(std::move(e));
    }
    j["failures"] = std::move(fails);
    j["max_residual"] = report.max_residual;
    j["elapsed_ms"] = report.elapsed_ms;
    j["cases"] = report.cases;
    j["threshold"] = report.threshold;
    if (report.suite == "separation") j["indeterminate"] = report.indeterminate;
    j["passed"] = report.passed();
    return j;
}

std::string format_double(double v) {
    if (v == 0.0) v = 0.0; // drop the sign of negative zero
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    std::string s(buf);
    // Keep the token a JSON float: %g drops the point for integral values.
    if (s.find_first_of(".eEnN") == std::string::npos) s += ".0";
    return s;
}

namespace {

void dump_impl(const ojson& j, std::ostream& out) {
    switch (j.type()) {
        case ojson::value_t::object: {
            out << '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out << ',';
                first = false;
                out << ojson(it.key()).dump() << ':';
                dump_impl(it.value(), out);
            }
            out << '}';
            break;
        }
        case ojson::value_t::array: {
            out << '[';
            bool first = true;
            for (const auto& e : j) {
                if (!first) out << ',';
                first = false;
                dump_impl(e, out);
            }
            out << ']';
            break;
        }
        case ojson::value_t::number_float:
            out << format_double(j.get<double>());
            break;
        default:
            // strings, integers, booleans, null: nlohmann's renderer is
            // already deterministic and lossless.
            out << j.dump();
            break;
    }
}

} // namespace

void dump_json(const ojson& j, std::ostream& out) { dump_impl(j, out); }

std::string dump_json(const ojson& j) {
    std::ostringstream os;
    dump_impl(j, os);
    return os.str();
}

} // namespace orbitkit
