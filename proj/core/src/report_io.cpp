#include <aspectra/verify.hpp>

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace aspectra {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json num(double v) { return round_sig12(v); }

ordered_json violation_json(const Violation& v) {
    ordered_json j;
    j["graph6"] = v.graph6;
    if (v.alpha < 0.0)
        j["alpha"] = nullptr;
    else
        j["alpha"] = num(v.alpha);
    j["detail"] = v.detail;
    ordered_json m = ordered_json::object();
    for (const auto& [name, value] : v.measured) m[name] = num(value);
    j["measured"] = m;
    return j;
}

ordered_json witness_json(const EqualityWitness& w) {
    ordered_json j;
    j["graph6"] = w.graph6;
    j["alpha"] = num(w.alpha);
    j["classification"] = w.classification;
    return j;
}

}  // namespace

double round_sig12(double v) {
    if (v == 0.0) return 0.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

std::string to_json(const VerificationReport& report) {
    ordered_json j;
    j["n_max"] = report.n_max;
    ordered_json grid = ordered_json::array();
    for (double a : report.alpha_grid) grid.push_back(num(a));
    j["alpha_grid"] = grid;
    j["connected_only"] = report.connected_only;
    j["passed"] = report.passed;
    ordered_json results = ordered_json::array();
    for (const auto& r : report.results) {
        ordered_json t;
        t["id"] = r.id;
        t["graphs_tested"] = r.graphs_tested;
        t["applicable_count"] = r.applicable_count;
        t["passed"] = r.violations.empty();
        ordered_json vs = ordered_json::array();
        for (const auto& v : r.violations) vs.push_back(violation_json(v));
        t["violations"] = vs;
        ordered_json ws = ordered_json::array();
        for (const auto& w : r.equality_witnesses) ws.push_back(witness_json(w));
        t["equality_witnesses"] = ws;
        results.push_back(t);
    }
    j["theorems"] = results;
    return j.dump(2) + "\n";
}

std::string violations_csv(const VerificationReport& report) {
    std::ostringstream out;
    out << "theorem,graph6,alpha,detail,measured\n";
    for (const auto& r : report.results)
        for (const auto& v : r.violations) {
            out << r.id << ',' << v.graph6 << ',';
            if (v.alpha >= 0.0) {
                char buf[40];
                std::snprintf(buf, sizeof buf, "%.12g", v.alpha);
                out << buf;
            }
            out << ",\"" << v.detail << "\",\"";
            bool first = true;
            for (const auto& [name, value] : v.measured) {
                char buf[40];
                std::snprintf(buf, sizeof buf, "%.12g", value);
                out << (first ? "" : ";") << name << '=' << buf;
                first = false;
            }
            out << "\"\n";
        }
    return out.str();
}

std::string to_json(const BoundReport& report) {
    ordered_json j;
    j["alpha"] = num(report.alpha);
    j["y"] = num(report.y);
    j["c"] = num(report.c_threshold);
    j["energy"] = num(report.energy);
    j["classification"] = std::string(to_string(report.shape.classification));
    ordered_json shape;
    shape["h"] = num(report.shape.h);
    shape["k"] = num(report.shape.k);
    shape["t"] = report.shape.t;
    j["shape"] = shape;
    ordered_json bounds = ordered_json::array();
    for (const auto& b : report.bounds) {
        ordered_json e;
        e["name"] = b.name;
        e["direction"] = b.is_upper ? "upper" : "lower";
        e["applicable"] = b.applicable;
        if (b.applicable) {
            e["value"] = num(b.value);
            e["satisfied"] = b.satisfied;
            e["slack"] = num(b.slack);
            e["equality"] = b.equality;
        } else {
            e["value"] = nullptr;
            e["satisfied"] = nullptr;
            e["slack"] = nullptr;
            e["equality"] = false;
            e["reason"] = b.reason;
        }
        bounds.push_back(e);
    }
    j["bounds"] = bounds;
    return j.dump(2);
}

}  // namespace aspectra
