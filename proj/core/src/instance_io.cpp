#include "lcvanish/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lcv {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
    throw std::runtime_error(origin + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::string> parse_string_list(const std::string& origin, int line,
                                           const std::string& v) {
    std::vector<std::string> out;
    if (v.size() < 2 || v.front() != '[' || v.back() != ']')
        fail(origin, line, "expected a bracketed list of quoted strings");
    size_t i = 1;
    const size_t end = v.size() - 1;
    while (true) {
        while (i < end && (v[i] == ' ' || v[i] == '\t' || v[i] == ',')) ++i;
        if (i >= end) break;
        if (v[i] != '"') fail(origin, line, "expected '\"' in list");
        size_t close = v.find('"', i + 1);
        if (close == std::string::npos || close > end)
            fail(origin, line, "unterminated string in list");
        out.push_back(v.substr(i + 1, close - i - 1));
        i = close + 1;
    }
    return out;
}

}  // namespace

InstanceFile parse_instance_text(const std::string& text,
                                 const std::string& origin) {
    InstanceFile f;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool saw_n = false, saw_gens = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos) fail(origin, lineno, "expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "name") {
            f.name = value;
        } else if (key == "n") {
            try {
                f.n = std::stoi(value);
            } catch (...) {
                fail(origin, lineno, "n must be an integer");
            }
            if (f.n < 1) fail(origin, lineno, "n must be >= 1");
            saw_n = true;
        } else if (key == "generators") {
            f.generator_text = parse_string_list(origin, lineno, value);
            saw_gens = true;
        } else if (key == "expected") {
            if (value != "VANISHES" && value != "NONVANISHING")
                fail(origin, lineno, "expected must be VANISHES or NONVANISHING");
            f.expected = value;
        } else {
            fail(origin, lineno, "unknown key '" + key + "'");
        }
    }
    if (!saw_n) fail(origin, lineno, "missing required key 'n'");
    if (!saw_gens || f.generator_text.empty())
        fail(origin, lineno, "missing or empty 'generators'");
    for (const auto& g : f.generator_text) {
        try {
            f.generators.push_back(parse_int_poly(g, f.n));
        } catch (const ParseError& e) {
            throw std::runtime_error(origin + ": in generator \"" + g + "\" at column " +
                                     std::to_string(e.column) + ": " + e.what());
        }
    }
    return f;
}

InstanceFile parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_instance_text(ss.str(), path);
}

std::string Report::to_json(bool with_timings) const {
    nlohmann::json j;
    j["instance"] = instance_name;
    j["p"] = p;
    j["degree"] = degree;
    j["mode"] = to_string(verdict.mode);
    j["verdict"] = to_string(verdict.result);
    if (verdict.witness) {
        nlohmann::json w;
        w["j"] = verdict.witness->j;
        w["offset"] = verdict.witness->offset;
        w["generator_index"] = verdict.witness->gen_index;
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    j["r"] = verdict.r ? nlohmann::json(*verdict.r) : nlohmann::json(nullptr);
    j["u"] = verdict.u ? nlohmann::json(*verdict.u) : nlohmann::json(nullptr);
    j["bound_source"] = to_string(verdict.bound_source);
    j["u_is_per_p"] = verdict.u_is_per_p;
    nlohmann::json c;
    c["peak_live_monomials"] = verdict.counters.peak_live;
    c["max_degree"] = verdict.counters.max_degree;
    c["tuples"] = verdict.counters.tuples;
    c["compositions"] = verdict.counters.compositions;
    c["gamma_terms"] = verdict.counters.gamma_terms;
    c["cobound_gb_size"] = verdict.cobound_gb_size;
    j["counters"] = c;
    if (!verdict.reason.empty()) j["reason"] = verdict.reason;
    j["warnings"] = warnings;
    if (with_timings) j["wall_ms"] = wall_ms;
    return j.dump(2);
}

std::string report_csv_header() {
    return "p,verdict,peak_live_monomials,max_degree,tuples,compositions,wall_ms";
}

std::string report_csv_row(const Report& r, bool with_timings) {
    std::ostringstream os;
    os << r.p << "," << to_string(r.verdict.result) << ","
       << r.verdict.counters.peak_live << "," << r.verdict.counters.max_degree
       << "," << r.verdict.counters.tuples << ","
       << r.verdict.counters.compositions << ",";
    if (with_timings) os << r.wall_ms;
    return os.str();
}

std::string report_summary(const Report& r) {
    std::ostringstream os;
    os << "instance: " << r.instance_name << "\n"
       << "p = " << r.p << ", i = " << r.degree << ", mode = "
       << to_string(r.verdict.mode) << "\n"
       << "verdict: " << to_string(r.verdict.result) << "\n";
    if (r.verdict.witness) {
        os << "witness: j = " << r.verdict.witness->j << ", offset = (";
        for (size_t k = 0; k < r.verdict.witness->offset.size(); ++k)
            os << (k ? "," : "") << r.verdict.witness->offset[k];
        os << "), generator " << r.verdict.witness->gen_index << "\n";
    }
    if (r.verdict.r) os << "stabilization index r = " << *r.verdict.r << "\n";
    if (r.verdict.u)
        os << "bound u = " << *r.verdict.u << " (" << to_string(r.verdict.bound_source)
           << (r.verdict.u_is_per_p ? ", this prime only" : "") << ")\n";
    os << "counters: peak_live_monomials = " << r.verdict.counters.peak_live
       << ", max_degree = " << r.verdict.counters.max_degree
       << ", tuples = " << r.verdict.counters.tuples
       << ", compositions = " << r.verdict.counters.compositions << "\n";
    if (!r.verdict.reason.empty()) os << "reason: " << r.verdict.reason << "\n";
    for (const auto& w : r.warnings) os << "warning: " << w << "\n";
    return os.str();
}

}  // namespace lcv
