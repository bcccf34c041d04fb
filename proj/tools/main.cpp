// Command-line front end: decide whether H^i_I((Z/pZ)[x1..xn]) vanishes.

#include <chrono>
#include <sstream>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "lcvanish/instance_io.hpp"

namespace {

using namespace lcv;

BoundSpec parse_bound(const std::string& text) {
    BoundSpec spec;
    if (text == "finite-length") {
        spec.source = BoundSource::finite_length;
    } else if (text == "empirical") {
        spec.source = BoundSource::empirical;
    } else if (text.rfind("user:", 0) == 0) {
        spec.source = BoundSource::user;
        spec.user_u = std::stoull(text.substr(5));
    } else {
        throw CLI::ValidationError(
            "--bound", "expected user:<u>, finite-length, or empirical");
    }
    return spec;
}

Mode parse_mode(const std::string& text) {
    if (text == "streaming") return Mode::streaming;
    if (text == "baseline") return Mode::baseline;
    if (text == "compare") return Mode::compare;
    throw CLI::ValidationError("--mode", "expected streaming, baseline, or compare");
}

Report run_one(const InstanceFile& file, u64 p, int degree, Mode mode,
               const BoundSpec& bound, int max_steps) {
    Report rep;
    rep.instance_name = file.name.empty() ? "(unnamed)" : file.name;
    rep.p = p;
    rep.degree = degree;
    auto t0 = std::chrono::steady_clock::now();
    Instance inst = build_instance(file.generators, file.n, p, degree);
    rep.warnings = inst.warnings;
    rep.verdict = decide_vanishing(inst, bound, mode, max_steps);
    auto t1 = std::chrono::steady_clock::now();
    rep.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rep;
}

void emit(const Report& rep, const std::string& json_path, bool with_timings) {
    std::cout << report_summary(rep);
    if (json_path.empty()) return;
    std::string body = rep.to_json(with_timings) + "\n";
    if (json_path == "-") {
        std::cout << body;
    } else {
        std::ofstream out(json_path);
        if (!out) throw std::runtime_error("cannot write " + json_path);
        out << body;
    }
}

int exit_code(ResultKind r) {
    switch (r) {
        case ResultKind::VANISHES: return 0;
        case ResultKind::NONVANISHING: return 1;
        default: return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vanishing of local cohomology H^i_I over Z/pZ"};
    app.require_subcommand(1);

    std::string path, mode_text = "streaming", bound_text = "finite-length";
    std::string json_path, csv_path;
    u64 prime = 0;
    int degree = 0, max_steps = 4;
    bool no_timings = false;
    std::vector<u64> primes;

    auto* run = app.add_subcommand("run", "Decide one instance at one prime");
    run->add_option("path", path, "instance file")->required();
    run->add_option("--prime", prime, "prime p")->required();
    run->add_option("--degree", degree, "cohomological degree i")->required();
    run->add_option("--mode", mode_text, "streaming|baseline|compare");
    run->add_option("--bound", bound_text, "user:<u>|finite-length|empirical");
    run->add_option("--max-steps", max_steps, "baseline step budget");
    run->add_option("--json", json_path, "JSON report path ('-' for stdout)");
    run->add_flag("--no-timings", no_timings,
                  "omit wall times (byte-reproducible reports)");

    auto* sweep = app.add_subcommand("sweep", "Run one instance over several primes");
    sweep->add_option("path", path, "instance file")->required();
    sweep->add_option("--degree", degree, "cohomological degree i")->required();
    sweep->add_option("--primes", primes, "list of primes")->required();
    sweep->add_option("--mode", mode_text, "streaming|baseline|compare");
    sweep->add_option("--bound", bound_text, "user:<u>|finite-length|empirical");
    sweep->add_option("--max-steps", max_steps, "baseline step budget");
    sweep->add_option("--csv", csv_path, "CSV output path ('-' for stdout)");
    sweep->add_flag("--no-timings", no_timings, "omit wall times from the CSV");

    CLI11_PARSE(app, argc, argv);

    try {
        Mode mode = parse_mode(mode_text);
        BoundSpec bound = parse_bound(bound_text);

        if (run->parsed()) {
            if (!is_prime(prime)) {
                std::cerr << "error: " << prime << " is not prime\n";
                return 2;
            }
            InstanceFile file = parse_instance_file(path);
            Report rep = run_one(file, prime, degree, mode, bound, max_steps);
            emit(rep, json_path, !no_timings);
            return exit_code(rep.verdict.result);
        }

        // sweep: per-prime failures are recorded, the sweep continues
        InstanceFile file = parse_instance_file(path);
        std::ostringstream csv;
        csv << report_csv_header() << "\n";
        bool any_error = false;
        for (u64 p : primes) {
            if (!is_prime(p)) {
                csv << p << ",ERROR(not prime),,,,,\n";
                any_error = true;
                continue;
            }
            try {
                Report rep = run_one(file, p, degree, mode, bound, max_steps);
                csv << report_csv_row(rep, !no_timings) << "\n";
            } catch (const std::exception& e) {
                csv << p << ",ERROR(" << e.what() << "),,,,,\n";
                any_error = true;
            }
        }
        if (csv_path.empty() || csv_path == "-") {
            std::cout << csv.str();
        } else {
            std::ofstream out(csv_path);
            if (!out) throw std::runtime_error("cannot write " + csv_path);
            out << csv.str();
        }
        return any_error ? 2 : 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
