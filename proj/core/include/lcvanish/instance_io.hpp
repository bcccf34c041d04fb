#ifndef LCVANISH_INSTANCE_IO_HPP
#define LCVANISH_INSTANCE_IO_HPP

#include <string>
#include <vector>

#include "lcvanish/vanish.hpp"

namespace lcv {

/// Parsed instance file: a line-oriented `key = value` format with
///   n = <int>
///   generators = ["<poly>", "<poly>", ...]
/// and optional `name = <string>`, `expected = VANISHES|NONVANISHING`.
struct InstanceFile {
    std::string name;
    int n = 0;
    std::vector<std::string> generator_text;
    std::vector<IntPoly> generators;
    std::string expected;  // empty when absent
};

/// Throws std::runtime_error with line/column-anchored messages.
InstanceFile parse_instance_file(const std::string& path);
InstanceFile parse_instance_text(const std::string& text,
                                 const std::string& origin);

/// Machine-readable result. `wall_ms` is omitted from the JSON when
/// with_timings is false so that reports are byte-reproducible.
struct Report {
    std::string instance_name;
    u64 p = 0;
    int degree = 0;
    Verdict verdict;
    std::vector<std::string> warnings;
    double wall_ms = 0.0;

    std::string to_json(bool with_timings) const;
};

std::string report_csv_header();
std::string report_csv_row(const Report& r, bool with_timings);

/// Human-readable one-screen summary.
std::string report_summary(const Report& r);

}  // namespace lcv

#endif
