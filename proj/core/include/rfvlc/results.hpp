#pragma once

// Tidy result tables for the command-line front end: one row per
// (sweep value x engine), emitted as CSV or JSON lines with a stable column
// order so downstream plotting never guesses. Floats carry nine significant
// digits; the wall-time column can be dropped for byte-identical reruns.

#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

namespace rfvlc {

struct ResultRow {
    std::string sweep_param;  // empty when the run has no sweep axis
    double sweep_value = std::numeric_limits<double>::quiet_NaN();
    std::string engine;       // "mc" or "analytic"
    std::string metric;
    double value = std::numeric_limits<double>::quiet_NaN();  // NaN marks a failed evaluation
    double ci95 = std::numeric_limits<double>::quiet_NaN();   // MC half-width; analytic rows leave it unset
    double seconds = 0.0;
};

// %.9g rendering shared by both writers.
std::string format_sig9(double v);

// Columns: sweep_param, sweep_value, engine, metric, value, ci95, seconds.
// Unset numeric cells ("no sweep", "no half-width") stay empty; a failed
// value prints as nan. An empty row list yields a header-only file.
void write_csv(std::ostream& out, const std::vector<ResultRow>& rows, bool with_timing = true);

// Same order as object keys; unset fields are omitted and a failed value is
// null, so every line parses on its own.
void write_jsonl(std::ostream& out, const std::vector<ResultRow>& rows, bool with_timing = true);

}  // namespace rfvlc
