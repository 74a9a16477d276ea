#include "rfvlc/results.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace rfvlc {

std::string format_sig9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

namespace {

// JSON string escaping for the few metadata fields (names are plain
// identifiers in practice, but quoting must never produce invalid output).
std::string json_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
    return out;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows, bool with_timing) {
    out << "sweep_param,sweep_value,engine,metric,value,ci95";
    if (with_timing) out << ",seconds";
    out << '\n';
    for (const ResultRow& r : rows) {
        out << r.sweep_param << ',';
        if (!r.sweep_param.empty() && std::isfinite(r.sweep_value)) out << format_sig9(r.sweep_value);
        out << ',' << r.engine << ',' << r.metric << ',' << format_sig9(r.value) << ',';
        if (std::isfinite(r.ci95)) out << format_sig9(r.ci95);
        if (with_timing) out << ',' << format_sig9(r.seconds);
        out << '\n';
    }
}

void write_jsonl(std::ostream& out, const std::vector<ResultRow>& rows, bool with_timing) {
    for (const ResultRow& r : rows) {
        out << '{';
        if (!r.sweep_param.empty()) {
            out << "\"sweep_param\":" << json_quote(r.sweep_param);
            if (std::isfinite(r.sweep_value)) out << ",\"sweep_value\":" << format_sig9(r.sweep_value);
            out << ',';
        }
        out << "\"engine\":" << json_quote(r.engine) << ",\"metric\":" << json_quote(r.metric)
            << ",\"value\":";
        if (std::isfinite(r.value))
            out << format_sig9(r.value);
        else
            out << "null";
        if (std::isfinite(r.ci95)) out << ",\"ci95\":" << format_sig9(r.ci95);
        if (with_timing) out << ",\"seconds\":" << format_sig9(r.seconds);
        out << "}\n";
    }
}

}  // namespace rfvlc
