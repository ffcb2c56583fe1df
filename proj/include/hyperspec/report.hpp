// Report emission: JSON-lines and CSV rendering of homogeneous row sets with
// bit-stable ordering (keys sorted, one row per line).  Exact rationals are
// passed through as "num/den" strings by the callers.

#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace hyperspec {

using Json = nlohmann::json; // std::map-backed: keys always sorted

enum class TableFormat { Json, Csv, Text };

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += "\"";
    return out;
}

inline std::string json_scalar_to_string(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// Renders homogeneous rows; CSV headers come from the (sorted) keys of the
// first row, JSON emits one object per line, Text aligns nothing fancier than
// "key=value" pairs.
inline std::string emit_table(const std::vector<Json>& rows, TableFormat format) {
    std::string out;
    if (format == TableFormat::Json) {
        for (const auto& r : rows) out += r.dump() + "\n";
        return out;
    }
    if (format == TableFormat::Csv) {
        if (rows.empty()) return out;
        bool first = true;
        for (auto it = rows.front().begin(); it != rows.front().end(); ++it) {
            if (!first) out += ",";
            out += csv_escape(it.key());
            first = false;
        }
        out += "\n";
        for (const auto& r : rows) {
            first = true;
            for (auto it = r.begin(); it != r.end(); ++it) {
                if (!first) out += ",";
                out += csv_escape(json_scalar_to_string(it.value()));
                first = false;
            }
            out += "\n";
        }
        return out;
    }
    for (const auto& r : rows) {
        bool first = true;
        for (auto it = r.begin(); it != r.end(); ++it) {
            if (!first) out += "  ";
            out += it.key() + "=" + json_scalar_to_string(it.value());
            first = false;
        }
        out += "\n";
    }
    return out;
}

// Minimal CSV line split honoring the quoting above (for round-trip tests).
inline std::vector<std::string> csv_split(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') { cur += '"'; ++i; }
                else quoted = false;
            } else cur += c;
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else cur += c;
    }
    out.push_back(cur);
    return out;
}

} // namespace hyperspec
