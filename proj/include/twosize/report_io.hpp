#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "twosize/identities.hpp"

namespace twosize {

inline constexpr std::string_view report_csv_header =
    "identity_id,n,values,holds,witnesses";

namespace detail {

/* RFC-4180-style quoting, applied whenever the field contains a comma,
 * quote or space. */
inline std::string csv_field(std::string_view field) {
    if (field.find_first_of(",\" ") == std::string_view::npos)
        return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string joined_values(const IdentityReport& report) {
    std::string out;
    for (const auto& [name, v] : report.values) {
        if (!out.empty())
            out += ';';
        out += name;
        out += '=';
        out += std::to_string(v);
    }
    return out;
}

inline std::string joined_witnesses(const IdentityReport& report) {
    std::string out;
    for (const auto& w : report.witnesses) {
        if (!out.empty())
            out += '|';
        out += w;
    }
    return out;
}

} // namespace detail

inline std::string to_csv_row(const IdentityReport& report) {
    std::string out = detail::csv_field(report.identity_id);
    out += ',';
    out += std::to_string(report.n);
    out += ',';
    out += detail::csv_field(detail::joined_values(report));
    out += ',';
    out += report.holds ? "true" : "false";
    out += ',';
    out += detail::csv_field(detail::joined_witnesses(report));
    return out;
}

inline std::string to_jsonl(const IdentityReport& report) {
    nlohmann::json j;
    j["identity_id"] = report.identity_id;
    j["n"] = report.n;
    nlohmann::json values = nlohmann::json::object();
    for (const auto& [name, v] : report.values)
        values[name] = v;
    j["values"] = values;
    j["holds"] = report.holds;
    j["witnesses"] = report.witnesses;
    return j.dump();
}

} // namespace twosize
