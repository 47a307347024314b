#ifndef KNOTSURG_CLI_REPORT_JSON_HPP
#define KNOTSURG_CLI_REPORT_JSON_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "knotsurg/knotsurg.hpp"

namespace knotsurg::cli {

using json = nlohmann::json;

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Output wrapper for every command. Integers of unbounded size travel as
/// decimal strings so JSON readers limited to doubles cannot corrupt them.
struct ReportEnvelope {
    std::string tool_version{kToolVersion};
    json command = json::object();
    json result = json::object();
    std::vector<std::string> warnings;
    std::optional<std::string> timestamp;  // only with --stamp

    friend bool operator==(const ReportEnvelope&, const ReportEnvelope&) = default;
};

void to_json(json& j, const ReportEnvelope& e);
void from_json(const json& j, ReportEnvelope& e);

/// Two-space indented JSON followed by a newline.
std::string emit(const ReportEnvelope& e);
ReportEnvelope parse_envelope(std::string_view text);

json big(const Integer& n);
Integer parse_big(const json& j);

json to_json(const ObstructionReport& r);
json to_json(const KnotInvariants& k, const AlexanderPolynomial& normalized);

} // namespace knotsurg::cli

#endif
