#pragma once

// Serialization of audit reports. Rationals are always written in their
// canonical text form; no floating-point value appears in any output.

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "dcsum/audit.hpp"
#include "dcsum/rational.hpp"

namespace dcsum::cli {

using Json = nlohmann::ordered_json;

enum class OutputFormat { text, json, csv };

// Throws std::invalid_argument for anything other than text, json, csv.
OutputFormat parse_format(std::string_view name);

std::string format_rational(const Rational& q);

Json report_to_json(const audit::AuditReport& report);
// Inverse of report_to_json. Throws std::invalid_argument on schema errors.
audit::AuditReport report_from_json(const Json& doc);

// Header: id,p,h,k,n,l,m,s,lhs,rhs,residual,holds,skipped. Parameters a
// check does not take are left empty.
std::string report_to_csv(const audit::AuditReport& report);

std::string report_to_text(const audit::AuditReport& report);

std::string render(const audit::AuditReport& report, OutputFormat format);

}  // namespace dcsum::cli
