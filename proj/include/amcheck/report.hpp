#pragma once

#include <string>

#include "amcheck/suites.hpp"

namespace amcheck {

/// Serializes a report; format is "json" (stable schema, byte-stable
/// for identical runs) or "md" (table keyed by check tag).
std::string emit_report(const VerificationReport& report, const std::string& format);

/// Inverse of the json emitter; emit(parse(emit(r))) == emit(r).
VerificationReport parse_report_json(const std::string& text);

}  // namespace amcheck
