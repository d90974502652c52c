#pragma once

#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "charbound/bounds.hpp"

namespace charbound {

// Report serialisation. Big integers are written as decimal strings so no
// consumer ever rounds them through a double.

nlohmann::ordered_json report_to_json(const BoundReport& report);
/// JSON array of reports, pretty-printed with a trailing newline.
std::string reports_to_json(std::span<const BoundReport> reports);
/// Header: subject,n,d,multidegree,index,exact,bound,satisfied,margin.
std::string reports_to_csv(std::span<const BoundReport> reports);
std::string reports_to_markdown(std::span<const BoundReport> reports);

/// One-line description of a failed report, naming every value involved.
std::string witness(const BoundReport& report);

}  // namespace charbound
