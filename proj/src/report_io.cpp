#include "charbound/report_io.hpp"

#include <sstream>

namespace charbound {

namespace {

std::string optional_text(const std::optional<Integer>& v) { return v ? v->str() : ""; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

nlohmann::ordered_json report_to_json(const BoundReport& r) {
  nlohmann::ordered_json j;
  j["subject"] = r.subject;
  j["check"] = r.check;
  j["n"] = r.n;
  j["d"] = r.d.str();
  j["multidegree"] = r.multidegree;
  j["index"] = r.index;
  j["exact"] = r.exact ? nlohmann::ordered_json(r.exact->str()) : nlohmann::ordered_json(nullptr);
  j["exact_source"] = r.source == ValueSource::computed ? "computed" : "supplied";
  j["lower"] = r.lower ? nlohmann::ordered_json(r.lower->str()) : nlohmann::ordered_json(nullptr);
  j["bound"] = r.bound.str();
  j["satisfied"] = r.satisfied;
  j["margin"] = r.margin ? nlohmann::ordered_json(r.margin->str()) : nlohmann::ordered_json(nullptr);
  j["degenerate"] = r.degenerate;
  j["degree_convention"] = r.degree_convention;
  return j;
}

std::string reports_to_json(std::span<const BoundReport> reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r));
  return arr.dump(2) + "\n";
}

std::string reports_to_csv(std::span<const BoundReport> reports) {
  std::ostringstream out;
  out << "subject,n,d,multidegree,index,exact,bound,satisfied,margin\n";
  for (const auto& r : reports) {
    out << csv_field(r.subject) << ',' << r.n << ',' << r.d << ',' << csv_field(r.multidegree) << ','
        << csv_field(r.index) << ',' << optional_text(r.exact) << ',' << r.bound << ','
        << (r.satisfied ? "true" : "false") << ',' << optional_text(r.margin) << '\n';
  }
  return out.str();
}

std::string reports_to_markdown(std::span<const BoundReport> reports) {
  std::ostringstream out;
  out << "| subject | exact | bound | margin | ok |\n";
  out << "|---|---:|---:|---:|:-:|\n";
  for (const auto& r : reports) {
    out << "| " << r.subject << (r.degenerate ? " (degenerate)" : "") << " | "
        << optional_text(r.exact) << (r.source == ValueSource::supplied ? " (supplied)" : "") << " | "
        << r.bound << " | " << optional_text(r.margin) << " | " << (r.satisfied ? "yes" : "NO")
        << " |\n";
  }
  return out.str();
}

std::string witness(const BoundReport& r) {
  std::ostringstream out;
  out << "violation: " << r.subject << " (n=" << r.n << ", d=" << r.d;
  if (!r.multidegree.empty()) out << ", multidegree=" << r.multidegree;
  out << "): exact=" << optional_text(r.exact);
  if (r.lower) out << " lower=" << *r.lower;
  out << " bound=" << r.bound;
  if (r.degenerate) out << " [degenerate: d+n-2=0]";
  return out.str();
}

}  // namespace charbound
