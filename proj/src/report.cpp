#include "hvhom/report.hpp"

#include <fstream>

#include <json.hpp>

#include "hvhom/errors.hpp"

namespace hvhom {

using nlohmann::json;

Point& Point::index(std::string name, Index value) {
  fields_.emplace_back(std::move(name), value);
  key_.push_back(value);
  return *this;
}

Point& Point::generator(const std::string& kind_name, const std::string& index_name,
                        const Generator& g) {
  std::string tag = format_generator(g);
  if (!g.is_central()) tag = tag.substr(0, 1);
  fields_.emplace_back(kind_name, tag);
  fields_.emplace_back(index_name, g.index);
  key_.push_back(static_cast<Index>(g.kind));
  key_.push_back(g.index);
  return *this;
}

std::vector<std::string> AuditReport::mismatched_components() const {
  std::vector<std::string> out;
  for (const auto& e : entries) {
    if (!e.matches) out.push_back(e.component);
  }
  return out;
}

namespace {

json point_json(const Point& p) {
  json obj = json::object();
  for (const auto& [name, value] : p.fields()) {
    if (const auto* n = std::get_if<Index>(&value)) {
      obj[name] = *n;
    } else {
      obj[name] = std::get<std::string>(value);
    }
  }
  return obj;
}

json check_json(const CheckReport& r) {
  json window = json::object();
  for (const auto& [name, bounds] : r.window) window[name] = json::array({bounds.first, bounds.second});
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  json cex = json::array();
  for (const auto& c : r.counterexamples) {
    cex.push_back({{"point", point_json(c.point)}, {"lhs", c.lhs}, {"rhs", c.rhs}});
  }
  return {{"suite", r.suite},     {"window", window},        {"params", params},
          {"status", r.status()}, {"checked", r.checked},    {"failures", r.failures},
          {"counterexamples", cex}};
}

json audit_json(const AuditReport& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"component", e.component},
                       {"printed", e.printed},
                       {"derived", e.derived},
                       {"verdict", e.verdict()}});
  }
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(check_json(c));
  return {{"subject", r.subject}, {"params", params}, {"entries", entries}, {"checks", checks}};
}

std::string write_text(const std::string& text, const std::string& path) {
  std::string bytes = text + "\n";
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path);
  out << bytes;
  out.flush();
  if (!out) throw IoError("cannot write " + path);
  return bytes;
}

}  // namespace

// nlohmann::json objects are std::map backed, so dump() emits sorted keys.
std::string to_canonical_json(const CheckReport& report) { return check_json(report).dump(); }
std::string to_canonical_json(const AuditReport& report) { return audit_json(report).dump(); }

std::string emit_report(const CheckReport& report, const std::string& path) {
  return write_text(to_canonical_json(report), path);
}

std::string emit_report(const AuditReport& report, const std::string& path) {
  return write_text(to_canonical_json(report), path);
}

}  // namespace hvhom
