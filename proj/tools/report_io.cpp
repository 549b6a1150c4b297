#include "dcsum_cli/report_io.hpp"

#include <sstream>
#include <stdexcept>

namespace dcsum::cli {

namespace {

Json rational_or_null(const audit::CheckResult& r, const Rational& q) {
  if (r.skipped) return nullptr;
  return format_rational(q);
}

Rational rational_field(const Json& node, const char* name) {
  const Json& v = node.at(name);
  if (v.is_null()) return {};
  return Rational::parse(v.get<std::string>());
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string format_rational(const Rational& q) { return q.to_string(); }

Json report_to_json(const audit::AuditReport& report) {
  Json grid = Json::object();
  grid["checks"] = report.checks;
  for (std::string_view name : audit::kParamNames) {
    const auto& r = report.grid.range(name);
    grid[std::string(name)] = Json::array({r.lo, r.hi});
  }
  grid["odd_only"] = report.grid.odd_only;
  grid["coprime_only"] = report.grid.coprime_only;

  Json results = Json::array();
  for (const auto& r : report.results) {
    Json params = Json::object();
    for (const auto& [name, value] : r.params.values()) params[name] = value;
    results.push_back(Json{{"id", r.id},
                           {"params", std::move(params)},
                           {"lhs", rational_or_null(r, r.lhs)},
                           {"rhs", rational_or_null(r, r.rhs)},
                           {"residual", rational_or_null(r, r.residual)},
                           {"holds", r.holds},
                           {"skipped", r.skipped}});
  }

  Json summary = Json::object();
  for (const auto& [id, t] : report.summary) {
    summary[id] = Json{{"pass", t.pass}, {"fail", t.fail}, {"skip", t.skip}};
  }
  return Json{{"grid", std::move(grid)}, {"results", std::move(results)},
              {"summary", std::move(summary)}};
}

audit::AuditReport report_from_json(const Json& doc) {
  try {
    audit::AuditReport report;
    const Json& grid = doc.at("grid");
    report.checks = grid.at("checks").get<std::vector<std::string>>();
    for (std::string_view name : audit::kParamNames) {
      const Json& pair = grid.at(std::string(name));
      if (!pair.is_array() || pair.size() != 2) {
        throw std::invalid_argument("grid range '" + std::string(name) + "' must be [lo, hi]");
      }
      report.grid.range(name) = {pair[0].get<std::int64_t>(), pair[1].get<std::int64_t>()};
    }
    report.grid.odd_only = grid.at("odd_only").get<bool>();
    report.grid.coprime_only = grid.at("coprime_only").get<bool>();

    for (const Json& node : doc.at("results")) {
      audit::CheckResult r;
      r.id = node.at("id").get<std::string>();
      for (const auto& [name, value] : node.at("params").items()) {
        r.params.set(name, value.get<std::int64_t>());
      }
      r.lhs = rational_field(node, "lhs");
      r.rhs = rational_field(node, "rhs");
      r.residual = rational_field(node, "residual");
      r.holds = node.at("holds").get<bool>();
      r.skipped = node.at("skipped").get<bool>();
      report.results.push_back(std::move(r));
    }

    for (const auto& [id, t] : doc.at("summary").items()) {
      report.summary[id] = audit::Tally{t.at("pass").get<std::int64_t>(),
                                        t.at("fail").get<std::int64_t>(),
                                        t.at("skip").get<std::int64_t>()};
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::string report_to_csv(const audit::AuditReport& report) {
  std::ostringstream out;
  out << "id";
  for (std::string_view name : audit::kParamNames) out << ',' << name;
  out << ",lhs,rhs,residual,holds,skipped\n";
  for (const auto& r : report.results) {
    out << r.id;
    for (std::string_view name : audit::kParamNames) {
      out << ',';
      if (r.params.contains(name)) out << r.params.at(name);
    }
    if (r.skipped) {
      out << ",,,";
    } else {
      out << ',' << r.lhs << ',' << r.rhs << ',' << r.residual;
    }
    out << ',' << (r.holds ? "true" : "false") << ',' << (r.skipped ? "true" : "false")
        << '\n';
  }
  return out.str();
}

std::string report_to_text(const audit::AuditReport& report) {
  std::ostringstream out;
  for (const auto& r : report.results) {
    out << (r.skipped ? "SKIP" : r.holds ? "PASS" : "FAIL") << ' ' << r.id;
    for (const auto& [name, value] : r.params.values()) out << ' ' << name << '=' << value;
    if (!r.skipped) {
      out << "  lhs=" << r.lhs << " rhs=" << r.rhs << " residual=" << r.residual;
    }
    out << '\n';
  }
  out << "summary:\n";
  for (const auto& [id, t] : report.summary) {
    out << "  " << id << ": pass=" << t.pass << " fail=" << t.fail << " skip=" << t.skip
        << '\n';
  }
  return out.str();
}

std::string render(const audit::AuditReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::json:
      return report_to_json(report).dump(2) + "\n";
    case OutputFormat::csv:
      return report_to_csv(report);
    case OutputFormat::text:
      break;
  }
  return report_to_text(report);
}

}  // namespace dcsum::cli
