#include "qmaps/report.hpp"

#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "qmaps/errors.hpp"

namespace qmaps {

using nlohmann::json;

bool SuiteReport::ok() const {
  if (checks.empty()) return false;
  for (const auto& c : checks) {
    if (!c.ok) return false;
  }
  return true;
}

std::string SuiteReport::to_json(int indent) const {
  json j;
  j["suite"] = suite;
  j["checks"] = json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"id", c.id},
                           {"anchor", c.anchor},
                           {"status", c.ok ? "ok" : "fail"},
                           {"residual", c.residual},
                           {"millis", c.millis},
                           {"detail", c.detail}});
  }
  if (characters) {
    const auto& ch = *characters;
    json comps = json::array();
    for (const auto& comp : ch.components.components) {
      comps.push_back({{"samples", comp.samples},
                       {"representative", comp.representative},
                       {"diameter", comp.diameter},
                       {"is_isolated", comp.isolated}});
    }
    j["characters"] = {{"coordinates", ch.coordinate_names},
                       {"solutions", ch.solutions},
                       {"grid_points", ch.grid_points},
                       {"seeds", ch.seeds},
                       {"dropped", ch.dropped},
                       {"merge_radius", ch.components.merge_radius},
                       {"component_count", ch.components.count()},
                       {"isolated_count", ch.components.isolated_count()},
                       {"components", comps}};
  }
  j["status"] = ok() ? "ok" : "fail";
  return j.dump(indent);
}

SuiteReport SuiteReport::from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    SuiteReport r;
    r.suite = j.at("suite").get<std::string>();
    for (const auto& c : j.at("checks")) {
      CheckRecord rec;
      rec.id = c.at("id").get<std::string>();
      rec.anchor = c.at("anchor").get<std::string>();
      const auto status = c.at("status").get<std::string>();
      if (status != "ok" && status != "fail") throw InvalidArgument("bad check status: " + status);
      rec.ok = status == "ok";
      rec.residual = c.at("residual").get<double>();
      rec.millis = c.at("millis").get<double>();
      rec.detail = c.value("detail", "");
      r.checks.push_back(std::move(rec));
    }
    if (j.contains("characters")) {
      const auto& cj = j.at("characters");
      CharacterSummary ch;
      ch.coordinate_names = cj.at("coordinates").get<std::vector<std::string>>();
      ch.solutions = cj.at("solutions").get<std::vector<std::vector<double>>>();
      ch.grid_points = cj.at("grid_points").get<std::size_t>();
      ch.seeds = cj.at("seeds").get<std::size_t>();
      ch.dropped = cj.at("dropped").get<std::size_t>();
      ch.components.merge_radius = cj.at("merge_radius").get<double>();
      for (const auto& comp : cj.at("components")) {
        Component c;
        c.samples = comp.at("samples").get<std::size_t>();
        c.representative = comp.at("representative").get<std::vector<double>>();
        c.diameter = comp.at("diameter").get<double>();
        c.isolated = comp.at("is_isolated").get<bool>();
        ch.components.components.push_back(std::move(c));
      }
      r.characters = std::move(ch);
    }
    const auto status = j.at("status").get<std::string>();
    if ((status == "ok") != r.ok()) throw InvalidArgument("report status disagrees with its checks");
    return r;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed report: ") + e.what());
  }
}

std::string SuiteReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.ok ? "ok   " : "FAIL ") << suite << "/" << c.id << "  residual=" << std::setprecision(3)
        << c.residual << "  " << std::fixed << std::setprecision(1) << c.millis << "ms"
        << std::defaultfloat;
    if (!c.detail.empty()) out << "  " << c.detail;
    out << "\n";
  }
  if (characters) {
    out << "components: " << characters->components.count() << " (" << characters->components.isolated_count()
        << " isolated), solutions: " << characters->solutions.size() << ", dropped: " << characters->dropped
        << "\n";
  }
  out << suite << ": " << (ok() ? "ok" : "fail") << "\n";
  return out.str();
}

}  // namespace qmaps
