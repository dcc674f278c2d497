#include "daw/report.hpp"

#include <json.hpp>
#include <sstream>

namespace daw {

bool Report::pass() const {
  for (const CheckRecord& c : checks)
    if (c.status != "pass") return false;
  return true;
}

std::size_t Report::count(const std::string& status) const {
  std::size_t n = 0;
  for (const CheckRecord& c : checks)
    if (c.status == status) ++n;
  return n;
}

void add_check(Report& r, const std::string& id, bool ok,
               const std::string& witness) {
  r.checks.push_back(CheckRecord{id, ok ? "pass" : "fail", ok ? "" : witness});
}

void add_unknown(Report& r, const std::string& id, const std::string& note) {
  r.checks.push_back(CheckRecord{id, "unknown", note});
}

void fold(Report& r, const std::string& prefix, const VerifyReport& v) {
  for (const RelationResult& x : v.results)
    add_check(r, prefix + "/" + x.tag, x.pass, x.witness);
}

void fold(Report& r, const std::string& prefix,
          const std::vector<FixtureResult>& fixtures) {
  for (const FixtureResult& f : fixtures)
    add_check(r, prefix + "/" + f.name, f.pass, f.detail);
}

std::string report_json(const Report& r) {
  nlohmann::json j;
  j["schema"] = r.schema;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["elapsedSeconds"] = r.elapsed_seconds;
  j["summary"] = {{"total", r.checks.size()},
                  {"pass", r.count("pass")},
                  {"fail", r.count("fail")},
                  {"unknown", r.count("unknown")}};
  j["checks"] = nlohmann::json::array();
  for (const CheckRecord& c : r.checks) {
    nlohmann::json jc = {{"id", c.id}, {"status", c.status}};
    if (!c.witness.empty()) jc["witness"] = c.witness;
    j["checks"].push_back(jc);
  }
  if (!r.payload.empty()) j["payload"] = nlohmann::json::parse(r.payload);
  return j.dump(2);
}

std::string report_summary(const Report& r) {
  std::ostringstream os;
  os << r.suite << ": " << r.count("pass") << "/" << r.checks.size()
     << " checks pass";
  std::size_t f = r.count("fail"), u = r.count("unknown");
  if (f) os << ", " << f << " FAIL";
  if (u) os << ", " << u << " unknown";
  os << " (seed 0x" << std::hex << r.seed << std::dec << ", "
     << r.elapsed_seconds << "s)";
  if (f) {
    for (const CheckRecord& c : r.checks)
      if (c.status == "fail") {
        os << "\n  FAIL " << c.id;
        if (!c.witness.empty()) os << ": " << c.witness;
      }
  }
  return os.str();
}

}  // namespace daw
