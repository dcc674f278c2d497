#pragma once

#include <string>
#include <vector>

#include "daw/presentations.hpp"
#include "daw/rewriting.hpp"

namespace daw {

// One verified fact inside a suite run.
struct CheckRecord {
  std::string id;
  std::string status;  // "pass", "fail" or "unknown"
  std::string witness;
};

// Structured result of a CLI command or suite; serialized as JSON on
// stdout, summarized for humans on stderr.  Deterministic for fixed inputs
// and seed, except for the timing field.
struct Report {
  std::string schema = "daw-report/1";
  std::string suite;
  unsigned long seed = 0xDA57;
  std::vector<CheckRecord> checks;
  double elapsed_seconds = 0.0;
  // Free-form payload (normal forms, matrices) for commands whose point is
  // data rather than verdicts; JSON text, empty when unused.
  std::string payload;

  bool pass() const;
  std::size_t count(const std::string& status) const;
};

void add_check(Report& r, const std::string& id, bool ok,
               const std::string& witness = "");
void add_unknown(Report& r, const std::string& id, const std::string& note);

// Folds conformance results into the report under "prefix/tag" ids.
void fold(Report& r, const std::string& prefix, const VerifyReport& v);
void fold(Report& r, const std::string& prefix,
          const std::vector<FixtureResult>& fixtures);

std::string report_json(const Report& r);
std::string report_summary(const Report& r);

}  // namespace daw
