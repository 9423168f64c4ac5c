#pragma once

#include <string>
#include <vector>

#include "betalab/perturbation.hpp"
#include "betalab/rational.hpp"

namespace betalab {

// Shadowing radius, perturbation radius, and word-length truncation: the
// finite surrogate for the nested quantifiers of the definitions.
struct Scale {
  Rational epsilon;
  Rational delta;
  int radius = 0;

  std::string to_string() const;
};

enum class Verdict { Pass, Fail, Vacuous };

std::string verdict_name(Verdict v);

// One check of a law at one scale. Every FAIL carries a concrete
// counterexample in details_json; a PASS under sampled provenance carries the
// "sampled — not a proof" note. Wall time is kept out of the serialized
// report by default so reports stay byte-deterministic.
struct VerificationRecord {
  std::string name;
  Verdict verdict = Verdict::Pass;
  Scale scale;
  Provenance provenance;
  std::vector<std::string> notes;
  std::string details_json;  // serialized JSON object, "" when absent
  double wall_seconds = 0.0;

  bool failed() const { return verdict == Verdict::Fail; }
};

void append_sampled_note(VerificationRecord& record);

struct Report {
  std::string fingerprint;  // content hash of the instance file form
  std::string instance_summary;
  std::vector<VerificationRecord> records;
  std::string extra_json;  // optional extra payload (e.g. computed sets)

  bool any_failed() const;
  // Deterministic serialization; timings only when include_timings is set.
  std::string to_json_string(bool include_timings = false) const;
};

// FNV-1a 64-bit over a string, rendered as 16 hex digits.
std::string content_fingerprint(const std::string& bytes);

}  // namespace betalab
