#include "betalab/report.hpp"

#include <json.hpp>

namespace betalab {

using ordered_json = nlohmann::ordered_json;

std::string Scale::to_string() const {
  return "(eps=" + format_rational(epsilon) + ", delta=" +
         format_rational(delta) + ", R=" + std::to_string(radius) + ")";
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Vacuous: return "VACUOUS";
  }
  return "?";
}

void append_sampled_note(VerificationRecord& record) {
  if (record.provenance.is_sampled() && record.verdict == Verdict::Pass) {
    record.notes.push_back("sampled — not a proof");
  }
}

bool Report::any_failed() const {
  for (const auto& record : records) {
    if (record.failed()) return true;
  }
  return false;
}

std::string Report::to_json_string(bool include_timings) const {
  ordered_json doc;
  doc["fingerprint"] = fingerprint;
  doc["instance"] = instance_summary;
  ordered_json checks = ordered_json::array();
  for (const auto& record : records) {
    ordered_json entry;
    entry["name"] = record.name;
    entry["verdict"] = verdict_name(record.verdict);
    entry["scale"] = {{"epsilon", format_rational(record.scale.epsilon)},
                      {"delta", format_rational(record.scale.delta)},
                      {"radius", record.scale.radius}};
    ordered_json provenance;
    provenance["mode"] = record.provenance.is_sampled() ? "sampled"
                                                        : "exhaustive";
    if (record.provenance.is_sampled()) {
      provenance["seed"] = record.provenance.seed;
      provenance["count"] = record.provenance.count;
    }
    entry["provenance"] = std::move(provenance);
    if (!record.notes.empty()) entry["notes"] = record.notes;
    if (!record.details_json.empty()) {
      entry["details"] = ordered_json::parse(record.details_json);
    }
    if (include_timings) entry["wall_seconds"] = record.wall_seconds;
    checks.push_back(std::move(entry));
  }
  doc["checks"] = std::move(checks);
  if (!extra_json.empty()) doc["sets"] = ordered_json::parse(extra_json);
  return doc.dump(2) + "\n";
}

std::string content_fingerprint(const std::string& bytes) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[hash & 0xF];
    hash >>= 4;
  }
  return out;
}

}  // namespace betalab
