#include "comax/harness.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

namespace comax
{

VerificationSummary summarize(const std::vector<VerificationRecord> &records)
{
  VerificationSummary s;
  s.total = records.size();
  for (const auto &r : records) {
    switch (r.status) {
    case VerificationRecord::Status::match: ++s.matched; break;
    case VerificationRecord::Status::mismatch: ++s.mismatched; break;
    case VerificationRecord::Status::uncovered: ++s.uncovered; break;
    case VerificationRecord::Status::error: ++s.errored; break;
    }
  }
  return s;
}

namespace
{

nlohmann::ordered_json optional_bool(const std::optional<bool> &b)
{
  return b ? nlohmann::ordered_json(*b) : nlohmann::ordered_json(nullptr);
}

std::string tri(const std::optional<bool> &b) { return b ? (*b ? "yes" : "no") : "-"; }

} // namespace

std::string report_json(const std::vector<VerificationRecord> &records)
{
  nlohmann::ordered_json doc;
  auto list = nlohmann::ordered_json::array();
  for (const auto &r : records) {
    nlohmann::ordered_json j;
    j["family"] = r.family;
    j["parameter"] = r.parameter;
    j["group"] = r.group;
    j["class"] = r.graph_class;
    j["theorem"] = r.theorem;
    j["predicted"] = optional_bool(r.predicted);
    j["computed"] = optional_bool(r.computed);
    j["status"] = std::string(to_string(r.status));
    j["witness"] = r.witness.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.witness);
    j["detail"] = r.detail;
    list.push_back(std::move(j));
  }
  doc["records"] = std::move(list);
  const auto s = summarize(records);
  doc["summary"] = {{"total", s.total},
                    {"matched", s.matched},
                    {"mismatched", s.mismatched},
                    {"uncovered", s.uncovered},
                    {"errored", s.errored}};
  return doc.dump(2) + "\n";
}

std::string report_text(const std::vector<VerificationRecord> &records)
{
  std::size_t wf = 6, wg = 5, wc = 5;
  for (const auto &r : records) {
    wf = std::max(wf, r.family.size());
    wg = std::max(wg, r.group.size());
    wc = std::max(wc, r.graph_class.size());
  }
  auto pad = [](const std::string &s, std::size_t w) { return s + std::string(w - std::min(w, s.size()), ' '); };

  std::ostringstream out;
  out << pad("family", wf) << "  " << pad("param", 5) << "  " << pad("group", wg) << "  "
      << pad("class", wc) << "  pred  comp  status\n";
  for (const auto &r : records) {
    out << pad(r.family, wf) << "  " << pad(std::to_string(r.parameter), 5) << "  "
        << pad(r.group, wg) << "  " << pad(r.graph_class, wc) << "  " << pad(tri(r.predicted), 4)
        << "  " << pad(tri(r.computed), 4) << "  " << to_string(r.status) << "\n";
    if (r.status == VerificationRecord::Status::mismatch ||
        r.status == VerificationRecord::Status::error) {
      if (!r.detail.empty())
        out << "    detail: " << r.detail << "\n";
      if (!r.witness.empty())
        out << "    witness: " << r.witness << "\n";
    }
  }
  const auto s = summarize(records);
  out << "total " << s.total << ", matched " << s.matched << ", mismatched " << s.mismatched
      << ", uncovered " << s.uncovered << ", errored " << s.errored << "\n";
  return out.str();
}

} // namespace comax
