#include "mlq/report.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

#include "json.hpp"

namespace mlq {

namespace {

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", ms);
  return buf;
}

}  // namespace

std::string render_text(const std::vector<CheckReport>& reports) {
  size_t name_w = 4, params_w = 6;
  for (const CheckReport& rep : reports) {
    name_w = std::max(name_w, rep.name.size());
    params_w = std::max(params_w, rep.params.size());
  }
  std::string out;
  int passed = 0, failed = 0, skipped = 0;
  double total_ms = 0.0;
  for (const CheckReport& rep : reports) {
    std::string status = to_string(rep.status);
    status.resize(7, ' ');
    for (char& ch : status)
      ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    out += status + " " + rep.name + std::string(name_w - rep.name.size() + 2, ' ') +
           rep.params + std::string(params_w - rep.params.size() + 2, ' ') + "(" +
           format_ms(rep.wall_ms) + " ms)\n";
    if (!rep.witness.empty()) out += "        " + rep.witness + "\n";
    for (const auto& [key, value] : rep.derived)
      out += "        " + key + " = " + value + "\n";
    total_ms += rep.wall_ms;
    switch (rep.status) {
      case CheckStatus::Pass:
        ++passed;
        break;
      case CheckStatus::Fail:
        ++failed;
        break;
      case CheckStatus::Skipped:
        ++skipped;
        break;
    }
  }
  out += std::to_string(reports.size()) + " checks: " + std::to_string(passed) +
         " passed, " + std::to_string(failed) + " failed, " +
         std::to_string(skipped) + " skipped (" + format_ms(total_ms) + " ms)\n";
  return out;
}

std::string render_json(const std::vector<CheckReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const CheckReport& rep : reports) {
    nlohmann::json rec;
    rec["schema_version"] = 1;
    rec["name"] = rep.name;
    rec["params"] = rep.params;
    rec["status"] = to_string(rep.status);
    rec["witness"] = rep.witness;
    rec["derived"] = rep.derived;
    arr.push_back(std::move(rec));
  }
  return arr.dump(2) + "\n";
}

int exit_code(const std::vector<CheckReport>& reports) {
  for (const CheckReport& rep : reports)
    if (rep.status == CheckStatus::Fail) return 1;
  return 0;
}

}  // namespace mlq
