#ifndef NINECONG_VERIFY_HPP
#define NINECONG_VERIFY_HPP

#include <set>
#include <string>
#include <vector>

#include "congruence.hpp"
#include "modular9.hpp"

namespace ninecong {

// standalone symbolic identity checks used by the full verification run
CheckReport pencil_determinant_check();
CheckReport scaling_covariance_check();
CheckReport tangent_conjugation_check();
CheckReport cusp_form_split_check(Sign sign);

struct StageResult {
  std::string stage;
  bool ok = false;
  std::string detail;
};

struct CaseReport {
  std::string id;
  std::vector<StageResult> stages;
  bool ok() const {
    for (const auto& s : stages)
      if (!s.ok) return false;
    return !stages.empty();
  }
};

// Full pipeline for one catalogued example; throws UnknownEquations for
// identifiers without printed equations.
CaseReport reproduce(const std::string& case_id);

struct VerifyItem {
  std::string name;
  std::string module;  // "symbolic", "surfaces", "examples"
  std::string status;  // "pass", "fail", "skip"
  std::string detail;
};

struct VerifySummary {
  std::vector<VerifyItem> items;
  bool all_passed() const {
    for (const auto& i : items)
      if (i.status == "fail") return false;
    return true;
  }
};

const std::vector<std::string>& verify_modules();

// Runs every identity check, surface certificate and catalogued example.
// Items whose module is listed in skip are reported as skipped, not passed.
VerifySummary verify_paper(const std::set<std::string>& skip = {});

}  // namespace ninecong

#endif
