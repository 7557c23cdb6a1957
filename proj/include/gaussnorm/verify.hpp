#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace gaussnorm {

struct VerifyCase {
  std::string suite;
  std::string name;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool relative = false;
  bool pass = false;
  std::string note;
};

struct VerifyReport {
  std::vector<VerifyCase> cases;

  std::size_t failures() const;
  bool ok() const { return !cases.empty() && failures() == 0; }
};

struct VerifyOptions {
  // Relative perturbation applied to the Davies constant A on the
  // closed-form side of the davies suite. Must make that suite fail.
  double perturb_a = 0.0;
};

/// all, davies, sharp, embedding or general.
bool is_suite_name(std::string_view suite);

/// Runs the suite, printing one line per case to out.
VerifyReport run_verify(std::string_view suite, std::ostream& out, const VerifyOptions& options = {});

}  // namespace gaussnorm
