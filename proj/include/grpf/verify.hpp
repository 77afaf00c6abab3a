#pragma once

#include <functional>
#include <string>
#include <vector>

namespace grpf {

enum class VerifyProfile { Fast, Full };

struct VerifyOptions {
  VerifyProfile profile = VerifyProfile::Fast;
  /// Mutation test: shift rho_1 by one inside the Serre-duality property.
  bool inject_rho_fault = false;
};

struct VerifyItem {
  std::string id;
  std::string description;
  bool slow = false;
  bool skipped = false;
  bool passed = false;
  double ms = 0;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyItem> items;
  bool passed() const;
};

/// Runs every acceptance check; the fast profile skips the slow ones.
VerifyReport verify_all(const VerifyOptions& options,
                        const std::function<void(const VerifyItem&)>& on_item = {});

}  // namespace grpf
