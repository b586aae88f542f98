#pragma once

#include <string>
#include <vector>

namespace subshift::cli {

struct VerifyResult {
  bool pass = false;
  std::string summary;
  std::string body;  // extra lines printed after the verdict
};

std::vector<std::string> verify_targets();
// Throws InvalidArgument for an unknown target.
VerifyResult run_verify(const std::string& target);

}  // namespace subshift::cli
