#pragma once

#include <optional>
#include <string>

#include "subshift/contexts.hpp"
#include "subshift/ktheory.hpp"
#include "subshift/presentation.hpp"

namespace subshift {

// "subshift/v1" shift definitions. Families are stored by name and resolved
// through the zoo on import.
std::string export_shift(const ShiftPresentation& p);
ShiftPresentation import_shift(const std::string& text);

// "ksummary/v1".
std::string export_ksummary(const KSummary& k);

// {"word": ..., "sync": true | false | "consistent-up-to-k"}
struct Classification {
  std::string word;
  std::optional<bool> sync;  // empty when only consistent up to `k`
  std::size_t k = 0;
};

std::string export_classification(const Classification& c);

}  // namespace subshift
