#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tmdyn/machine.hpp"

namespace tmdyn {

/// Names of the built-in machines: utm_6_4 and wutm_6_2.
std::vector<std::string> corpus_names();

/// Machine document for a built-in machine.
std::string_view corpus_text(std::string_view name);

/// Parsed built-in machine. Throws std::invalid_argument on unknown names.
TuringMachine builtin_machine(std::string_view name);

}  // namespace tmdyn
