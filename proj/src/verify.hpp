#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jsonio.hpp"

namespace octavia::verify {

const std::vector<std::string>& suite_names();

/// Report: {"suite", "seed", "heavy", "checks": [...], "passed", "failed", "exploratory", "ok"}.
jsonio::json run(const std::string& suite, bool heavy, uint64_t seed);

}  // namespace octavia::verify
