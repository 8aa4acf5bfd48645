#pragma once

// JSON-in / JSON-out entry points shared by the C API and the CLI.

#include <string>
#include <vector>

namespace octavia::commands {

/// Names accepted by run().
const std::vector<std::string>& command_names();

/// Runs a command with a JSON object of arguments and returns a JSON document (one line,
/// newline-terminated). Throws octavia::Error on bad input.
std::string run(const std::string& command, const std::string& args_json);

/// Exit status for a verify report: 0 iff every non-exploratory check passed.
int verify_status(const std::string& report_json);

/// Writes content to path via a temporary file and rename.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace octavia::commands
