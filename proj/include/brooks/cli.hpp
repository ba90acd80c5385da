#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace brooks::cli {

enum class Status { ok, property_failed, input_error, capacity_error };

std::string to_string(Status s);
int exit_code(Status s);

struct CommandResult {
    Status status = Status::ok;
    nlohmann::ordered_json payload;
};

/// Runs one command line (args excludes the program name). Reads the graph
/// from --input or, when absent, from `in`; writes the report to `out` and
/// diagnostics to `err`.
CommandResult run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Aligned "key: value" rendering of a report; nested objects flatten to
/// dotted keys so the text shows exactly the fields of the JSON document.
std::string render_text(const nlohmann::ordered_json& payload);

}  // namespace brooks::cli
