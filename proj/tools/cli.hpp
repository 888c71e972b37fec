#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hopfforge/biproduct.hpp"
#include "json.hpp"

namespace hopfforge::cli {

enum ExitCode : int { kPass = 0, kPrecondition = 1, kInternal = 2, kIo = 3 };

/// Runs one command line. Reports go to out, error JSON to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Serialized instance: construction spec, instance report, verification
/// summary and the full structure constants.
nlohmann::json instance_file_json(const BiproductInstance& inst);

/// Group spec from inline JSON, a file path, or shorthand such as "Z2xZ4".
nlohmann::json parse_group_argument(const std::string& text);

}  // namespace hopfforge::cli
