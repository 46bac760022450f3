#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "racg/coxeter.hpp"
#include "racg/repvar.hpp"

namespace racg::cli {

constexpr int kSchemaVersion = 1;

enum ExitCode { kOk = 0, kVerificationFailed = 1, kBadInput = 2, kNumericalFailure = 3 };

// "a:b:n" for n evenly spaced points from a to b, or a comma-separated list; "" is empty.
std::vector<double> parse_grid(const std::string& text);

// Shortest text with 17 significant digits; "inf"/"nan" for non-finite values.
std::string format_double(double x);

RACG parse_group_json(const nlohmann::json& j);

/** A lift read from JSON; entries given as exact strings are kept exactly when all of them are. */
struct ParsedLift {
  LiftD numeric;
  std::optional<Lift<QSqrt2>> exact;
};

ParsedLift parse_lift_json(const nlohmann::json& j, const std::vector<std::string>& generator_order);

nlohmann::json read_json_file(const std::string& path);

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace racg::cli
