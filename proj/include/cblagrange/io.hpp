#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cblagrange/checkerboard.hpp"
#include "cblagrange/vanishing.hpp"
#include "cblagrange/verify.hpp"

namespace cblagrange::io {

using nlohmann::json;

// Coefficient file: {"n": int, "a": [real], "b": [real]}.
json to_json(const RecurrenceCoeffs& c);
RecurrenceCoeffs coeffs_from_json(const json& j);

// Node file: {"nodes": [real]}.
json to_json(const NodeSequence& nodes);
NodeSequence nodes_from_json(const json& j);

// Checkerboard file: {"tau": int, "points": [{"r", "u", "x", "y"}]}.
json to_json(const CheckerboardSet& set);
CheckerboardSet checkerboard_from_json(const json& j);

// Grid file: {"n", "sigma", "xnodes", "ynodes", "xcoeffs", "ycoeffs"}; the
// writer may add "tau" and "points" for the chosen checkerboard.
json to_json(const GridInstance& grid);
GridInstance grid_from_json(const json& j);

// Q dump: one {"j,k": coefficient} object per element, nonzero terms only.
json to_json(const QuotientBasis& q);

// {rank, N_tau, M, nullspace_dim, span_equal, max_delta_error, ...}
json to_json(const VerifyReport& report);

json read_json(const std::string& path);
/// Two-space indented dump with a trailing newline; "-" writes to stdout.
void write_json(const std::string& path, const json& j);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

/// Samples CSV: r,u,value (header optional).
std::map<std::pair<int, int>, double> read_samples_csv(const std::string& path);
/// Points CSV: x,y (header optional).
std::vector<std::pair<double, double>> read_points_csv(const std::string& path);

}  // namespace cblagrange::io
