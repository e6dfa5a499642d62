#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "radonlink/certificate.hpp"
#include "radonlink/configuration.hpp"
#include "radonlink/oracle.hpp"
#include "radonlink/verify.hpp"

namespace radonlink {

// Point set files
//
//   # optional comment lines start with '#'
//   <n> <n+3>
//   <x_1> ... <x_n>        one row per point, n+3 rows
//
// Tokens are whitespace separated. Coordinates are integers, p/q fractions
// or plain decimals; decimals are read exactly. Blank lines are ignored.

Configuration parse_point_file(std::string_view text);
Configuration read_point_file(const std::filesystem::path& path);

/// Canonical text form: header line then one row per point, every value in
/// lowest terms. parse_point_file(format_point_file(c)) == c.
std::string format_point_file(const Configuration& c);

/// Lowercase hex SHA-256 of format_point_file(c).
std::string input_hash(const Configuration& c);

// Result documents. Rationals are strings ("p" or "p/q"); point indices are
// 1-based integers.

nlohmann::json to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json result_to_json(const Configuration& c, const PartitionResult& r, const VerificationReport& verdict);

/// Inverse of result_to_json for the partition part. Throws ParseError on a
/// document that does not have the expected shape.
PartitionResult result_from_json(const nlohmann::json& doc);

nlohmann::json enumeration_to_json(const Configuration& c, const EnumerationReport& report);

nlohmann::json general_position_to_json(const Configuration& c, const GeneralPositionReport& report);

}  // namespace radonlink
