#pragma once

// JSON serialization of matrices and table dumps. Output uses insertion-ordered
// objects so that dumps are byte-stable.

#include <json.hpp>

#include <string>
#include <variant>

#include "e7/matrix.hpp"
#include "e7/numeric.hpp"

namespace e7 {

using Json = nlohmann::ordered_json;

/// Raised for malformed matrix files; the CLI maps it to exit code 2.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using AnyMatrix = std::variant<Matrix<IntegerRing>, Matrix<RationalField>, Matrix<PrimeField>>;

Json to_json(const Matrix<IntegerRing>& m);
Json to_json(const Matrix<RationalField>& m);
Json to_json(const Matrix<PrimeField>& m);

AnyMatrix matrix_from_json(const Json& j);
AnyMatrix read_matrix_file(const std::string& path);

Json dump_roots();
Json dump_weights();
Json dump_constants();
Json dump_quadrics();
Json dump_form_f();
Json dump_form_h();

/// Plain-text rendering of the same tables, one record per line.
std::string dump_text(const std::string& target);

/// Stable identifier embedded in every report.
std::string build_id();

}  // namespace e7
