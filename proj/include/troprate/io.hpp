#pragma once

// Problem files and result records.
//
// Problem file (JSON):
//   {
//     "n": 4,                                  // optional, checked when present
//     "A": [[1, "3", "1/3", ...], ...],        // numbers or numeral strings
//     "B": [[...], ...],
//     "g": [1, 0, 0, 0],                       // optional, default all 0
//     "h": [1, "1/6", 1, "inf"],               // optional, default all "inf"
//     "options": {"tolerance": 1e-9, "samples": 50, "log_base": 10}
//   }
//
// Every scalar in an output record is an object
//   {"value": 0.1666.., "decimal": "0.166666666667", "fraction": "1/6", "log": -1.79..}
// where "value" and "log" round-trip exactly, "fraction" appears only for
// values that match a small rational and "log" is omitted for 0 and "inf".

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "troprate/bicriteria.hpp"
#include "troprate/errors.hpp"
#include "troprate/oracle.hpp"
#include "troprate/ratings.hpp"

namespace troprate::io {

using Json = nlohmann::json;

/// Malformed problem file; `where` is a JSON-pointer-like location.
class ParseError : public Error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : Error(where.empty() ? what : where + ": " + what), where_(where) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

struct ProblemOptions {
  double tolerance = kDefaultTolerance;
  std::size_t samples = 50;
  double log_base = 0.0;
};

struct ProblemFile {
  Matrix a;
  Matrix b;
  Vector g;
  Vector h;
  ProblemOptions options;

  std::size_t dim() const noexcept { return a.rows(); }
  ProblemInstance instance() const { return ProblemInstance{a, b, g, h}; }
};

ProblemFile parse_problem(const Json& doc);
ProblemFile parse_problem_text(std::string_view text);
ProblemFile load_problem(const std::filesystem::path& path);

Json scalar_to_json(Scalar s);
Scalar scalar_from_json(const Json& j);

Json vector_to_json(const Vector& x);
Vector vector_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json front_to_json(const ParetoFront& front);
ParetoFront front_from_json(const Json& j);

Json rating_result_to_json(const RatingResult& result);
RatingResult rating_result_from_json(const Json& j);

/// "alpha,beta" header followed by one row per sample, 17 significant digits.
void write_front_csv(std::ostream& os, const std::vector<std::pair<Scalar, Scalar>>& samples);

Json agreement_to_json(const oracle::FrontAgreement& agreement);

}  // namespace troprate::io
