#include "troprate/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <type_traits>

#include "troprate/numeric.hpp"

namespace troprate::io {

namespace {

Scalar parse_entry(const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_number()) return Scalar::from_value(j.get<double>());
  } catch (const DomainError& e) {
    throw ParseError(where, e.what());
  }
  throw ParseError(where, "expected a number or a numeral string, got " + j.dump());
}

Vector parse_vector(const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array");
  if (j.size() != n) {
    throw ParseError(where, "expected " + std::to_string(n) + " entries, got " +
                                std::to_string(j.size()));
  }
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = parse_entry(j[i], where + "/" + std::to_string(i));
  return v;
}

Matrix parse_matrix(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ParseError(where, "expected a non-empty array of rows");
  const std::size_t n = j.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row_where = where + "/" + std::to_string(i);
    const Vector row = parse_vector(j[i], n, row_where);
    for (std::size_t c = 0; c < n; ++c) m(i, c) = row[c];
  }
  return m;
}

template <typename T>
T option_value(const Json& options, const char* key, T fallback) {
  if (!options.contains(key)) return fallback;
  const Json& v = options.at(key);
  if constexpr (std::is_integral_v<T>) {
    if (!v.is_number_unsigned()) {
      throw ParseError(std::string("/options/") + key, "expected a non-negative integer");
    }
  } else if (!v.is_number()) {
    throw ParseError(std::string("/options/") + key, "expected a number");
  }
  return v.get<T>();
}

}  // namespace

ProblemFile parse_problem(const Json& doc) {
  if (!doc.is_object()) throw ParseError("", "problem file must be a JSON object");
  for (const char* key : {"A", "B"}) {
    if (!doc.contains(key)) throw ParseError(std::string("/") + key, "missing");
  }
  ProblemFile file;
  file.a = parse_matrix(doc.at("A"), "/A");
  const std::size_t n = file.a.rows();
  if (doc.contains("n")) {
    const Json& jn = doc.at("n");
    if (!jn.is_number_unsigned() || jn.get<std::size_t>() != n) {
      throw ParseError("/n", "declared size " + jn.dump() + " does not match A (" +
                                 std::to_string(n) + ")");
    }
  }
  file.b = parse_matrix(doc.at("B"), "/B");
  if (file.b.rows() != n) {
    throw ParseError("/B", "expected " + std::to_string(n) + " rows, got " +
                               std::to_string(file.b.rows()));
  }
  file.g = doc.contains("g") ? parse_vector(doc.at("g"), n, "/g") : Vector(n, Scalar::zero());
  file.h = doc.contains("h") ? parse_vector(doc.at("h"), n, "/h") : Vector(n, Scalar::top());
  if (doc.contains("options")) {
    const Json& opts = doc.at("options");
    if (!opts.is_object()) throw ParseError("/options", "expected an object");
    file.options.tolerance = option_value(opts, "tolerance", file.options.tolerance);
    file.options.samples = option_value(opts, "samples", file.options.samples);
    file.options.log_base = option_value(opts, "log_base", file.options.log_base);
    if (!(file.options.tolerance >= 0.0)) throw ParseError("/options/tolerance", "must be >= 0");
    if (file.options.samples == 0) throw ParseError("/options/samples", "must be >= 1");
    if (file.options.log_base != 0.0 && !(file.options.log_base > 1.0)) {
      throw ParseError("/options/log_base", "must exceed 1");
    }
  }
  return file;
}

ProblemFile parse_problem_text(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("", std::string("invalid JSON: ") + e.what());
  }
  return parse_problem(doc);
}

ProblemFile load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("", "cannot open '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_problem_text(buffer.str());
}

// ---------------------------------------------------------------------------
// Scalars, vectors, matrices

Json scalar_to_json(Scalar s) {
  Json j = Json::object();
  if (s.is_top()) {
    j["value"] = "inf";
  } else if (s.is_zero()) {
    j["value"] = 0.0;
  } else {
    j["value"] = s.value();
    j["log"] = s.log();
  }
  j["decimal"] = format_decimal(s);
  if (auto frac = exact_fraction(s)) j["fraction"] = *frac;
  return j;
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_number() || j.is_string()) return parse_entry(j, "");
  if (!j.is_object()) throw ParseError("", "expected a scalar record, got " + j.dump());
  if (j.contains("log")) return Scalar::from_log(j.at("log").get<double>());
  if (j.contains("value")) return parse_entry(j.at("value"), "/value");
  throw ParseError("", "scalar record without value");
}

Json vector_to_json(const Vector& x) {
  Json j = Json::array();
  for (Scalar s : x) j.push_back(scalar_to_json(s));
  return j;
}

Vector vector_from_json(const Json& j) {
  std::vector<Scalar> out;
  for (const Json& e : j) out.push_back(scalar_from_json(e));
  return Vector(std::move(out));
}

Json matrix_to_json(const Matrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(i, c)));
    j.push_back(std::move(row));
  }
  return j;
}

Matrix matrix_from_json(const Json& j) {
  std::vector<std::vector<Scalar>> rows;
  for (const Json& r : j) {
    auto& row = rows.emplace_back();
    for (const Json& e : r) row.push_back(scalar_from_json(e));
  }
  return Matrix::from_rows(rows);
}

// ---------------------------------------------------------------------------
// Front

namespace {

Json terms_to_json(const std::vector<FrontTerm>& terms) {
  Json j = Json::array();
  for (const FrontTerm& t : terms) {
    j.push_back({{"coefficient", scalar_to_json(t.coefficient)},
                 {"exponent", t.exponent.to_string()},
                 {"k", t.k},
                 {"m", t.m},
                 {"source", t.source == TermSource::Trace ? "trace" : "boundary"},
                 {"base", scalar_to_json(t.base)}});
  }
  return j;
}

Rational rational_from_string(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(text));
  return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

std::vector<FrontTerm> terms_from_json(const Json& j) {
  std::vector<FrontTerm> out;
  for (const Json& t : j) {
    FrontTerm term;
    term.coefficient = scalar_from_json(t.at("coefficient"));
    term.exponent = rational_from_string(t.at("exponent").get<std::string>());
    term.k = t.at("k").get<std::size_t>();
    term.m = t.at("m").get<std::size_t>();
    term.source = t.at("source").get<std::string>() == "trace" ? TermSource::Trace
                                                               : TermSource::Boundary;
    term.base = scalar_from_json(t.at("base"));
    out.push_back(term);
  }
  return out;
}

}  // namespace

Json front_to_json(const ParetoFront& front) {
  Json j;
  j["kind"] = front.kind == FrontKind::Point ? "point" : "segment";
  j["scalars"] = {{"lambda", scalar_to_json(front.scalars.lambda)},
                  {"mu", scalar_to_json(front.scalars.mu)},
                  {"gamma", scalar_to_json(front.scalars.gamma)},
                  {"delta", scalar_to_json(front.scalars.delta)}};
  if (front.kind == FrontKind::Point) {
    j["alpha"] = scalar_to_json(front.alpha_lo);
    j["beta"] = scalar_to_json(front.beta_at(front.alpha_lo));
  } else {
    j["alpha_range"] = {scalar_to_json(front.alpha_lo), scalar_to_json(front.alpha_hi)};
    j["beta_range"] = {scalar_to_json(front.beta_hi()), scalar_to_json(front.beta_lo())};
  }
  j["G"] = terms_to_json(front.functions.g_terms);
  j["H"] = terms_to_json(front.functions.h_terms);
  j["G_simplified"] = terms_to_json(simplify(front.functions.g_terms));
  j["H_simplified"] = terms_to_json(simplify(front.functions.h_terms));
  return j;
}

ParetoFront front_from_json(const Json& j) {
  ParetoFront front;
  const Json& sc = j.at("scalars");
  front.scalars = FrontScalars{scalar_from_json(sc.at("lambda")), scalar_from_json(sc.at("mu")),
                               scalar_from_json(sc.at("gamma")), scalar_from_json(sc.at("delta"))};
  front.functions.g_terms = terms_from_json(j.at("G"));
  front.functions.h_terms = terms_from_json(j.at("H"));
  if (j.at("kind").get<std::string>() == "point") {
    front.kind = FrontKind::Point;
    front.alpha_lo = front.alpha_hi = scalar_from_json(j.at("alpha"));
  } else {
    front.kind = FrontKind::Segment;
    front.alpha_lo = scalar_from_json(j.at("alpha_range").at(0));
    front.alpha_hi = scalar_from_json(j.at("alpha_range").at(1));
  }
  return front;
}

// ---------------------------------------------------------------------------
// Rating result

Json rating_result_to_json(const RatingResult& result) {
  Json families = Json::array();
  for (const SolutionFamily& f : result.families) {
    Json reps = Json::array();
    for (const Representative& r : f.representatives) {
      reps.push_back({{"x", vector_to_json(r.x)},
                      {"normalized", vector_to_json(r.normalized)},
                      {"diagnostics",
                       {{"log_cheb_error_A", r.diagnostics.log_cheb_a},
                        {"log_cheb_error_B", r.diagnostics.log_cheb_b},
                        {"max_relative_error_A", r.diagnostics.max_rel_a},
                        {"max_relative_error_B", r.diagnostics.max_rel_b}}}});
    }
    families.push_back({{"alpha", scalar_to_json(f.alpha)},
                        {"beta", scalar_to_json(f.beta)},
                        {"star", matrix_to_json(f.box.star())},
                        {"lower", vector_to_json(f.box.lower())},
                        {"upper", vector_to_json(f.box.upper())},
                        {"representatives", std::move(reps)}});
  }
  return {{"front", front_to_json(result.front)},
          {"normalization", "max component = 1"},
          {"families", std::move(families)}};
}

RatingResult rating_result_from_json(const Json& j) {
  RatingResult result;
  result.front = front_from_json(j.at("front"));
  for (const Json& f : j.at("families")) {
    ParametricBox box(matrix_from_json(f.at("star")), vector_from_json(f.at("lower")),
                      vector_from_json(f.at("upper")));
    std::vector<Representative> reps;
    for (const Json& r : f.at("representatives")) {
      const Json& d = r.at("diagnostics");
      reps.push_back({vector_from_json(r.at("x")), vector_from_json(r.at("normalized")),
                      Diagnostics{d.at("log_cheb_error_A").get<double>(),
                                  d.at("log_cheb_error_B").get<double>(),
                                  d.at("max_relative_error_A").get<double>(),
                                  d.at("max_relative_error_B").get<double>()}});
    }
    result.families.push_back(SolutionFamily{scalar_from_json(f.at("alpha")),
                                             scalar_from_json(f.at("beta")), std::move(box),
                                             std::move(reps)});
  }
  return result;
}

void write_front_csv(std::ostream& os, const std::vector<std::pair<Scalar, Scalar>>& samples) {
  os << "alpha,beta\n";
  char buf[64];
  for (const auto& [alpha, beta] : samples) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", alpha.value(), beta.value());
    os << buf;
  }
}

Json agreement_to_json(const oracle::FrontAgreement& a) {
  return {{"grid_points", a.grid_points},
          {"non_dominated", a.non_dominated},
          {"max_dominance_log", a.max_dominance},
          {"max_gap_log", a.max_gap},
          {"log_tolerance", a.log_tolerance},
          {"agrees", a.agrees}};
}

}  // namespace troprate::io
