#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "troprate/io.hpp"
#include "troprate/numeric.hpp"
#include "troprate/ratings.hpp"

namespace py = pybind11;
using namespace troprate;

namespace {

// Entries may be floats, ints or numeral strings such as "1/3" and "inf".
Scalar to_scalar(const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) return parse_scalar(obj.cast<std::string>());
  return Scalar::from_value(obj.cast<double>());
}

Vector to_vector(const py::sequence& seq) {
  std::vector<Scalar> entries;
  for (const auto& item : seq) entries.push_back(to_scalar(item));
  return Vector(std::move(entries));
}

Matrix to_matrix(const py::sequence& rows) {
  std::vector<std::vector<Scalar>> out;
  for (const auto& row : rows) {
    std::vector<Scalar> r;
    for (const auto& item : row.cast<py::sequence>()) r.push_back(to_scalar(item));
    out.push_back(std::move(r));
  }
  return Matrix::from_rows(out);
}

std::vector<std::vector<double>> to_lists(const Matrix& m) {
  std::vector<std::vector<double>> out(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).value();
  return out;
}

py::object to_python(const io::Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

ProblemInstance make_instance(const py::sequence& a, const py::sequence& b,
                              const std::optional<py::sequence>& g,
                              const std::optional<py::sequence>& h) {
  ProblemInstance inst{to_matrix(a), to_matrix(b), {}, {}};
  const std::size_t n = inst.dim();
  inst.g = g ? to_vector(*g) : Vector(n, Scalar::zero());
  inst.h = h ? to_vector(*h) : Vector(n, Scalar::top());
  return inst;
}

}  // namespace

PYBIND11_MODULE(_troprate, m) {
  m.doc() = "Box-constrained bi-criteria rating from pairwise comparisons (max-algebra)";

  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<OutOfFrontError>(m, "OutOfFrontError", PyExc_ValueError);

  m.def("spectral_radius", [](const py::sequence& a) { return spectral_radius(to_matrix(a)).value(); },
        py::arg("a"), "Tropical spectral radius, ordinary scale.");

  m.def("kleene_star",
        [](const py::sequence& a, double tol) { return to_lists(kleene_star(to_matrix(a), tol)); },
        py::arg("a"), py::arg("tolerance") = kDefaultTolerance);

  m.def("objectives",
        [](const py::sequence& a, const py::sequence& b, const py::sequence& x) {
          const auto inst = ProblemInstance::unconstrained(to_matrix(a), to_matrix(b));
          const auto [alpha, beta] = objectives(inst, to_vector(x));
          return std::pair{alpha.value(), beta.value()};
        },
        py::arg("a"), py::arg("b"), py::arg("x"), "(x^- A x, x^- B x) for a positive x.");

  m.def("compute_front",
        [](const py::sequence& a, const py::sequence& b, std::optional<py::sequence> g,
           std::optional<py::sequence> h, double tol) {
          return to_python(io::front_to_json(compute_front(make_instance(a, b, g, h), tol)));
        },
        py::arg("a"), py::arg("b"), py::arg("g") = py::none(), py::arg("h") = py::none(),
        py::arg("tolerance") = kDefaultTolerance);

  m.def("solutions_at",
        [](const py::sequence& a, const py::sequence& b, double alpha, double beta,
           std::optional<py::sequence> g, std::optional<py::sequence> h, double tol) {
          const auto box = solutions_at(make_instance(a, b, g, h), Scalar::from_value(alpha),
                                        Scalar::from_value(beta), tol);
          py::dict out;
          out["star"] = to_lists(box.star());
          out["lower"] = box.lower().values();
          out["upper"] = box.upper().values();
          std::vector<std::vector<double>> reps;
          for (const Vector& x : representatives(box, tol)) reps.push_back(x.values());
          out["representatives"] = reps;
          return out;
        },
        py::arg("a"), py::arg("b"), py::arg("alpha"), py::arg("beta"), py::arg("g") = py::none(),
        py::arg("h") = py::none(), py::arg("tolerance") = kDefaultTolerance);

  m.def("rate",
        [](const py::sequence& a, const py::sequence& b, std::optional<py::sequence> g,
           std::optional<py::sequence> h, std::optional<double> at_alpha, bool all,
           std::size_t samples, double tol) {
          RateOptions options;
          options.tolerance = tol;
          options.samples = samples;
          if (at_alpha) {
            options.selection = RateOptions::Selection::AtAlpha;
            options.at_alpha = *at_alpha;
          } else if (all) {
            options.selection = RateOptions::Selection::All;
          }
          const auto ca = validate_reciprocal(to_matrix(a));
          const auto cb = validate_reciprocal(to_matrix(b));
          std::optional<Vector> gv;
          std::optional<Vector> hv;
          if (g) gv = to_vector(*g);
          if (h) hv = to_vector(*h);
          return to_python(io::rating_result_to_json(rate(ca, cb, gv, hv, options)));
        },
        py::arg("a"), py::arg("b"), py::arg("g") = py::none(), py::arg("h") = py::none(),
        py::arg("at_alpha") = py::none(), py::arg("all") = false, py::arg("samples") = 50,
        py::arg("tolerance") = kDefaultTolerance);
}
