#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "germsig/error.hpp"
#include "germsig/json_io.hpp"
#include "germsig/verify.hpp"
#include "germsig/winding.hpp"

namespace py = pybind11;
using namespace germsig;

namespace {

using Rows = std::vector<std::vector<py::int_>>;

Integer to_integer(const py::int_& x) { return Integer(py::str(x).cast<std::string>()); }

py::int_ to_py(const Integer& z) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

SpMatrix to_sp(const Rows& rows) {
  IntMatrix m(rows.size(), rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) throw Error("ParseError", "matrix must be square");
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = to_integer(rows[r][c]);
  }
  return check_symplectic(m);
}

Rows from_sp(const SpMatrix& a) {
  const IntMatrix& m = a.matrix();
  Rows rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r].push_back(to_py(m(r, c)));
  return rows;
}

CoverSpec make_spec(int d, int m, const std::optional<std::vector<int>>& labels) {
  if (!labels) return CoverSpec::p1(d, m);
  CoverSpec s{d, m, *labels};
  s.validate();
  return s;
}

// Each factor is (i, j, k) or (i, j, k, power).
TensorSection to_tensor(int m, const std::vector<std::vector<int>>& factors, int projection) {
  TensorSection t;
  for (const auto& f : factors) {
    if (f.size() != 3 && f.size() != 4) throw Error("ParseError", "factor must be (i, j, k[, power])");
    t *= TensorSection(SectionSpec{m, f[0], f[1], f[2]}, f.size() == 4 ? f[3] : 1);
  }
  t.projection_power = projection;
  return t;
}

}  // namespace

PYBIND11_MODULE(_germsig, mod) {
  mod.doc() = "Local signatures of fiber germs with cyclic group actions";

  static py::exception<Error> exc(mod, "GermsigError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetObject(exc.ptr(), py::make_tuple(e.name(), e.what()).ptr());
    }
  });

  mod.def("cosec2_half", [](std::int64_t num, std::int64_t den, int digits) {
    return cosec2_half(Angle(num, den)).approx(digits);
  }, py::arg("num"), py::arg("den"), py::arg("digits") = 30,
     "Decimal value of 1/sin^2(psi/2) at psi = 2 pi num/den.");

  mod.def("cosec2_sum", [](int d) {
    AlgReal sum(Rational(0));
    for (int h = 1; h < d; ++h) sum = sum + cosec2_half(Angle(h, d));
    return to_string(as_rational(sum));
  }, py::arg("d"), "Exact sum of cosec^2(h pi/d) over h = 1..d-1, as \"p/q\".");

  mod.def("meyer_tau", [](const Rows& a, const Rows& b) {
    return meyer_tau(to_sp(a), to_sp(b));
  }, py::arg("a"), py::arg("b"));

  mod.def("genus", [](int d, int m, std::optional<std::vector<int>> labels) {
    return genus(make_spec(d, m, labels));
  }, py::arg("d"), py::arg("m"), py::arg("labels") = py::none());

  mod.def("homology_rep", [](int d, int m, const std::string& word,
                             std::optional<std::vector<int>> labels) {
    return from_sp(word_to_matrix(make_spec(d, m, labels), GeneratorWord::parse(word)));
  }, py::arg("d"), py::arg("m"), py::arg("word"), py::arg("labels") = py::none());

  mod.def("phi", [](int d, int m, const std::string& word) {
    return to_string(phi_word(PhiTable::p1(d, m), GeneratorWord::parse(word)));
  }, py::arg("d"), py::arg("m"), py::arg("word"));

  mod.def("p1_germ", [](int d, int m) { return germ_to_json(p1_germ(d, m)).dump(); },
          py::arg("d"), py::arg("m"), "p1 germ data as a JSON document.");

  mod.def("sigma_loc", [](const std::string& germ) {
    return to_string(sigma_loc(germ_from_json(Json::parse(germ))));
  }, py::arg("germ_json"));

  mod.def("total_signature", [](const std::string& action) {
    return to_string(total_signature(group_action_from_json(Json::parse(action))));
  }, py::arg("action_json"));

  mod.def("relative_winding", [](int m, const std::vector<std::vector<int>>& a,
                                 const std::vector<std::vector<int>>& b, int sheets,
                                 int projection_a, int projection_b) {
    return relative_winding(to_tensor(m, a, projection_a), to_tensor(m, b, projection_b),
                            BoundaryLoop{Rational(1, 2), sheets});
  }, py::arg("m"), py::arg("a"), py::arg("b"), py::arg("sheets") = 1,
     py::arg("projection_a") = 0, py::arg("projection_b") = 0);

  mod.def("chi_loc_p1", [](int d, int m) { return to_string(chi_loc_p1(d, m)); },
          py::arg("d"), py::arg("m"));

  mod.def("suite_names", &suite_names);
  mod.def("run_suite", [](const std::string& name) {
    py::gil_scoped_release release;
    return suite_to_json(run_suite(name)).dump();
  }, py::arg("name"), "Acceptance suite result as a JSON document.");
}
