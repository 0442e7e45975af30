#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qn/braid.hpp"
#include "qn/expr.hpp"
#include "qn/integral.hpp"
#include "qn/serialize.hpp"
#include "qn/unity.hpp"

namespace py = pybind11;
using namespace qn;

namespace {

// engine, braid operators and evaluator for one rank
struct Algebra {
  Engine eng;
  Braid br;
  Evaluator ev;
  explicit Algebra(int n) : eng(n), br(eng), ev(eng, br) {}

  std::string normalize(const std::string& x) {
    Element e = ev.eval(x);
    return e.is_zero() ? "0" : render(eng.alpha(), e);
  }
  bool equal(const std::string& a, const std::string& b) { return (ev.eval(a) - ev.eval(b)).is_zero(); }
  std::string json(const std::string& x) { return dump(to_json(eng.alpha(), ev.eval(x))); }
  std::string from_json(const std::string& j) {
    Element e = element_from_json(eng, nlohmann::json::parse(j));
    return e.is_zero() ? "0" : render(eng.alpha(), e);
  }
  bool is_integral(const std::string& x) { return integrality_check(eng, ev.eval(x)).integral; }
  std::string specialize(const std::string& x, int l) {
    ElementCyclo c = specialize_element(eng, ev.eval(x), l);
    return c.is_zero() ? "0" : render(eng.alpha(), c);
  }
  py::dict suite(const std::string& name) {
    SuiteReport r;
    if (name == "qq") r = qq_suite(eng);
    else if (name == "braid") r = braid_suite(eng);
    else if (name == "omega") r = omega_suite(eng);
    else throw py::value_error("unknown suite " + name);
    py::dict d;
    d["name"] = r.name;
    d["ok"] = r.ok();
    d["checked"] = r.checked;
    d["failures"] = r.failures;
    return d;
  }
};

}  // namespace

PYBIND11_MODULE(qnkit, m) {
  m.doc() = "exact computations in U_v(q_n)";
  py::register_exception<SyntaxError>(m, "SyntaxError", PyExc_ValueError);
  py::register_exception<IndexError>(m, "IndexError", PyExc_IndexError);
  py::register_exception<PoleAtEpsilon>(m, "PoleAtEpsilon", PyExc_ArithmeticError);
  py::class_<Algebra>(m, "Algebra")
      .def(py::init<int>(), py::arg("n"))
      .def_property_readonly("n", [](const Algebra& a) { return a.eng.n(); })
      .def("normalize", &Algebra::normalize)
      .def("equal", &Algebra::equal)
      .def("to_json", &Algebra::json)
      .def("from_json", &Algebra::from_json)
      .def("is_integral", &Algebra::is_integral)
      .def("specialize", &Algebra::specialize, py::arg("expr"), py::arg("l"))
      .def("suite", &Algebra::suite);
  m.def("quantum_int", [](long k) { return quantum_int(k).str(); });
  m.def("gauss_binom", [](long c, long k) { return gauss_binom(c, k).str(); });
}
