#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "schurlc/enumerate.hpp"
#include "schurlc/errors.hpp"
#include "schurlc/intpoly.hpp"
#include "schurlc/json_io.hpp"
#include "schurlc/logconcave.hpp"
#include "schurlc/matroid.hpp"
#include "schurlc/sweep.hpp"
#include "schurlc/verify.hpp"

namespace py = pybind11;
using namespace schurlc;

namespace {

py::int_ to_py_int(const Int& x) {
  const std::string digits = x.str();
  PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

py::dict vector_to_dict(const SchurVector& v) {
  py::dict out;
  for (const auto& [lambda, c] : v.terms())
    out[py::tuple(py::cast(lambda.parts()))] = to_py_int(c);
  return out;
}

py::list poly_to_list(const SchurPoly& p) {
  py::list out;
  for (int k = 0; k <= p.degree(); ++k) out.append(vector_to_dict(p.coeff(k)));
  return out;
}

py::dict report_to_dict(const CheckReport& r) {
  py::list witnesses;
  for (const Witness& w : r.witnesses) {
    py::dict entry;
    entry["i"] = w.i;
    entry["j"] = w.j;
    entry["difference"] = vector_to_dict(w.difference);
    witnesses.append(entry);
  }
  py::dict out;
  out["verdict"] = r.verdict;
  out["witnesses"] = witnesses;
  out["cells_checked"] = r.cells_checked;
  return out;
}

py::list intpoly_to_list(const IntPoly& p) {
  py::list out;
  for (int k = 0; k <= p.degree(); ++k) out.append(to_py_int(p.coeff(k)));
  return out;
}

SchurVector vector_from_dict(const py::dict& d) {
  SchurVector v;
  for (auto item : d) {
    std::vector<int> parts = item.first.cast<std::vector<int>>();
    const std::string c = py::str(item.second);
    v.add_term(Partition(std::move(parts)), Int(c));
  }
  return v;
}

SchurPoly poly_from_list(const py::list& coeffs) {
  std::vector<SchurVector> out;
  for (auto item : coeffs) out.push_back(vector_from_dict(item.cast<py::dict>()));
  return SchurPoly(std::move(out));
}

}  // namespace

PYBIND11_MODULE(_schurlc, m) {
  m.doc() = "Exact Schur-function arithmetic and induced log-concavity checks "
            "for uniform-matroid invariants";

  py::register_exception<degenerate_shape_error>(m, "DegenerateShapeError",
                                                 PyExc_ValueError);
  py::register_exception<inapplicable_error>(m, "InapplicableError",
                                             PyExc_ValueError);

  py::class_<Partition>(m, "Partition")
      .def(py::init<std::vector<int>>())
      .def_property_readonly("parts", &Partition::parts)
      .def_property_readonly("size", &Partition::size)
      .def_property_readonly("length", &Partition::length)
      .def("conjugate", &Partition::conjugate)
      .def("hook_lengths", &Partition::hook_lengths)
      .def("n_stat", &Partition::n_stat)
      .def("__str__", &Partition::to_string)
      .def("__repr__",
           [](const Partition& p) { return "Partition(" + p.to_string() + ")"; })
      .def("__eq__", [](const Partition& a, const Partition& b) { return a == b; })
      .def("__hash__", [](const Partition& p) {
        std::size_t h = 1469598103934665603ull;
        for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
      });

  py::class_<SkewShape>(m, "SkewShape")
      .def(py::init<Partition, Partition>())
      .def_property_readonly("outer", &SkewShape::outer)
      .def_property_readonly("inner", &SkewShape::inner)
      .def_property_readonly("size", &SkewShape::size)
      .def("rotate180", &SkewShape::rotate180)
      .def("__str__", &SkewShape::to_string)
      .def_static("parse", [](const std::string& text) {
        auto s = SkewShape::parse(text);
        if (!s) throw degenerate_shape_error("degenerate shape: " + text);
        return *s;
      });

  m.def("sort_split", &sort_split);
  m.def("midpoint_pair", &midpoint_pair);
  m.def("star_pair", &star_pair);

  m.def("lr_coefficient",
        [](const Partition& lam, const Partition& mu, const Partition& nu) {
          return to_py_int(lr_coefficient(lam, mu, nu));
        });
  m.def("schur_product",
        [](const py::dict& f, const py::dict& g) {
          return vector_to_dict(schur_product(vector_from_dict(f), vector_from_dict(g)));
        },
        "product of two Schur vectors given as {tuple(parts): coeff} dicts");
  m.def("schur_product_basis",
        [](const Partition& a, const Partition& b) {
          return vector_to_dict(schur_product(a, b));
        });
  m.def("pieri_multiply", [](const py::dict& f, int n) {
    return vector_to_dict(pieri_multiply(vector_from_dict(f), n));
  });
  m.def("skew_expand", [](const SkewShape& s) { return vector_to_dict(skew_expand(s)); });
  m.def("jacobi_trudi_expand",
        [](const SkewShape& s) { return vector_to_dict(jacobi_trudi_expand(s)); });
  m.def("hook_product_closed_form", [](int mm, int a, int n, int b) {
    return vector_to_dict(hook_product_closed_form(mm, a, n, b));
  });
  m.def("is_schur_positive", [](const py::dict& f) {
    return vector_from_dict(f).is_schur_positive();
  });
  m.def("dimension",
        [](const py::dict& f) { return to_py_int(dimension(vector_from_dict(f))); });
  m.def("generic_degree", [](const Partition& p) {
    return intpoly_to_list(generic_degree(p));
  });

  m.def("check_ilc",
        [](const py::list& poly) { return report_to_dict(check_ilc(poly_from_list(poly))); });
  m.def("check_strong_ilc", [](const py::list& poly) {
    return report_to_dict(check_strong_ilc(poly_from_list(poly)));
  });
  m.def("times_t_plus_one", [](const py::list& poly) {
    return poly_to_list(times_t_plus_one(poly_from_list(poly)));
  });
  m.def("substitute_t_plus_one", [](const py::list& poly) {
    return poly_to_list(substitute_t_plus_one(poly_from_list(poly)));
  });
  m.def("verify_skew_family", [](int n, int k, int a, int b, int c, int d, int i) {
    return report_to_dict(verify_skew_family(n, k, a, b, c, d, i));
  });
  m.def("verify_hook_corollary", [](int a, int b, int p, int q) {
    return report_to_dict(verify_hook_corollary(a, b, p, q));
  });
  m.def("verify_lpp_midpoint", [](const SkewShape& x, const SkewShape& y) {
    return report_to_dict(verify_lpp_midpoint(x, y));
  });
  m.def("verify_lpp_sort", [](const SkewShape& x, const SkewShape& y) {
    return report_to_dict(verify_lpp_sort(x, y));
  });
  m.def("dimension_poly", [](const py::list& poly) {
    return intpoly_to_list(dimension_poly(poly_from_list(poly)));
  });
  m.def("q_dimension_poly", [](const py::list& poly, int q) {
    return intpoly_to_list(q_dimension_poly(poly_from_list(poly), q));
  });
  m.def("is_log_concave", [](const py::list& coeffs) {
    std::vector<Int> v;
    for (auto item : coeffs) v.emplace_back(std::string(py::str(item)));
    return is_log_concave(IntPoly(std::move(v)));
  });

  m.def("char_poly",
        [](int mm, int d) { return poly_to_list(char_poly(mm, d).signed_poly()); });
  m.def("char_poly_unsigned",
        [](int mm, int d) { return poly_to_list(char_poly(mm, d).unsigned_poly()); });
  m.def("reduced_char_poly", [](int mm, int d) {
    return poly_to_list(reduced_char_poly(mm, d).signed_poly());
  });
  m.def("reduced_char_poly_unsigned", [](int mm, int d) {
    return poly_to_list(reduced_char_poly(mm, d).unsigned_poly());
  });
  m.def("kl_poly", [](int mm, int d) { return poly_to_list(kl_poly(mm, d)); });
  m.def("kl_poly_hook_form",
        [](int mm, int d) { return poly_to_list(kl_poly_hook_form(mm, d)); });
  m.def("inverse_kl_poly",
        [](int mm, int d) { return poly_to_list(inverse_kl_poly(mm, d)); });
  m.def("kl_defining_recursion_check", [](int mm, int d) {
    return report_to_dict(kl_defining_recursion_check(mm, d));
  });
  m.def("inverse_kl_recursion_check", [](int mm, int d) {
    return report_to_dict(inverse_kl_recursion_check(mm, d));
  });
  m.def("z_poly", [](int mm, int d) { return poly_to_list(z_poly(mm, d)); });
  m.def("z_poly_from_definition",
        [](int mm, int d) { return poly_to_list(z_poly_from_definition(mm, d)); });
  m.def("braid_b7_chP", []() { return poly_to_list(braid_b7_chP()); });
  m.def("remark_example_poly", []() { return poly_to_list(remark_example_poly()); });

  m.def("run_verification", [](const std::vector<std::string>& only) {
    py::list out;
    for (const CriterionResult& r : run_verification(only)) {
      py::dict entry;
      entry["id"] = r.id;
      entry["suite"] = r.suite;
      entry["name"] = r.name;
      entry["pass"] = r.pass;
      entry["detail"] = r.detail;
      entry["ms"] = r.ms;
      out.append(entry);
    }
    return out;
  }, py::arg("only") = std::vector<std::string>{});

  m.def("expand_json", [](const std::string& shape_text) {
    auto s = SkewShape::parse(shape_text);
    if (!s) throw degenerate_shape_error("degenerate shape: " + shape_text);
    return schur_vector_to_json(skew_expand(*s)).dump();
  });

  m.attr("__version__") = "0.1.0";
}
