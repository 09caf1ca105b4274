#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sympl/cli.hpp"
#include "sympl/ehw.hpp"
#include "sympl/embeddings.hpp"
#include "sympl/error.hpp"
#include "sympl/fourier.hpp"
#include "sympl/json.hpp"
#include "sympl/lfactors.hpp"
#include "sympl/orbitclassify.hpp"
#include "sympl/weyl.hpp"

namespace py = pybind11;
using namespace sympl;

// Rationals cross the boundary as fractions.Fraction; ints and "p/q"
// strings are accepted on the way in.
namespace pybind11::detail {
template <>
struct type_caster<mpq_class> {
  PYBIND11_TYPE_CASTER(mpq_class, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src || PyFloat_Check(src.ptr())) return false;
    try {
      value = parse_rational(py::str(src).cast<std::string>());
      return true;
    } catch (const Error&) {
      return false;
    }
  }

  static handle cast(const mpq_class& q, return_value_policy, handle) {
    return py::module_::import("fractions").attr("Fraction")(q.get_str()).release();
  }
};
}  // namespace pybind11::detail

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Weight weight_arg(const py::object& w) {
  if (py::isinstance<py::str>(w)) return Weight::parse(w.cast<std::string>());
  return Weight(w.cast<std::vector<RationalVector>>());
}

SymMatrix sym_arg(const std::vector<RationalVector>& rows) {
  const std::size_t n = rows.size();
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) throw Error(Errc::ShapeMismatch, "matrix rows must have length " + std::to_string(n));
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rows[r][c];
  }
  return SymMatrix(m);
}

Matrix matrix_arg(const std::vector<RationalVector>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  RationalVector flat;
  for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
  return Matrix(r, c, flat);
}

std::vector<RationalVector> rows_of(const Matrix& m) {
  std::vector<RationalVector> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r].push_back(m(r, c));
  }
  return out;
}

SatakeDatum satake_arg(std::size_t m, const std::optional<std::vector<std::optional<Rational>>>& params,
                       std::optional<int> character) {
  SatakeDatum s = SatakeDatum::symbolic(m);
  if (params) {
    if (params->size() != m) throw Error(Errc::LengthMismatch, "expected " + std::to_string(m) + " Satake parameters");
    s.params = *params;
  }
  s.character = character;
  return s;
}

DegreeBounds bounds_arg(std::size_t n, std::optional<std::uint32_t> t, std::size_t d,
                        const std::optional<std::vector<std::vector<std::uint32_t>>>& bounds) {
  if (bounds) return DegreeBounds{n, *bounds};
  if (!t) throw Error(Errc::InvalidArgument, "give either t or bounds");
  return DegreeBounds::uniform(n, d, *t);
}

}  // namespace

PYBIND11_MODULE(_sympl, m) {
  m.doc() = "Exact weight, orbit, L-factor and Fourier-expansion computations for Sp(2n)";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result([&] { return py::object(py::exception<Error>(m, "SymplError")); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const py::object& type = error_type.get_stored();
      py::object exc = type(std::string(e.name()) + ": " + e.what());
      exc.attr("code") = std::string(e.name());
      PyErr_SetObject(type.ptr(), exc.ptr());
    }
  });

  // weights and the Weyl group
  m.def("parse_weight", [](const std::string& text) { return Weight::parse(text).rows(); });
  m.def("rho", &rho);
  m.def("infchar", [](const py::object& w) { return infchar_canonical(weight_arg(w)).canonical; });
  m.def("infchar_equal", [](const py::object& a, const py::object& b) { return infchar_equal(weight_arg(a), weight_arg(b)); });
  m.def("is_regular", [](const py::object& w) { return is_regular(weight_arg(w)); });
  m.def("dominant_orbit", [](const py::object& w) {
    std::vector<std::string> out;
    for (const auto& x : dominant_orbit_elements(weight_arg(w), orbit_cap_from_env())) out.push_back(x.to_string());
    return out;
  });
  m.def("is_sufficiently_regular",
        [](const py::object& w, std::size_t i) { return is_sufficiently_regular(weight_arg(w), i, orbit_cap_from_env()); });
  m.def("parity_class", [](const py::object& w) { return parity_class(weight_arg(w)); });

  // embeddings and highest weight modules
  m.def("klingen_datum", [](const RationalVector& row, std::size_t i) { return to_python(klingen_embedding_datum(row, i)); });
  m.def("klingen_inverse", [](std::size_t n, std::size_t i, int parity, const Rational& exponent, const RationalVector& inner) {
    return klingen_embedding_inverse(n, i, CharacterDatum(parity, exponent), inner);
  });
  m.def("principal_series", [](const RationalVector& row) { return to_python(principal_series_datum(row)); });
  m.def("siegel_degenerate", [](const RationalVector& row) { return to_python(siegel_degenerate_datum(row)); });
  m.def("first_reduction_point", [](const RationalVector& row) { return first_reduction_point(row); });
  m.def("ehw_normalize", [](const RationalVector& row) { return to_python(ehw_normalize(row)); });
  m.def("is_unitary", [](const RationalVector& row) { return is_unitary_highest_weight(row); });

  // orbit classification and reports
  m.def(
      "classify_levels",
      [](const RationalVector& inner, std::size_t n, std::size_t i, std::optional<std::int64_t> upper) {
        return to_python(upper ? classify_levels_up_to(inner, n, i, *upper) : classify_levels(inner, n, i));
      },
      py::arg("inner"), py::arg("n"), py::arg("i"), py::arg("upper") = py::none());
  m.def("duality_check", [](const RationalVector& inner, std::size_t n, std::size_t i, const Rational& s) {
    return duality_check(inner, n, i, s);
  });
  m.def(
      "decomposition_report",
      [](const py::object& w, std::size_t i, std::optional<int> sign) {
        return to_python(decomposition_report(weight_arg(w), i, sign, orbit_cap_from_env()));
      },
      py::arg("weight"), py::arg("i"), py::arg("character_sign") = py::none());
  m.def("is_squarefree", &is_squarefree);
  m.def("surjectivity", [](const py::object& w, std::uint64_t level) {
    return to_python(siegel_surjectivity_check(weight_arg(w), level));
  });

  // L-factors
  py::class_<LaurentPoly>(m, "LaurentPoly")
      .def(py::init([](const std::string& text) { return parse_poly(text); }))
      .def("evaluate", &LaurentPoly::evaluate)
      .def("__str__", &LaurentPoly::to_string)
      .def("__repr__", [](const LaurentPoly& p) { return "LaurentPoly('" + p.to_string() + "')"; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self);
  py::class_<RationalFunction>(m, "RationalFunction")
      .def("evaluate", [](const RationalFunction& f, const std::map<std::string, Rational>& at) { return evaluate(f, at); })
      .def("numerator", &RationalFunction::numerator)
      .def("denominator", &RationalFunction::denominator)
      .def("__str__", &RationalFunction::to_string)
      .def("__repr__", [](const RationalFunction& f) { return "RationalFunction('" + f.to_string() + "')"; })
      .def("__mul__", [](const RationalFunction& a, const RationalFunction& b) { return a * b; })
      .def("__truediv__", [](const RationalFunction& a, const RationalFunction& b) { return a / b; })
      .def("__eq__", [](const RationalFunction& a, const RationalFunction& b) { return a == b; });
  using Params = std::optional<std::vector<std::optional<Rational>>>;
  m.def(
      "xi",
      [](std::size_t i, std::size_t mm, const Rational& shift, const Params& satake, std::optional<int> character) {
        return xi(i, satake_arg(mm, satake, character), shift);
      },
      py::arg("i"), py::arg("m") = 0, py::arg("shift") = 0, py::arg("satake") = py::none(),
      py::arg("character") = py::none());
  m.def(
      "gk_value",
      [](std::size_t i, std::size_t j, std::size_t mm, const Params& satake, std::optional<int> character) {
        return gk_value(i, j, satake_arg(mm, satake, character));
      },
      py::arg("i"), py::arg("j"), py::arg("m") = 0, py::arg("satake") = py::none(), py::arg("character") = py::none());

  // Fourier expansions
  m.def("rank", [](const std::vector<RationalVector>& h) { return sym_arg(h).rank(); });
  m.def("is_psd", [](const std::vector<RationalVector>& h) { return is_psd(sym_arg(h)); });
  m.def("is_pd", [](const std::vector<RationalVector>& h) { return is_pd(sym_arg(h)); });
  m.def("gl_transform", [](const std::vector<RationalVector>& h, const std::vector<RationalVector>& a) {
    return rows_of(gl_transform(sym_arg(h), matrix_arg(a)).matrix());
  });
  py::class_<FourierExpansion>(m, "FourierExpansion")
      .def_static("parse", &FourierExpansion::parse)
      .def("serialize", &FourierExpansion::serialize)
      .def_property_readonly("n", &FourierExpansion::size)
      .def_property_readonly("k", &FourierExpansion::weight)
      .def("coefficient", [](const FourierExpansion& f, const std::vector<RationalVector>& h) { return f.coefficient(sym_arg(h)); })
      .def("siegel_phi", &siegel_phi)
      .def("cusp_condition", &cusp_condition_check)
      .def("is_cuspidal", &is_cuspidal)
      .def("filtration_index", &filtration_index)
      .def("slash_invariant",
           [](const FourierExpansion& f, const std::vector<RationalVector>& a) { return slash_invariance_check(f, matrix_arg(a)); })
      .def("rigidity", [](const FourierExpansion& f, const py::object& w, std::size_t j) { return rigidity_check(weight_arg(w), f, j); })
      .def("to_json", [](const FourierExpansion& f) { return to_python(Json(f)); })
      .def("__len__", [](const FourierExpansion& f) { return f.support().size(); })
      .def("__eq__", [](const FourierExpansion& a, const FourierExpansion& b) { return a == b; });
  m.def(
      "pd_grid",
      [](std::size_t n, std::optional<std::uint32_t> t, std::size_t d,
         const std::optional<std::vector<std::vector<std::uint32_t>>>& bounds) {
        return to_python(build_pd_grid(n, bounds_arg(n, t, d, bounds)));
      },
      py::arg("n"), py::arg("t") = py::none(), py::arg("d") = 1, py::arg("bounds") = py::none());
  m.def(
      "pit_vanishes",
      [](const std::string& poly, std::size_t n, std::optional<std::uint32_t> t, std::size_t d,
         const std::optional<std::vector<std::vector<std::uint32_t>>>& bounds) {
        return pit_vanishes(parse_poly(poly), build_pd_grid(n, bounds_arg(n, t, d, bounds)));
      },
      py::arg("poly"), py::arg("n"), py::arg("t") = py::none(), py::arg("d") = 1, py::arg("bounds") = py::none());

  // the command line, in process
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
