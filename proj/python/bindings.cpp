#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "slitwalk/closedform.hpp"
#include "slitwalk/errors.hpp"
#include "slitwalk/halfline_prob.hpp"
#include "slitwalk/limitlaw.hpp"
#include "slitwalk/oracle.hpp"
#include "slitwalk/slitgf.hpp"
#include "slitwalk/verify.hpp"

namespace py = pybind11;
using namespace slitwalk;

namespace {

py::object fraction(const BigRat& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(py::str(q.get_str()));
}

// {(n, i[, j[, k]]): Fraction}
py::dict series_dict(const TSeries<BigRat>& s) {
  py::dict out;
  for (int n = 0; n <= s.order(); ++n) {
    for (const auto& [e, c] : s[n].terms()) {
      py::tuple key(1 + s.arity());
      key[0] = n;
      for (int v = 0; v < s.arity(); ++v) key[1 + v] = e[v];
      out[key] = fraction(c);
    }
  }
  return out;
}

py::list fractions(const std::vector<BigRat>& v) {
  py::list out;
  for (const auto& q : v) out.append(fraction(q));
  return out;
}

py::tuple sqrt2(const Sqrt2Rat& x) { return py::make_tuple(fraction(x.a()), fraction(x.b())); }

StepSet model(const std::string& selector) { return StepSet::from_selector(selector); }

py::list checks(const std::vector<CheckResult>& cs) {
  py::list out;
  for (const auto& c : cs) {
    py::dict d;
    d["name"] = c.name;
    d["passed"] = c.passed;
    d["detail"] = c.detail;
    d["seconds"] = c.seconds;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact enumeration of walks on the slit plane";

  static py::exception<Error> base(m, "SlitwalkError");
  static py::exception<ResourceGuardExceeded> guard(m, "ResourceGuardExceeded", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ResourceGuardExceeded& e) {
      PyErr_SetString(guard.ptr(), e.what());
    } catch (const Error& e) {
      PyErr_SetString(base.ptr(), e.what());
    }
  });

  m.def("count_walks",
        [](const std::string& sel, int n, int start) {
          const auto tables = count_walks(model(sel), start, n);
          py::dict out;
          for (const auto& [p, c] : tables.back().counts) out[py::make_tuple(p.first, p.second)] = fraction(c);
          return out;
        },
        py::arg("model"), py::arg("n"), py::arg("start") = 0,
        "Walks of length n from (start, 0) avoiding H, by endpoint.");
  m.def("count_totals", [](const std::string& sel, int nmax) { return fractions(count_totals(model(sel), nmax)); },
        py::arg("model"), py::arg("nmax"));
  m.def("complete_gf",
        [](const std::string& sel, int order) { return series_dict(complete_gf(SlitContext(model(sel), order))); },
        py::arg("model"), py::arg("order"), "{(n, i, j): coefficient of x^i y^j t^n}");
  m.def("bridges",
        [](const std::string& sel, int order) { return series_dict(bridges_gf(SlitContext(model(sel), order))); },
        py::arg("model"), py::arg("order"));
  m.def("endpoint",
        [](const std::string& sel, int i, int j, int order) {
          return fractions(endpoint_series(SlitContext(model(sel), order), i, j));
        },
        py::arg("model"), py::arg("i"), py::arg("j"), py::arg("order"));
  m.def("loops",
        [](const std::string& sel, int k, int order) {
          return fractions(scalar_coefficients(loops_gf(SlitContext(model(sel), order), k).back()));
        },
        py::arg("model"), py::arg("k"), py::arg("order"));
  m.def("factorize",
        [](const std::string& sel, int order) {
          const auto f = canonical_factorize(build_delta(model(sel), order));
          py::dict out;
          out["D"] = series_dict(f.D);
          out["Delta"] = series_dict(f.Delta);
          out["DeltaBar"] = series_dict(f.DeltaBar);
          return out;
        },
        py::arg("model"), py::arg("order"));
  m.def("closed_form_names", [] {
    std::vector<std::string> out;
    for (auto id : all_closed_form_ids()) out.push_back(closed_form_name(id));
    return out;
  });
  m.def("closed_form",
        [](const std::string& name, int order, int i) {
          return series_dict(eval_closed_form(parse_closed_form_id(name), order, i));
        },
        py::arg("name"), py::arg("order"), py::arg("i") = 1);
  m.def("conjecture",
        [](int i, int nmax) {
          py::list out;
          for (const auto& r : conjecture_anti_diagonal(i, nmax).rows) {
            out.append(py::make_tuple(r.n, fraction(r.formula), fraction(r.counted)));
          }
          return out;
        },
        py::arg("i"), py::arg("nmax"), "Rows (n, formula, counted) of a_{-i,i}(2n).");
  m.def("hitting_point",
        [](int i, int j) {
          const auto h = hitting_point_prob(i, j);
          py::dict out;
          out["exact"] = h.exact ? py::object(sqrt2(*h.exact)) : py::none();
          out["value"] = h.value;
          out["method"] = h.method;
          out["error_bar"] = h.error_bar;
          return out;
        },
        py::arg("i"), py::arg("j"), "Probability (a, b) = a + b sqrt 2 of reaching (i, j) before H.");
  m.def("transience",
        [](int kmax) {
          const auto t = transience(kmax);
          py::list out;
          for (int k = 0; k < kmax; ++k) out.append(py::make_tuple(k + 1, sqrt2(t.p[k]), sqrt2(t.v[k])));
          return out;
        },
        py::arg("kmax"), "Rows (k, p_k, v_k) with values as (a, b) = a + b sqrt 2.");
  m.def("density", &density_eval, py::arg("x"), py::arg("y"));
  m.def("limit_moments", [] {
    const auto lm = limit_moments();
    py::dict out;
    for (int k = 0; k < 5; ++k) out[py::str(stat_names()[k])] = lm[k];
    return out;
  });
  m.def("verify",
        [](const std::string& sel, int order) { return checks(verify_model(model(sel), order).checks); },
        py::arg("model"), py::arg("order"));
  m.def("acceptance", [](int c) { return checks({run_acceptance(c)}); }, py::arg("criterion"));
  m.def("set_guard_n", &set_oracle_guard_n, py::arg("cap"));
}
