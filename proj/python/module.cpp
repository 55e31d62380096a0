#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pqcalc/identities.hpp"
#include "pqcalc/integration.hpp"
#include "pqcalc/json_io.hpp"
#include "pqcalc/taylor.hpp"

namespace py = pybind11;
using namespace pq;

namespace {

Rational to_rational(const py::handle& obj) { return Rational::parse(py::str(obj).cast<std::string>()); }

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(r.str());
}

py::list to_fractions(std::span<const Rational> values) {
  py::list out;
  for (const auto& v : values) out.append(to_fraction(v));
  return out;
}

Polynomial to_poly(const py::sequence& coeffs) {
  std::vector<Rational> c;
  for (const auto& v : coeffs) c.push_back(to_rational(v));
  return Polynomial(std::move(c));
}

PqParams params(const py::object& p, const py::object& q) { return PqParams(to_rational(p), to_rational(q)); }

NumericFn wrap(const py::function& f) {
  return {[f](double x) { return f(x).cast<double>(); }, std::nullopt};
}

TruncationPolicy policy(long max_terms, double tail_tol) {
  TruncationPolicy pol{max_terms, tail_tol, 8};
  pol.validate();
  return pol;
}

py::dict result_dict(const IntegralResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["terms"] = r.terms_used;
  d["tail"] = r.tail_estimate;
  d["status"] = to_string(r.status);
  d["regime"] = to_string(r.regime);
  return d;
}

py::dict gap_dict(const IdentityGap& g) {
  py::dict d;
  d["lhs"] = g.lhs;
  d["rhs"] = g.rhs;
  d["gap"] = g.gap;
  d["status"] = to_string(g.status);
  return d;
}

}  // namespace

PYBIND11_MODULE(pqcalc, m) {
  m.doc() = "Exact and numeric (p,q)-calculus";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr ptr) {
    try {
      if (ptr) std::rethrow_exception(ptr);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("bracket", [](long long n, py::object p, py::object q) { return to_fraction(bracket(n, params(p, q))); },
        py::arg("n"), py::arg("p"), py::arg("q"));
  m.def("bracket_alpha",
        [](double alpha, py::object p, py::object q) { return bracket_alpha(alpha, params(p, q)).value(); },
        py::arg("alpha"), py::arg("p"), py::arg("q"));
  m.def("factorial", [](long long n, py::object p, py::object q) { return to_fraction(pq_factorial(n, params(p, q))); },
        py::arg("n"), py::arg("p"), py::arg("q"));
  m.def("binomial",
        [](long long n, long long k, py::object p, py::object q) {
          return to_fraction(pq_binomial(n, k, params(p, q)));
        },
        py::arg("n"), py::arg("k"), py::arg("p"), py::arg("q"));

  m.def("derive",
        [](py::sequence coeffs, py::object p, py::object q, int k) {
          return to_fractions(pq_derive_poly_k(to_poly(coeffs), k, params(p, q)).coeffs());
        },
        "k-fold (p,q)-derivative of a polynomial given by its coefficients", py::arg("coeffs"), py::arg("p"),
        py::arg("q"), py::arg("k") = 1);
  m.def("derive_at",
        [](py::function f, double x, py::object p, py::object q) { return pq_derive_fn(wrap(f), x, params(p, q)); },
        py::arg("f"), py::arg("x"), py::arg("p"), py::arg("q"));

  m.def("pq_power",
        [](py::object x, py::object a, long long n, py::object p, py::object q, bool reversed) {
          const PqPowerExpr e{.gamma = Rational(1),
                              .a = to_rational(a),
                              .n = n,
                              .orientation = reversed ? Orientation::AMinusX : Orientation::XMinusA,
                              .params = params(p, q)};
          return to_fraction(eval_pq_power(e, to_rational(x)));
        },
        py::arg("x"), py::arg("a"), py::arg("n"), py::arg("p"), py::arg("q"), py::arg("reversed") = false);
  m.def("expand_power",
        [](py::object a, long long n, py::object p, py::object q, bool reversed) {
          return to_fractions(expand_pq_power(to_rational(a), n, params(p, q), Rational(1),
                                              reversed ? Orientation::AMinusX : Orientation::XMinusA)
                                  .coeffs());
        },
        py::arg("a"), py::arg("n"), py::arg("p"), py::arg("q"), py::arg("reversed") = false);

  m.def("taylor",
        [](py::sequence coeffs, py::object a, py::object p, py::object q, bool reversed) {
          const auto f = to_poly(coeffs);
          const auto pq = params(p, q);
          const auto e = reversed ? taylor_expand_reversed(f, to_rational(a), pq) : taylor_expand(f, to_rational(a), pq);
          return to_fractions(e.coeffs);
        },
        py::arg("coeffs"), py::arg("a"), py::arg("p"), py::arg("q"), py::arg("reversed") = false);
  m.def("heine", [](long long n, double x, py::object p, py::object q) { return heine_series_eval(n, x, params(p, q)); },
        py::arg("n"), py::arg("x"), py::arg("p"), py::arg("q"));

  m.def("integrate",
        [](py::function f, double a, double b, py::object p, py::object q, long max_terms, double tail_tol) {
          return result_dict(integral(wrap(f), a, b, params(p, q), policy(max_terms, tail_tol)));
        },
        "∫_a^b f d_{p,q}x; b may be math.inf", py::arg("f"), py::arg("a"), py::arg("b"), py::arg("p"), py::arg("q"),
        py::arg("max_terms") = 10000, py::arg("tail_tol") = 1e-12);
  m.def("integrate_improper",
        [](py::function f, py::object p, py::object q, long max_terms, double tail_tol) {
          return result_dict(integral_improper(wrap(f), params(p, q), policy(max_terms, tail_tol)));
        },
        py::arg("f"), py::arg("p"), py::arg("q"), py::arg("max_terms") = 10000, py::arg("tail_tol") = 1e-12);
  m.def("integrate_poly",
        [](py::sequence coeffs, double a, double b, py::object p, py::object q) {
          return result_dict(integral(from_polynomial(to_poly(coeffs)), a, b, params(p, q)));
        },
        py::arg("coeffs"), py::arg("a"), py::arg("b"), py::arg("p"), py::arg("q"));
  m.def("newton_leibniz",
        [](py::function F, double a, double b, py::object p, py::object q) {
          return gap_dict(newton_leibniz_check(wrap(F), a, b, params(p, q)));
        },
        py::arg("F"), py::arg("a"), py::arg("b"), py::arg("p"), py::arg("q"));
  m.def("by_parts",
        [](py::function f, py::function g, double a, double b, py::object p, py::object q) {
          return gap_dict(integrate_by_parts(wrap(f), wrap(g), a, b, params(p, q)));
        },
        py::arg("f"), py::arg("g"), py::arg("a"), py::arg("b"), py::arg("p"), py::arg("q"));

  m.def("identity_labels", &identity_labels);
  m.def("run_identities",
        [](std::uint64_t seed, int trials, std::optional<std::string> only) {
          SuiteOptions opts;
          opts.seed = seed;
          opts.trials = trials;
          opts.only = std::move(only);
          py::list out;
          for (const auto& o : run_identity_suite(opts).outcomes) {
            py::dict d;
            d["label"] = o.label;
            d["passed"] = o.passed;
            d["trials"] = o.trials;
            d["notes"] = o.notes;
            out.append(d);
          }
          return out;
        },
        py::arg("seed") = 20240501, py::arg("trials") = 50, py::arg("only") = py::none());
}
