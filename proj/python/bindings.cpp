#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "gccp/apps.hpp"
#include "gccp/baseline.hpp"
#include "gccp/errors.hpp"
#include "gccp/instance.hpp"
#include "gccp/oracle.hpp"
#include "gccp/probability.hpp"
#include "gccp/transversal.hpp"
#include "gccp/transversoul.hpp"

namespace py = pybind11;
using namespace gccp;

namespace {

py::object py_int(const BigInt& value) {
  return py::module_::import("builtins").attr("int")(value.get_str());
}

py::object py_fraction(const BigRational& value) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py_int(value.get_num()), py_int(value.get_den()));
}

py::list int_list(const std::vector<BigInt>& values) {
  py::list out;
  for (const auto& v : values) out.append(py_int(v));
  return out;
}

py::list fraction_list(const std::vector<BigRational>& values) {
  py::list out;
  for (const auto& v : values) out.append(py_fraction(v));
  return out;
}

BigRational rational_from(const py::handle& obj) {
  // accepts int, fractions.Fraction, or "a/b" strings
  if (py::isinstance<py::str>(obj)) return parse_rational(obj.cast<std::string>());
  const py::object numerator = py::getattr(obj, "numerator", py::none());
  if (!numerator.is_none()) {
    const std::string num = py::str(numerator).cast<std::string>();
    const std::string den = py::str(py::getattr(obj, "denominator")).cast<std::string>();
    return make_rational(BigInt(num), BigInt(den));
  }
  throw ValidationError("expected an int, Fraction, or 'a/b' string");
}

std::vector<BigRational> rationals_from(const py::sequence& seq) {
  std::vector<BigRational> out;
  for (const auto& item : seq) out.push_back(rational_from(item));
  return out;
}

AlphaVector alpha_from(const Instance& inst, const std::optional<std::vector<int>>& alpha) {
  if (!alpha) return alpha_or_default(inst);
  return AlphaVector{*alpha};
}

py::dict report_dict(const GccpReport& report) {
  py::dict out;
  out["w"] = report.w;
  out["h"] = report.h;
  out["q"] = fraction_list(report.q.values);
  out["expected_no_replacement"] = py_fraction(report.expected_no_replacement);
  out["expected_with_replacement"] = py_fraction(report.expected_with_replacement);
  out["variance_no_replacement"] = py_fraction(report.variance_no_replacement);
  out["variance_with_replacement"] = py_fraction(report.variance_with_replacement);
  return out;
}

py::dict summary_dict(const SimSummary& summary) {
  py::dict out;
  out["trials"] = summary.trials;
  out["mean"] = summary.mean;
  out["sample_variance"] = summary.sample_variance;
  out["standard_error"] = summary.standard_error;
  out["cap_hits"] = summary.cap_hits;
  return out;
}

}  // namespace

PYBIND11_MODULE(_gccp, m) {
  m.doc() = "Exact generalized coupon-collector solver (transversal counting core)";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);

  py::class_<Instance>(m, "Instance")
      .def_static("from_json", &load_instance, py::arg("text"))
      .def_static("from_file", &load_instance_file, py::arg("path"))
      .def_property_readonly("width", &Instance::width)
      .def_property_readonly("goal_count", &Instance::goal_count)
      .def_property_readonly("coupons", &Instance::coupons)
      .def_property_readonly("goal_names",
                             [](const Instance& inst) {
                               std::vector<std::string> names;
                               for (const auto& g : inst.goals()) names.push_back(g.name);
                               return names;
                             })
      .def("goal_members",
           [](const Instance& inst, const std::string& name) {
             for (const auto& g : inst.goals())
               if (g.name == name) return g.members;
             throw ValidationError("unknown goal '" + name + "'");
           })
      .def_property_readonly("alpha",
                             [](const Instance& inst) -> py::object {
                               if (!inst.alpha()) return py::none();
                               return py::cast(inst.alpha()->thresholds);
                             })
      .def("to_json", &serialize)
      .def("reduced", &reduce_goals)
      .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; })
      .def("__repr__", [](const Instance& inst) {
        std::ostringstream out;
        out << "Instance(w=" << inst.width() << ", h=" << inst.goal_count() << ")";
        return out.str();
      });

  m.def(
      "partition_instance",
      [](const py::sequence& probabilities) {
        return build_partition_instance(rationals_from(probabilities));
      },
      py::arg("probabilities"),
      "Instance with one block of identical coupons per drawing probability");

  m.def("roulette", &build_roulette);
  m.def(
      "chess",
      [](const std::string& piece, const std::string& variant) {
        ChessSpec spec;
        if (piece == "queen")
          spec.piece = ChessPiece::Queen;
        else if (piece == "rook")
          spec.piece = ChessPiece::Rook;
        else if (piece == "king")
          spec.piece = ChessPiece::King;
        else
          throw ValidationError("piece must be queen, rook, or king");
        if (variant == "closed")
          spec.variant = ChessVariant::Closed;
        else if (variant == "open")
          spec.variant = ChessVariant::Open;
        else
          throw ValidationError("variant must be closed or open");
        return build_chess(spec);
      },
      py::arg("piece"), py::arg("variant") = "closed");

  m.def(
      "tau_vector",
      [](const Instance& inst, std::uint64_t max_rows) {
        DecomposeOptions options;
        options.max_rows = max_rows;
        return int_list(tau_vector(inst, options).counts);
      },
      py::arg("instance"), py::arg("max_rows") = 0,
      "Exact k-element transversal counts via the row decomposition");

  m.def(
      "decomposition_rows",
      [](const Instance& inst) {
        std::vector<std::string> rendered;
        for (const auto& row : decompose(inst).rows) rendered.push_back(row.to_string());
        return rendered;
      },
      py::arg("instance"));

  m.def(
      "brute_tau",
      [](const Instance& inst) { return int_list(brute_tau(inst).counts); },
      py::arg("instance"), "Reference subset walk, width <= 24");

  m.def(
      "solve",
      [](const Instance& inst, bool reduce) {
        const Instance prepared = reduce ? reduce_goals(inst) : inst;
        return report_dict(make_report(prepared, tau_vector(prepared)));
      },
      py::arg("instance"), py::arg("reduce") = true,
      "Exact q-vector, expected lengths, and variances");

  m.def(
      "count_transversouls",
      [](const Instance& inst, const std::optional<std::vector<int>>& alpha,
         const std::string& strategy) {
        TransversoulOptions options;
        if (strategy == "enumerate")
          options.strategy = TransversoulStrategy::Enumerate;
        else if (strategy == "reduce")
          options.strategy = TransversoulStrategy::Reduce;
        else if (strategy != "auto")
          throw ValidationError("strategy must be auto, enumerate, or reduce");
        return int_list(count_transversouls(inst, alpha_from(inst, alpha), options).counts);
      },
      py::arg("instance"), py::arg("alpha") = py::none(), py::arg("strategy") = "auto");

  m.def(
      "alpha_success_probabilities",
      [](const Instance& inst, const std::optional<std::vector<int>>& alpha) {
        const TVector counts = count_transversouls(inst, alpha_from(inst, alpha));
        return fraction_list(success_probabilities(counts, inst.width()).values);
      },
      py::arg("instance"), py::arg("alpha") = py::none());

  m.def(
      "simulate",
      [](const Instance& inst, bool with_replacement, std::uint64_t trials, std::uint64_t seed,
         const std::optional<std::vector<int>>& alpha, bool use_alpha) {
        std::optional<AlphaVector> thresholds;
        if (alpha)
          thresholds = AlphaVector{*alpha};
        else if (use_alpha)
          thresholds = alpha_or_default(inst);
        return summary_dict(simulate(inst, with_replacement, thresholds, trials, seed));
      },
      py::arg("instance"), py::arg("with_replacement") = false, py::arg("trials") = 100000,
      py::arg("seed") = 1, py::arg("alpha") = py::none(), py::arg("use_alpha") = false);

  m.def(
      "incl_excl_length",
      [](const py::sequence& probabilities, int cap) {
        return py_fraction(incl_excl_length(rationals_from(probabilities), cap));
      },
      py::arg("probabilities"), py::arg("cap") = 27);

  m.def(
      "homogeneous_length",
      [](int h) { return py_fraction(homogeneous_length(h)); }, py::arg("h"));

  m.def("triangular_asymptotic", &triangular_asymptotic, py::arg("h"));

  m.def(
      "benchmark_csv",
      [](const std::vector<int>& h_values, int cap) {
        return benchmark_csv(run_benchmark(h_values, cap));
      },
      py::arg("h_values"), py::arg("cap") = 27);

  m.def(
      "series_bracket",
      [](const Instance& inst, int terms) {
        const TauVector tau = tau_vector(inst);
        const SeriesBracket bracket = replacement_series_bracket(tau, inst.width(), terms);
        return py::make_tuple(py_fraction(bracket.lower), py_fraction(bracket.upper));
      },
      py::arg("instance"), py::arg("terms"),
      "Exact enclosure of the with-replacement expected length from the first"
      " `terms` partial sums");

  m.def(
      "laplace_exact_count",
      [](int w, long n, int k) { return py_fraction(laplace_exact_count(w, n, k)); },
      py::arg("w"), py::arg("n"), py::arg("k"),
      "Probability of exactly k distinct coupons after n uniform draws");

  m.def(
      "goal_expectations",
      [](const Instance& inst, long n, bool with_replacement) {
        const GoalExpectations expectations = goal_expectations(inst, n, with_replacement);
        py::dict out;
        out["per_goal"] = fraction_list(expectations.per_goal);
        out["total"] = py_fraction(expectations.total);
        return out;
      },
      py::arg("instance"), py::arg("n"), py::arg("with_replacement") = true);

  m.def("verify_reference_fixture", [] {
    std::ostringstream diagnostics;
    const bool ok = verify_reference_fixture(&diagnostics);
    return py::make_tuple(ok, diagnostics.str());
  });

  m.def(
      "to_decimal",
      [](const py::handle& value, int significant) {
        return to_decimal(rational_from(value), significant);
      },
      py::arg("value"), py::arg("significant") = 6);
  m.def(
      "to_fixed",
      [](const py::handle& value, int decimals) { return to_fixed(rational_from(value), decimals); },
      py::arg("value"), py::arg("decimals"));
}
