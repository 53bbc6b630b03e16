#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "entropic/concretize.hpp"
#include "entropic/errors.hpp"
#include "entropic/instance_gen.hpp"
#include "entropic/spec_io.hpp"
#include "entropic/verify.hpp"

namespace py = pybind11;
using namespace entropic;

namespace {

py::object to_fraction(const Rat& value) {
  static py::object fraction_type = py::module_::import("fractions").attr("Fraction");
  return fraction_type(rational_to_string(value));
}

Rat rat_from_py(py::handle value) {
  if (py::isinstance<py::int_>(value) || py::isinstance<py::str>(value)) {
    return parse_rational(py::str(value).cast<std::string>());
  }
  if (py::isinstance<py::float_>(value)) {
    throw usage_error("floats lose exactness; pass int, str, or fractions.Fraction");
  }
  // Anything Fraction-like stringifies to "p/q" or "p".
  return parse_rational(py::str(value).cast<std::string>());
}

SubsetMask mask_from_list(const std::vector<int>& elements, int n) {
  SubsetMask mask = 0;
  for (int e : elements) {
    if (e < 0 || e >= n) {
      throw usage_error("element " + std::to_string(e) + " outside the ground set [0, " +
                        std::to_string(n) + ")");
    }
    mask |= 1u << e;
  }
  return mask;
}

py::object json_to_py(const nlohmann::json& document) {
  static py::object loads = py::module_::import("json").attr("loads");
  return loads(document.dump());
}

FunctionSpec spec_from_text(const std::string& text) {
  return spec_from_json(nlohmann::json::parse(text));
}

py::dict report_to_py(const VerificationReport& report) {
  return json_to_py(report.to_json());
}

}  // namespace

PYBIND11_MODULE(_entropic, m) {
  m.doc() = "Exact entropic realizations of common submodular functions";
  m.attr("__version__") = kBuilderVersion;

  py::register_exception<usage_error>(m, "UsageError", PyExc_ValueError);
  py::register_exception<capacity_error>(m, "CapacityError", PyExc_RuntimeError);

  py::class_<PolymatroidReport>(m, "PolymatroidReport")
      .def_readonly("normalized", &PolymatroidReport::normalized)
      .def_readonly("monotone", &PolymatroidReport::monotone)
      .def_readonly("submodular", &PolymatroidReport::submodular)
      .def_property_readonly("ok", &PolymatroidReport::ok)
      .def_property_readonly("witness",
                             [](const PolymatroidReport& report) -> py::object {
                               if (!report.witness) return py::none();
                               py::dict out;
                               out["kind"] = report.witness->kind ==
                                                     ViolationWitness::Kind::kNormalization
                                                 ? "normalization"
                                             : report.witness->kind ==
                                                     ViolationWitness::Kind::kMonotonicity
                                                 ? "monotonicity"
                                                 : "submodularity";
                               out["subset"] = report.witness->subset;
                               out["i"] = report.witness->i;
                               out["j"] = report.witness->j;
                               return out;
                             })
      .def("__repr__", [](const PolymatroidReport& report) {
        return std::string("PolymatroidReport(normalized=") +
               (report.normalized ? "True" : "False") +
               ", monotone=" + (report.monotone ? "True" : "False") +
               ", submodular=" + (report.submodular ? "True" : "False") + ")";
      });

  py::class_<SetFunctionTable>(m, "SetFunctionTable")
      .def_property_readonly("n", &SetFunctionTable::n)
      .def("value",
           [](const SetFunctionTable& table, const std::vector<int>& elements) {
             return to_fraction(eval(table, mask_from_list(elements, table.n())));
           },
           py::arg("elements"))
      .def("value_by_mask",
           [](const SetFunctionTable& table, SubsetMask mask) {
             return to_fraction(eval(table, mask));
           },
           py::arg("mask"))
      .def("values",
           [](const SetFunctionTable& table) {
             py::list out;
             for (const Rat& v : table.values) out.append(to_fraction(v));
             return out;
           })
      .def("check_polymatroid",
           [](const SetFunctionTable& table) { return check_polymatroid(table); })
      .def("mutual_information",
           [](const SetFunctionTable& table, const std::vector<int>& a,
              const std::vector<int>& b) {
             return to_fraction(mutual_information(table, mask_from_list(a, table.n()),
                                                   mask_from_list(b, table.n())));
           },
           py::arg("a"), py::arg("b"))
      .def("conditional_gain",
           [](const SetFunctionTable& table, const std::vector<int>& a,
              const std::vector<int>& b) {
             return to_fraction(conditional_gain(table, mask_from_list(a, table.n()),
                                                 mask_from_list(b, table.n())));
           },
           py::arg("a"), py::arg("b"))
      .def("conditional_mutual_information",
           [](const SetFunctionTable& table, const std::vector<int>& a, const std::vector<int>& b,
              const std::vector<int>& c) {
             return to_fraction(conditional_mutual_information(
                 table, mask_from_list(a, table.n()), mask_from_list(b, table.n()),
                 mask_from_list(c, table.n())));
           },
           py::arg("a"), py::arg("b"), py::arg("c"));

  m.def("make_table",
        [](int n, const py::iterable& values) {
          std::vector<Rat> parsed;
          for (py::handle v : values) parsed.push_back(rat_from_py(v));
          return make_table(n, std::move(parsed));
        },
        py::arg("n"), py::arg("values"),
        "Dense table from 2^n values indexed by subset bitmask");

  m.def("tabulate", [](const std::string& spec_text) { return tabulate(spec_from_text(spec_text)); },
        py::arg("spec_json"), "Evaluate a spec document on every subset");

  m.def("realize",
        [](const std::string& spec_text) {
          FunctionSpec spec = spec_from_text(spec_text);
          return canonical_dump(certificate_to_json(spec, realize(spec)));
        },
        py::arg("spec_json"), "Build a realization certificate for a spec document");

  m.def("realization_table",
        [](const std::string& spec_text) {
          return tabulate(realize(spec_from_text(spec_text)));
        },
        py::arg("spec_json"),
        "Entropies of the constructed realization, as a dense table in the realization's units");

  m.def("verify",
        [](const std::string& document_text, bool concretize, long long cap, int sim_samples,
           std::uint64_t seed) {
          nlohmann::json document = nlohmann::json::parse(document_text);
          FunctionSpec spec;
          std::optional<Realization> provided;
          if (is_certificate_document(document)) {
            Certificate certificate = certificate_from_json(document);
            spec = std::move(certificate.spec);
            provided = std::move(certificate.realization);
          } else {
            spec = spec_from_json(document);
          }
          VerifyOptions options;
          options.concretize = concretize;
          options.sim = sim_samples > 0;
          options.sim_samples = sim_samples;
          options.cap = cap;
          options.seed = seed;
          return report_to_py(run_verification(spec, provided, options));
        },
        py::arg("document_json"), py::arg("concretize") = false,
        py::arg("cap") = kDefaultStateCap, py::arg("sim_samples") = 0, py::arg("seed") = 0,
        "Run the verification stages on a spec or certificate document");

  m.def("auto_scale",
        [](const std::string& spec_text) {
          AutoScaleResult result = auto_scale(nlohmann::json::parse(spec_text));
          return py::make_tuple(canonical_dump(result.document), result.factor.str());
        },
        py::arg("spec_json"), "Integerize a weighted document; returns (scaled_json, factor)");

  m.def("random_spec",
        [](const std::string& family, int n, std::uint64_t seed) {
          InstanceGen gen(seed);
          return canonical_dump(spec_to_json(gen.spec_for_family(family, n)));
        },
        py::arg("family"), py::arg("n"), py::arg("seed"),
        "Seeded random instance of the named family, as a spec document");
}
