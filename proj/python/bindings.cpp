#include "supell/classify.hpp"
#include "supell/dataset.hpp"
#include "supell/verify.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace supell;

namespace {

py::dict verdict_dict(const Classification& c) {
    py::dict d;
    d["verdict"] = c.definable ? "definable" : "possibly_not_definable";
    d["reason"] = c.reason ? py::object(py::str(std::string(to_string(*c.reason)))) : py::object(py::none());
    d["theorem"] = theorem_citation(c);
    return d;
}

}  // namespace

PYBIND11_MODULE(_supell, m) {
    m.doc() = "Superelliptic family tables: signatures, repair, classification";

    py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);
    py::register_exception<InconsistentSignature>(m, "InconsistentSignature", PyExc_ValueError);

    py::class_<Signature>(m, "Signature")
        .def(py::init([](const std::string& text) { return Signature::parse(text); }), py::arg("text"))
        .def_static("from_orders", &Signature::from_orders)
        .def("orders", &Signature::orders)
        .def_property_readonly("r", &Signature::size)
        .def("multiplicity", &Signature::multiplicity)
        .def("to_display", &Signature::to_display)
        .def("__str__", &Signature::to_string)
        .def("__repr__", [](const Signature& s) { return "Signature('" + s.to_string() + "')"; })
        .def("__len__", &Signature::size)
        .def(py::self == py::self);

    py::class_<RepairOutcome>(m, "RepairOutcome")
        .def_property_readonly("status", [](const RepairOutcome& o) { return std::string(to_string(o.status)); })
        .def_readonly("printed", &RepairOutcome::printed)
        .def_readonly("repaired", &RepairOutcome::repaired)
        .def_readonly("changed_entry", &RepairOutcome::changed_entry)
        .def_readonly("candidates", &RepairOutcome::candidates)
        .def_property_readonly("ambiguous", &RepairOutcome::ambiguous);

    py::class_<ReducedGroup>(m, "ReducedGroup")
        .def(py::init([](const std::string& name) { return ReducedGroup::parse(name); }), py::arg("name"))
        .def_property_readonly("name", &ReducedGroup::name)
        .def_property_readonly("order", [](const ReducedGroup& g) { return reduced_order(g); })
        .def_property_readonly("cyclic_or_trivial", [](const ReducedGroup& g) { return is_cyclic_or_trivial(g); })
        .def("__str__", &ReducedGroup::name)
        .def(py::self == py::self);

    py::class_<FamilyRecord>(m, "FamilyRecord")
        .def_property_readonly("genus", [](const FamilyRecord& r) { return r.key.genus; })
        .def_property_readonly("nr", [](const FamilyRecord& r) { return r.key.nr; })
        .def_readonly("reduced", &FamilyRecord::reduced)
        .def_property_readonly("group", [](const FamilyRecord& r) { return r.group ? std::optional<std::string>(r.group->text) : std::nullopt; })
        .def_property_readonly("order", &FamilyRecord::group_order)
        .def_readonly("n", &FamilyRecord::level)
        .def_readonly("m", &FamilyRecord::m)
        .def_readonly("signature", &FamilyRecord::signature)
        .def_readonly("delta", &FamilyRecord::delta)
        .def_readonly("blue", &FamilyRecord::blue)
        .def_property_readonly("equation", [](const FamilyRecord& r) { return render(r.equation); })
        .def("__repr__", [](const FamilyRecord& r) { return "<FamilyRecord " + to_string(r.key) + ">"; });

    py::class_<Dataset>(m, "Dataset")
        .def_readonly("records", &Dataset::records)
        .def("find", [](const Dataset& d, int g, int nr) -> std::optional<FamilyRecord> {
            const auto* r = d.find({g, nr});
            return r ? std::optional<FamilyRecord>(*r) : std::nullopt;
        })
        .def("rows", [](const Dataset& d, int g) {
            std::vector<FamilyRecord> out;
            for (const auto* r : d.rows_of_genus(g)) out.push_back(*r);
            return out;
        })
        .def("genera", &Dataset::genera)
        .def("effective_signature", &Dataset::effective_signature)
        .def("effective_equation", [](const Dataset& d, const FamilyRecord& r) { return render(d.effective_equation(r)); })
        .def("signature_errata", [](const Dataset& d) {
            py::dict out;
            for (const auto& e : d.signature_errata) out[py::make_tuple(e.key.genus, e.key.nr)] = e.outcome;
            return out;
        })
        .def("equation_errata", [](const Dataset& d) {
            py::dict out;
            for (const auto& e : d.equation_errata) out[py::make_tuple(e.key.genus, e.key.nr)] = py::make_tuple(render(e.corrected), e.note);
            return out;
        })
        .def("to_json", [](const Dataset& d) { return to_json(d); })
        .def("export_csv", [](const Dataset& d, std::optional<int> g) { return export_csv(d, g); }, py::arg("genus") = py::none())
        .def("count_by_level", [](const Dataset& d, int g) { return count_by_level(d, g); })
        .def("__len__", [](const Dataset& d) { return d.records.size(); })
        .def(py::self == py::self);

    m.def("load_embedded", &load_embedded);
    m.def("from_json", [](const std::string& text) { return from_json(text); });

    m.def("quotient_genus", &quotient_genus, py::arg("genus"), py::arg("order"), py::arg("signature"));
    m.def("moduli_dimension", &moduli_dimension, py::arg("g0"), py::arg("r"));
    m.def("is_odd_signature", &is_odd_signature);
    m.def("complete_signature", &complete_signature, py::arg("genus"), py::arg("order"), py::arg("partial"));
    m.def("cyclic_branch_data_valid", &cyclic_branch_data_valid, py::arg("n"), py::arg("data"));
    m.def("superelliptic_genus", &superelliptic_genus, py::arg("n"), py::arg("branches"));
    m.def("enumerate_levels", &enumerate_levels, py::arg("genus"));
    m.def("full_group_order", &full_group_order, py::arg("n"), py::arg("reduced"));

    m.def("classify", [](const Dataset& d, const FamilyRecord& r) { return verdict_dict(classify(d, r)); });
    m.def("classify_signature", [](int g, int n, const ReducedGroup& red, const Signature& s) { return verdict_dict(classify(g, n, red, s)); },
          py::arg("genus"), py::arg("n"), py::arg("reduced"), py::arg("signature"));
    m.def("possibly_not_definable", [](const Dataset& d, int g) { return classify_genus(g, d).possibly_not; });
    m.def("expected_blue", &expected_blue);

    m.def(
        "verify",
        [](const Dataset& d, std::optional<int> genus, bool strict) {
            const auto rep = verify(d, {genus, strict});
            py::list findings;
            for (const auto& f : rep.findings) {
                py::dict x;
                x["genus"] = f.key.genus;
                x["nr"] = f.key.nr;
                x["severity"] = f.severity == Severity::failure ? "failure" : "warning";
                x["check"] = f.check;
                x["message"] = f.message;
                findings.append(x);
            }
            py::dict out;
            out["findings"] = findings;
            out["rows_checked"] = rep.rows_checked;
            out["failures"] = rep.failures();
            out["warnings"] = rep.warnings();
            out["exit_code"] = rep.exit_code();
            out["report"] = render_report(rep);
            return out;
        },
        py::arg("dataset"), py::arg("genus") = py::none(), py::arg("strict") = false);
}
