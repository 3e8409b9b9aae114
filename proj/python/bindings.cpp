#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "z4forms/brown.hpp"
#include "z4forms/errors.hpp"
#include "z4forms/forms.hpp"
#include "z4forms/fourmanifold.hpp"
#include "z4forms/io.hpp"
#include "z4forms/vanishing.hpp"

namespace py = pybind11;
using namespace z4;

namespace {

// Python sees classes as lists of 0/1 and subspaces as lists of basis vectors.
using Bits = std::vector<int>;

F2Vector to_vector(const Bits& bits) { return F2Vector::from_bits(bits); }

std::vector<Bits> to_basis(const Subspace& s) {
    std::vector<Bits> out;
    for (const auto& b : s.basis()) out.push_back(b.to_bits());
    return out;
}

Subspace to_subspace(std::size_t ambient, const std::vector<Bits>& basis) {
    std::vector<F2Vector> vs;
    for (const auto& b : basis) vs.push_back(to_vector(b));
    return Subspace::span(ambient, vs);
}

BilinearForm form_from_rows(const std::vector<Bits>& rows) {
    std::vector<F2Vector> vs;
    for (const auto& r : rows) vs.push_back(to_vector(r));
    return BilinearForm(F2Matrix(rows.size(), vs));
}

std::vector<Bits> form_rows(const BilinearForm& f) {
    std::vector<Bits> rows;
    for (std::size_t i = 0; i < f.dim(); ++i) rows.push_back(f.gram().row(i).to_bits());
    return rows;
}

std::vector<int> values_of(const Enhancement& q) {
    std::vector<int> out;
    for (Z4 v : q.basis_values()) out.push_back(v.value());
    return out;
}

Enhancement make_enhancement(const BilinearForm& form, const std::vector<int>& values) {
    std::vector<Z4> vs;
    for (int v : values) {
        if (v < 0 || v > 3) throw ContractViolation("enhancement values must lie in 0..3");
        vs.emplace_back(v);
    }
    return Enhancement(form, vs);
}

}  // namespace

PYBIND11_MODULE(_z4forms, m) {
    m.doc() = "Z/4 quadratic enhancements of surface intersection forms";
    m.attr("__version__") = "0.1.0";

    auto base = py::register_exception<Error>(m, "Z4Error");
    py::register_exception<ContractViolation>(m, "ContractViolation", base.ptr());
    py::register_exception<ResourceLimit>(m, "ResourceLimit", base.ptr());
    auto unsupported = py::register_exception<UnsupportedInput>(m, "UnsupportedInput", base.ptr());
    py::register_exception<DegenerateForm>(m, "DegenerateForm", unsupported.ptr());
    py::register_exception<SurgeryObstructed>(m, "SurgeryObstructed", base.ptr());
    py::register_exception<NotCharacteristic>(m, "NotCharacteristic", base.ptr());
    py::register_exception<InternalInconsistency>(m, "InternalInconsistency", base.ptr());

    py::class_<BilinearForm>(m, "BilinearForm")
        .def(py::init(&form_from_rows), py::arg("gram"))
        .def_static("hyperbolic", &BilinearForm::hyperbolic, py::arg("genus"))
        .def_static("crosscaps", &BilinearForm::crosscaps, py::arg("k"))
        .def_property_readonly("dim", &BilinearForm::dim)
        .def_property_readonly("gram", &form_rows)
        .def_property_readonly("is_nondegenerate", &BilinearForm::is_nondegenerate)
        .def("pair", [](const BilinearForm& f, const Bits& x, const Bits& y) {
            return static_cast<int>(f.pair(to_vector(x), to_vector(y)));
        })
        .def("__eq__", [](const BilinearForm& a, const BilinearForm& b) { return a == b; })
        .def("__repr__", [](const BilinearForm& f) { return "BilinearForm(" + io::to_json(f).dump() + ")"; });

    py::class_<Enhancement>(m, "Enhancement")
        .def(py::init(&make_enhancement), py::arg("form"), py::arg("values"))
        .def_property_readonly("form", &Enhancement::form)
        .def_property_readonly("values", &values_of)
        .def_property_readonly("dim", &Enhancement::dim)
        .def("__call__", [](const Enhancement& q, const Bits& x) { return eval_q(q, to_vector(x)).value(); })
        .def("to_json", [](const Enhancement& q) { return io::to_json(q).dump(); })
        .def_static("from_json",
                    [](const std::string& text) { return io::enhancement_from_json(nlohmann::json::parse(text)); })
        .def("__eq__", [](const Enhancement& a, const Enhancement& b) { return a == b; })
        .def("__repr__", [](const Enhancement& q) { return "Enhancement(" + io::to_json(q).dump() + ")"; });

    m.def("eval_q", [](const Enhancement& q, const Bits& x) { return eval_q(q, to_vector(x)).value(); });
    m.def("enumerate_enhancements", &enumerate_enhancements, py::arg("form"));
    m.def("torsor_act", [](const Enhancement& q, const Bits& y) { return torsor_act(q, Covector(to_vector(y))); });
    m.def("poincare_dual",
          [](const BilinearForm& f, const Bits& y) { return poincare_dual(f, Covector(to_vector(y))).to_bits(); });
    m.def("restrict", [](const Enhancement& q, const std::vector<Bits>& basis) {
        return restrict(q, to_subspace(q.dim(), basis));
    });
    m.def("direct_sum", &direct_sum);
    m.def("isotropic_reduction", [](const Enhancement& q, const Bits& c) { return isotropic_reduction(q, to_vector(c)); });

    m.def("gauss_sum", [](const Enhancement& q) {
        const auto g = gauss_sum(q);
        return py::make_tuple(g.a, g.b, g.n);
    }, "Returns (A, B, n) with sum_x i^q(x) = A + B i.");
    m.def("brown_invariant", [](const Enhancement& q) { return brown_invariant(q).beta.value(); });
    m.def("arf_from_brown", &arf_from_brown);
    m.def("torsor_delta", [](const Enhancement& q, const Bits& y) {
        const Covector cov(to_vector(y));
        return py::make_tuple(predicted_torsor_delta(q, cov).value(), measured_torsor_delta(q, cov).value());
    }, "Returns (predicted, measured) change of the Brown invariant.");

    m.def("kernel_vanishing_check", [](const Enhancement& q, const std::vector<Bits>& basis) {
        return kernel_vanishing_check(q, to_subspace(q.dim(), basis));
    });
    m.def("vanishing_subspaces", [](const Enhancement& q, std::size_t dim) {
        std::vector<std::vector<Bits>> out;
        for (const auto& s : vanishing_subspaces(q, dim)) out.push_back(to_basis(s));
        return out;
    });
    m.def("max_vanishing_dim", &max_vanishing_dim);
    m.def("has_null_lagrangian", &has_null_lagrangian);

    py::class_<UnimodularForm>(m, "UnimodularForm")
        .def(py::init<IntMatrix>(), py::arg("gram"))
        .def_static("named", &UnimodularForm::named, py::arg("key"))
        .def_property_readonly("dim", &UnimodularForm::dim)
        .def_property_readonly("gram", &UnimodularForm::gram);

    m.def("signature", &signature);
    m.def("is_characteristic", &is_characteristic);
    m.def("gm_required_beta", [](const UnimodularForm& f, const IntVector& c) {
        return gm_required_beta(f, CharacteristicVector(f, c)).value();
    });
    m.def("gm_check", [](const UnimodularForm& f, const IntVector& c, const Enhancement& q) {
        return gm_check(f, CharacteristicVector(f, c), q);
    });
}
