#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cftnvm/serialize.hpp"

#include <string>
#include <vector>

namespace py = pybind11;
using namespace cftnvm;

namespace {

mpz_class to_mpz(const py::handle& v) {
    return mpz_class(py::str(v).cast<std::string>());
}

py::object to_pyint(const mpz_class& v) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::object to_fraction(const mpq_class& v) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(v.get_str());
}

py::list int_list(const std::vector<mpz_class>& vs) {
    py::list out;
    for (const auto& v : vs) out.append(to_pyint(v));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Exact cyclotomic arithmetic over finite fields: characters, Gauss "
        "sums, compressed Fourier matrices, and nonvanishing-minors "
        "decisions. Objects derived from a Field hold a reference to it; "
        "keep the Field in scope while using them.";

    py::register_exception<OrderLimitError>(m, "OrderLimitError", PyExc_RuntimeError);

    m.def("max_cyclotomic_order", &max_cyclotomic_order,
          "Current cap on cyclotomic orders.");
    m.def("set_max_cyclotomic_order", &set_max_cyclotomic_order, py::arg("cap"),
          "Set the cap on cyclotomic orders (guards lcm blowup).");
    m.def("euler_phi", &euler_phi, py::arg("n"));
    m.def(
        "cyclotomic_polynomial",
        [](unsigned long n) { return int_list(cyclotomic_polynomial(n)); }, py::arg("n"),
        "Coefficients of the n-th cyclotomic polynomial, ascending.");

    py::class_<CycNum>(m, "CycNum",
                       "An element of Q(zeta_n) on the power basis, exact rational "
                       "coefficients.")
        .def(py::init([](const py::int_& v) { return CycNum(to_mpz(v)); }), py::arg("value"))
        .def_static("root_of_unity", &CycNum::root_of_unity, py::arg("n"), py::arg("k"),
                    "zeta_n^k; k may be negative.")
        .def_static(
            "from_exponent_coeffs",
            [](unsigned long n, const py::sequence& coeffs) {
                std::vector<mpz_class> cs;
                cs.reserve(py::len(coeffs));
                for (const auto& c : coeffs) cs.push_back(to_mpz(c));
                return CycNum::from_exponent_coeffs(n, std::move(cs));
            },
            py::arg("n"), py::arg("coeffs"),
            "Sum of coeffs[e] * zeta_n^e; exponents fold mod n.")
        .def_property_readonly("order", &CycNum::order)
        .def("is_zero", &CycNum::is_zero)
        .def("is_integral", &CycNum::is_integral)
        .def("is_rational", &CycNum::is_rational)
        .def("rational_value",
             [](const CycNum& a) {
                 if (!a.is_rational()) throw py::value_error("not a rational value");
                 return to_fraction(a.rational_value());
             })
        .def("coeff",
             [](const CycNum& a, std::size_t i) { return to_fraction(a.coeff(i)); },
             py::arg("i"), "Coefficient of zeta^i as a Fraction.")
        .def("numerators", [](const CycNum& a) { return int_list(a.numerators()); })
        .def("denominator", [](const CycNum& a) { return to_pyint(a.denominator()); })
        .def("embedded", &CycNum::embedded, py::arg("n"))
        .def("conjugated", &CycNum::conjugated)
        .def("inverse", &CycNum::inverse)
        .def("approx", &CycNum::approx, "Floating-point image; display only.")
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__pow__", [](const CycNum& a, unsigned long e) { return pow(a, e); })
        .def("__hash__", [](const CycNum& a) { return py::hash(py::str(a.str())); })
        .def("__str__", &CycNum::str)
        .def("__repr__", [](const CycNum& a) { return "CycNum(" + a.str() + ")"; });

    py::class_<CycMatrix>(m, "CycMatrix", "Dense matrix over the cyclotomic numbers.")
        .def(py::init<std::size_t, std::size_t>(), py::arg("rows"), py::arg("cols"))
        .def_static(
            "from_rows",
            [](const std::vector<std::vector<CycNum>>& rows) {
                std::size_t r = rows.size();
                std::size_t c = r == 0 ? 0 : rows.front().size();
                CycMatrix out(r, c);
                for (std::size_t i = 0; i < r; ++i) {
                    if (rows[i].size() != c) throw py::value_error("ragged rows");
                    for (std::size_t j = 0; j < c; ++j) out.at(i, j) = rows[i][j];
                }
                return out;
            },
            py::arg("rows"))
        .def_property_readonly("rows", &CycMatrix::rows)
        .def_property_readonly("cols", &CycMatrix::cols)
        .def("submatrix", &CycMatrix::submatrix, py::arg("I"), py::arg("J"))
        .def("__getitem__",
             [](const CycMatrix& mat, std::pair<std::size_t, std::size_t> ij) {
                 return mat.at(ij.first, ij.second);
             })
        .def("__setitem__",
             [](CycMatrix& mat, std::pair<std::size_t, std::size_t> ij, const CycNum& v) {
                 mat.at(ij.first, ij.second) = v;
             });

    m.def("det_exact", &det_exact, py::arg("m"), py::call_guard<py::gil_scoped_release>(),
          "Exact determinant.");
    m.def("kernel_vector", &kernel_vector, py::arg("m"),
          py::call_guard<py::gil_scoped_release>(),
          "A kernel vector of a singular square matrix, or None.");

    py::class_<FieldElement>(m, "FieldElement",
                             "An element of GF(p^m); the parent Field must stay alive.")
        .def_property_readonly("index", &FieldElement::index)
        .def("coeffs", &FieldElement::coeffs)
        .def("is_zero", &FieldElement::is_zero)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def("inverse", &FieldElement::inverse)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__hash__", [](const FieldElement& a) { return a.index(); })
        .def("__str__", &FieldElement::str)
        .def("__repr__", [](const FieldElement& a) { return "FieldElement(" + a.str() + ")"; });

    py::class_<Field>(m, "Field",
                      "GF(p^m) with the lexicographically smallest irreducible modulus "
                      "and smallest generator.")
        .def(py::init<unsigned long, unsigned long>(), py::arg("p"), py::arg("m"))
        .def_property_readonly("p", &Field::p)
        .def_property_readonly("m", &Field::m)
        .def_property_readonly("q", &Field::q)
        .def_property_readonly("modulus", &Field::modulus)
        .def("zero", &Field::zero, py::keep_alive<0, 1>())
        .def("one", &Field::one, py::keep_alive<0, 1>())
        .def("generator", &Field::generator, py::keep_alive<0, 1>())
        .def("from_index", &Field::from_index, py::arg("idx"), py::keep_alive<0, 1>())
        .def("from_coeffs", &Field::from_coeffs, py::arg("coeffs"), py::keep_alive<0, 1>())
        .def("from_integer", &Field::from_integer, py::arg("a"), py::keep_alive<0, 1>())
        .def("elements", &Field::elements)
        .def("add", &Field::add, py::keep_alive<0, 1>())
        .def("sub", &Field::sub, py::keep_alive<0, 1>())
        .def("neg", &Field::neg, py::keep_alive<0, 1>())
        .def("mul", &Field::mul, py::keep_alive<0, 1>())
        .def("inv", &Field::inv, py::keep_alive<0, 1>())
        .def("pow", &Field::pow, py::keep_alive<0, 1>())
        .def("frobenius", &Field::frobenius, py::keep_alive<0, 1>())
        .def("trace", &Field::trace, py::arg("a"))
        .def("discrete_log", &Field::discrete_log, py::arg("a"))
        .def("generator_power", &Field::generator_power, py::arg("t"), py::keep_alive<0, 1>())
        .def(py::self == py::self)
        .def("__repr__", [](const Field& f) {
            return "Field(p=" + std::to_string(f.p()) + ", m=" + std::to_string(f.m()) + ")";
        });

    m.def("factor_prime_power", &factor_prime_power, py::arg("q"));
    m.def("make_field_for_q", &make_field_for_q, py::arg("q"));

    py::class_<AddCharacter>(m, "AddCharacter",
                             "x -> zeta_p^{Tr(a x)}; a = 1 is canonical, a = 0 trivial.")
        .def(py::init<FieldElement>(), py::arg("a"), py::keep_alive<1, 2>())
        .def_property_readonly("a", &AddCharacter::a, py::keep_alive<0, 1>())
        .def("is_trivial", &AddCharacter::is_trivial)
        .def("__call__", &AddCharacter::operator(), py::arg("x"))
        .def(py::self == py::self);

    m.def("canonical_character", &canonical_character, py::arg("field"), py::keep_alive<0, 1>());

    py::class_<MultCharacter>(m, "MultCharacter",
                              "chi_k(generator^t) = zeta_{q-1}^{kt}, with chi(0) = 0.")
        .def(py::init<const Field&, unsigned long>(), py::arg("field"), py::arg("k"),
             py::keep_alive<1, 2>())
        .def_property_readonly("k", &MultCharacter::k)
        .def("is_trivial", &MultCharacter::is_trivial)
        .def("conjugated", &MultCharacter::conjugated, py::keep_alive<0, 1>())
        .def("__call__", &MultCharacter::operator(), py::arg("x"))
        .def(py::self == py::self);

    py::class_<Subgroup>(m, "Subgroup",
                         "The subgroup of F_q^x of a given index dividing q - 1.")
        .def(py::init<const Field&, unsigned long>(), py::arg("field"), py::arg("index"),
             py::keep_alive<1, 2>())
        .def_property_readonly("index", &Subgroup::index)
        .def_property_readonly("order", &Subgroup::order)
        .def("gen", &Subgroup::gen, py::keep_alive<0, 1>())
        .def("contains", &Subgroup::contains, py::arg("x"))
        .def("elements", &Subgroup::elements)
        .def(py::self == py::self);

    py::class_<SubgroupChar>(m, "SubgroupChar",
                             "A character on the subgroup, encoded by its exponent j.")
        .def(py::init<Subgroup, unsigned long>(), py::arg("subgroup"), py::arg("j"),
             py::keep_alive<1, 2>())
        .def_property_readonly("subgroup", &SubgroupChar::subgroup, py::keep_alive<0, 1>())
        .def_property_readonly("j", &SubgroupChar::j)
        .def("is_trivial", &SubgroupChar::is_trivial)
        .def("__call__", &SubgroupChar::operator(), py::arg("h"))
        .def(py::self == py::self);

    m.def("annihilator", &annihilator, py::arg("subgroup"),
          "Characters of F_q^x that are trivial on the subgroup, by exponent.");
    m.def("extensions", &extensions, py::arg("chi"),
          "All extensions of chi to F_q^x, sorted by exponent.");
    m.def("restrict_char", &restrict_char, py::arg("phi"), py::arg("subgroup"),
          py::keep_alive<0, 2>());

    py::class_<GroupAlgebraElement>(m, "GroupAlgebraElement",
                                    "One cyclotomic coefficient per field element.")
        .def(py::init<const Field&>(), py::arg("field"), py::keep_alive<1, 2>())
        .def("coeffs", &GroupAlgebraElement::coeffs)
        .def("is_zero", &GroupAlgebraElement::is_zero)
        .def("__getitem__",
             [](const GroupAlgebraElement& f, const FieldElement& a) { return f[a]; })
        .def("__setitem__", [](GroupAlgebraElement& f, const FieldElement& a,
                               const CycNum& v) { f[a] = v; })
        .def(py::self == py::self);

    py::class_<Spectrum>(m, "Spectrum",
                         "A function on the additive characters, indexed by parameter.")
        .def(py::init<const Field&>(), py::arg("field"), py::keep_alive<1, 2>())
        .def("values", &Spectrum::values)
        .def("at_param",
             [](const Spectrum& F, const FieldElement& a) { return F.at_param(a); },
             py::arg("a"))
        .def("__getitem__",
             [](const Spectrum& F, const AddCharacter& psi) { return F[psi]; })
        .def("__setitem__",
             [](Spectrum& F, const AddCharacter& psi, const CycNum& v) { F[psi] = v; })
        .def(py::self == py::self);

    m.def("fourier_transform", &fourier_transform, py::arg("f"), py::keep_alive<0, 1>());
    m.def("inverse_fourier", &inverse_fourier, py::arg("F"), py::keep_alive<0, 1>());
    m.def("apply_symmetry_action", &apply_symmetry_action, py::arg("h"), py::arg("chi"),
          py::arg("f"), py::keep_alive<0, 3>());
    m.def("is_chi_symmetric", &is_chi_symmetric, py::arg("f"), py::arg("chi"));
    m.def("orbit_representatives", &orbit_representatives, py::arg("chi"));
    m.def("extend_from_representatives", &extend_from_representatives, py::arg("values"),
          py::arg("chi"), py::keep_alive<0, 2>());
    m.def("support", &support, py::arg("f"));
    m.def("support_hat", &support_hat, py::arg("f"));

    m.def("gauss_sum", &gauss_sum, py::arg("chi"), py::arg("psi"),
          "G(chi, psi) = sum over c != 0 of chi(c) psi(c).");

    py::class_<GaussSumSet>(m, "GaussSumSet",
                            "Gauss sums of all extensions of chi, in extension order.")
        .def_readonly("chi", &GaussSumSet::chi)
        .def_readonly("sums", &GaussSumSet::sums)
        .def_readonly("exponents", &GaussSumSet::exponents);

    m.def("gauss_set", &gauss_set, py::arg("chi"), py::keep_alive<0, 1>());

    py::class_<TSums>(m, "TSums", "T_j = sum_i zeta_3^{ji} G_i for j = 0, 1, 2.")
        .def_readonly("t", &TSums::t);
    m.def("t_sums", &t_sums, py::arg("g"));
    m.def("t_sums_from", &t_sums_from, py::arg("sums"));

    py::class_<CftMatrix>(m, "CftMatrix",
                          "Rows indexed by S, columns by R; entry(s, r) is the subgroup "
                          "sum of chi(h) eps(h r s).")
        .def_readonly("matrix", &CftMatrix::matrix)
        .def_readonly("chi", &CftMatrix::chi)
        .def_readonly("R", &CftMatrix::R)
        .def_readonly("S", &CftMatrix::S);

    m.def("cft_matrix",
          py::overload_cast<const SubgroupChar&>(&cft_matrix), py::arg("chi"),
          py::keep_alive<0, 1>(), py::call_guard<py::gil_scoped_release>());
    m.def("cft_matrix",
          py::overload_cast<const SubgroupChar&, const std::vector<FieldElement>&,
                            const std::vector<FieldElement>&>(&cft_matrix),
          py::arg("chi"), py::arg("R"), py::arg("S"), py::keep_alive<0, 1>(),
          py::call_guard<py::gil_scoped_release>());

    py::enum_<NvmMethod>(m, "NvmMethod")
        .value("brute", NvmMethod::brute)
        .value("theorem", NvmMethod::theorem)
        .value("both", NvmMethod::both);

    py::enum_<CharSelector>(m, "CharSelector")
        .value("all", CharSelector::all)
        .value("trivial", CharSelector::trivial)
        .value("nontrivial", CharSelector::nontrivial);

    py::class_<MinorWitness>(m, "MinorWitness",
                             "Row subset, column subset, and the exact determinant.")
        .def(py::init<>())
        .def_readwrite("rows", &MinorWitness::rows)
        .def_readwrite("cols", &MinorWitness::cols)
        .def_readwrite("determinant", &MinorWitness::determinant);

    py::class_<NvmReport>(m, "NvmReport", "Outcome of one nonvanishing-minors decision.")
        .def_readonly("q", &NvmReport::q)
        .def_readonly("p", &NvmReport::p)
        .def_readonly("m", &NvmReport::m)
        .def_readonly("index", &NvmReport::index)
        .def_readonly("chi_j", &NvmReport::chi_j)
        .def_readonly("method", &NvmReport::method)
        .def_readonly("holds", &NvmReport::holds)
        .def_readonly("theorem_prediction", &NvmReport::theorem_prediction)
        .def_readonly("agreement", &NvmReport::agreement)
        .def_readonly("witness", &NvmReport::witness)
        .def_readonly("minors_checked", &NvmReport::minors_checked)
        .def("json", [](const NvmReport& r) { return to_json(r).dump(); },
             "Canonical one-line serialization.")
        .def("__repr__", [](const NvmReport& r) {
            return "NvmReport(q=" + std::to_string(r.q) + ", index=" + std::to_string(r.index) +
                   ", chi_j=" + std::to_string(r.chi_j) + ", holds=" +
                   (r.holds ? "True" : "False") + ")";
        });

    m.def("nvm_brute", &nvm_brute, py::arg("M"), py::arg("size_cap") = 12,
          py::call_guard<py::gil_scoped_release>(),
          "Exhaustive exact minor enumeration; first zero minor becomes the witness.");
    m.def("nvm_theorem_index3_nontrivial", &nvm_theorem_index3_nontrivial, py::arg("g"),
          "Gauss-sum criterion: sums not all equal and T_0 != 0.");
    m.def("known_criterion", &known_criterion, py::arg("chi"),
          "Closed-form answer when one applies, else None.");
    m.def("chebotarev_check", &chebotarev_check, py::arg("p"),
          py::call_guard<py::gil_scoped_release>(),
          "Every minor of the p x p root matrix, via shared subminor expansion.");

    py::class_<BoundCheck>(m, "BoundCheck", "Support-size inequality for a symmetric element.")
        .def_readonly("support", &BoundCheck::support)
        .def_readonly("hat_support", &BoundCheck::hat_support)
        .def_readonly("threshold", &BoundCheck::threshold)
        .def_readonly("holds", &BoundCheck::holds);

    m.def("uncertainty_bound_report", &uncertainty_bound_report, py::arg("f"), py::arg("chi"));
    m.def("uncertainty_bound_holds", &uncertainty_bound_holds, py::arg("f"), py::arg("chi"));
    m.def("violation_witness", &violation_witness, py::arg("M"), py::arg("w"), py::arg("chi"),
          py::keep_alive<0, 3>(),
          "Bound-violating symmetric element built from a singular submatrix.");

    m.def("nvm_instance", &nvm_instance, py::arg("chi"), py::arg("method"),
          py::call_guard<py::gil_scoped_release>());
    m.def("scan_range", &scan_range, py::arg("q_max"), py::arg("index"), py::arg("chars"),
          py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>(),
          "All instances with the given index up to q_max, deterministic order.");
}
