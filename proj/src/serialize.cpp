#include "cftnvm/serialize.hpp"

#include <complex>
#include <cstdio>
#include <sstream>

namespace cftnvm {

ordered_json to_json(const CycNum& v) {
    ordered_json coeffs = ordered_json::array();
    for (const auto& num : v.numerators()) {
        mpq_class c(num, v.denominator());
        c.canonicalize();
        coeffs.push_back(c.get_str());
    }
    return ordered_json{{"order", v.order()}, {"coeffs", std::move(coeffs)}};
}

ordered_json field_spec_json(const Field& f) {
    return ordered_json{{"p", f.p()},
                        {"m", f.m()},
                        {"modulus", f.modulus()},
                        {"generator", f.generator().coeffs()}};
}

ordered_json element_json(const FieldElement& a) { return ordered_json(a.coeffs()); }

ordered_json to_json(const AddCharacter& psi) {
    return ordered_json{{"a", psi.a().coeffs()}};
}

ordered_json to_json(const MultCharacter& chi) { return ordered_json{{"k", chi.k()}}; }

ordered_json to_json(const SubgroupChar& chi) {
    return ordered_json{{"index", chi.subgroup().index()}, {"j", chi.j()}};
}

ordered_json to_json(const GroupAlgebraElement& f) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : f.coeffs()) arr.push_back(to_json(c));
    return arr;
}

ordered_json to_json(const CftMatrix& M) {
    ordered_json r_labels = ordered_json::array();
    for (const auto& r : M.R) r_labels.push_back(element_json(r));
    ordered_json s_labels = ordered_json::array();
    for (const auto& s : M.S) s_labels.push_back(element_json(s));
    ordered_json entries = ordered_json::array();
    for (std::size_t i = 0; i < M.matrix.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < M.matrix.cols(); ++j) {
            row.push_back(to_json(M.matrix.at(i, j)));
        }
        entries.push_back(std::move(row));
    }
    return ordered_json{{"chi", to_json(M.chi)},
                        {"R", std::move(r_labels)},
                        {"S", std::move(s_labels)},
                        {"entries", std::move(entries)}};
}

ordered_json to_json(const NvmReport& r) {
    ordered_json j;
    j["q"] = r.q;
    j["index"] = r.index;
    j["chi_j"] = r.chi_j;
    j["method"] = to_string(r.method);
    j["holds"] = r.holds;
    j["theorem_prediction"] =
        r.theorem_prediction ? ordered_json(*r.theorem_prediction) : ordered_json(nullptr);
    j["agreement"] = r.agreement ? ordered_json(*r.agreement) : ordered_json(nullptr);
    if (r.witness) {
        j["witness"] = ordered_json{{"I", r.witness->rows}, {"J", r.witness->cols}};
    } else {
        j["witness"] = nullptr;
    }
    j["minors_checked"] = r.minors_checked;
    return j;
}

std::string report_csv_header() {
    return "q,index,chi_j,method,holds,theorem_prediction,agreement,minors_checked";
}

std::string report_csv_row(const NvmReport& r) {
    auto opt = [](const std::optional<bool>& b) {
        return b ? (*b ? std::string("true") : std::string("false")) : std::string();
    };
    std::ostringstream out;
    out << r.q << ',' << r.index << ',' << r.chi_j << ',' << to_string(r.method) << ','
        << (r.holds ? "true" : "false") << ',' << opt(r.theorem_prediction) << ','
        << opt(r.agreement) << ',' << r.minors_checked;
    return out.str();
}

std::string approx_string(const CycNum& v) {
    std::complex<double> z = complex_approx(v);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g%+.9gi", z.real(), z.imag());
    return std::string(buf);
}

}  // namespace cftnvm
