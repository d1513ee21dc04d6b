#pragma once

#include "cftnvm/characters.hpp"

#include <array>
#include <vector>

namespace cftnvm {

// An element of the group algebra C[F_q]: one cyclotomic coefficient per
// field element, stored in the canonical element order.
class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(const Field& field)
        : field_(&field), coeffs_(field.q(), CycNum(0L)) {}

    const Field& field() const noexcept { return *field_; }
    const std::vector<CycNum>& coeffs() const noexcept { return coeffs_; }

    CycNum& operator[](const FieldElement& a);
    const CycNum& operator[](const FieldElement& a) const;

    bool is_zero() const;

    friend bool operator==(const GroupAlgebraElement& f, const GroupAlgebraElement& g) {
        return f.field_ == g.field_ && f.coeffs_ == g.coeffs_;
    }

private:
    const Field* field_;
    std::vector<CycNum> coeffs_;
};

// A function on the additive characters, indexed by the parameter a of
// eps_a in the canonical element order.
class Spectrum {
public:
    explicit Spectrum(const Field& field) : field_(&field), values_(field.q(), CycNum(0L)) {}

    const Field& field() const noexcept { return *field_; }
    const std::vector<CycNum>& values() const noexcept { return values_; }

    CycNum& operator[](const AddCharacter& psi);
    const CycNum& operator[](const AddCharacter& psi) const;
    CycNum& at_param(const FieldElement& a);
    const CycNum& at_param(const FieldElement& a) const;

    friend bool operator==(const Spectrum& a, const Spectrum& b) {
        return a.field_ == b.field_ && a.values_ == b.values_;
    }

private:
    const Field* field_;
    std::vector<CycNum> values_;
};

// hat f(eps_a) = sum_x f_x eps_a(x), exactly, for all q characters.
Spectrum fourier_transform(const GroupAlgebraElement& f);
// f_a = (1/q) sum_psi conj(psi(a)) F(psi); exact inverse of the above.
GroupAlgebraElement inverse_fourier(const Spectrum& F);

// The coefficient permutation-and-scale action: output coefficient at h*a
// is chi(h) times the input coefficient at a. Requires h in H.
GroupAlgebraElement apply_symmetry_action(const FieldElement& h, const SubgroupChar& chi,
                                          const GroupAlgebraElement& f);

// Whether f_{ha} = chi(h) f_a for all h in H and a in F_q.
bool is_chi_symmetric(const GroupAlgebraElement& f, const SubgroupChar& chi);

// Canonical orbit representatives: generator^0, ..., generator^{index-1},
// with 0 prepended when chi is trivial.
std::vector<FieldElement> orbit_representatives(const SubgroupChar& chi);

// The chi-symmetric element with the given values at the canonical
// representatives: f_{h r} = chi(h) values[r]; f_0 = 0 for nontrivial chi.
GroupAlgebraElement extend_from_representatives(const std::vector<CycNum>& values,
                                                const SubgroupChar& chi);

// G(chi, psi) = sum over c != 0 of chi(c) psi(c).
CycNum gauss_sum(const MultCharacter& chi, const AddCharacter& psi);

// Gauss sums of all extensions of chi, with the canonical additive
// character, in the fixed extension order.
struct GaussSumSet {
    SubgroupChar chi;
    std::vector<CycNum> sums;
    std::vector<unsigned long> exponents;  // extension exponents, ascending
};
GaussSumSet gauss_set(const SubgroupChar& chi);

// T_j = sum_i zeta_3^{ji} G_i for j = 0, 1, 2; defined for index 3.
struct TSums {
    std::array<CycNum, 3> t;
};
TSums t_sums(const GaussSumSet& g);
TSums t_sums_from(const std::array<CycNum, 3>& sums);

// Compressed Fourier matrix: rows indexed by S, columns by R, entry(s, r)
// equal to the subgroup sum over h of chi(h) eps(h r s).
struct CftMatrix {
    CycMatrix matrix;
    SubgroupChar chi;
    std::vector<FieldElement> R;
    std::vector<FieldElement> S;
};
CftMatrix cft_matrix(const SubgroupChar& chi);
CftMatrix cft_matrix(const SubgroupChar& chi, const std::vector<FieldElement>& R,
                     const std::vector<FieldElement>& S);

std::vector<FieldElement> support(const GroupAlgebraElement& f);
std::vector<AddCharacter> support_hat(const GroupAlgebraElement& f);

}  // namespace cftnvm
