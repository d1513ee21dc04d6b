#include "cftnvm/transform.hpp"

#include <algorithm>

namespace cftnvm {

namespace {

unsigned long gcd_ul(unsigned long a, unsigned long b) {
    while (b != 0) {
        unsigned long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

unsigned long lcm_ul(unsigned long a, unsigned long b) { return a / gcd_ul(a, b) * b; }

// Orders are validated before the accumulator is allocated.
unsigned long checked_accumulator_order(unsigned long p, unsigned long d) {
    unsigned long n = lcm_ul(p, d);
    if (n > max_cyclotomic_order()) {
        throw OrderLimitError("cyclotomic order " + std::to_string(n) +
                              " exceeds the configured cap " +
                              std::to_string(max_cyclotomic_order()));
    }
    return n;
}

void require_same_field(const Field* a, const Field* b) {
    if (a != b) throw std::invalid_argument("operands belong to different fields");
}

}  // namespace

CycNum& GroupAlgebraElement::operator[](const FieldElement& a) {
    require_same_field(&a.field(), field_);
    return coeffs_[a.index()];
}

const CycNum& GroupAlgebraElement::operator[](const FieldElement& a) const {
    require_same_field(&a.field(), field_);
    return coeffs_[a.index()];
}

bool GroupAlgebraElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const CycNum& c) { return c.is_zero(); });
}

CycNum& Spectrum::operator[](const AddCharacter& psi) { return at_param(psi.a()); }

const CycNum& Spectrum::operator[](const AddCharacter& psi) const { return at_param(psi.a()); }

CycNum& Spectrum::at_param(const FieldElement& a) {
    require_same_field(&a.field(), field_);
    return values_[a.index()];
}

const CycNum& Spectrum::at_param(const FieldElement& a) const {
    require_same_field(&a.field(), field_);
    return values_[a.index()];
}

Spectrum fourier_transform(const GroupAlgebraElement& f) {
    const Field& fld = f.field();
    unsigned long p = fld.p();
    Spectrum out(fld);
    auto els = fld.elements();
    for (const auto& a : els) {
        CycNum sum(0L);
        for (const auto& x : els) {
            const CycNum& c = f[x];
            if (c.is_zero()) continue;
            unsigned long t = fld.trace(fld.mul(a, x));
            sum += c * CycNum::root_of_unity(p, static_cast<long>(t));
        }
        out.at_param(a) = std::move(sum);
    }
    return out;
}

GroupAlgebraElement inverse_fourier(const Spectrum& F) {
    const Field& fld = F.field();
    unsigned long p = fld.p();
    GroupAlgebraElement out(fld);
    auto els = fld.elements();
    mpq_class inv_q(1, static_cast<unsigned long>(fld.q()));
    for (const auto& a : els) {
        CycNum sum(0L);
        for (const auto& b : els) {
            const CycNum& c = F.at_param(b);
            if (c.is_zero()) continue;
            unsigned long t = fld.trace(fld.mul(b, a));
            sum += c * CycNum::root_of_unity(p, -static_cast<long>(t));
        }
        sum.scale(inv_q);
        out[a] = std::move(sum);
    }
    return out;
}

GroupAlgebraElement apply_symmetry_action(const FieldElement& h, const SubgroupChar& chi,
                                          const GroupAlgebraElement& f) {
    const Field& fld = f.field();
    require_same_field(&chi.field(), &fld);
    if (!chi.subgroup().contains(h)) {
        throw std::invalid_argument("action element is not a member of the subgroup");
    }
    CycNum scale = chi(h);
    GroupAlgebraElement out(fld);
    for (const auto& a : fld.elements()) {
        out[fld.mul(h, a)] = scale * f[a];
    }
    return out;
}

bool is_chi_symmetric(const GroupAlgebraElement& f, const SubgroupChar& chi) {
    const Field& fld = f.field();
    require_same_field(&chi.field(), &fld);
    for (const auto& h : chi.subgroup().elements()) {
        CycNum value = chi(h);
        for (const auto& a : fld.elements()) {
            if (f[fld.mul(h, a)] != value * f[a]) return false;
        }
    }
    return true;
}

std::vector<FieldElement> orbit_representatives(const SubgroupChar& chi) {
    const Field& fld = chi.field();
    std::vector<FieldElement> reps;
    if (chi.is_trivial()) reps.push_back(fld.zero());
    for (unsigned long t = 0; t < chi.subgroup().index(); ++t) {
        reps.push_back(fld.generator_power(static_cast<long>(t)));
    }
    return reps;
}

GroupAlgebraElement extend_from_representatives(const std::vector<CycNum>& values,
                                                const SubgroupChar& chi) {
    const Field& fld = chi.field();
    auto reps = orbit_representatives(chi);
    if (values.size() != reps.size()) {
        throw std::invalid_argument("one value per canonical representative required");
    }
    GroupAlgebraElement f(fld);
    auto members = chi.subgroup().elements();
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (reps[i].is_zero()) {
            f[reps[i]] = values[i];
            continue;
        }
        for (const auto& h : members) {
            f[fld.mul(h, reps[i])] = chi(h) * values[i];
        }
    }
    return f;
}

CycNum gauss_sum(const MultCharacter& chi, const AddCharacter& psi) {
    const Field& fld = chi.field();
    require_same_field(&psi.field(), &fld);
    unsigned long q = fld.q();
    unsigned long p = fld.p();
    unsigned long d = q - 1;
    unsigned long n = checked_accumulator_order(p, d);
    unsigned long sp = n / p, sd = n / d;
    std::vector<mpz_class> acc(n);
    for (unsigned long t = 0; t < d; ++t) {
        FieldElement c = fld.generator_power(static_cast<long>(t));
        unsigned long em = chi.k() * t % d;
        unsigned long ea = fld.trace(fld.mul(psi.a(), c));
        acc[(em * sd + ea * sp) % n] += 1;
    }
    return CycNum::from_exponent_coeffs(n, std::move(acc));
}

GaussSumSet gauss_set(const SubgroupChar& chi) {
    GaussSumSet out{chi, {}, {}};
    AddCharacter eps = canonical_character(chi.field());
    for (const auto& phi : extensions(chi)) {
        out.sums.push_back(gauss_sum(phi, eps));
        out.exponents.push_back(phi.k());
    }
    return out;
}

TSums t_sums_from(const std::array<CycNum, 3>& sums) {
    TSums out{{CycNum(0L), CycNum(0L), CycNum(0L)}};
    for (int j = 0; j < 3; ++j) {
        CycNum t = sums[0];
        t += CycNum::root_of_unity(3, j) * sums[1];
        t += CycNum::root_of_unity(3, 2 * j) * sums[2];
        out.t[static_cast<std::size_t>(j)] = std::move(t);
    }
    return out;
}

TSums t_sums(const GaussSumSet& g) {
    if (g.sums.size() != 3) {
        throw std::invalid_argument("T sums are defined for exactly three Gauss sums");
    }
    return t_sums_from({g.sums[0], g.sums[1], g.sums[2]});
}

namespace {

// One entry: the subgroup sum over h of chi(h) eps(h r s), accumulated as
// exponent counts and reduced once.
CycNum cft_entry(const SubgroupChar& chi, const FieldElement& r, const FieldElement& s) {
    const Field& fld = chi.field();
    unsigned long p = fld.p();
    unsigned long d = chi.subgroup().order();
    unsigned long n = checked_accumulator_order(p, d);
    unsigned long sp = n / p, sd = n / d;
    FieldElement rs = fld.mul(r, s);
    std::vector<mpz_class> acc(n);
    unsigned long step = chi.subgroup().index();
    for (unsigned long t = 0; t < d; ++t) {
        FieldElement h = fld.generator_power(static_cast<long>(step * t));
        unsigned long em = chi.j() * t % d;
        unsigned long ea = fld.trace(fld.mul(h, rs));
        acc[(em * sd + ea * sp) % n] += 1;
    }
    return CycNum::from_exponent_coeffs(n, std::move(acc));
}

void validate_representatives(const SubgroupChar& chi, const std::vector<FieldElement>& reps) {
    const Field& fld = chi.field();
    unsigned long s = chi.subgroup().index();
    std::size_t expected = s + (chi.is_trivial() ? 1 : 0);
    if (reps.size() != expected) {
        throw std::invalid_argument("representative list has the wrong size");
    }
    std::vector<bool> orbit_seen(s, false);
    bool zero_seen = false;
    for (const auto& r : reps) {
        require_same_field(&r.field(), &fld);
        if (r.is_zero()) {
            if (!chi.is_trivial()) {
                throw std::invalid_argument("zero representative requires the trivial character");
            }
            if (zero_seen) throw std::invalid_argument("duplicate zero representative");
            zero_seen = true;
            continue;
        }
        unsigned long orbit = fld.discrete_log(r) % s;
        if (orbit_seen[orbit]) {
            throw std::invalid_argument("two representatives share an orbit");
        }
        orbit_seen[orbit] = true;
    }
    if (chi.is_trivial() && !zero_seen) {
        throw std::invalid_argument("trivial character requires the zero representative");
    }
}

}  // namespace

CftMatrix cft_matrix(const SubgroupChar& chi, const std::vector<FieldElement>& R,
                     const std::vector<FieldElement>& S) {
    validate_representatives(chi, R);
    validate_representatives(chi, S);
    CftMatrix out{CycMatrix(S.size(), R.size()), chi, R, S};
    for (std::size_t i = 0; i < S.size(); ++i) {
        for (std::size_t j = 0; j < R.size(); ++j) {
            out.matrix.at(i, j) = cft_entry(chi, R[j], S[i]);
        }
    }
    for (const auto& s : S) out.matrix.row_labels.push_back(s.str());
    for (const auto& r : R) out.matrix.col_labels.push_back(r.str());
    return out;
}

CftMatrix cft_matrix(const SubgroupChar& chi) {
    auto reps = orbit_representatives(chi);
    return cft_matrix(chi, reps, reps);
}

std::vector<FieldElement> support(const GroupAlgebraElement& f) {
    std::vector<FieldElement> out;
    for (const auto& a : f.field().elements()) {
        if (!f[a].is_zero()) out.push_back(a);
    }
    return out;
}

std::vector<AddCharacter> support_hat(const GroupAlgebraElement& f) {
    Spectrum F = fourier_transform(f);
    std::vector<AddCharacter> out;
    for (const auto& a : f.field().elements()) {
        if (!F.at_param(a).is_zero()) out.push_back(AddCharacter(a));
    }
    return out;
}

}  // namespace cftnvm
