#pragma once

#include "cftnvm/cyclotomic.hpp"
#include "cftnvm/finite_field.hpp"

#include <vector>

namespace cftnvm {

// The additive character x -> zeta_p^{Tr(a x)}. a = 1 is the canonical
// character; a = 0 is trivial.
class AddCharacter {
public:
    explicit AddCharacter(FieldElement a) : a_(a) { a_.field(); }

    const FieldElement& a() const noexcept { return a_; }
    const Field& field() const { return a_.field(); }
    bool is_trivial() const noexcept { return a_.is_zero(); }

    CycNum operator()(const FieldElement& x) const;

    friend bool operator==(const AddCharacter& lhs, const AddCharacter& rhs) {
        return lhs.a_ == rhs.a_;
    }

private:
    FieldElement a_;
};

inline AddCharacter canonical_character(const Field& f) { return AddCharacter(f.one()); }

// The multiplicative character chi_k with chi_k(generator^t) = zeta_{q-1}^{kt},
// extended to the whole field by chi(0) = 0.
class MultCharacter {
public:
    MultCharacter(const Field& field, unsigned long k)
        : field_(&field), k_(field.q() > 1 ? k % (field.q() - 1) : 0) {}

    const Field& field() const noexcept { return *field_; }
    unsigned long k() const noexcept { return k_; }
    bool is_trivial() const noexcept { return k_ == 0; }

    CycNum operator()(const FieldElement& x) const;
    MultCharacter conjugated() const {
        return {*field_, (field_->q() - 1 - k_) % (field_->q() - 1)};
    }

    friend bool operator==(const MultCharacter& a, const MultCharacter& b) {
        return a.field_ == b.field_ && a.k_ == b.k_;
    }

private:
    const Field* field_;
    unsigned long k_;
};

// The unique subgroup of F_q^x of the given index s | q-1: H = <generator^s>,
// of order d = (q-1)/s.
class Subgroup {
public:
    Subgroup(const Field& field, unsigned long index);

    const Field& field() const noexcept { return *field_; }
    unsigned long index() const noexcept { return index_; }
    unsigned long order() const noexcept { return order_; }

    // generator^index, a generator of H.
    FieldElement gen() const { return field_->generator_power(static_cast<long>(index_)); }
    bool contains(const FieldElement& x) const;
    // The d elements generator^(index*t), t ascending.
    std::vector<FieldElement> elements() const;

    friend bool operator==(const Subgroup& a, const Subgroup& b) {
        return a.field_ == b.field_ && a.index_ == b.index_;
    }

private:
    const Field* field_;
    unsigned long index_;
    unsigned long order_;
};

// A character on H, encoded by its exponent: chi(generator^(index*t)) = zeta_d^(jt).
class SubgroupChar {
public:
    SubgroupChar(Subgroup subgroup, unsigned long j)
        : subgroup_(subgroup), j_(subgroup.order() > 0 ? j % subgroup.order() : 0) {}

    const Subgroup& subgroup() const noexcept { return subgroup_; }
    const Field& field() const noexcept { return subgroup_.field(); }
    unsigned long j() const noexcept { return j_; }
    bool is_trivial() const noexcept { return j_ == 0; }

    // Evaluation; throws if h is not a member of H.
    CycNum operator()(const FieldElement& h) const;

    friend bool operator==(const SubgroupChar& a, const SubgroupChar& b) {
        return a.subgroup_ == b.subgroup_ && a.j_ == b.j_;
    }

private:
    Subgroup subgroup_;
    unsigned long j_;
};

// All characters of F_q^x that vanish on H (are trivial there): chi_k with
// d | k, sorted by k; exactly [F_q^x : H] of them.
std::vector<MultCharacter> annihilator(const Subgroup& H);

// All extensions of chi to F_q^x, sorted by exponent. The first is phi_0;
// successive entries differ by the annihilator generator, so in the index-3
// case phi_1 = phi_0 * kappa and phi_2 = phi_0 * conj(kappa) with
// kappa(generator) = zeta_3.
std::vector<MultCharacter> extensions(const SubgroupChar& chi);

// The restriction of phi to H, as a SubgroupChar.
SubgroupChar restrict_char(const MultCharacter& phi, const Subgroup& H);

}  // namespace cftnvm
