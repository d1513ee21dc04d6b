#include "cftnvm/characters.hpp"

namespace cftnvm {

CycNum AddCharacter::operator()(const FieldElement& x) const {
    const Field& f = field();
    if (&x.field() != &f) throw std::invalid_argument("element from a different field");
    unsigned long t = f.trace(f.mul(a_, x));
    return CycNum::root_of_unity(f.p(), static_cast<long>(t));
}

CycNum MultCharacter::operator()(const FieldElement& x) const {
    const Field& f = field();
    if (&x.field() != &f) throw std::invalid_argument("element from a different field");
    if (x.is_zero()) return CycNum(0L);
    unsigned long e = k_ * f.discrete_log(x) % (f.q() - 1);
    return CycNum::root_of_unity(f.q() - 1, static_cast<long>(e));
}

Subgroup::Subgroup(const Field& field, unsigned long index) : field_(&field), index_(index) {
    unsigned long n = field.q() - 1;
    if (index == 0 || n % index != 0) {
        throw std::invalid_argument("subgroup index must divide q - 1");
    }
    order_ = n / index;
}

bool Subgroup::contains(const FieldElement& x) const {
    if (&x.field() != field_) throw std::invalid_argument("element from a different field");
    if (x.is_zero()) return false;
    return field_->discrete_log(x) % index_ == 0;
}

std::vector<FieldElement> Subgroup::elements() const {
    std::vector<FieldElement> out;
    out.reserve(order_);
    for (unsigned long t = 0; t < order_; ++t) {
        out.push_back(field_->generator_power(static_cast<long>(index_ * t)));
    }
    return out;
}

CycNum SubgroupChar::operator()(const FieldElement& h) const {
    const Subgroup& H = subgroup_;
    if (!H.contains(h)) throw std::invalid_argument("argument is not a member of the subgroup");
    unsigned long t = H.field().discrete_log(h) / H.index();
    unsigned long d = H.order();
    return CycNum::root_of_unity(d, static_cast<long>(j_ * t % d));
}

std::vector<MultCharacter> annihilator(const Subgroup& H) {
    const Field& f = H.field();
    unsigned long d = H.order();
    std::vector<MultCharacter> out;
    out.reserve(H.index());
    for (unsigned long i = 0; i < H.index(); ++i) out.emplace_back(f, i * d);
    return out;
}

std::vector<MultCharacter> extensions(const SubgroupChar& chi) {
    const Subgroup& H = chi.subgroup();
    const Field& f = H.field();
    unsigned long d = H.order();
    std::vector<MultCharacter> out;
    out.reserve(H.index());
    for (unsigned long i = 0; i < H.index(); ++i) out.emplace_back(f, chi.j() + i * d);
    return out;
}

SubgroupChar restrict_char(const MultCharacter& phi, const Subgroup& H) {
    if (&phi.field() != &H.field()) throw std::invalid_argument("character from a different field");
    return {H, phi.k() % H.order()};
}

}  // namespace cftnvm
