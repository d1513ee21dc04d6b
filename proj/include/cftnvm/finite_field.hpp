#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cftnvm {

class Field;

// An element of GF(p^m), identified by the integer encoding of its
// coefficient vector: index = sum_i c_i p^i. Plain value; the parent field
// must outlive it.
class FieldElement {
public:
    FieldElement() = default;

    const Field& field() const;
    std::uint32_t index() const noexcept { return idx_; }
    std::vector<unsigned long> coeffs() const;
    bool is_zero() const noexcept { return idx_ == 0; }
    std::string str() const;

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator-() const;
    FieldElement inverse() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_ == b.field_ && a.idx_ == b.idx_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    friend class Field;
    FieldElement(const Field* field, std::uint32_t idx) : field_(field), idx_(idx) {}
    const Field* field_ = nullptr;
    std::uint32_t idx_ = 0;
};

// GF(p^m) with a deterministic model: the lexicographically smallest monic
// irreducible modulus (coefficients compared from the constant term up) and
// the smallest generator of the multiplicative group. Immutable after
// construction; exp/log/trace tables are built once.
class Field {
public:
    Field(unsigned long p, unsigned long m);

    unsigned long p() const noexcept { return p_; }
    unsigned long m() const noexcept { return m_; }
    unsigned long q() const noexcept { return q_; }
    // Monic modulus, ascending coefficients, length m+1. For m = 1 this is
    // the polynomial x.
    const std::vector<unsigned long>& modulus() const noexcept { return modulus_; }

    FieldElement zero() const { return {this, 0}; }
    FieldElement one() const { return {this, 1}; }
    FieldElement generator() const { return {this, generator_}; }

    FieldElement from_index(std::uint32_t idx) const;
    FieldElement from_coeffs(const std::vector<unsigned long>& cs) const;
    // The image of the integer a in the prime subfield.
    FieldElement from_integer(long a) const;
    // All q elements, ascending index order (zero first).
    std::vector<FieldElement> elements() const;

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;
    FieldElement pow(FieldElement a, unsigned long e) const;
    FieldElement frobenius(FieldElement a) const;

    // Absolute trace, as a residue in [0, p).
    unsigned long trace(FieldElement a) const;
    // The unique t in [0, q-1) with generator^t = a; throws on zero.
    unsigned long discrete_log(FieldElement a) const;
    // generator^t for any t (reduced mod q-1).
    FieldElement generator_power(long t) const;

    friend bool operator==(const Field& a, const Field& b) {
        return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_ &&
               a.generator_ == b.generator_;
    }

    static unsigned long max_field_size() noexcept;
    static void set_max_field_size(unsigned long cap);

private:
    unsigned long p_ = 0;
    unsigned long m_ = 0;
    unsigned long q_ = 0;
    std::vector<unsigned long> modulus_;
    std::uint32_t generator_ = 0;
    std::vector<std::uint32_t> exp_;    // exp_[t] = index of generator^t, t in [0, q-1)
    std::vector<std::uint32_t> log_;    // inverse of exp_; log_[0] unused
    std::vector<std::uint32_t> trace_;  // trace_[idx] in [0, p)

    void require_member(const FieldElement& a) const;
};

// Convenience for q given as a prime power; throws if q is not one.
std::pair<unsigned long, unsigned long> factor_prime_power(unsigned long q);
Field make_field_for_q(unsigned long q);

}  // namespace cftnvm
