#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cftnvm {

// Thrown when an operation would require a cyclotomic order above the
// configured cap (lcm blowup guard).
class OrderLimitError : public std::runtime_error {
public:
    explicit OrderLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

// Global cap on cyclotomic orders. Default 20000.
unsigned long max_cyclotomic_order() noexcept;
void set_max_cyclotomic_order(unsigned long cap);

unsigned long euler_phi(unsigned long n);

// Monic minimal polynomial of a primitive n-th root of unity over Q,
// dense ascending coefficient vector of length phi(n)+1. Requires n >= 1.
std::vector<mpz_class> cyclotomic_polynomial(unsigned long n);

// An element of Q(zeta_n), stored as numerator coefficients on the power
// basis 1, zeta, ..., zeta^{phi(n)-1} over a single positive denominator.
// Invariants: coefficients reduced modulo the n-th cyclotomic polynomial,
// den > 0, gcd(den, content(num)) = 1, and zero has den = 1.
class CycNum {
public:
    CycNum() : CycNum(0L) {}
    CycNum(long value);
    explicit CycNum(mpz_class value);
    explicit CycNum(const mpq_class& value);

    // zeta_n^k; k may be negative, it is taken mod n.
    static CycNum root_of_unity(unsigned long n, long k);
    // coeffs[e] is the coefficient of zeta_n^e; any length is accepted,
    // exponents fold mod n before reduction.
    static CycNum from_exponent_coeffs(unsigned long n, std::vector<mpz_class> coeffs);
    static CycNum from_rational_coeffs(unsigned long n, const std::vector<mpq_class>& coeffs);

    unsigned long order() const noexcept { return order_; }
    const std::vector<mpz_class>& numerators() const noexcept { return num_; }
    const mpz_class& denominator() const noexcept { return den_; }
    // Reduced coefficient of zeta^i as a rational.
    mpq_class coeff(std::size_t i) const;

    bool is_zero() const noexcept;
    bool is_integral() const noexcept { return den_ == 1; }
    bool is_rational() const noexcept;
    mpq_class rational_value() const;  // requires is_rational()

    // Same value expressed in Q(zeta_n); requires order() | n.
    CycNum embedded(unsigned long n) const;

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& rhs);
    CycNum& operator-=(const CycNum& rhs);
    CycNum& operator*=(const CycNum& rhs);
    CycNum& scale(const mpq_class& c);

    friend CycNum operator+(CycNum lhs, const CycNum& rhs) { lhs += rhs; return lhs; }
    friend CycNum operator-(CycNum lhs, const CycNum& rhs) { lhs -= rhs; return lhs; }
    friend CycNum operator*(CycNum lhs, const CycNum& rhs) { lhs *= rhs; return lhs; }

    // Multiplicative inverse; throws std::domain_error on zero.
    CycNum inverse() const;
    friend CycNum operator/(const CycNum& lhs, const CycNum& rhs) { return lhs * rhs.inverse(); }

    // Complex conjugate (the automorphism zeta -> zeta^{-1}).
    CycNum conjugated() const;

    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    // Floating-point image under zeta_n -> exp(2*pi*i/n). Display only.
    std::complex<double> approx() const;
    std::string str() const;

private:
    unsigned long order_ = 1;
    std::vector<mpz_class> num_;  // length phi(order_)
    mpz_class den_ = 1;

    CycNum(unsigned long order, std::vector<mpz_class> num, mpz_class den);
    void canonicalize_fraction();
    friend struct CycNumRaw;
};

inline CycNum conjugate(const CycNum& a) { return a.conjugated(); }
CycNum pow(CycNum base, unsigned long exponent);
std::ostream& operator<<(std::ostream& os, const CycNum& a);

inline std::complex<double> complex_approx(const CycNum& a) { return a.approx(); }

// Dense row-major matrix over the cyclotomic numbers. Labels are optional
// display strings (empty or one per row/column).
class CycMatrix {
public:
    CycMatrix() = default;
    CycMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    CycNum& at(std::size_t i, std::size_t j) { return entries_.at(i * cols_ + j); }
    const CycNum& at(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }

    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;

    // Rows I and columns J, in the given order; indices must be in range.
    CycMatrix submatrix(const std::vector<std::size_t>& I,
                        const std::vector<std::size_t>& J) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<CycNum> entries_;
};

// Exact determinant. Cofactor expansion up to 4x4, fraction-free Bareiss
// elimination beyond; division steps assert exactness.
CycNum det_exact(const CycMatrix& m);

// A nonzero kernel vector of a square singular matrix, normalized so its
// first nonzero coordinate is 1; std::nullopt when the matrix is invertible.
std::optional<std::vector<CycNum>> kernel_vector(const CycMatrix& m);

}  // namespace cftnvm
