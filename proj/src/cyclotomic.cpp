#include "cftnvm/cyclotomic.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <utility>

namespace cftnvm {

namespace {

std::atomic<unsigned long> g_max_order{20000};

void check_order(unsigned long n) {
    if (n == 0) throw std::invalid_argument("cyclotomic order must be positive");
    unsigned long cap = g_max_order.load();
    if (n > cap) {
        throw OrderLimitError("cyclotomic order " + std::to_string(n) +
                              " exceeds the configured cap " + std::to_string(cap));
    }
}

unsigned long gcd_ul(unsigned long a, unsigned long b) {
    while (b != 0) {
        unsigned long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::vector<std::pair<unsigned long, unsigned>> factorize(unsigned long n) {
    std::vector<std::pair<unsigned long, unsigned>> out;
    for (unsigned long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

unsigned long radical(unsigned long n) {
    unsigned long r = 1;
    for (const auto& [p, e] : factorize(n)) r *= p;
    return r;
}

std::vector<unsigned long> divisors(unsigned long n) {
    std::vector<unsigned long> out{1};
    for (const auto& [p, e] : factorize(n)) {
        std::size_t base = out.size();
        unsigned long pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Dense ascending integer polynomials, monic divisor; asserts exactness.
std::vector<mpz_class> poly_div_exact_monic(const std::vector<mpz_class>& f,
                                            const std::vector<mpz_class>& g) {
    std::size_t dg = g.size() - 1;
    if (f.size() < g.size()) throw std::logic_error("polynomial division underflow");
    std::vector<mpz_class> work = f;
    std::vector<mpz_class> res(f.size() - dg);
    for (std::size_t k = res.size(); k-- > 0;) {
        res[k] = work[k + dg];
        if (res[k] != 0) {
            for (std::size_t i = 0; i < dg; ++i) {
                work[k + i] -= res[k] * g[i];
            }
        }
    }
    for (std::size_t i = 0; i < dg; ++i) {
        if (work[i] != 0) throw std::logic_error("inexact cyclotomic division");
    }
    return res;
}

struct CycloData {
    unsigned long phi = 0;
    std::vector<mpz_class> poly;  // monic, size phi + 1
    // Nonzero coefficients below the leading term, for reduction.
    std::vector<std::pair<std::size_t, mpz_class>> lower;
};

void fill_lower(CycloData& d) {
    for (std::size_t i = 0; i < d.phi; ++i) {
        if (d.poly[i] != 0) d.lower.emplace_back(i, d.poly[i]);
    }
}

// Cache of cyclotomic polynomials. All divisors of a requested order are
// computed ascending under one lock, so entries only depend on earlier ones.
const CycloData& cyclo_data(unsigned long n) {
    static std::mutex mu;
    static std::map<unsigned long, std::unique_ptr<CycloData>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
    for (unsigned long d : divisors(n)) {
        if (cache.count(d)) continue;
        auto entry = std::make_unique<CycloData>();
        if (d == 1) {
            entry->poly = {mpz_class(-1), mpz_class(1)};
        } else {
            unsigned long rad = radical(d);
            if (rad != d) {
                const auto& sub = cache.at(rad)->poly;
                entry->poly.assign((sub.size() - 1) * (d / rad) + 1, mpz_class(0));
                for (std::size_t i = 0; i < sub.size(); ++i) {
                    entry->poly[i * (d / rad)] = sub[i];
                }
            } else {
                std::vector<mpz_class> f(d + 1);
                f[0] = -1;
                f[d] = 1;
                for (unsigned long e : divisors(d)) {
                    if (e == d) continue;
                    f = poly_div_exact_monic(f, cache.at(e)->poly);
                }
                entry->poly = std::move(f);
            }
        }
        entry->phi = entry->poly.size() - 1;
        fill_lower(*entry);
        cache.emplace(d, std::move(entry));
    }
    return *cache.at(n);
}

// In-place reduction of an exponent-coefficient vector modulo Phi_n.
void reduce_mod_cyclo(std::vector<mpz_class>& v, const CycloData& data) {
    std::size_t phi = data.phi;
    if (v.size() < phi) {
        v.resize(phi);
        return;
    }
    for (std::size_t e = v.size(); e-- > phi;) {
        if (v[e] == 0) continue;
        mpz_class c = std::move(v[e]);
        v[e] = 0;
        for (const auto& [idx, coef] : data.lower) {
            mpz_submul(v[e - phi + idx].get_mpz_t(), c.get_mpz_t(), coef.get_mpz_t());
        }
    }
    v.resize(phi);
}

unsigned long lcm_checked(unsigned long a, unsigned long b) {
    unsigned long l = a / gcd_ul(a, b) * b;
    check_order(l);
    return l;
}

using QPoly = std::vector<mpq_class>;  // dense ascending, trimmed

void qp_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] != 0) r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

QPoly qp_sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qp_trim(a);
    return a;
}

// Quotient and remainder of a by nonzero b.
std::pair<QPoly, QPoly> qp_divmod(QPoly a, const QPoly& b) {
    qp_trim(a);
    QPoly q;
    if (a.size() >= b.size()) {
        q.assign(a.size() - b.size() + 1, mpq_class(0));
        mpq_class lead_inv = 1 / b.back();
        for (std::size_t k = q.size(); k-- > 0;) {
            mpq_class c = a[k + b.size() - 1] * lead_inv;
            q[k] = c;
            if (c != 0) {
                for (std::size_t i = 0; i + 1 < b.size(); ++i) {
                    a[k + i] -= c * b[i];
                }
            }
            a[k + b.size() - 1] = 0;
        }
    }
    qp_trim(a);
    return {std::move(q), std::move(a)};
}

}  // namespace

unsigned long max_cyclotomic_order() noexcept { return g_max_order.load(); }

void set_max_cyclotomic_order(unsigned long cap) {
    if (cap == 0) throw std::invalid_argument("order cap must be positive");
    g_max_order.store(cap);
}

unsigned long euler_phi(unsigned long n) {
    if (n == 0) throw std::invalid_argument("euler_phi(0)");
    unsigned long r = n;
    for (const auto& [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

std::vector<mpz_class> cyclotomic_polynomial(unsigned long n) {
    check_order(n);
    return cyclo_data(n).poly;
}

CycNum::CycNum(unsigned long order, std::vector<mpz_class> num, mpz_class den)
    : order_(order), num_(std::move(num)), den_(std::move(den)) {}

CycNum::CycNum(long value) : order_(1), num_(1), den_(1) { num_[0] = value; }

CycNum::CycNum(mpz_class value) : order_(1), num_(1), den_(1) { num_[0] = std::move(value); }

CycNum::CycNum(const mpq_class& value) : order_(1), num_(1), den_(1) {
    mpq_class v = value;
    v.canonicalize();
    num_[0] = v.get_num();
    den_ = v.get_den();
}

CycNum CycNum::root_of_unity(unsigned long n, long k) {
    check_order(n);
    long nl = static_cast<long>(n);
    long kk = ((k % nl) + nl) % nl;
    std::vector<mpz_class> coeffs(static_cast<std::size_t>(kk) + 1);
    coeffs.back() = 1;
    return from_exponent_coeffs(n, std::move(coeffs));
}

CycNum CycNum::from_exponent_coeffs(unsigned long n, std::vector<mpz_class> coeffs) {
    check_order(n);
    const CycloData& data = cyclo_data(n);
    if (coeffs.size() > n) {
        std::vector<mpz_class> folded(n);
        for (std::size_t e = 0; e < coeffs.size(); ++e) {
            if (coeffs[e] != 0) folded[e % n] += coeffs[e];
        }
        coeffs = std::move(folded);
    }
    reduce_mod_cyclo(coeffs, data);
    return CycNum(n, std::move(coeffs), mpz_class(1));
}

CycNum CycNum::from_rational_coeffs(unsigned long n, const std::vector<mpq_class>& coeffs) {
    check_order(n);
    std::size_t phi = cyclo_data(n).phi;
    if (coeffs.size() > phi) {
        throw std::invalid_argument("coefficient vector longer than the power basis");
    }
    std::vector<mpq_class> canon(coeffs);
    for (auto& c : canon) c.canonicalize();
    mpz_class den = 1;
    for (const auto& c : canon) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> num(phi);
    for (std::size_t i = 0; i < canon.size(); ++i) {
        num[i] = canon[i].get_num() * (den / canon[i].get_den());
    }
    CycNum out(n, std::move(num), std::move(den));
    out.canonicalize_fraction();
    return out;
}

mpq_class CycNum::coeff(std::size_t i) const {
    if (i >= num_.size()) throw std::out_of_range("basis coefficient index out of range");
    mpq_class q(num_[i], den_);
    q.canonicalize();
    return q;
}

bool CycNum::is_zero() const noexcept {
    for (const auto& c : num_) {
        if (c != 0) return false;
    }
    return true;
}

bool CycNum::is_rational() const noexcept {
    for (std::size_t i = 1; i < num_.size(); ++i) {
        if (num_[i] != 0) return false;
    }
    return true;
}

mpq_class CycNum::rational_value() const {
    if (!is_rational()) throw std::domain_error("value is not rational");
    mpq_class q(num_[0], den_);
    q.canonicalize();
    return q;
}

CycNum CycNum::embedded(unsigned long n) const {
    if (n == order_) return *this;
    if (n % order_ != 0) throw std::invalid_argument("embedding order must be a multiple");
    check_order(n);
    unsigned long stride = n / order_;
    std::vector<mpz_class> coeffs(static_cast<std::size_t>(num_.size() - 1) * stride + 1);
    for (std::size_t i = 0; i < num_.size(); ++i) coeffs[i * stride] = num_[i];
    const CycloData& data = cyclo_data(n);
    reduce_mod_cyclo(coeffs, data);
    CycNum out(n, std::move(coeffs), den_);
    out.canonicalize_fraction();
    return out;
}

void CycNum::canonicalize_fraction() {
    bool zero = true;
    for (const auto& c : num_) {
        if (c != 0) {
            zero = false;
            break;
        }
    }
    if (zero) {
        den_ = 1;
        return;
    }
    if (den_ == 1) return;
    mpz_class g = den_;
    for (const auto& c : num_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) return;
    }
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

CycNum CycNum::operator-() const {
    CycNum out = *this;
    for (auto& c : out.num_) c = -c;
    return out;
}

CycNum& CycNum::operator+=(const CycNum& rhs) {
    if (order_ != rhs.order_) {
        unsigned long n = lcm_checked(order_, rhs.order_);
        *this = embedded(n);
        return *this += rhs.embedded(n);
    }
    if (den_ == 1 && rhs.den_ == 1) {
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += rhs.num_[i];
        return *this;
    }
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den_.get_mpz_t(), rhs.den_.get_mpz_t());
    mpz_class fa = l / den_;
    mpz_class fb = l / rhs.den_;
    for (std::size_t i = 0; i < num_.size(); ++i) {
        num_[i] = num_[i] * fa + rhs.num_[i] * fb;
    }
    den_ = l;
    canonicalize_fraction();
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& rhs) {
    if (order_ != rhs.order_) {
        unsigned long n = lcm_checked(order_, rhs.order_);
        *this = embedded(n);
        return *this -= rhs.embedded(n);
    }
    if (den_ == 1 && rhs.den_ == 1) {
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] -= rhs.num_[i];
        return *this;
    }
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den_.get_mpz_t(), rhs.den_.get_mpz_t());
    mpz_class fa = l / den_;
    mpz_class fb = l / rhs.den_;
    for (std::size_t i = 0; i < num_.size(); ++i) {
        num_[i] = num_[i] * fa - rhs.num_[i] * fb;
    }
    den_ = l;
    canonicalize_fraction();
    return *this;
}

CycNum& CycNum::operator*=(const CycNum& rhs) {
    if (this == &rhs) {
        CycNum copy = rhs;
        return *this *= copy;
    }
    unsigned long n = order_ == rhs.order_ ? order_ : lcm_checked(order_, rhs.order_);
    if (order_ != n) *this = embedded(n);
    CycNum btmp;
    const CycNum* b = &rhs;
    if (rhs.order_ != n) {
        btmp = rhs.embedded(n);
        b = &btmp;
    }

    std::vector<std::size_t> nza, nzb;
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] != 0) nza.push_back(i);
    }
    for (std::size_t i = 0; i < b->num_.size(); ++i) {
        if (b->num_[i] != 0) nzb.push_back(i);
    }
    if (nza.empty() || nzb.empty()) {
        num_.assign(cyclo_data(n).phi, mpz_class(0));
        den_ = 1;
        return *this;
    }
    std::vector<mpz_class> res(nza.back() + nzb.back() + 1);
    for (std::size_t i : nza) {
        for (std::size_t j : nzb) {
            mpz_addmul(res[i + j].get_mpz_t(), num_[i].get_mpz_t(), b->num_[j].get_mpz_t());
        }
    }
    reduce_mod_cyclo(res, cyclo_data(n));
    num_ = std::move(res);
    den_ *= b->den_;
    if (den_ != 1) canonicalize_fraction();
    return *this;
}

CycNum& CycNum::scale(const mpq_class& c) {
    mpq_class cc = c;
    cc.canonicalize();
    for (auto& v : num_) v *= cc.get_num();
    den_ *= cc.get_den();
    canonicalize_fraction();
    return *this;
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (is_rational()) {
        mpq_class v = rational_value();
        mpq_class inv(v.get_den(), v.get_num());
        inv.canonicalize();
        return CycNum(inv);
    }
    const CycloData& data = cyclo_data(order_);
    QPoly phi_poly(data.poly.size());
    for (std::size_t i = 0; i < data.poly.size(); ++i) phi_poly[i] = mpq_class(data.poly[i]);
    QPoly a(num_.size());
    for (std::size_t i = 0; i < num_.size(); ++i) a[i] = mpq_class(num_[i], den_);
    qp_trim(a);

    // Extended Euclid in Q[x]: maintains s1 * a == r1 (mod Phi).
    QPoly r0 = phi_poly, r1 = a;
    QPoly s0, s1{mpq_class(1)};
    while (r1.size() > 1) {
        auto [q, r] = qp_divmod(std::move(r0), r1);
        QPoly s2 = qp_sub(std::move(s0), qp_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw std::logic_error("noninvertible nonzero element");
    mpq_class c_inv = 1 / r1[0];
    QPoly s = s1;
    for (auto& v : s) v *= c_inv;

    mpz_class den = 1;
    for (const auto& v : s) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    std::vector<mpz_class> num(data.phi);
    for (std::size_t i = 0; i < s.size(); ++i) {
        num[i] = s[i].get_num() * (den / s[i].get_den());
    }
    CycNum out(order_, std::move(num), std::move(den));
    out.canonicalize_fraction();
    return out;
}

CycNum CycNum::conjugated() const {
    unsigned long n = order_;
    std::vector<mpz_class> coeffs(n);
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] != 0) coeffs[(n - i) % n] += num_[i];
    }
    reduce_mod_cyclo(coeffs, cyclo_data(n));
    CycNum out(n, std::move(coeffs), den_);
    out.canonicalize_fraction();
    return out;
}

bool operator==(const CycNum& a, const CycNum& b) {
    if (a.order_ == b.order_) return a.den_ == b.den_ && a.num_ == b.num_;
    unsigned long n = lcm_checked(a.order_, b.order_);
    CycNum ea = a.embedded(n);
    CycNum eb = b.embedded(n);
    return ea.den_ == eb.den_ && ea.num_ == eb.num_;
}

std::complex<double> CycNum::approx() const {
    long double re = 0, im = 0;
    const long double tau = 6.283185307179586476925286766559L;
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        long double c = static_cast<long double>(num_[i].get_d());
        long double ang = tau * static_cast<long double>(i) / static_cast<long double>(order_);
        re += c * std::cos(ang);
        im += c * std::sin(ang);
    }
    long double d = static_cast<long double>(den_.get_d());
    return {static_cast<double>(re / d), static_cast<double>(im / d)};
}

std::string CycNum::str() const {
    if (is_rational()) {
        mpq_class v = rational_value();
        return v.get_str();
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        mpz_class c = num_[i];
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (i == 0) {
            os << c.get_str();
        } else {
            if (c != 1) os << c.get_str() << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    std::string body = os.str();
    std::string head = den_ == 1 ? body : "(" + body + ")/" + den_.get_str();
    return head + " [z = zeta_" + std::to_string(order_) + "]";
}

std::ostream& operator<<(std::ostream& os, const CycNum& a) { return os << a.str(); }

CycNum pow(CycNum base, unsigned long exponent) {
    CycNum result(1L);
    while (exponent > 0) {
        if (exponent & 1UL) result *= base;
        exponent >>= 1UL;
        if (exponent > 0) base *= base;
    }
    return result;
}

CycMatrix CycMatrix::submatrix(const std::vector<std::size_t>& I,
                               const std::vector<std::size_t>& J) const {
    CycMatrix out(I.size(), J.size());
    for (std::size_t a = 0; a < I.size(); ++a) {
        for (std::size_t b = 0; b < J.size(); ++b) {
            out.at(a, b) = at(I[a], J[b]);
        }
    }
    if (row_labels.size() == rows_) {
        for (std::size_t a : I) out.row_labels.push_back(row_labels[a]);
    }
    if (col_labels.size() == cols_) {
        for (std::size_t b : J) out.col_labels.push_back(col_labels[b]);
    }
    return out;
}

namespace {

// Entries as a mutable grid at one common cyclotomic order.
std::vector<std::vector<CycNum>> unified_grid(const CycMatrix& m) {
    unsigned long n = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            n = lcm_checked(n, m.at(i, j).order());
        }
    }
    std::vector<std::vector<CycNum>> grid(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        grid[i].reserve(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            grid[i].push_back(m.at(i, j).embedded(n));
        }
    }
    return grid;
}

CycNum det_cofactor(const std::vector<std::vector<CycNum>>& g, std::vector<std::size_t> rows,
                    std::vector<std::size_t> cols) {
    std::size_t k = rows.size();
    if (k == 0) return CycNum(1L);
    if (k == 1) return g[rows[0]][cols[0]];
    CycNum acc(0L);
    std::size_t r = rows[0];
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t t = 0; t < k; ++t) {
        const CycNum& e = g[r][cols[t]];
        if (e.is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        sub_cols.reserve(k - 1);
        for (std::size_t u = 0; u < k; ++u) {
            if (u != t) sub_cols.push_back(cols[u]);
        }
        CycNum term = e * det_cofactor(g, sub_rows, sub_cols);
        if (t % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return acc;
}

// Clears denominators row by row; returns the accumulated factor.
mpz_class clear_row_denominators(std::vector<std::vector<CycNum>>& grid) {
    mpz_class total = 1;
    for (auto& row : grid) {
        mpz_class l = 1;
        for (const auto& e : row) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.denominator().get_mpz_t());
        }
        if (l != 1) {
            for (auto& e : row) e.scale(mpq_class(l));
            total *= l;
        }
    }
    return total;
}

CycNum det_bareiss(std::vector<std::vector<CycNum>> grid) {
    std::size_t n = grid.size();
    mpz_class denom_acc = clear_row_denominators(grid);
    int sign = 1;
    CycNum prev_inv;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && grid[piv][k].is_zero()) ++piv;
        if (piv == n) return CycNum(0L);
        if (piv != k) {
            std::swap(grid[piv], grid[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                CycNum v = grid[i][j] * grid[k][k] - grid[i][k] * grid[k][j];
                if (k > 0) {
                    v *= prev_inv;
                    if (!v.is_integral()) {
                        throw std::logic_error("inexact division in fraction-free elimination");
                    }
                }
                grid[i][j] = std::move(v);
            }
            grid[i][k] = CycNum(0L);
        }
        prev_inv = grid[k][k].inverse();
    }
    CycNum det = grid[n - 1][n - 1];
    if (sign < 0) det = -det;
    if (denom_acc != 1) det.scale(mpq_class(1, denom_acc));
    return det;
}

}  // namespace

CycNum det_exact(const CycMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a nonsquare matrix");
    std::size_t n = m.rows();
    if (n == 0) return CycNum(1L);
    auto grid = unified_grid(m);
    if (n <= 4) {
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = i;
        return det_cofactor(grid, idx, idx);
    }
    return det_bareiss(std::move(grid));
}

std::optional<std::vector<CycNum>> kernel_vector(const CycMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("kernel_vector expects a square matrix");
    std::size_t n = m.rows();
    if (n == 0) return std::nullopt;
    auto grid = unified_grid(m);

    // Reduced row echelon form with exact division.
    std::vector<std::optional<std::size_t>> pivot_row(n);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t r = row;
        while (r < n && grid[r][col].is_zero()) ++r;
        if (r == n) continue;
        std::swap(grid[r], grid[row]);
        CycNum inv = grid[row][col].inverse();
        for (std::size_t j = col; j < n; ++j) grid[row][j] *= inv;
        for (std::size_t r2 = 0; r2 < n; ++r2) {
            if (r2 == row || grid[r2][col].is_zero()) continue;
            CycNum c = grid[r2][col];
            for (std::size_t j = col; j < n; ++j) {
                grid[r2][j] -= c * grid[row][j];
            }
        }
        pivot_row[col] = row;
        ++row;
    }
    if (row == n) return std::nullopt;

    std::size_t free_col = 0;
    while (pivot_row[free_col].has_value()) ++free_col;
    std::vector<CycNum> v(n, CycNum(0L));
    v[free_col] = CycNum(1L);
    for (std::size_t col = 0; col < n; ++col) {
        if (pivot_row[col]) v[col] = -grid[*pivot_row[col]][free_col];
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!v[i].is_zero()) {
            CycNum inv = v[i].inverse();
            for (auto& c : v) c *= inv;
            break;
        }
    }
    return v;
}

}  // namespace cftnvm
