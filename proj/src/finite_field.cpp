#include "cftnvm/finite_field.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

namespace cftnvm {

namespace {

std::atomic<unsigned long> g_max_field_size{1UL << 16};

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// Dense ascending polynomials over GF(p); trailing zeros allowed.
using Poly = std::vector<unsigned long>;

std::size_t poly_degree(const Poly& f) {
    std::size_t d = f.size();
    while (d > 0 && f[d - 1] == 0) --d;
    return d == 0 ? 0 : d - 1;
}

bool poly_is_zero(const Poly& f) {
    return std::all_of(f.begin(), f.end(), [](unsigned long c) { return c == 0; });
}

// Remainder of a modulo monic f.
Poly poly_mod(Poly a, const Poly& f, unsigned long p) {
    std::size_t df = poly_degree(f);
    for (std::size_t k = a.size(); k-- > df;) {
        if (a[k] == 0) continue;
        unsigned long c = a[k] % p;
        a[k] = 0;
        for (std::size_t i = 0; i < df; ++i) {
            a[k - df + i] = (a[k - df + i] + c * (p - f[i] % p)) % p;
        }
    }
    a.resize(df);
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, unsigned long p) {
    if (poly_is_zero(a) || poly_is_zero(b)) return Poly(poly_degree(f));
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        }
    }
    return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, unsigned long e, const Poly& f, unsigned long p) {
    Poly r(poly_degree(f));
    if (r.empty()) r.resize(1);
    r[0] = 1 % p;
    while (e > 0) {
        if (e & 1UL) r = poly_mulmod(r, base, f, p);
        e >>= 1UL;
        if (e > 0) base = poly_mulmod(base, base, f, p);
    }
    return r;
}

unsigned long inv_mod(unsigned long a, unsigned long p) {
    long t = 0, new_t = 1;
    long r = static_cast<long>(p), new_r = static_cast<long>(a % p);
    while (new_r != 0) {
        long quot = r / new_r;
        std::swap(t, new_t);
        new_t -= quot * t;
        std::swap(r, new_r);
        new_r -= quot * r;
    }
    long res = t % static_cast<long>(p);
    if (res < 0) res += static_cast<long>(p);
    return static_cast<unsigned long>(res);
}

Poly poly_gcd(Poly a, Poly b, unsigned long p) {
    while (!poly_is_zero(b)) {
        // a mod b with b made monic.
        std::size_t db = poly_degree(b);
        unsigned long lead_inv = inv_mod(b[db], p);
        Poly bm(b.begin(), b.begin() + db + 1);
        for (auto& c : bm) c = c * lead_inv % p;
        Poly r = a;
        for (std::size_t k = r.size(); k-- > db;) {
            if (k >= r.size() || r[k] == 0) continue;
            unsigned long c = r[k];
            r[k] = 0;
            for (std::size_t i = 0; i < db; ++i) {
                r[k - db + i] = (r[k - db + i] + c * (p - bm[i])) % p;
            }
        }
        r.resize(db == 0 ? 0 : db);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<unsigned long> prime_factors(unsigned long n) {
    std::vector<unsigned long> out;
    for (unsigned long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Rabin test: f irreducible over GF(p) of degree m iff x^(p^m) = x (mod f)
// and gcd(x^(p^(m/l)) - x, f) = 1 for every prime l | m. A root scan gives a
// cheap early reject for small p.
bool is_irreducible(const Poly& f, unsigned long p, unsigned long m) {
    if (f[0] == 0) return false;
    for (unsigned long a = 0; a < p; ++a) {
        unsigned long value = 0, power = 1;
        for (unsigned long i = 0; i <= m; ++i) {
            value = (value + f[i] * power) % p;
            power = power * a % p;
        }
        if (value == 0) return false;
    }
    if (m == 1) return true;

    std::vector<unsigned long> proper_exponents;
    for (unsigned long l : prime_factors(m)) proper_exponents.push_back(m / l);
    std::sort(proper_exponents.begin(), proper_exponents.end());

    Poly x{0, 1};
    Poly r = poly_mod(x, f, p);
    for (unsigned long i = 1; i <= m; ++i) {
        r = poly_powmod(std::move(r), p, f, p);  // r = x^(p^i) mod f
        if (std::binary_search(proper_exponents.begin(), proper_exponents.end(), i)) {
            Poly diff = r;
            if (diff.size() < 2) diff.resize(2);
            diff[1] = (diff[1] + p - 1) % p;
            Poly g = poly_gcd(f, std::move(diff), p);
            if (poly_degree(g) != 0) return false;
        }
    }
    Poly xm = poly_mod(x, f, p);
    return r == xm;
}

}  // namespace

unsigned long Field::max_field_size() noexcept { return g_max_field_size.load(); }

void Field::set_max_field_size(unsigned long cap) {
    if (cap < 2) throw std::invalid_argument("field size cap must be at least 2");
    g_max_field_size.store(cap);
}

Field::Field(unsigned long p, unsigned long m) : p_(p), m_(m) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (m < 1) throw std::invalid_argument("extension degree must be at least 1");
    unsigned long cap = g_max_field_size.load();
    unsigned long q = 1;
    for (unsigned long i = 0; i < m; ++i) {
        if (q > cap / p) throw std::invalid_argument("field size exceeds the configured cap");
        q *= p;
    }
    q_ = q;

    if (m == 1) {
        modulus_ = {0, 1};
    } else {
        // Smallest (c_0, ..., c_{m-1}) in lexicographic order, constant term
        // compared first, such that x^m + sum c_i x^i is irreducible.
        std::vector<unsigned long> c(m, 0);
        bool found = false;
        while (!found) {
            Poly f(m + 1);
            for (unsigned long i = 0; i < m; ++i) f[i] = c[i];
            f[m] = 1;
            if (is_irreducible(f, p, m)) {
                modulus_ = std::move(f);
                found = true;
                break;
            }
            // Odometer increment with the last coordinate fastest.
            std::size_t pos = m;
            while (pos > 0) {
                --pos;
                if (++c[pos] < p) break;
                c[pos] = 0;
                if (pos == 0) throw std::logic_error("no irreducible polynomial found");
            }
        }
    }

    // Index <-> coefficient-vector codec: index = sum c_i p^i.
    auto decode = [&](std::uint32_t idx) {
        Poly cs(m_);
        for (unsigned long i = 0; i < m_; ++i) {
            cs[i] = idx % p_;
            idx = static_cast<std::uint32_t>(idx / p_);
        }
        return cs;
    };
    auto encode = [&](const Poly& cs) {
        std::uint32_t idx = 0;
        for (std::size_t i = cs.size(); i-- > 0;) {
            idx = static_cast<std::uint32_t>(idx * p_ + cs[i] % p_);
        }
        return idx;
    };

    // Generator: smallest index whose multiplicative order is exactly q-1.
    std::vector<unsigned long> ls = prime_factors(q_ - 1);
    generator_ = 0;
    for (std::uint32_t cand = 1; cand < q_; ++cand) {
        Poly x = decode(cand);
        bool ok = true;
        for (unsigned long l : ls) {
            Poly r = poly_powmod(x, (q_ - 1) / l, modulus_, p_);
            if (poly_degree(r) == 0 && !r.empty() && r[0] == 1 % p_ &&
                std::all_of(r.begin() + 1, r.end(), [](unsigned long v) { return v == 0; })) {
                ok = false;
                break;
            }
        }
        if (ok) {
            generator_ = cand;
            break;
        }
    }
    if (generator_ == 0 && q_ > 2) throw std::logic_error("no generator found");
    if (q_ == 2) generator_ = 1;

    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    Poly acc(m_);
    acc[0] = 1 % p_;
    Poly g = decode(generator_);
    for (unsigned long t = 0; t < q_ - 1; ++t) {
        std::uint32_t idx = encode(acc);
        exp_[t] = idx;
        log_[idx] = static_cast<std::uint32_t>(t);
        if (t + 1 < q_ - 1) acc = poly_mulmod(acc, g, modulus_, p_);
    }

    // Trace via the defining Frobenius-power sum, evaluated with the tables.
    trace_.assign(q_, 0);
    for (std::uint32_t idx = 1; idx < q_; ++idx) {
        unsigned long t = log_[idx];
        Poly total(m_);
        for (unsigned long i = 0; i < m_; ++i) {
            // generator^(t p^i) has power-basis coefficients decode(exp_[...]).
            unsigned long ti = t;
            for (unsigned long j = 0; j < i; ++j) ti = ti * p_ % (q_ - 1);
            Poly term = decode(exp_[ti]);
            for (unsigned long k = 0; k < m_; ++k) total[k] = (total[k] + term[k]) % p_;
        }
        for (unsigned long k = 1; k < m_; ++k) {
            if (total[k] != 0) throw std::logic_error("trace left the prime subfield");
        }
        trace_[idx] = total[0];
    }
}

void Field::require_member(const FieldElement& a) const {
    if (a.field_ != this) throw std::invalid_argument("element belongs to a different field");
}

FieldElement Field::from_index(std::uint32_t idx) const {
    if (idx >= q_) throw std::out_of_range("element index out of range");
    return {this, idx};
}

FieldElement Field::from_coeffs(const std::vector<unsigned long>& cs) const {
    if (cs.size() > m_) throw std::invalid_argument("coefficient vector longer than the degree");
    std::uint32_t idx = 0;
    for (std::size_t i = cs.size(); i-- > 0;) {
        idx = static_cast<std::uint32_t>(idx * p_ + cs[i] % p_);
    }
    return {this, idx};
}

FieldElement Field::from_integer(long a) const {
    long r = a % static_cast<long>(p_);
    if (r < 0) r += static_cast<long>(p_);
    return {this, static_cast<std::uint32_t>(r)};
}

std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (std::uint32_t i = 0; i < q_; ++i) out.push_back({this, i});
    return out;
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
    require_member(a);
    require_member(b);
    std::uint32_t ia = a.idx_, ib = b.idx_, out = 0, mult = 1;
    for (unsigned long i = 0; i < m_; ++i) {
        unsigned long ca = ia % p_, cb = ib % p_;
        ia /= p_;
        ib /= p_;
        out += static_cast<std::uint32_t>((ca + cb) % p_ * mult);
        mult *= static_cast<std::uint32_t>(p_);
    }
    return {this, out};
}

FieldElement Field::neg(FieldElement a) const {
    require_member(a);
    std::uint32_t ia = a.idx_, out = 0, mult = 1;
    for (unsigned long i = 0; i < m_; ++i) {
        unsigned long ca = ia % p_;
        ia /= p_;
        out += static_cast<std::uint32_t>((p_ - ca) % p_ * mult);
        mult *= static_cast<std::uint32_t>(p_);
    }
    return {this, out};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
    require_member(a);
    require_member(b);
    if (a.idx_ == 0 || b.idx_ == 0) return {this, 0};
    unsigned long t = (static_cast<unsigned long>(log_[a.idx_]) + log_[b.idx_]) % (q_ - 1);
    return {this, exp_[t]};
}

FieldElement Field::inv(FieldElement a) const {
    require_member(a);
    if (a.idx_ == 0) throw std::domain_error("inverse of zero");
    unsigned long t = (q_ - 1 - log_[a.idx_]) % (q_ - 1);
    return {this, exp_[t]};
}

FieldElement Field::pow(FieldElement a, unsigned long e) const {
    require_member(a);
    if (a.idx_ == 0) return e == 0 ? one() : zero();
    unsigned long t = log_[a.idx_] % (q_ - 1);
    unsigned long te = 0;
    // e may exceed q-1; reduce stepwise to avoid overflow.
    e %= (q_ - 1);
    te = t * e % (q_ - 1);
    return {this, exp_[te]};
}

FieldElement Field::frobenius(FieldElement a) const { return pow(a, p_); }

unsigned long Field::trace(FieldElement a) const {
    require_member(a);
    return trace_[a.idx_];
}

unsigned long Field::discrete_log(FieldElement a) const {
    require_member(a);
    if (a.idx_ == 0) throw std::domain_error("discrete logarithm of zero");
    return log_[a.idx_];
}

FieldElement Field::generator_power(long t) const {
    long n = static_cast<long>(q_ - 1);
    long r = ((t % n) + n) % n;
    return {this, exp_[static_cast<std::size_t>(r)]};
}

const Field& FieldElement::field() const {
    if (field_ == nullptr) throw std::logic_error("element has no parent field");
    return *field_;
}

std::vector<unsigned long> FieldElement::coeffs() const {
    const Field& f = field();
    std::vector<unsigned long> cs(f.m());
    std::uint32_t idx = idx_;
    for (unsigned long i = 0; i < f.m(); ++i) {
        cs[i] = idx % f.p();
        idx = static_cast<std::uint32_t>(idx / f.p());
    }
    return cs;
}

std::string FieldElement::str() const {
    const Field& f = field();
    if (f.m() == 1) return std::to_string(idx_);
    auto cs = coeffs();
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i] == 0) continue;
        if (!first) out += "+";
        first = false;
        if (i == 0) {
            out += std::to_string(cs[i]);
        } else {
            if (cs[i] != 1) out += std::to_string(cs[i]) + "*";
            out += "a";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return first ? "0" : out;
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    return field().add(*this, rhs);
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    return field().sub(*this, rhs);
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    return field().mul(*this, rhs);
}

FieldElement FieldElement::operator-() const { return field().neg(*this); }

FieldElement FieldElement::inverse() const { return field().inv(*this); }

std::pair<unsigned long, unsigned long> factor_prime_power(unsigned long q) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    unsigned long p = q;
    for (unsigned long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    unsigned long m = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return {p, m};
}

Field make_field_for_q(unsigned long q) {
    auto [p, m] = factor_prime_power(q);
    return Field(p, m);
}

}  // namespace cftnvm
