#include "cftnvm/nvm.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <utility>

namespace cftnvm {

namespace {

// Advances a size-k index subset of {0..n-1} to its lexicographic successor.
bool next_subset(std::vector<std::size_t>& s, std::size_t n) {
    std::size_t k = s.size();
    for (std::size_t i = k; i-- > 0;) {
        if (s[i] < n - k + i) {
            ++s[i];
            for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

bool is_prime_power(unsigned long q) {
    if (q < 2) return false;
    unsigned long p = q;
    for (unsigned long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    while (q % p == 0) q /= p;
    return q == 1;
}

}  // namespace

std::string to_string(NvmMethod method) {
    switch (method) {
        case NvmMethod::brute: return "brute";
        case NvmMethod::theorem: return "theorem";
        case NvmMethod::both: return "both";
    }
    throw std::logic_error("unreachable");
}

NvmReport nvm_brute(const CycMatrix& M, std::size_t size_cap) {
    if (M.rows() != M.cols()) throw std::invalid_argument("nvm_brute needs a square matrix");
    std::size_t n = M.rows();
    if (n == 0) throw std::invalid_argument("nvm_brute needs a nonempty matrix");
    if (n > size_cap) throw std::invalid_argument("matrix size exceeds the minor enumeration cap");

    NvmReport rep;
    rep.method = NvmMethod::brute;
    rep.holds = true;
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::size_t> I(k);
        std::iota(I.begin(), I.end(), 0);
        do {
            std::vector<std::size_t> J(k);
            std::iota(J.begin(), J.end(), 0);
            do {
                CycNum d = det_exact(M.submatrix(I, J));
                ++rep.minors_checked;
                if (d.is_zero()) {
                    rep.holds = false;
                    rep.witness = MinorWitness{I, J, std::move(d)};
                    return rep;
                }
            } while (next_subset(J, n));
        } while (next_subset(I, n));
    }
    return rep;
}

bool nvm_theorem_index3_nontrivial(const GaussSumSet& g) {
    if (g.chi.is_trivial()) {
        throw std::invalid_argument("the Gauss-sum criterion needs a nontrivial character");
    }
    if (g.sums.size() != 3) {
        throw std::invalid_argument("the Gauss-sum criterion needs exactly three sums");
    }
    if (g.sums[0] == g.sums[1] && g.sums[1] == g.sums[2]) return false;
    return !t_sums(g).t[0].is_zero();
}

std::optional<bool> known_criterion(const SubgroupChar& chi) {
    const Field& f = chi.field();
    unsigned long index = chi.subgroup().index();
    if (chi.subgroup().order() == 1) return f.m() == 1;
    if (index == 1 && chi.is_trivial()) return true;
    if (index == 2 && chi.is_trivial()) return true;
    if (index == 3 && chi.is_trivial()) return f.p() % 3 == 1;
    if (index == 3) return nvm_theorem_index3_nontrivial(gauss_set(chi));
    return std::nullopt;
}

BoundCheck uncertainty_bound_report(const GroupAlgebraElement& f, const SubgroupChar& chi) {
    if (f.is_zero()) throw std::invalid_argument("the support bound needs a nonzero element");
    if (!is_chi_symmetric(f, chi)) throw std::invalid_argument("element is not chi-symmetric");

    const Field& fld = f.field();
    std::size_t supp = support(f).size();
    Spectrum hat = fourier_transform(f);
    std::size_t supp_hat = 0;
    for (const auto& v : hat.values()) {
        if (!v.is_zero()) ++supp_hat;
    }

    unsigned long q = fld.q();
    unsigned long h = chi.subgroup().order();
    unsigned long bound;
    if (!chi.is_trivial()) {
        bound = q + h - 1;
    } else {
        bool zero_at_0 = f[fld.zero()].is_zero();
        bool hat_zero_at_0 = hat.at_param(fld.zero()).is_zero();
        if (zero_at_0 && hat_zero_at_0) {
            bound = q + 2 * h - 1;
        } else if (zero_at_0 || hat_zero_at_0) {
            bound = q + h;
        } else {
            bound = q + 1;
        }
    }
    return BoundCheck{supp, supp_hat, bound, supp + supp_hat >= bound};
}

bool uncertainty_bound_holds(const GroupAlgebraElement& f, const SubgroupChar& chi) {
    return uncertainty_bound_report(f, chi).holds;
}

GroupAlgebraElement violation_witness(const CftMatrix& M, const MinorWitness& w,
                                      const SubgroupChar& chi) {
    if (w.rows.size() != w.cols.size() || w.rows.empty()) {
        throw std::invalid_argument("witness index sets must be nonempty and equal-sized");
    }
    auto kernel = kernel_vector(M.matrix.submatrix(w.rows, w.cols));
    if (!kernel) throw std::invalid_argument("submatrix is nonsingular");

    const Field& fld = chi.field();
    GroupAlgebraElement f(fld);
    CycNum subgroup_size(static_cast<long>(chi.subgroup().order()));
    for (std::size_t t = 0; t < w.cols.size(); ++t) {
        const FieldElement& r = M.R.at(w.cols[t]);
        const CycNum& c = (*kernel)[t];
        if (r.is_zero()) {
            // The matrix column at the zero representative carries a factor
            // |H| that the one-point orbit does not; fold it into the value.
            f[r] = subgroup_size * c;
        } else {
            for (const auto& h : chi.subgroup().elements()) f[fld.mul(h, r)] = chi(h) * c;
        }
    }

    if (f.is_zero() || !is_chi_symmetric(f, chi)) {
        throw std::logic_error("violation witness construction is inconsistent");
    }
    Spectrum hat = fourier_transform(f);
    for (std::size_t t = 0; t < w.rows.size(); ++t) {
        if (!hat.at_param(M.S.at(w.rows[t])).is_zero()) {
            throw std::logic_error("violation witness transform does not vanish where claimed");
        }
    }
    if (uncertainty_bound_holds(f, chi)) {
        throw std::logic_error("violation witness does not break the support bound");
    }
    return f;
}

NvmReport nvm_instance(const SubgroupChar& chi, NvmMethod method) {
    const Field& fld = chi.field();
    NvmReport rep;
    rep.q = fld.q();
    rep.p = fld.p();
    rep.m = fld.m();
    rep.index = chi.subgroup().index();
    rep.chi_j = chi.j();
    rep.method = method;

    if (method != NvmMethod::brute) {
        rep.theorem_prediction = known_criterion(chi);
        if (method == NvmMethod::theorem && !rep.theorem_prediction) {
            throw std::invalid_argument("no closed-form criterion applies to this instance");
        }
    }
    if (method == NvmMethod::theorem) {
        rep.holds = *rep.theorem_prediction;
        return rep;
    }

    NvmReport brute = nvm_brute(cft_matrix(chi).matrix);
    rep.holds = brute.holds;
    rep.witness = std::move(brute.witness);
    rep.minors_checked = brute.minors_checked;
    if (method == NvmMethod::both && rep.theorem_prediction) {
        rep.agreement = (*rep.theorem_prediction == rep.holds);
    }
    return rep;
}

std::vector<NvmReport> scan_range(unsigned long q_max, unsigned long index,
                                  CharSelector chars, unsigned threads) {
    if (q_max > 256) throw std::invalid_argument("scan range is capped at q_max = 256");
    if (index == 0) throw std::invalid_argument("subgroup index must be positive");

    struct Instance {
        unsigned long q;
        unsigned long j;
    };
    std::vector<Instance> instances;
    for (unsigned long q = 2; q <= q_max; ++q) {
        if (!is_prime_power(q) || (q - 1) % index != 0) continue;
        unsigned long d = (q - 1) / index;
        for (unsigned long j = 0; j < d; ++j) {
            if (chars == CharSelector::trivial && j != 0) continue;
            if (chars == CharSelector::nontrivial && j == 0) continue;
            instances.push_back({q, j});
        }
    }

    std::vector<NvmReport> out(instances.size());
    auto work = [&](std::size_t i) {
        Field f = make_field_for_q(instances[i].q);
        SubgroupChar chi(Subgroup(f, index), instances[i].j);
        NvmReport rep = nvm_instance(chi, NvmMethod::both);
        if (!rep.theorem_prediction) rep.method = NvmMethod::brute;
        out[i] = std::move(rep);
    };

    if (threads <= 1 || instances.size() < 2) {
        for (std::size_t i = 0; i < instances.size(); ++i) work(i);
        return out;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto runner = [&] {
        try {
            for (std::size_t i = next.fetch_add(1); i < instances.size(); i = next.fetch_add(1)) {
                work(i);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next.store(instances.size());
        }
    };
    std::vector<std::thread> pool;
    std::size_t workers = std::min<std::size_t>(threads, instances.size());
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(runner);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace cftnvm
