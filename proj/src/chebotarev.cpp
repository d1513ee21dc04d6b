#include "cftnvm/nvm.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cftnvm {

namespace {

// A minor of (zeta_p^{ij}) is a signed sum of at most k! p-th roots of
// unity. It is stored on the redundant spanning set 1, zeta, ..., zeta^{p-1}
// with int64 coordinates (L1 mass <= 13! fits comfortably); the value is
// zero exactly when all p coordinates agree, since the only relation among
// the powers is that they sum to zero.
using Residue = std::vector<std::int64_t>;

bool residue_is_zero(const Residue& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] != v[0]) return false;
    }
    return true;
}

bool is_small_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// Depth-first search over row subsets in increasing order. At depth k the
// table holds the minors of the current k-row prefix against every size-k
// column subset, so each new row extends them all with one Laplace
// expansion along the bottom row. Every (rows, cols) pair is visited once:
// C(2p, p) minors including the empty one.
class MinorSearch {
public:
    explicit MinorSearch(unsigned long prime) : p_(prime) {
        std::uint32_t full = 1u << p_;
        masks_.resize(p_ + 1);
        rank_.assign(full, 0);
        for (std::uint32_t mask = 0; mask < full; ++mask) {
            unsigned k = static_cast<unsigned>(std::popcount(mask));
            rank_[mask] = static_cast<std::uint32_t>(masks_[k].size());
            masks_[k].push_back(mask);
        }
        tables_.resize(p_ + 1);
        for (unsigned long k = 0; k <= p_; ++k) {
            tables_[k].assign(masks_[k].size(), Residue(p_, 0));
        }
        tables_[0][0][0] = 1;
        checked_ = 1;
    }

    bool run() { return expand(0); }

    unsigned long long checked() const { return checked_; }
    std::optional<MinorWitness> take_witness() { return std::move(witness_); }

private:
    bool expand(std::size_t depth) {
        std::size_t first = rows_.empty() ? 0 : rows_.back() + 1;
        for (std::size_t r = first; r < p_; ++r) {
            rows_.push_back(r);
            if (!fill(depth + 1, r)) return false;
            if (!expand(depth + 1)) return false;
            rows_.pop_back();
        }
        return true;
    }

    bool fill(std::size_t k, std::size_t r) {
        const auto& prev = tables_[k - 1];
        auto& cur = tables_[k];
        for (std::size_t idx = 0; idx < masks_[k].size(); ++idx) {
            std::uint32_t mask = masks_[k][idx];
            Residue& out = cur[idx];
            std::fill(out.begin(), out.end(), 0);
            std::uint32_t rest = mask;
            std::size_t c = 0;
            while (rest) {
                std::uint32_t low = rest & (~rest + 1u);
                std::size_t j = static_cast<std::size_t>(std::countr_zero(low));
                const Residue& sub = prev[rank_[mask ^ low]];
                std::size_t shift = (r * j) % p_;
                bool negate = ((k - 1) + c) & 1u;
                for (std::size_t i = 0; i < p_; ++i) {
                    std::size_t t = i + shift;
                    if (t >= p_) t -= p_;
                    if (negate) {
                        out[t] -= sub[i];
                    } else {
                        out[t] += sub[i];
                    }
                }
                rest ^= low;
                ++c;
            }
            ++checked_;
            if (residue_is_zero(out)) {
                record(mask);
                return false;
            }
        }
        return true;
    }

    void record(std::uint32_t mask) {
        MinorWitness w;
        w.rows = rows_;
        for (std::size_t j = 0; j < p_; ++j) {
            if (mask & (1u << j)) w.cols.push_back(j);
        }
        w.determinant = CycNum(0L);
        witness_ = std::move(w);
    }

    unsigned long p_;
    std::vector<std::vector<std::uint32_t>> masks_;
    std::vector<std::uint32_t> rank_;
    std::vector<std::vector<Residue>> tables_;
    std::vector<std::size_t> rows_;
    unsigned long long checked_ = 0;
    std::optional<MinorWitness> witness_;
};

}  // namespace

NvmReport chebotarev_check(unsigned long p) {
    if (!is_small_prime(p)) throw std::invalid_argument("chebotarev_check needs a prime");
    if (p > 13) throw std::invalid_argument("prime exceeds the exhaustive minor cap of 13");

    MinorSearch search(p);
    bool holds = search.run();

    NvmReport rep;
    rep.q = p;
    rep.p = p;
    rep.m = 1;
    rep.index = p - 1;
    rep.chi_j = 0;
    rep.method = NvmMethod::brute;
    rep.holds = holds;
    rep.minors_checked = search.checked();
    if (!holds) rep.witness = search.take_witness();
    return rep;
}

}  // namespace cftnvm
