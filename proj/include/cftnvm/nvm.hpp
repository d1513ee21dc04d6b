#pragma once

#include "cftnvm/transform.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cftnvm {

// A certificate locating one square submatrix: row subset I, column subset
// J (equal sizes, both ascending) and its exact determinant. A violation
// witness carries determinant zero.
struct MinorWitness {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    CycNum determinant;
};

enum class NvmMethod { brute, theorem, both };
std::string to_string(NvmMethod method);

// Outcome of one nonvanishing-minors decision, with enough descriptors to
// reproduce the instance.
struct NvmReport {
    unsigned long q = 0;
    unsigned long p = 0;
    unsigned long m = 0;
    unsigned long index = 0;
    unsigned long chi_j = 0;
    NvmMethod method = NvmMethod::brute;
    bool holds = false;
    std::optional<bool> theorem_prediction;
    std::optional<bool> agreement;
    std::optional<MinorWitness> witness;
    unsigned long long minors_checked = 0;
};

// Exhaustive exact decision: every square submatrix of M must have nonzero
// determinant. Minors are visited by size ascending, then (I, J) pairs in
// lexicographic order; the first zero minor stops the search and becomes
// the witness.
NvmReport nvm_brute(const CycMatrix& M, std::size_t size_cap = 12);

// Closed-form criterion for an index-3 subgroup with nontrivial character:
// true exactly when the three Gauss sums are not all equal and T_0 != 0.
bool nvm_theorem_index3_nontrivial(const GaussSumSet& g);

// Published criteria, when one applies: H = {1} decides by primality of q;
// the full group, index 2, and index 3 with trivial character have fixed
// answers (index 3 by p mod 3); index 3 with nontrivial character uses the
// Gauss-sum criterion. Everything else returns nullopt.
std::optional<bool> known_criterion(const SubgroupChar& chi);

// Checks every minor of the p x p matrix (zeta_p^{ij}) with a shared
// subminor expansion; counts C(2p, p) minors including the empty one.
NvmReport chebotarev_check(unsigned long p);

// Exact support-size inequality for a nonzero chi-symmetric f. Nontrivial
// chi: |supp f| + |supp fhat| >= q + |H| - 1. Trivial chi: the bound is
// q + 2|H| - 1, q + |H|, or q + 1 according to whether f_0 and fhat(eps_0)
// vanish (both, exactly one, neither).
struct BoundCheck {
    std::size_t support;
    std::size_t hat_support;
    unsigned long threshold;
    bool holds;
};
BoundCheck uncertainty_bound_report(const GroupAlgebraElement& f, const SubgroupChar& chi);
bool uncertainty_bound_holds(const GroupAlgebraElement& f, const SubgroupChar& chi);

// Builds a bound-violating chi-symmetric element from a singular submatrix
// of a compressed Fourier matrix: kernel coordinates become representative
// values, and the transform provably vanishes on the rows of w. Verifies
// every claimed property exactly before returning.
GroupAlgebraElement violation_witness(const CftMatrix& M, const MinorWitness& w,
                                      const SubgroupChar& chi);

enum class CharSelector { all, trivial, nontrivial };

// One full decision for a single (field, subgroup, character) instance.
// method brute runs minor enumeration; theorem requires an applicable
// closed-form criterion; both runs brute and records agreement with the
// prediction when one exists.
NvmReport nvm_instance(const SubgroupChar& chi, NvmMethod method);

// All instances with the given subgroup index over prime powers q <= q_max
// (capped at 256), characters filtered by the selector. Reports are ordered
// by q ascending then character exponent ascending regardless of the thread
// count.
std::vector<NvmReport> scan_range(unsigned long q_max, unsigned long index,
                                  CharSelector chars, unsigned threads = 1);

}  // namespace cftnvm
