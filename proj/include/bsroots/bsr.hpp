#pragma once

// Bernstein-Sato root detection through nested nu-invariants, strengths, and
// the comparison with the reduction mod p.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bsroots/padic.hpp"
#include "bsroots/poly.hpp"

namespace bsroots {

/// levels[e] holds the sorted surviving residues mod p^{e+m}; every survivor at
/// level e+1 reduces to a survivor at level e.
struct ResidueTree {
    std::uint64_t p = 2;
    unsigned m = 0;
    std::vector<std::vector<std::uint64_t>> levels;

    std::uint64_t modulus(unsigned e) const;
    bool contains(unsigned e, std::uint64_t residue) const;
    /// Reduction of a level-e residue to level e-1.
    std::uint64_t parent(unsigned e, std::uint64_t residue) const;
};

ResidueTree candidate_residues(const Poly& f, const FrobeniusLift& F, unsigned E);

struct ReconstructionBounds {
    std::int64_t den_bound = 10;
    std::int64_t num_bound = 10;

    /// den_bound = min(50, p^4 - 1), num_bound = 2 * den_bound.
    static ReconstructionBounds defaults(std::uint64_t p);
};

/// max(3, ceil(log_p(2 num den)) + 1 - m).
unsigned default_max_level(const ChainRing& ring, const ReconstructionBounds& bounds);

struct RootInfo {
    PAdicRational alpha;
    unsigned strength = 0;  // 0 until filled by bfunction_report
    bool stabilized = false;
    std::vector<unsigned> strength_by_level;
    unsigned verified_to_level = 0;
};

struct RootReport {
    std::uint64_t p = 2;
    unsigned m = 0;
    unsigned max_level = 0;
    std::vector<RootInfo> roots;  // ascending as real numbers
    std::vector<std::uint64_t> unresolved;  // level-max_level residues with no verified reconstruction
    ResidueTree tree;

    std::vector<PAdicRational> root_values() const;
};

/// Throws std::invalid_argument unless p^{E+m} > 2 * num_bound * den_bound.
RootReport detect_roots(const Poly& f, const FrobeniusLift& F, unsigned E, const ReconstructionBounds& bounds);

struct StrengthResult {
    unsigned value = 0;
    bool stabilized = false;
    std::vector<unsigned> per_level;  // index 0 is level e_start
};

/// Level-e strength for e in [e_start, e_stop]: with a = alpha_{<e+m}, the largest over
/// generators g of C(f^a) of the least t with p^t g in C(f^{a+1}).
StrengthResult strength(const Poly& f, const FrobeniusLift& F, const PAdicRational& alpha, unsigned e_start,
                        unsigned e_stop);

/// detect_roots followed by the strength of every root over levels [0, E].
RootReport bfunction_report(const Poly& f, const FrobeniusLift& F, unsigned E, const ReconstructionBounds& bounds);

struct CrosscheckResult {
    RootReport full;     // over Z/p^{m+1}
    RootReport reduced;  // f mod p over Z/p, at level E + m
    bool negatives_match = false;
    bool positives_are_translates = false;
    bool classes_mod_z_match = false;
    std::vector<std::string> mismatches;

    bool ok() const { return negatives_match && positives_are_translates && classes_mod_z_match; }
};

CrosscheckResult crosscheck_mod_p(const Poly& f, const FrobeniusLift& F, unsigned E, const ReconstructionBounds& bounds);

/// Every nonnegative root in the list differs from some negative root by an integer.
bool nonnegative_roots_are_translates(const std::vector<PAdicRational>& roots);

/// b_f(alpha) = num/den as an ordinary rational (den may be divisible by p).
struct BValue {
    PAdicRational alpha;
    std::int64_t num;
    std::int64_t den;
};

/// v_p(num/den); nullopt encodes +infinity (num == 0).
std::optional<std::int64_t> rational_valuation(std::int64_t num, std::int64_t den, std::uint64_t p);

struct StrengthVerdict {
    unsigned m;
    unsigned strength;
    std::optional<std::int64_t> b_valuation;
    bool bound_holds;
    bool monotone_holds;
};

/// For each m in m_values (each at most the m of f): strength of alpha for f and F reduced
/// to Z/p^{m+1} over levels [0, E], against v_p(b_f(alpha)) and the previous m.
/// Throws std::invalid_argument when no b-value is supplied for alpha.
std::vector<StrengthVerdict> strength_vs_bsato(const Poly& f, const FrobeniusLift& F, const PAdicRational& alpha,
                                               const std::vector<BValue>& b_values,
                                               const std::vector<unsigned>& m_values, unsigned E);

}  // namespace bsroots
