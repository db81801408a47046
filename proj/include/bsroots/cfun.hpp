#pragma once

// Locally constant functions Z_p -> V at a finite level, the point ideals they
// generate, and stalks of finitely supported modules.

#include <cstdint>
#include <vector>

#include "bsroots/bsr.hpp"

namespace bsroots {

/// A function Z/p^e -> V; values[r] is the value on the class r mod p^e.
class LevelFunction {
public:
    /// Throws std::invalid_argument unless values.size() == p^e.
    LevelFunction(ChainRing ring, unsigned level, std::vector<Scalar> values);
    static LevelFunction constant(ChainRing ring, unsigned level, std::int64_t c);

    const ChainRing& ring() const { return ring_; }
    unsigned level() const { return level_; }
    const std::vector<Scalar>& values() const { return values_; }
    /// Value on the class of a (any integer).
    Scalar at(std::int64_t a) const;

    friend LevelFunction operator+(const LevelFunction& a, const LevelFunction& b);
    friend LevelFunction operator*(const LevelFunction& a, const LevelFunction& b);
    friend bool operator==(const LevelFunction& a, const LevelFunction& b);

private:
    ChainRing ring_;
    unsigned level_;
    std::vector<Scalar> values_;
};

/// Indicator of a + p^e Z_p. Throws std::out_of_range unless 0 <= a < p^e.
LevelFunction chi(const ChainRing& ring, unsigned e, std::int64_t a);

/// Pullback along Z/p^{to_level} -> Z/p^e. Throws std::invalid_argument when to_level < e.
LevelFunction refine(const LevelFunction& phi, unsigned to_level);

struct FiniteSupportModule {
    struct Point {
        PAdicRational alpha;
        unsigned exponent;
    };
    std::vector<Point> points;

    /// Throws std::invalid_argument on repeated alpha.
    void add(const PAdicRational& alpha, unsigned exponent);
};

/// The annihilator exponent at beta, or 0 when beta is not in the support.
unsigned stalk(const FiniteSupportModule& M, const PAdicRational& beta);

/// phi lies in the product of (p^{t_i} : alpha_i) over the report's roots.
/// Throws std::invalid_argument("level does not separate roots") when two roots
/// share a residue mod p^level.
bool bfunction_contains(const RootReport& report, const LevelFunction& phi);

}  // namespace bsroots
