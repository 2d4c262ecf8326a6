#pragma once

#include "bookshift/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace bookshift {

/// A {0,1}-valued step function on [0,1). Value 1 marks white books, 0 black.
///
/// Stored as maximal runs: breakpoints 0 = x_0 < x_1 < ... < x_r = 1 and one
/// value per interval [x_i, x_{i+1}). Adjacent runs always differ in value.
class BinaryDensity {
public:
    /// Builds from explicit breakpoints and values; zero-length runs are
    /// dropped and equal neighbours merged. Throws Error(semantic) unless the
    /// breakpoints are nondecreasing from 0 to 1 and values are 0/1.
    BinaryDensity(std::vector<Rational> breakpoints, std::vector<int> values);

    /// Density with runs of the given lengths, alternating from first_value.
    /// The lengths must be nonnegative and sum to 1.
    static BinaryDensity from_runs(const std::vector<Rational>& lengths, int first_value);

    static BinaryDensity constant(int value);

    [[nodiscard]] const std::vector<Rational>& breakpoints() const noexcept { return breakpoints_; }
    [[nodiscard]] const std::vector<int>& values() const noexcept { return values_; }
    [[nodiscard]] std::size_t run_count() const noexcept { return values_.size(); }
    [[nodiscard]] Rational run_length(std::size_t i) const { return breakpoints_[i + 1] - breakpoints_[i]; }

    /// Value on the run containing x (right-continuous), x in [0,1).
    [[nodiscard]] int value_at(const Rational& x) const;

    /// Integral of the density over [0, x], x clamped to [0,1].
    [[nodiscard]] Rational cumulative(const Rational& x) const;

    friend bool operator==(const BinaryDensity&, const BinaryDensity&) = default;

private:
    BinaryDensity() = default;
    void normalize();

    std::vector<Rational> breakpoints_;
    std::vector<int> values_;
};

/// Transposition of a white block (y, y+a) with the black block (y+a, y+a+b)
/// immediately to its right.
struct ElementaryOp {
    Rational y;
    Rational a;
    Rational b;

    /// Throws Error(range) unless 0 <= y, a > 0, b > 0 and y+a+b <= 1.
    void check() const;

    friend bool operator==(const ElementaryOp&, const ElementaryOp&) = default;
};

struct SortingPlan {
    BinaryDensity initial;
    std::vector<ElementaryOp> ops;
};

/// Measure of {rho = 1}.
Rational total_mass(const BinaryDensity& rho);

/// Black on (0, 1-m), white on (1-m, 1).
BinaryDensity terminal_density(const Rational& m);

struct ElementaryResult {
    BinaryDensity density;
    Rational cost;
};

/// Applies op to rho. The density must equal 1 on all of (y, y+a) and 0 on all
/// of (y+a, y+a+b); partial overlaps are rejected with Error(semantic) naming
/// the first offending subinterval. Cost is a+b.
ElementaryResult apply_elementary(const BinaryDensity& rho, const ElementaryOp& op);

/// Replays every op and checks the final density is terminal. Returns the
/// total cost. Errors name the failing op index (0-based) or the first
/// interval where the final density differs from the terminal one.
Rational validate_plan(const SortingPlan& plan);

/// Piecewise translation induced by an elementary operation:
/// x+b on [y, y+a), x-a on [y+a, y+a+b), identity elsewhere.
class FlowMap {
public:
    explicit FlowMap(ElementaryOp op);

    [[nodiscard]] const ElementaryOp& op() const noexcept { return op_; }

    /// Throws Error(range) if x is outside [0,1).
    [[nodiscard]] Rational operator()(const Rational& x) const;

    /// Maximal pieces [lo, hi) on which the map is a translation by shift.
    struct Piece {
        Rational lo;
        Rational hi;
        Rational shift;
    };
    [[nodiscard]] std::vector<Piece> pieces() const;

    /// The inverse map, expressed as pieces of the image.
    [[nodiscard]] std::vector<Piece> inverse_pieces() const;

private:
    ElementaryOp op_;
};

Rational flow_map_apply(const FlowMap& map, const Rational& x);

/// Lebesgue measure of {x : T(x) != x}, summed over the map's pieces.
Rational flow_map_cost(const FlowMap& map);

/// True iff kappa*eps <= integral of rho over [y, y+eps] <= (1-kappa)*eps for
/// every y in [0, 1-eps]. The window integral is piecewise linear in y, so it
/// is evaluated at every kink (breakpoints and breakpoints - eps) and at the
/// ends of the range. Requires 0 < kappa < 1 and 0 < eps <= 1.
bool is_kappa_mixed(const BinaryDensity& rho, const Rational& kappa, const Rational& eps);

/// kappa*eps*floor(1/eps) <= m <= (1-kappa)*eps*(floor(1/eps)+1).
bool mass_bounds_check(const BinaryDensity& rho, const Rational& kappa, const Rational& eps);

struct MassBounds {
    Rational lower;
    Rational upper;
};
MassBounds mass_bounds(const Rational& kappa, const Rational& eps);

struct LowerBound {
    Rational value;
    unsigned long argmax = 0;
};

/// max over n >= 0 of (1 + n*kappa^2)*s - 2^n*eps. The increment
/// g(n+1) - g(n) = kappa^2*s - 2^n*eps is decreasing in n, so the scan stops
/// once 2^n*eps >= kappa^2*s. Requires 0 < kappa < 1 and 0 < eps <= s.
LowerBound proof_lower_bound_detail(const Rational& kappa, const Rational& eps, const Rational& s);
Rational proof_lower_bound(const Rational& kappa, const Rational& eps, const Rational& s);

} // namespace bookshift
