#include "bookshift/density.hpp"

#include "bookshift/error.hpp"

#include <algorithm>
#include <optional>

namespace bookshift {

namespace {

std::string interval(const Rational& lo, const Rational& hi)
{
    return "(" + to_string(lo) + ", " + to_string(hi) + ")";
}

void require_unit_range(const Rational& x, const char* what)
{
    if (x < 0 || x >= 1)
        fail(ErrorKind::range, std::string(what) + " = " + to_string(x) + " outside [0,1)");
}

void check_kappa_eps(const Rational& kappa, const Rational& eps)
{
    if (kappa <= 0 || kappa >= 1)
        fail(ErrorKind::range, "kappa = " + to_string(kappa) + " must lie in (0,1)");
    if (eps <= 0 || eps > 1)
        fail(ErrorKind::range, "eps = " + to_string(eps) + " must lie in (0,1]");
}

// First subinterval of (lo, hi) on which rho differs from `expected`, if any.
std::optional<std::pair<Rational, Rational>> first_mismatch(const BinaryDensity& rho, const Rational& lo,
                                                            const Rational& hi, int expected)
{
    const auto& bp = rho.breakpoints();
    for (std::size_t i = 0; i < rho.run_count(); ++i) {
        const Rational start = std::max(bp[i], lo);
        const Rational end = std::min(bp[i + 1], hi);
        if (start < end && rho.values()[i] != expected)
            return std::pair{start, end};
    }
    return std::nullopt;
}

} // namespace

BinaryDensity::BinaryDensity(std::vector<Rational> breakpoints, std::vector<int> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values))
{
    if (breakpoints_.size() != values_.size() + 1 || values_.empty())
        fail(ErrorKind::semantic, "density needs exactly one value per interval");
    if (breakpoints_.front() != 0 || breakpoints_.back() != 1)
        fail(ErrorKind::semantic, "density breakpoints must run from 0 to 1");
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
        if (breakpoints_[i + 1] < breakpoints_[i])
            fail(ErrorKind::semantic, "density breakpoints must be nondecreasing");
    for (int v : values_)
        if (v != 0 && v != 1)
            fail(ErrorKind::semantic, "density values must be 0 or 1");
    normalize();
}

void BinaryDensity::normalize()
{
    std::vector<Rational> bp{breakpoints_.front()};
    std::vector<int> vals;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (breakpoints_[i + 1] == breakpoints_[i])
            continue;
        if (!vals.empty() && vals.back() == values_[i]) {
            bp.back() = breakpoints_[i + 1];
        } else {
            vals.push_back(values_[i]);
            bp.push_back(breakpoints_[i + 1]);
        }
    }
    breakpoints_ = std::move(bp);
    values_ = std::move(vals);
}

BinaryDensity BinaryDensity::from_runs(const std::vector<Rational>& lengths, int first_value)
{
    std::vector<Rational> bp{Rational(0)};
    std::vector<int> vals;
    int v = first_value;
    for (const auto& len : lengths) {
        if (len < 0)
            fail(ErrorKind::semantic, "negative run length " + to_string(len));
        bp.push_back(bp.back() + len);
        vals.push_back(v);
        v = 1 - v;
    }
    if (vals.empty())
        fail(ErrorKind::semantic, "density needs at least one run");
    if (bp.back() != 1)
        fail(ErrorKind::semantic, "run lengths sum to " + to_string(bp.back()) + ", expected 1");
    return {std::move(bp), std::move(vals)};
}

BinaryDensity BinaryDensity::constant(int value) { return {{Rational(0), Rational(1)}, {value}}; }

int BinaryDensity::value_at(const Rational& x) const
{
    require_unit_range(x, "x");
    const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

Rational BinaryDensity::cumulative(const Rational& x) const
{
    Rational total = 0;
    for (std::size_t i = 0; i < values_.size() && breakpoints_[i] < x; ++i) {
        if (values_[i] == 1)
            total += std::min(breakpoints_[i + 1], x) - breakpoints_[i];
    }
    return total;
}

void ElementaryOp::check() const
{
    if (y < 0)
        fail(ErrorKind::range, "op y = " + to_string(y) + " is negative");
    if (a <= 0 || b <= 0)
        fail(ErrorKind::range, "op block lengths must be positive (a = " + to_string(a) + ", b = " + to_string(b) + ")");
    if (y + a + b > 1)
        fail(ErrorKind::range, "op (y, a, b) = (" + to_string(y) + ", " + to_string(a) + ", " + to_string(b) +
                                   ") exceeds [0,1]");
}

Rational total_mass(const BinaryDensity& rho) { return rho.cumulative(1); }

BinaryDensity terminal_density(const Rational& m)
{
    if (m < 0 || m > 1)
        fail(ErrorKind::range, "mass " + to_string(m) + " outside [0,1]");
    return BinaryDensity({Rational(0), 1 - m, Rational(1)}, {0, 1});
}

ElementaryResult apply_elementary(const BinaryDensity& rho, const ElementaryOp& op)
{
    op.check();
    const Rational mid = op.y + op.a;
    const Rational end = mid + op.b;
    if (auto bad = first_mismatch(rho, op.y, mid, 1))
        fail(ErrorKind::semantic, "rejected operation: density is not 1 on " + interval(bad->first, bad->second) +
                                      " inside white block " + interval(op.y, mid));
    if (auto bad = first_mismatch(rho, mid, end, 0))
        fail(ErrorKind::semantic, "rejected operation: density is not 0 on " + interval(bad->first, bad->second) +
                                      " inside black block " + interval(mid, end));

    std::vector<Rational> bp;
    std::vector<int> vals;
    const auto& old_bp = rho.breakpoints();
    const auto& old_vals = rho.values();
    auto copy_range = [&](const Rational& lo, const Rational& hi) {
        for (std::size_t i = 0; i < old_vals.size(); ++i) {
            const Rational s = std::max(old_bp[i], lo);
            const Rational e = std::min(old_bp[i + 1], hi);
            if (s < e) {
                if (bp.empty())
                    bp.push_back(s);
                bp.push_back(e);
                vals.push_back(old_vals[i]);
            }
        }
    };
    copy_range(0, op.y);
    if (bp.empty())
        bp.push_back(0);
    bp.push_back(op.y + op.b);
    vals.push_back(0);
    bp.push_back(end);
    vals.push_back(1);
    copy_range(end, 1);
    return {BinaryDensity(std::move(bp), std::move(vals)), op.a + op.b};
}

Rational validate_plan(const SortingPlan& plan)
{
    BinaryDensity current = plan.initial;
    Rational cost = 0;
    for (std::size_t k = 0; k < plan.ops.size(); ++k) {
        try {
            auto step = apply_elementary(current, plan.ops[k]);
            current = std::move(step.density);
            cost += step.cost;
        } catch (const Error& e) {
            throw Error(e.kind(), "op " + std::to_string(k) + ": " + e.what());
        }
    }
    const BinaryDensity target = terminal_density(total_mass(plan.initial));
    if (current != target) {
        // Locate the first interval where the two step functions disagree.
        std::vector<Rational> cuts = current.breakpoints();
        cuts.insert(cuts.end(), target.breakpoints().begin(), target.breakpoints().end());
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            if (current.value_at(cuts[i]) != target.value_at(cuts[i]))
                fail(ErrorKind::semantic,
                     "final density differs from the terminal density on " + interval(cuts[i], cuts[i + 1]));
        }
    }
    return cost;
}

FlowMap::FlowMap(ElementaryOp op) : op_(std::move(op)) { op_.check(); }

Rational FlowMap::operator()(const Rational& x) const
{
    require_unit_range(x, "x");
    const Rational mid = op_.y + op_.a;
    if (op_.y <= x && x < mid)
        return x + op_.b;
    if (mid <= x && x < mid + op_.b)
        return x - op_.a;
    return x;
}

std::vector<FlowMap::Piece> FlowMap::pieces() const
{
    const Rational mid = op_.y + op_.a;
    const Rational end = mid + op_.b;
    std::vector<Piece> out;
    if (op_.y > 0)
        out.push_back({Rational(0), op_.y, Rational(0)});
    out.push_back({op_.y, mid, op_.b});
    out.push_back({mid, end, -op_.a});
    if (end < 1)
        out.push_back({end, Rational(1), Rational(0)});
    return out;
}

std::vector<FlowMap::Piece> FlowMap::inverse_pieces() const
{
    std::vector<Piece> out;
    for (const auto& p : pieces())
        out.push_back({p.lo + p.shift, p.hi + p.shift, -p.shift});
    std::sort(out.begin(), out.end(), [](const Piece& l, const Piece& r) { return l.lo < r.lo; });
    return out;
}

Rational flow_map_apply(const FlowMap& map, const Rational& x) { return map(x); }

Rational flow_map_cost(const FlowMap& map)
{
    Rational moved = 0;
    for (const auto& p : map.pieces())
        if (p.shift != 0)
            moved += p.hi - p.lo;
    return moved;
}

bool is_kappa_mixed(const BinaryDensity& rho, const Rational& kappa, const Rational& eps)
{
    check_kappa_eps(kappa, eps);
    const Rational lo = kappa * eps;
    const Rational hi = (1 - kappa) * eps;
    if (lo > hi)
        return false;

    const Rational last = 1 - eps;
    std::vector<Rational> candidates{Rational(0), last};
    for (const auto& x : rho.breakpoints()) {
        for (const Rational& y : {x, Rational(x - eps)}) {
            if (y > 0 && y < last)
                candidates.push_back(y);
        }
    }
    for (const auto& y : candidates) {
        const Rational window = rho.cumulative(y + eps) - rho.cumulative(y);
        if (window < lo || window > hi)
            return false;
    }
    return true;
}

MassBounds mass_bounds(const Rational& kappa, const Rational& eps)
{
    check_kappa_eps(kappa, eps);
    const Rational inv = 1 / eps;
    BigInt windows;
    mpz_fdiv_q(windows.get_mpz_t(), inv.get_num_mpz_t(), inv.get_den_mpz_t());
    return {kappa * eps * Rational(windows), (1 - kappa) * eps * Rational(windows + 1)};
}

bool mass_bounds_check(const BinaryDensity& rho, const Rational& kappa, const Rational& eps)
{
    const auto bounds = mass_bounds(kappa, eps);
    const Rational m = total_mass(rho);
    return bounds.lower <= m && m <= bounds.upper;
}

LowerBound proof_lower_bound_detail(const Rational& kappa, const Rational& eps, const Rational& s)
{
    if (kappa <= 0 || kappa >= 1)
        fail(ErrorKind::range, "kappa = " + to_string(kappa) + " must lie in (0,1)");
    if (eps <= 0 || eps > s)
        fail(ErrorKind::range, "eps = " + to_string(eps) + " must lie in (0, s] with s = " + to_string(s));

    const Rational k2s = kappa * kappa * s;
    auto g = [&](unsigned long n, const Rational& pow_eps) -> Rational { return (1 + Rational(n) * kappa * kappa) * s - pow_eps; };

    Rational pow_eps = eps; // 2^n * eps
    LowerBound best{g(0, pow_eps), 0};
    unsigned long n = 0;
    while (pow_eps < k2s) {
        ++n;
        pow_eps *= 2;
        Rational value = g(n, pow_eps);
        if (value > best.value)
            best = {std::move(value), n};
    }
    return best;
}

Rational proof_lower_bound(const Rational& kappa, const Rational& eps, const Rational& s)
{
    return proof_lower_bound_detail(kappa, eps, s).value;
}

} // namespace bookshift
