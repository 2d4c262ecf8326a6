#pragma once

#include "bookshift/density.hpp"
#include "bookshift/rational.hpp"

#include <cstddef>
#include <vector>

namespace bookshift {

/// Signed run-length encoding a_1, -b_1, ..., a_k, -b_k of a stack that starts
/// with white books and ends with black books. All runs are positive, k >= 1.
class AlternatingSeries {
public:
    AlternatingSeries(std::vector<Rational> white, std::vector<Rational> black);

    /// Parses the signed form {a_1, -b_1, ...}; signs must alternate starting positive.
    static AlternatingSeries from_signed(const std::vector<Rational>& terms);

    [[nodiscard]] std::size_t pairs() const noexcept { return white_.size(); }
    [[nodiscard]] const std::vector<Rational>& white() const noexcept { return white_; }
    [[nodiscard]] const std::vector<Rational>& black() const noexcept { return black_; }
    [[nodiscard]] Rational total_length() const;
    [[nodiscard]] std::vector<Rational> signed_terms() const;

    friend bool operator==(const AlternatingSeries&, const AlternatingSeries&) = default;

private:
    std::vector<Rational> white_;
    std::vector<Rational> black_;
};

struct PermuteResult;

/// A series in the middle of sorting: an optional settled black run on the
/// left, the remaining (white, black) pairs, and the white mass already
/// delivered to the sink on the right. Each remaining white run carries the
/// id of the original node whose name it kept after merges; the sink is node
/// pairs()+1 of the initial series.
class SeriesState {
public:
    SeriesState(const AlternatingSeries& series); // NOLINT(google-explicit-constructor)

    [[nodiscard]] const Rational& lead() const noexcept { return lead_; }
    [[nodiscard]] const Rational& sink() const noexcept { return sink_; }
    [[nodiscard]] const std::vector<Rational>& white() const noexcept { return white_; }
    [[nodiscard]] const std::vector<Rational>& black() const noexcept { return black_; }
    [[nodiscard]] const std::vector<std::size_t>& ids() const noexcept { return ids_; }
    [[nodiscard]] std::size_t sink_id() const noexcept { return sink_id_; }
    [[nodiscard]] std::size_t pairs() const noexcept { return white_.size(); }

    /// Fully sorted: (-sum b, sum a).
    [[nodiscard]] bool is_terminal() const noexcept { return white_.empty(); }

    /// Display form, e.g. {-5, 19, -27, 9, -10, 14}; empty lead and sink are omitted.
    [[nodiscard]] std::vector<Rational> signed_terms() const;

    /// Left end of the j-th remaining white run (1-based), in stack units.
    [[nodiscard]] Rational white_start(std::size_t j) const;

    friend bool operator==(const SeriesState&, const SeriesState&) = default;

private:
    friend PermuteResult permute(const SeriesState&, std::size_t);

    Rational lead_ = 0;
    std::vector<Rational> white_;
    std::vector<Rational> black_;
    std::vector<std::size_t> ids_;
    Rational sink_ = 0;
    std::size_t sink_id_ = 0;
};

struct PermuteResult {
    SeriesState state;
    Rational cost;
    std::size_t child = 0;  // node id that merged away
    std::size_t parent = 0; // node id that absorbed it (sink id for the last pair)
};

/// Swaps the j-th remaining white run with the black run to its right
/// (1 <= j <= pairs()). The black run joins the black run on its left (the
/// settled lead when j = 1); the white run joins the next white run (the sink
/// when j = pairs()). Cost a_j + b_j. Throws Error(semantic) for a bad index.
PermuteResult permute(const SeriesState& state, std::size_t j);

struct SeriesPlan {
    AlternatingSeries initial;
    std::vector<std::size_t> moves; // 1-based positions into the current state
};

struct ReplayTrace {
    std::vector<SeriesState> states; // initial state followed by one per move
    std::vector<Rational> move_costs;
    std::vector<std::size_t> children;
    std::vector<std::size_t> parents;
    Rational total = 0;
};

/// Applies every move, failing with Error(semantic) on an invalid index
/// (step reported 1-based) or when the final state is not terminal.
ReplayTrace replay_trace(const SeriesPlan& plan);
Rational replay(const SeriesPlan& plan);

/// Masses a_1..a_N (a_N is the sink) and gaps b_1..b_{N-1} between
/// consecutive nodes on the line.
struct Instance {
    std::vector<Rational> a;
    std::vector<Rational> b;

    /// Throws Error(semantic) unless N >= 1, |b| = N-1 and all entries >= 0.
    void check() const;
    [[nodiscard]] std::size_t size() const noexcept { return a.size(); }

    friend bool operator==(const Instance&, const Instance&) = default;
};

/// a = (a_1, ..., a_k, 0), b = (b_1, ..., b_k).
Instance to_instance(const AlternatingSeries& series);

/// Stack laid out as a_1, b_1, ..., a_{N-1}, b_{N-1}, a_N, scaled to [0,1).
/// Zero-length runs vanish.
BinaryDensity instance_to_density(const Instance& inst);
Rational instance_length(const Instance& inst);

/// Lays the runs out on [0,1) after dividing by total. Throws Error(semantic)
/// if the runs do not sum to total.
BinaryDensity series_to_density(const AlternatingSeries& series, const Rational& total);

/// Run-length encoding of a density whose first run is white and last run is
/// black. Anything else is Error(semantic); no padding is applied.
AlternatingSeries density_to_series(const BinaryDensity& rho);

/// The same moves as elementary operations on the normalized density.
SortingPlan to_sorting_plan(const SeriesPlan& plan);

} // namespace bookshift
