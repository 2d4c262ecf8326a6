#include "bookshift/series.hpp"

#include "bookshift/error.hpp"

namespace bookshift {

AlternatingSeries::AlternatingSeries(std::vector<Rational> white, std::vector<Rational> black)
    : white_(std::move(white)), black_(std::move(black))
{
    if (white_.empty())
        fail(ErrorKind::semantic, "series needs at least one (white, black) pair");
    if (white_.size() != black_.size())
        fail(ErrorKind::semantic, "series has " + std::to_string(white_.size()) + " white runs but " +
                                      std::to_string(black_.size()) + " black runs");
    for (std::size_t i = 0; i < white_.size(); ++i) {
        if (white_[i] <= 0 || black_[i] <= 0)
            fail(ErrorKind::semantic, "series run " + std::to_string(i + 1) + " has non-positive length");
    }
}

AlternatingSeries AlternatingSeries::from_signed(const std::vector<Rational>& terms)
{
    if (terms.size() % 2 != 0)
        fail(ErrorKind::semantic, "signed series must have even length");
    std::vector<Rational> white, black;
    for (std::size_t i = 0; i < terms.size(); i += 2) {
        if (terms[i] <= 0 || terms[i + 1] >= 0)
            fail(ErrorKind::semantic, "signed series must alternate +, - starting positive (term " +
                                          std::to_string(i + 1) + ")");
        white.push_back(terms[i]);
        black.push_back(-terms[i + 1]);
    }
    return {std::move(white), std::move(black)};
}

Rational AlternatingSeries::total_length() const { return sum(white_) + sum(black_); }

std::vector<Rational> AlternatingSeries::signed_terms() const
{
    std::vector<Rational> out;
    for (std::size_t i = 0; i < white_.size(); ++i) {
        out.push_back(white_[i]);
        out.push_back(-black_[i]);
    }
    return out;
}

SeriesState::SeriesState(const AlternatingSeries& series)
    : white_(series.white()), black_(series.black()), sink_id_(series.pairs() + 1)
{
    for (std::size_t i = 1; i <= series.pairs(); ++i)
        ids_.push_back(i);
}

std::vector<Rational> SeriesState::signed_terms() const
{
    std::vector<Rational> out;
    if (lead_ > 0)
        out.push_back(-lead_);
    for (std::size_t i = 0; i < white_.size(); ++i) {
        out.push_back(white_[i]);
        out.push_back(-black_[i]);
    }
    if (sink_ > 0)
        out.push_back(sink_);
    return out;
}

Rational SeriesState::white_start(std::size_t j) const
{
    Rational x = lead_;
    for (std::size_t i = 0; i + 1 < j; ++i)
        x += white_[i] + black_[i];
    return x;
}

PermuteResult permute(const SeriesState& state, std::size_t j)
{
    if (j < 1 || j > state.pairs())
        fail(ErrorKind::semantic,
             "move index " + std::to_string(j) + " out of range 1.." + std::to_string(state.pairs()));
    const std::size_t at = j - 1;

    PermuteResult out{state, state.white_[at] + state.black_[at], state.ids_[at], 0};
    SeriesState& next = out.state;
    if (at == 0)
        next.lead_ += state.black_[at];
    else
        next.black_[at - 1] += state.black_[at];
    if (at + 1 == state.pairs()) {
        next.sink_ += state.white_[at];
        out.parent = state.sink_id_;
    } else {
        next.white_[at + 1] += state.white_[at];
        out.parent = state.ids_[at + 1];
    }
    next.white_.erase(next.white_.begin() + static_cast<std::ptrdiff_t>(at));
    next.black_.erase(next.black_.begin() + static_cast<std::ptrdiff_t>(at));
    next.ids_.erase(next.ids_.begin() + static_cast<std::ptrdiff_t>(at));
    return out;
}

ReplayTrace replay_trace(const SeriesPlan& plan)
{
    ReplayTrace trace;
    trace.states.emplace_back(plan.initial);
    for (std::size_t t = 0; t < plan.moves.size(); ++t) {
        PermuteResult step = [&] {
            try {
                return permute(trace.states.back(), plan.moves[t]);
            } catch (const Error& e) {
                throw Error(e.kind(), "move " + std::to_string(t + 1) + ": " + e.what());
            }
        }();
        trace.total += step.cost;
        trace.move_costs.push_back(step.cost);
        trace.children.push_back(step.child);
        trace.parents.push_back(step.parent);
        trace.states.push_back(std::move(step.state));
    }
    if (!trace.states.back().is_terminal())
        fail(ErrorKind::semantic, "plan ends before sorting is complete: " +
                                      std::to_string(trace.states.back().pairs()) + " pair(s) remain");
    return trace;
}

Rational replay(const SeriesPlan& plan) { return replay_trace(plan).total; }

void Instance::check() const
{
    if (a.empty())
        fail(ErrorKind::semantic, "instance needs at least one node");
    if (b.size() + 1 != a.size())
        fail(ErrorKind::semantic, "instance has " + std::to_string(a.size()) + " masses but " +
                                      std::to_string(b.size()) + " gaps (expected " + std::to_string(a.size() - 1) +
                                      ")");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < 0)
            fail(ErrorKind::semantic, "a[" + std::to_string(i + 1) + "] is negative");
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] < 0)
            fail(ErrorKind::semantic, "b[" + std::to_string(i + 1) + "] is negative");
}

Instance to_instance(const AlternatingSeries& series)
{
    Instance inst{series.white(), series.black()};
    inst.a.emplace_back(0);
    return inst;
}

Rational instance_length(const Instance& inst) { return sum(inst.a) + sum(inst.b); }

BinaryDensity instance_to_density(const Instance& inst)
{
    inst.check();
    const Rational total = instance_length(inst);
    if (total == 0)
        fail(ErrorKind::semantic, "instance has zero total length");
    std::vector<Rational> runs;
    for (std::size_t i = 0; i < inst.a.size(); ++i) {
        runs.push_back(inst.a[i] / total);
        if (i < inst.b.size())
            runs.push_back(inst.b[i] / total);
    }
    return BinaryDensity::from_runs(runs, 1);
}

BinaryDensity series_to_density(const AlternatingSeries& series, const Rational& total)
{
    if (series.total_length() != total)
        fail(ErrorKind::semantic, "series runs sum to " + to_string(series.total_length()) + ", expected " +
                                      to_string(total));
    std::vector<Rational> runs;
    for (const auto& t : series.signed_terms())
        runs.push_back(abs(t) / total);
    return BinaryDensity::from_runs(runs, 1);
}

AlternatingSeries density_to_series(const BinaryDensity& rho)
{
    if (rho.values().front() != 1 || rho.values().back() != 0)
        fail(ErrorKind::semantic, "normalization required: density must start with a white run and end with a "
                                  "black run");
    std::vector<Rational> white, black;
    for (std::size_t i = 0; i < rho.run_count(); ++i)
        (rho.values()[i] == 1 ? white : black).push_back(rho.run_length(i));
    return {std::move(white), std::move(black)};
}

SortingPlan to_sorting_plan(const SeriesPlan& plan)
{
    const Rational total = plan.initial.total_length();
    SortingPlan out{series_to_density(plan.initial, total), {}};
    SeriesState state(plan.initial);
    for (std::size_t j : plan.moves) {
        if (j < 1 || j > state.pairs())
            fail(ErrorKind::semantic, "move index " + std::to_string(j) + " out of range");
        out.ops.push_back({state.white_start(j) / total, state.white()[j - 1] / total, state.black()[j - 1] / total});
        state = permute(state, j).state;
    }
    return out;
}

} // namespace bookshift
