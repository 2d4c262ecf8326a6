#pragma once

#include "bookshift/rational.hpp"
#include "bookshift/series.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bookshift {

/// JSON input document:
///
///     {"version": 1, "kind": "series", "a": [12, 7, "5/2"], "b": [5, 10, 17],
///      "plan": [3, 1, 1], "kappa": "1/3", "eps": "1/8"}
///
/// kind "instance" carries N masses and N-1 gaps; "series" and "plan" carry
/// k white and k black run lengths ("plan" additionally requires the plan).
/// Rationals may be JSON integers or "p/q" strings.
struct InstanceFile {
    enum class Kind { instance, series, plan };

    int version = 1;
    Kind kind = Kind::instance;
    std::vector<Rational> a;
    std::vector<Rational> b;
    std::optional<std::vector<std::size_t>> plan;
    std::optional<Rational> kappa;
    std::optional<Rational> eps;

    /// The node/gap form; series are closed with a zero-mass sink.
    [[nodiscard]] Instance instance() const;

    /// Only for kind series/plan.
    [[nodiscard]] AlternatingSeries series() const;
};

std::string_view to_string(InstanceFile::Kind kind);

/// Throws Error(parse) naming the offending field.
InstanceFile parse_instance_file(std::string_view json_text);

/// Throws Error(io) if the file cannot be read.
InstanceFile load_instance_file(const std::string& path);

} // namespace bookshift
