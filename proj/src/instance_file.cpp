#include "bookshift/instance_file.hpp"

#include "bookshift/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace bookshift {

namespace {

using json = nlohmann::json;

Rational rational_field(const json& value, const std::string& field)
{
    try {
        if (value.is_number_integer())
            return parse_rational(value.dump());
        if (value.is_string())
            return parse_rational(value.get<std::string>());
    } catch (const Error& e) {
        fail(ErrorKind::parse, "field '" + field + "': " + e.what());
    }
    fail(ErrorKind::parse, "field '" + field + "' must be an integer or a \"p/q\" string");
}

std::vector<Rational> rational_list(const json& doc, const std::string& field)
{
    if (!doc.contains(field))
        fail(ErrorKind::parse, "missing field '" + field + "'");
    const json& arr = doc.at(field);
    if (!arr.is_array())
        fail(ErrorKind::parse, "field '" + field + "' must be a list");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        Rational r = rational_field(arr[i], field + "[" + std::to_string(i + 1) + "]");
        if (r < 0)
            fail(ErrorKind::parse, "field '" + field + "[" + std::to_string(i + 1) + "]' must be nonnegative");
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace

std::string_view to_string(InstanceFile::Kind kind)
{
    switch (kind) {
    case InstanceFile::Kind::instance:
        return "instance";
    case InstanceFile::Kind::series:
        return "series";
    case InstanceFile::Kind::plan:
        return "plan";
    }
    return "instance";
}

Instance InstanceFile::instance() const
{
    Instance inst{a, b};
    if (kind != Kind::instance)
        inst.a.emplace_back(0);
    return inst;
}

AlternatingSeries InstanceFile::series() const
{
    if (kind == Kind::instance)
        fail(ErrorKind::semantic, "document of kind 'instance' carries no series");
    return {a, b};
}

InstanceFile parse_instance_file(std::string_view json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::parse, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        fail(ErrorKind::parse, "document must be a JSON object");

    InstanceFile file;
    if (doc.contains("version")) {
        if (!doc["version"].is_number_integer() || doc["version"].get<int>() != 1)
            fail(ErrorKind::parse, "field 'version' must be 1");
    }
    if (!doc.contains("kind") || !doc["kind"].is_string())
        fail(ErrorKind::parse, "missing field 'kind' (\"instance\", \"series\" or \"plan\")");
    const std::string kind = doc["kind"].get<std::string>();
    if (kind == "instance")
        file.kind = InstanceFile::Kind::instance;
    else if (kind == "series")
        file.kind = InstanceFile::Kind::series;
    else if (kind == "plan")
        file.kind = InstanceFile::Kind::plan;
    else
        fail(ErrorKind::parse, "field 'kind' has unknown value '" + kind + "'");

    file.a = rational_list(doc, "a");
    file.b = rational_list(doc, "b");
    if (file.kind == InstanceFile::Kind::instance) {
        if (file.a.empty() || file.a.size() != file.b.size() + 1)
            fail(ErrorKind::parse, "fields 'a' and 'b' must satisfy |a| = |b| + 1 >= 1 for kind instance");
    } else {
        if (file.a.empty() || file.a.size() != file.b.size())
            fail(ErrorKind::parse, "fields 'a' and 'b' must have equal nonzero length for kind " + kind);
        for (std::size_t i = 0; i < file.a.size(); ++i)
            if (file.a[i] == 0 || file.b[i] == 0)
                fail(ErrorKind::parse, "series run " + std::to_string(i + 1) + " has zero length");
    }

    if (doc.contains("plan")) {
        const json& plan = doc["plan"];
        if (!plan.is_array())
            fail(ErrorKind::parse, "field 'plan' must be a list of move indices");
        std::vector<std::size_t> moves;
        for (std::size_t i = 0; i < plan.size(); ++i) {
            if (!plan[i].is_number_integer() || plan[i].get<long long>() < 1)
                fail(ErrorKind::parse, "field 'plan[" + std::to_string(i + 1) + "]' must be a positive integer");
            moves.push_back(plan[i].get<std::size_t>());
        }
        file.plan = std::move(moves);
    } else if (file.kind == InstanceFile::Kind::plan) {
        fail(ErrorKind::parse, "missing field 'plan' for kind plan");
    }
    if (doc.contains("kappa"))
        file.kappa = rational_field(doc["kappa"], "kappa");
    if (doc.contains("eps"))
        file.eps = rational_field(doc["eps"], "eps");
    return file;
}

InstanceFile load_instance_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(ErrorKind::io, "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance_file(buf.str());
}

} // namespace bookshift
