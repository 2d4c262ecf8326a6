#include "bookshift/rational.hpp"

#include "bookshift/error.hpp"

#include <cctype>

namespace bookshift {

namespace {

bool is_integer_text(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' || den.front() == '+')
        fail(ErrorKind::parse, "malformed rational '" + std::string(text) + "'");

    auto strip_plus = [](std::string_view s) { return std::string(!s.empty() && s.front() == '+' ? s.substr(1) : s); };
    BigInt n(strip_plus(num), 10);
    BigInt d(strip_plus(den), 10);
    if (d == 0)
        fail(ErrorKind::parse, "zero denominator in '" + std::string(text) + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value)
{
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string join(const std::vector<Rational>& values, std::string_view sep)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += sep;
        out += to_string(values[i]);
    }
    return out;
}

Rational sum(const std::vector<Rational>& values)
{
    Rational total = 0;
    for (const auto& v : values)
        total += v;
    return total;
}

BigInt common_denominator(const std::vector<Rational>& values)
{
    BigInt l = 1;
    for (const auto& v : values)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    return l;
}

} // namespace bookshift
