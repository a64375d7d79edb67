#include <qseries/rational.hpp>

#include <qseries/errors.hpp>

#include <cctype>

namespace qseries
{

Coefficient make_rational(std::int64_t num, std::int64_t den)
{
    return make_rational(Integer{static_cast<long>(num)}, Integer{static_cast<long>(den)});
}

Coefficient make_rational(const Integer &num, const Integer &den)
{
    if (den == 0) {
        throw domain_error("rational with zero denominator");
    }
    Coefficient c{num, den};
    c.canonicalize();
    return c;
}

std::string to_string(const Coefficient &c)
{
    return c.get_str(10);
}

std::string to_string(const Integer &z)
{
    return z.get_str(10);
}

namespace
{

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            return false;
        }
    }
    return true;
}

Integer parse_integer(std::string_view s)
{
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    return Integer{std::string(s), 10};
}

} // namespace

Coefficient parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_integer_literal(num_text)) {
        throw domain_error("malformed rational: '" + std::string(text) + "'");
    }
    if (slash == std::string_view::npos) {
        return Coefficient{parse_integer(num_text)};
    }
    const auto den_text = text.substr(slash + 1);
    if (!is_integer_literal(den_text)) {
        throw domain_error("malformed rational: '" + std::string(text) + "'");
    }
    return make_rational(parse_integer(num_text), parse_integer(den_text));
}

} // namespace qseries
