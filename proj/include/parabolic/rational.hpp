#ifndef PARABOLIC_RATIONAL_HPP
#define PARABOLIC_RATIONAL_HPP

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "parabolic/error.hpp"

namespace parabolic {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) {
    if (is_integral(q))
        return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

inline Rational parse_rational(const std::string& text) {
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos)
            return Rational(Integer(text));
        Integer den(text.substr(slash + 1));
        if (den == 0)
            throw ParseError("zero denominator in '" + text + "'", slash + 1);
        return Rational(Integer(text.substr(0, slash)), den);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("malformed rational '" + text + "'", 0);
    }
}

/// Converts an integral rational to a machine integer. Throws if not integral.
inline long long to_int(const Rational& q) {
    if (!is_integral(q))
        throw InternalMismatch("expected an integer, got " + to_string(q));
    return boost::multiprecision::numerator(q).convert_to<long long>();
}

inline std::vector<Rational> to_rationals(const std::vector<int>& v) {
    return {v.begin(), v.end()};
}

} // namespace parabolic

#endif // PARABOLIC_RATIONAL_HPP
