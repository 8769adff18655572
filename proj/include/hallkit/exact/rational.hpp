/**
 * @file rational.hpp
 * @brief Arbitrary precision integers and rationals, plus the error types
 * shared by every module.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hallkit {

using BigInt = boost::multiprecision::cpp_int;

/// Always reduced, denominator positive.
using Rat = boost::multiprecision::cpp_rational;

/// Raised when a construction would materialize more data than its budget allows.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised for inputs outside the supported scope (e.g. non-abelian wreath characters).
class Unsupported : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultBudget = 1'000'000;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

/// Canonical "p/q" form; integers keep the "/1".
inline std::string to_string(const Rat& r)
{
    return numerator(r).str() + "/" + denominator(r).str();
}

inline std::string to_string(const BigInt& n) { return n.str(); }

/// Accepts "p", "p/q" and "-p/q".
inline Rat parse_rat(std::string_view s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos)
            return Rat(BigInt(std::string(s)));
        BigInt num(std::string(s.substr(0, slash)));
        BigInt den(std::string(s.substr(slash + 1)));
        if (den == 0)
            throw std::invalid_argument("zero denominator in rational '" + std::string(s) + "'");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational '" + std::string(s) + "'");
    }
}

inline BigInt binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline BigInt factorial(long n)
{
    BigInt r = 1;
    for (long i = 2; i <= n; ++i)
        r *= i;
    return r;
}

} // namespace hallkit
