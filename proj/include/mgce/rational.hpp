#pragma once

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>

namespace mgce {

// Exact arithmetic over Q. mpq_class keeps gcd(num, den) = 1 and den > 0
// as long as every value entering the system is canonicalized, which
// rat_from_string enforces for parsed input.
using Rat = mpq_class;
using Int = mpz_class;

struct BadRational : std::runtime_error {
    explicit BadRational(const std::string& text)
        : std::runtime_error("not an exact rational: '" + text + "'") {}
};

inline Rat rat_from_string(const std::string& text)
{
    if (text.empty())
        throw BadRational(text);
    for (char ch : text)
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
            throw BadRational(text);
    Rat q;
    if (q.set_str(text, 10) != 0)
        throw BadRational(text);
    if (q.get_den() == 0)
        throw BadRational(text);
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rat& q)
{
    return q.get_str();
}

// mpq_class(n, d) does not reduce; this does
inline Rat rat_frac(long num, long den)
{
    Rat q(num, den);
    q.canonicalize();
    return q;
}

} // namespace mgce
