#pragma once

#include <gmpxx.h>

#include <string>

namespace exc {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& n) { return n.get_str(); }

inline std::string to_string(const Rational& q)
{
    Rational c(q);
    c.canonicalize();
    return c.get_str();
}

} // namespace exc
