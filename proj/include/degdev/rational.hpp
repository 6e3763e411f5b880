#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace degdev {

// Exact rational arithmetic for degree statistics. Numerators stay well
// inside int64 for every graph size this tool targets (n up to ~1000).
using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
    return boost::rational_cast<double>(r);
}

inline Rational rational_abs(const Rational& r) {
    return r < Rational(0) ? -r : r;
}

// Largest integer <= r.
inline std::int64_t rational_floor(const Rational& r) {
    std::int64_t q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace degdev
