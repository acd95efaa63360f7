#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace pinch {

// Exact arbitrary-precision arithmetic is delegated to GMP. mpq_class keeps
// values canonical (reduced, positive denominator) through arithmetic as long
// as they enter canonical, so construction is funneled through make_rat.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline Rat k_zero(const Rat&) { return Rat(0); }
inline Rat k_one(const Rat&) { return Rat(1); }

inline std::string to_string(const Rat& r) { return r.get_str(); }

} // namespace pinch
