#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace csurg {

// All arithmetic in this library is exact. Int/Rat are the only numeric
// types that appear in computations; doubles never do.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& p, const Int& q) {
    if (q == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(p, q);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long p, long q = 1) { return make_rat(Int(p), Int(q)); }

// mpz_class has no long long constructor; sizes here always fit a long.
inline Int int_of(long long v) { return Int(static_cast<long>(v)); }

inline Int num(const Rat& r) { return r.get_num(); }
inline Int den(const Rat& r) { return r.get_den(); }  // always > 0

inline bool is_integer(const Rat& r) { return den(r) == 1; }

inline int sign_of(const Rat& r) { return sgn(r); }
inline int sign_of(const Int& n) { return sgn(n); }

// floor(p/q) as an Int
Int floor_rat(const Rat& r);

// Canonical "p/q" form, lowest terms, q >= 1 (q printed even when 1,
// so report output is uniform and diff-stable).
std::string rat_str(const Rat& r);

// Accepts "p/q" or "p". Throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& s);

// Exact integer square root test: returns true and sets root when n = root^2.
bool perfect_square(const Int& n, Int& root);

}  // namespace csurg
