#pragma once

#include <map>
#include <string>
#include <vector>

#include "csurg/pd.hpp"
#include "csurg/rational.hpp"

namespace csurg::poly {

// Exact Laurent polynomial with integer coefficients in `arity` variables.
// Exponent vectors may be negative; zero coefficients are never stored.
class LaurentPoly {
public:
    using Exp = std::vector<int>;

    LaurentPoly() = default;
    explicit LaurentPoly(int arity) : arity_(arity) {}
    static LaurentPoly constant(int arity, const Int& c);
    static LaurentPoly monomial(const Exp& e, const Int& c);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exp, Int>& terms() const { return terms_; }

    void add_term(const Exp& e, const Int& c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const = default;

    LaurentPoly shifted(const Exp& e) const;  // multiply by a monomial
    LaurentPoly pow(int k) const;

    // substitute variable `var` by the 1-variable Laurent polynomial `value`
    // (in the output's single variable); other variables must not occur.
    LaurentPoly substitute_single(const LaurentPoly& value) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    int arity_ = 0;
    std::map<Exp, Int> terms_;
};

struct SkeinError : std::runtime_error {
    explicit SkeinError(const std::string& m) : std::runtime_error(m) {}
};

inline constexpr int kMaxSkeinCrossings = 20;

// HOMFLY polynomial in the (l, m) convention
//   l P(L+) + l^-1 P(L-) + m P(L0) = 0,  P(unknot) = 1.
// Variables: exponent vector (e_l, e_m).
LaurentPoly homfly(const pd::PDCode& pd, int max_crossings = kMaxSkeinCrossings);

// Conway polynomial: P(L+) - P(L-) = z P(L0), P(unknot) = 1, split links -> 0.
LaurentPoly conway(const pd::PDCode& pd, int max_crossings = kMaxSkeinCrossings);

// Alexander polynomial via z = t^(1/2) - t^(-1/2); exponents are in units of
// t^(1/2) (even entries for knots).
LaurentPoly alexander(const pd::PDCode& pd, int max_crossings = kMaxSkeinCrossings);

// HOMFLY -> Conway consistency substitution (l = i branch): maps a HOMFLY
// polynomial to the Conway polynomial of the same link.
LaurentPoly homfly_to_conway(const LaurentPoly& h);

}  // namespace csurg::poly
