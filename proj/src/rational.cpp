#include "csurg/rational.hpp"

namespace csurg {

Int floor_rat(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num(r).get_mpz_t(), den(r).get_mpz_t());
    return q;
}

std::string rat_str(const Rat& r) {
    return num(r).get_str() + "/" + den(r).get_str();
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Int p(s);
            return Rat(p);
        }
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        return make_rat(p, q);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

bool perfect_square(const Int& n, Int& root) {
    if (n < 0) return false;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root * root == n;
}

}  // namespace csurg
