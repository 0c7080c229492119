#include "artmod/rational.hpp"

#include <stdexcept>

namespace artmod {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + s);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: " + s);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& x) {
    return x.get_str();
}

Rat binomial_coeff(long j, long i) {
    if (i < 0) return Rat(0);
    Int num = 1;
    Int den = 1;
    for (long k = 0; k < i; ++k) {
        num *= Int(j - k);
        den *= Int(k + 1);
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace artmod
