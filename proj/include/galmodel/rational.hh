#ifndef GALMODEL_RATIONAL_HH
#define GALMODEL_RATIONAL_HH

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace galmodel {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("rat_from_string: bad literal '" + s + "'");
    q.canonicalize();
    return q;
}

// "p" for integers, "p/q" otherwise
inline std::string to_string(const Rat& q) { return q.get_str(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline int rat_cmp(const Rat& a, const Rat& b) { return cmp(a, b); }

} // namespace galmodel

#endif
