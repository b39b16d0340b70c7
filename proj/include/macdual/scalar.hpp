#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace macdual {

// Exact rational scalar. All arithmetic in the library is exact; results are
// always kept in lowest terms by the underlying representation.
using Scalar = mpq_class;

inline Scalar scalar_from_string(const std::string& s) {
    Scalar q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

inline std::string scalar_to_string(const Scalar& q) {
    return q.get_str();
}

}  // namespace macdual
