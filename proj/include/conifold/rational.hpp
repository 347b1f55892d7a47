#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace conifold {

// Exact coefficient types. Everything in the library is computed over Q
// (Z for lattice data); there is no floating point anywhere. mpq_class
// keeps values in lowest terms with positive denominator, so equality of
// canonical forms is plain bitwise equality.
using Rational = mpq_class;
using Integer = mpz_class;

/// p/q in canonical form; throws std::invalid_argument on q == 0.
Rational rational(long p, long q = 1);

/// Parse "p" or "p/q" (arbitrary precision, optional leading sign).
Rational parse_rational(const std::string& text);
Integer parse_integer(const std::string& text);

/// Lowest-terms rendering: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

}  // namespace conifold

namespace Eigen {

// mpq_class / mpz_class as Eigen scalars. Exact arithmetic: epsilon and
// dummy_precision are zero and the approximate-comparison API is never used.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    using Real = mpq_class;
    using NonInteger = mpq_class;
    using Nested = mpq_class;
    using Literal = long;
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 100,
        MulCost = 100
    };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    using Real = mpz_class;
    using NonInteger = mpq_class;
    using Nested = mpz_class;
    using Literal = long;
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 60,
        MulCost = 60
    };
};

}  // namespace Eigen
