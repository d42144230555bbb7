#pragma once

#include <stdexcept>
#include <string>

namespace k3 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// invert() applied to a series that is zero to working precision
struct ZeroLeadingCoefficient : Error { using Error::Error; };
// exp_series() applied to a series with a constant (or lower) term
struct NonzeroConstantTerm : Error { using Error::Error; };
// bi_invert() applied to a series whose lowest outer row is not invertible
struct NonInvertibleLeading : Error { using Error::Error; };
// argument outside the defined range of an operation or table
struct OutOfRange : Error { using Error::Error; };
// germ exponents with a nontrivial common factor
struct NotCoprime : Error { using Error::Error; };
// a symmetric y-Laurent coefficient that does not decompose in the s-basis
struct BasisChangeResidual : Error { using Error::Error; };
// a coefficient was requested beyond the available truncation order
struct InsufficientTruncation : Error { using Error::Error; };
// division by d2^3 requested at d2 = 0
struct DivisionByZeroDegree : Error { using Error::Error; };

}  // namespace k3
