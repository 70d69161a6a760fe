#ifndef TWC_BIGINT_HPP
#define TWC_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace twc {

// Dual weight distributions involve binomials around C(n, n/2) for n in the
// thousands, far past 64 bits. Everything downstream of the transform stays
// exact in arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace twc

#endif
