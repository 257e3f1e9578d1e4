#ifndef FREEFUSION_BIGINT_HPP
#define FREEFUSION_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace freefusion {

// Coefficients and multiplicities grow combinatorially with word length.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace freefusion

#endif  // FREEFUSION_BIGINT_HPP
