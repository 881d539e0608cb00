#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace frattini {

/// Exact arbitrary-precision integer. Cyclotomic coefficients and Smith
/// normal form entries grow without bound, so fixed-width integers are
/// never used for them.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace frattini
