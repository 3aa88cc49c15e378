#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace goldensurf {

// Arbitrary-precision signed integer used by every exact computation.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace goldensurf
