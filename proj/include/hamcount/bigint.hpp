#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hamcount {

// Arbitrary-precision signed integer. Every count, minor and coefficient in
// this library is exact; there is no floating-point code path.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace hamcount
