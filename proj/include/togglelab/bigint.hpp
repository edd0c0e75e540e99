#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace togglelab {

// Group orders overflow 64 bits well before degree 21, so all order
// arithmetic goes through an arbitrary-precision integer.
using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(std::uint32_t n);

}  // namespace togglelab
