#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace chandas {

// Unbounded non-negative integer. Counts, indices, binomials and powers are
// exact at every size; callers keep the non-negativity invariant.
using Natural = boost::multiprecision::cpp_int;

// 2^n for bounds checks and place values. The counting module computes its
// powers by the historical routes and never calls this.
inline Natural pow2(unsigned n) { return Natural(1) << n; }

}  // namespace chandas
