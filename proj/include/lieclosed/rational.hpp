#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace lieclosed {

// Exact rational; Boost keeps it normalized with a positive denominator.
// Expression templates are off so generic code can use `auto` freely.
using ExactRational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                                    boost::multiprecision::et_off>;

}  // namespace lieclosed
