#ifndef PAW_NAT_HPP
#define PAW_NAT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace paw {

// Arbitrary-precision integers; Nat values are kept non-negative by
// construction everywhere they denote elements of the domain.
using Int = boost::multiprecision::cpp_int;
using Nat = boost::multiprecision::cpp_int;

}  // namespace paw

#endif  // PAW_NAT_HPP
