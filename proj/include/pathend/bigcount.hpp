// Exact arbitrary-precision counts.  Backed by Boost.Multiprecision so that
// cardinalities never overflow or round; all counts in this library are
// nonnegative.

#ifndef PATHEND_BIGCOUNT_HPP
#define PATHEND_BIGCOUNT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace pathend {

using BigCount = boost::multiprecision::cpp_int;

}  // namespace pathend

#endif  // PATHEND_BIGCOUNT_HPP
