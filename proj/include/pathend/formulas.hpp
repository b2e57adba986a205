// Closed-form and recursive counting of the weak endomorphisms of the path,
// exact at any n via arbitrary-precision arithmetic.

#ifndef PATHEND_FORMULAS_HPP
#define PATHEND_FORMULAS_HPP

#include <vector>

#include "pathend/bigcount.hpp"

namespace pathend {

// Auxiliary table a(r, i) for n >= 3, defined for 1 <= r <= n-2 and
// 1 <= i <= n-1 by
//   a(1,1) = a(1,2) = 1,  a(1,p) = 0 for p >= 3,
//   a(k,1) = a(k-1,1) + a(k-1,2),
//   a(k,p) = a(k-1,p-1) + a(k-1,p) + a(k-1,p+1)  for 2 <= p <= n-2,
//   a(k,n-1) = 0 for 2 <= k <= n-3,
// and finally a(n-2, n-1) = 1, which overrides the zero rule in the last row.
// a(r, i) counts the admissible prefixes (1a, ..., (r+1)a) with 1a = i and
// (r+1)a = 1.
class ATable {
 public:
  explicit ATable(int n);

  int n() const { return n_; }
  const BigCount& at(int r, int i) const;

 private:
  int n_;
  std::vector<BigCount> data_;  // (n-2) rows by (n-1) columns, row-major
};

ATable a_table(int n);

// b(r) = 2 * sum_i a(r, i) for r = 1..n-2: the number of admissible prefixes
// of length r+1 whose last image is 1 or n.  Returned with b(1) at index 0.
std::vector<BigCount> b_values(int n);

// |WEnd| on n >= 2 vertices via the closed form
//   3^(n-2) (3n-2) - sum_{r=1}^{n-2} 3^(n-r-2) b(r).
BigCount wend_count_closed(int n);

// Same value via the recursion c(1) = 3n-2, c(i+1) = 3 c(i) - b(i).
BigCount wend_count_recursive(int n);

}  // namespace pathend

#endif  // PATHEND_FORMULAS_HPP
