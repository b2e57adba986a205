// Regularity of path transformations: the interval criterion, an explicit
// pseudo-inverse construction, and brute-force oracles for cross-checking.

#ifndef PATHEND_REGULARITY_HPP
#define PATHEND_REGULARITY_HPP

#include <optional>

#include "pathend/enumeration.hpp"
#include "pathend/transformation.hpp"

namespace pathend {

struct RegularityReport {
  Transformation element;
  EndoClass cls;
  bool regular;
  // Leftmost window [i, j] with |[i, j]| = |im(t)| mapped onto im(t).
  std::optional<Interval> interval;
  std::optional<Transformation> witness;
};

// A weak endomorphism t is regular iff some interval I with |I| = |im(t)|
// satisfies It = im(t).  c must be End or WEnd and t must lie in c.  No
// searching through the monoid is involved.
RegularityReport regular_by_criterion(const Transformation& t, EndoClass c);

// For t regular by the criterion, builds b with t b t = t.  On the witness
// interval t restricts to a monotone bijection onto im(t); b inverts it there
// and continues with +-1 zigzags on both sides, so b is always a path
// endomorphism.  For constant t any map works and the identity is returned.
Transformation pseudo_inverse(const Transformation& t);

// True iff some x in m satisfies t x t = t.  t must belong to m.
bool regular_by_oracle(const Transformation& t, const MonoidSet& m);

struct ClassRegularity {
  bool regular;
  std::optional<Transformation> counterexample;  // first non-regular element
};

// Whether every element of the class is regular; stops at the first failure
// in lexicographic order.
ClassRegularity class_regular(EndoClass c, int n, const EnumerationOptions& opts = {});

}  // namespace pathend

#endif  // PATHEND_REGULARITY_HPP
