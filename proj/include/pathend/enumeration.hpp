// Exhaustive enumeration and dynamic-programming counts for the submonoids
// of path transformations.

#ifndef PATHEND_ENUMERATION_HPP
#define PATHEND_ENUMERATION_HPP

#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "pathend/bigcount.hpp"
#include "pathend/transformation.hpp"

namespace pathend {

// Thrown when a request would materialise more elements than the configured
// guard allows.  A guard trip is a refusal, never a wrong answer.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A finite set of transformations of common size n, held sorted
// lexicographically on image sequences.
class MonoidSet {
 public:
  // sorted must be strictly increasing; use from_elements for raw input.
  static MonoidSet from_sorted_unique(int n, std::vector<Transformation> sorted);
  static MonoidSet from_elements(int n, std::vector<Transformation> elements);

  int n() const { return n_; }
  const std::vector<Transformation>& elements() const& { return elements_; }
  // Ranging over a temporary set must not dangle, so rvalues hand the
  // storage over instead of a reference into a dying object.
  std::vector<Transformation> elements() && { return std::move(elements_); }
  std::size_t size() const { return elements_.size(); }
  BigCount cardinality() const { return BigCount(elements_.size()); }
  bool contains(const Transformation& t) const;

  friend bool operator==(const MonoidSet&, const MonoidSet&) = default;

 private:
  MonoidSet(int n, std::vector<Transformation> sorted)
      : n_(n), elements_(std::move(sorted)) {}
  int n_;
  std::vector<Transformation> elements_;
};

struct EnumerationOptions {
  // Materialisation cap: enumerate_class refuses n > cap.  12 keeps the
  // largest default answer (the weak endomorphisms) around 1.5M elements.
  int cap = 12;
  // Branches may be enumerated concurrently, partitioned by the image of
  // vertex 1; the merged result is identical for every thread count.
  int threads = 1;
};

// All elements of the chosen class on n vertices, in lexicographic order.
// Backtracks over image sequences with the step constraint; SEnd, SWEnd and
// Aut are produced by filtering the WEnd enumeration.
MonoidSet enumerate_class(EndoClass c, int n, const EnumerationOptions& opts = {});

// Exact count by dynamic programming over (position, current image value).
// Supported for End and WEnd only; no materialisation, so no cap.
BigCount count_class_dp(EndoClass c, int n);

// One transformation per line in the textual format, in the set's order.
void write_dump(const MonoidSet& set, std::ostream& os);

}  // namespace pathend

#endif  // PATHEND_ENUMERATION_HPP
