// Full transformations of {1,...,n} viewed as self-maps of the undirected
// path with vertices 1 -- 2 -- ... -- n, plus the predicates carving out the
// endomorphism-type submonoids.

#ifndef PATHEND_TRANSFORMATION_HPP
#define PATHEND_TRANSFORMATION_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pathend {

// Image values are 1-based vertices; n <= 255 keeps elements compact when
// monoids are materialised in bulk.
using img_t = std::uint8_t;

// A full self-map of {1,...,n}, stored as the image sequence (1a, 2a, ..., na).
class Transformation {
 public:
  // Validates every entry lies in [1, images.size()].
  explicit Transformation(std::vector<img_t> images);
  explicit Transformation(const std::vector<int>& images);
  Transformation(std::initializer_list<int> images)
      : Transformation(std::vector<int>(images)) {}

  // Skips validation; only for callers that compose already-valid maps.
  static Transformation unchecked(std::vector<img_t> images);

  int n() const { return static_cast<int>(images_.size()); }

  // Image of vertex x, 1-based.
  int operator[](int x) const { return images_[static_cast<std::size_t>(x) - 1]; }

  const std::vector<img_t>& images() const { return images_; }

  friend bool operator==(const Transformation&, const Transformation&) = default;
  // Lexicographic on image sequences; shorter sequences first across sizes.
  friend std::strong_ordering operator<=>(const Transformation& a, const Transformation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  struct unchecked_tag {};
  Transformation(unchecked_tag, std::vector<img_t> images) : images_(std::move(images)) {}
  std::vector<img_t> images_;
};

struct TransformationHash {
  std::size_t operator()(const Transformation& t) const noexcept;
};

// The five submonoids of interest.  Containments:
//   Aut <= SEnd <= End <= WEnd  and  SEnd <= SWEnd <= WEnd.
enum class EndoClass { End, WEnd, SEnd, SWEnd, Aut };

// Lower-case name used on the command line: end, wend, send, swend, aut.
std::string class_name(EndoClass c);
// Inverse of class_name; throws std::invalid_argument on unknown names.
EndoClass class_from_name(std::string_view name);

// Fibres of a transformation as a partition of {1,...,n}.  block_ids[x-1] is
// the block of vertex x; blocks are numbered 0, 1, ... by first appearance,
// so equal partitions have equal block_ids.
struct KernelPartition {
  std::vector<int> block_ids;
  friend bool operator==(const KernelPartition&, const KernelPartition&) = default;
};

// Sorted positions i in [2, n-1] with (i-1)a = (i+1)a != ia.
struct InversionProfile {
  std::vector<int> positions;
  friend bool operator==(const InversionProfile&, const InversionProfile&) = default;
};

struct Interval {
  int lo;
  int hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

Transformation identity(int n);
// n, n-1, ..., 1 (the non-trivial path automorphism for n >= 2).
Transformation reversal(int n);
Transformation constant(int n, int v);

// Left-to-right composition: x(ab) = (xa)b.  Sizes must agree.
Transformation compose(const Transformation& a, const Transformation& b);

bool is_in_class(const Transformation& t, EndoClass c);

InversionProfile inversions(const Transformation& t);
// Sorted positions i in [1, n-1] with ia = (i+1)a.
std::vector<int> repetitions(const Transformation& t);

int inversion_count(const Transformation& t);
int repetition_count(const Transformation& t);

KernelPartition kernel(const Transformation& t);

// Min and max of {xa : u <= x <= v} for 1 <= u <= v <= n.  When t is WEnd the
// image of an interval is an interval; a gap in that case is an internal
// consistency failure and throws std::logic_error.
Interval image_interval(const Transformation& t, int u, int v);

// Textual form "2,1,2,3": comma-separated 1-based images.
std::string to_string(const Transformation& t);
// Parses the textual form; round-trips exactly.  Throws std::invalid_argument
// on malformed input or out-of-range entries.
Transformation parse_transformation(std::string_view text);

}  // namespace pathend

#endif  // PATHEND_TRANSFORMATION_HPP
