#include "pathend/regularity.hpp"

#include <algorithm>
#include <stdexcept>

namespace pathend {

namespace {

// Leftmost interval of length |im(t)| mapped onto im(t), if any.
std::optional<Interval> find_witness_interval(const Transformation& t) {
  const int n = t.n();
  std::vector<bool> in_image(static_cast<std::size_t>(n), false);
  int m = 0;
  for (img_t v : t.images())
    if (!in_image[v - 1u]) {
      in_image[v - 1u] = true;
      ++m;
    }
  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  int distinct = 0;
  // Sliding window of width m over positions.
  for (int x = 1; x <= n; ++x) {
    if (hits[static_cast<std::size_t>(t[x]) - 1]++ == 0) ++distinct;
    if (x > m && --hits[static_cast<std::size_t>(t[x - m]) - 1] == 0) --distinct;
    if (x >= m && distinct == m) return Interval{x - m + 1, x};
  }
  return std::nullopt;
}

}  // namespace

RegularityReport regular_by_criterion(const Transformation& t, EndoClass c) {
  if (c != EndoClass::End && c != EndoClass::WEnd)
    throw std::invalid_argument("regular_by_criterion: class must be End or WEnd");
  if (!is_in_class(t, c))
    throw std::invalid_argument("regular_by_criterion: element not in class");
  RegularityReport report{t, c, false, std::nullopt, std::nullopt};
  report.interval = find_witness_interval(t);
  report.regular = report.interval.has_value();
  return report;
}

Transformation pseudo_inverse(const Transformation& t) {
  if (!is_in_class(t, EndoClass::WEnd))
    throw std::invalid_argument("pseudo_inverse: element not a weak endomorphism");
  auto iv = find_witness_interval(t);
  if (!iv) throw std::invalid_argument("pseudo_inverse: element is not regular");
  const int n = t.n();
  const int i = iv->lo, j = iv->hi;
  if (i == j) return identity(n);  // constant t: t b t = t for every b

  // On [i, j] the restriction is an injective weak endomorphism, hence
  // strictly monotone.
  const bool increasing = t[i] < t[j];
  for (int x = i; x < j; ++x)
    if ((t[x + 1] - t[x]) != (increasing ? 1 : -1))
      throw std::logic_error("witness interval restriction is not monotone");

  const int lo = increasing ? t[i] : t[j];
  const int hi = increasing ? t[j] : t[i];
  std::vector<img_t> b(static_cast<std::size_t>(n), 0);
  auto set = [&](int value, int to) { b[static_cast<std::size_t>(value) - 1] = static_cast<img_t>(to); };
  // Inverse of the restriction on im(t) = [lo, hi].
  for (int v = lo; v <= hi; ++v) set(v, increasing ? i + (v - lo) : i + (hi - v));
  // Zigzag over values below lo, pinned to end adjacent to the inverse part;
  // the off-anchor step points into the witness interval.
  const int low_anchor = increasing ? i : j;  // image of lo
  for (int p = 1; p < lo; ++p)
    set(p, ((lo - 1 - p) % 2 == 0) ? low_anchor + (increasing ? 1 : -1)
                                   : low_anchor);
  // Zigzag over values above hi.
  const int high_anchor = increasing ? j : i;  // image of hi
  for (int q = 1; q <= n - hi; ++q)
    set(hi + q, (q % 2 == 1) ? high_anchor + (increasing ? -1 : 1)
                             : high_anchor);
  Transformation result(std::move(b));
  if (!is_in_class(result, EndoClass::End))
    throw std::logic_error("pseudo-inverse left the endomorphism monoid");
  if (compose(compose(t, result), t) != t)
    throw std::logic_error("pseudo-inverse does not invert on the image");
  return result;
}

bool regular_by_oracle(const Transformation& t, const MonoidSet& m) {
  if (!m.contains(t)) throw std::invalid_argument("regular_by_oracle: element not in monoid");
  for (const auto& x : m.elements())
    if (compose(compose(t, x), t) == t) return true;
  return false;
}

ClassRegularity class_regular(EndoClass c, int n, const EnumerationOptions& opts) {
  if (c != EndoClass::End && c != EndoClass::WEnd)
    throw std::invalid_argument("class_regular: class must be End or WEnd");
  MonoidSet m = enumerate_class(c, n, opts);
  for (const auto& t : m.elements())
    if (!regular_by_criterion(t, c).regular) return {false, t};
  return {true, std::nullopt};
}

}  // namespace pathend
