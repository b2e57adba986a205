#include "pathend/enumeration.hpp"

#include <algorithm>
#include <future>
#include <ostream>

namespace pathend {

MonoidSet MonoidSet::from_sorted_unique(int n, std::vector<Transformation> sorted) {
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i].n() != n) throw std::invalid_argument("MonoidSet: size mismatch");
    if (i > 0 && !(sorted[i - 1] < sorted[i]))
      throw std::invalid_argument("MonoidSet: elements not strictly sorted");
  }
  return MonoidSet(n, std::move(sorted));
}

MonoidSet MonoidSet::from_elements(int n, std::vector<Transformation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return from_sorted_unique(n, std::move(elements));
}

bool MonoidSet::contains(const Transformation& t) const {
  return std::binary_search(elements_.begin(), elements_.end(), t);
}

namespace {

// Depth-first extension of a partial image sequence.  Candidate next values
// are visited in increasing order, so the output is lexicographic.
void extend(std::vector<img_t>& prefix, int n, bool end_steps,
            std::vector<Transformation>& out) {
  if (static_cast<int>(prefix.size()) == n) {
    out.push_back(Transformation::unchecked(prefix));
    return;
  }
  const int prev = prefix.back();
  const int lo = std::max(1, prev - 1);
  const int hi = std::min(n, prev + 1);
  for (int v = lo; v <= hi; ++v) {
    if (end_steps && v == prev) continue;
    prefix.push_back(static_cast<img_t>(v));
    extend(prefix, n, end_steps, out);
    prefix.pop_back();
  }
}

std::vector<Transformation> enumerate_branch(int first, int n, bool end_steps) {
  std::vector<Transformation> out;
  std::vector<img_t> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  prefix.push_back(static_cast<img_t>(first));
  extend(prefix, n, end_steps, out);
  return out;
}

void filter_in_place(std::vector<Transformation>& elems, EndoClass c) {
  if (c == EndoClass::End || c == EndoClass::WEnd) return;
  std::erase_if(elems, [c](const Transformation& t) { return !is_in_class(t, c); });
}

}  // namespace

MonoidSet enumerate_class(EndoClass c, int n, const EnumerationOptions& opts) {
  if (n < 1) throw std::invalid_argument("enumerate_class: n must be >= 1");
  if (n > opts.cap)
    throw SizeGuardError("enumerate_class: n exceeds materialisation cap " +
                         std::to_string(opts.cap));
  const bool end_steps = (c == EndoClass::End);
  std::vector<Transformation> all;
  if (opts.threads > 1 && n > 1) {
    std::vector<std::future<std::vector<Transformation>>> branches;
    branches.reserve(static_cast<std::size_t>(n));
    for (int first = 1; first <= n; ++first)
      branches.push_back(std::async(std::launch::async, enumerate_branch, first, n, end_steps));
    for (auto& b : branches) {
      auto part = b.get();
      all.insert(all.end(), part.begin(), part.end());
    }
  } else {
    for (int first = 1; first <= n; ++first) {
      auto part = enumerate_branch(first, n, end_steps);
      all.insert(all.end(), part.begin(), part.end());
    }
  }
  filter_in_place(all, c);
  return MonoidSet::from_sorted_unique(n, std::move(all));
}

BigCount count_class_dp(EndoClass c, int n) {
  if (c != EndoClass::End && c != EndoClass::WEnd)
    throw std::invalid_argument("count_class_dp: supported for End and WEnd only");
  if (n < 1) throw std::invalid_argument("count_class_dp: n must be >= 1");
  // ways[v-1] = number of admissible prefixes whose last image is v.
  std::vector<BigCount> ways(static_cast<std::size_t>(n), BigCount(1));
  const bool keep_flat = (c == EndoClass::WEnd);
  for (int pos = 2; pos <= n; ++pos) {
    std::vector<BigCount> next(static_cast<std::size_t>(n), BigCount(0));
    for (int v = 1; v <= n; ++v) {
      BigCount acc = 0;
      if (v > 1) acc += ways[static_cast<std::size_t>(v) - 2];
      if (keep_flat) acc += ways[static_cast<std::size_t>(v) - 1];
      if (v < n) acc += ways[static_cast<std::size_t>(v)];
      next[static_cast<std::size_t>(v) - 1] = std::move(acc);
    }
    ways = std::move(next);
  }
  BigCount total = 0;
  for (const auto& w : ways) total += w;
  return total;
}

void write_dump(const MonoidSet& set, std::ostream& os) {
  for (const auto& t : set.elements()) os << to_string(t) << '\n';
}

}  // namespace pathend
