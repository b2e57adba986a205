#include "pathend/transformation.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace pathend {

namespace {

void validate_images(const std::vector<img_t>& images) {
  if (images.empty()) throw std::invalid_argument("transformation must have n >= 1");
  const auto n = images.size();
  for (img_t v : images) {
    if (v < 1 || static_cast<std::size_t>(v) > n)
      throw std::invalid_argument("image value out of range [1, n]");
  }
}

int abs_diff(int a, int b) { return a > b ? a - b : b - a; }

}  // namespace

Transformation::Transformation(std::vector<img_t> images) : images_(std::move(images)) {
  validate_images(images_);
}

Transformation::Transformation(const std::vector<int>& images) {
  if (images.size() > 255) throw std::invalid_argument("n > 255 not supported");
  images_.reserve(images.size());
  for (int v : images) {
    if (v < 1 || v > 255) throw std::invalid_argument("image value out of range [1, n]");
    images_.push_back(static_cast<img_t>(v));
  }
  validate_images(images_);
}

Transformation Transformation::unchecked(std::vector<img_t> images) {
  return Transformation(unchecked_tag{}, std::move(images));
}

std::size_t TransformationHash::operator()(const Transformation& t) const noexcept {
  // FNV-1a over the image bytes.
  std::size_t h = 1469598103934665603ull;
  for (img_t v : t.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

std::string class_name(EndoClass c) {
  switch (c) {
    case EndoClass::End: return "end";
    case EndoClass::WEnd: return "wend";
    case EndoClass::SEnd: return "send";
    case EndoClass::SWEnd: return "swend";
    case EndoClass::Aut: return "aut";
  }
  throw std::invalid_argument("unknown EndoClass");
}

EndoClass class_from_name(std::string_view name) {
  if (name == "end") return EndoClass::End;
  if (name == "wend") return EndoClass::WEnd;
  if (name == "send") return EndoClass::SEnd;
  if (name == "swend") return EndoClass::SWEnd;
  if (name == "aut") return EndoClass::Aut;
  throw std::invalid_argument("unknown class name: " + std::string(name));
}

Transformation identity(int n) {
  if (n < 1 || n > 255) throw std::invalid_argument("n out of range [1, 255]");
  std::vector<img_t> images(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) images[static_cast<std::size_t>(x) - 1] = static_cast<img_t>(x);
  return Transformation::unchecked(std::move(images));
}

Transformation reversal(int n) {
  if (n < 1 || n > 255) throw std::invalid_argument("n out of range [1, 255]");
  std::vector<img_t> images(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x)
    images[static_cast<std::size_t>(x) - 1] = static_cast<img_t>(n - x + 1);
  return Transformation::unchecked(std::move(images));
}

Transformation constant(int n, int v) {
  if (n < 1 || n > 255) throw std::invalid_argument("n out of range [1, 255]");
  if (v < 1 || v > n) throw std::invalid_argument("constant value out of range [1, n]");
  return Transformation::unchecked(std::vector<img_t>(static_cast<std::size_t>(n), static_cast<img_t>(v)));
}

Transformation compose(const Transformation& a, const Transformation& b) {
  if (a.n() != b.n()) throw std::invalid_argument("compose: size mismatch");
  const auto& av = a.images();
  const auto& bv = b.images();
  std::vector<img_t> out(av.size());
  for (std::size_t x = 0; x < av.size(); ++x) out[x] = bv[av[x] - 1u];
  return Transformation::unchecked(std::move(out));
}

namespace {

bool is_wend(const Transformation& t) {
  const int n = t.n();
  for (int i = 1; i < n; ++i)
    if (abs_diff(t[i], t[i + 1]) > 1) return false;
  return true;
}

bool is_end(const Transformation& t) {
  const int n = t.n();
  for (int i = 1; i < n; ++i)
    if (abs_diff(t[i], t[i + 1]) != 1) return false;
  return true;
}

bool is_send(const Transformation& t) {
  const int n = t.n();
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if ((v - u == 1) != (abs_diff(t[u], t[v]) == 1)) return false;
  return true;
}

bool is_swend(const Transformation& t) {
  const int n = t.n();
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) {
      bool lhs = (v - u == 1) && t[u] != t[v];
      if (lhs != (abs_diff(t[u], t[v]) == 1)) return false;
    }
  return true;
}

bool is_bijective(const Transformation& t) {
  std::vector<bool> seen(static_cast<std::size_t>(t.n()), false);
  for (img_t v : t.images()) {
    if (seen[v - 1u]) return false;
    seen[v - 1u] = true;
  }
  return true;
}

}  // namespace

bool is_in_class(const Transformation& t, EndoClass c) {
  switch (c) {
    case EndoClass::WEnd: return is_wend(t);
    case EndoClass::End: return is_end(t);
    case EndoClass::SEnd: return is_send(t);
    case EndoClass::SWEnd: return is_swend(t);
    case EndoClass::Aut: return is_bijective(t) && is_send(t);
  }
  throw std::invalid_argument("unknown EndoClass");
}

InversionProfile inversions(const Transformation& t) {
  InversionProfile out;
  const int n = t.n();
  for (int i = 2; i <= n - 1; ++i)
    if (t[i - 1] == t[i + 1] && t[i - 1] != t[i]) out.positions.push_back(i);
  return out;
}

std::vector<int> repetitions(const Transformation& t) {
  std::vector<int> out;
  const int n = t.n();
  for (int i = 1; i <= n - 1; ++i)
    if (t[i] == t[i + 1]) out.push_back(i);
  return out;
}

int inversion_count(const Transformation& t) {
  return static_cast<int>(inversions(t).positions.size());
}

int repetition_count(const Transformation& t) {
  return static_cast<int>(repetitions(t).size());
}

KernelPartition kernel(const Transformation& t) {
  const int n = t.n();
  KernelPartition out;
  out.block_ids.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> block_of_value(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int x = 1; x <= n; ++x) {
    int& b = block_of_value[static_cast<std::size_t>(t[x]) - 1];
    if (b < 0) b = next++;
    out.block_ids[static_cast<std::size_t>(x) - 1] = b;
  }
  return out;
}

Interval image_interval(const Transformation& t, int u, int v) {
  const int n = t.n();
  if (u < 1 || v > n || u > v) throw std::invalid_argument("image_interval: bad window");
  int lo = t[u], hi = t[u];
  for (int x = u + 1; x <= v; ++x) {
    lo = std::min(lo, t[x]);
    hi = std::max(hi, t[x]);
  }
  if (is_wend(t)) {
    std::vector<bool> seen(static_cast<std::size_t>(hi - lo + 1), false);
    for (int x = u; x <= v; ++x) seen[static_cast<std::size_t>(t[x] - lo)] = true;
    for (bool s : seen)
      if (!s) throw std::logic_error("image of an interval under a weak endomorphism has a gap");
  }
  return {lo, hi};
}

std::string to_string(const Transformation& t) {
  std::ostringstream os;
  for (int x = 1; x <= t.n(); ++x) {
    if (x > 1) os << ',';
    os << t[x];
  }
  return os.str();
}

Transformation parse_transformation(std::string_view text) {
  std::vector<int> images;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view token =
        comma == std::string_view::npos ? text.substr(pos) : text.substr(pos, comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw std::invalid_argument("malformed transformation text");
    images.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Transformation(images);
}

}  // namespace pathend
