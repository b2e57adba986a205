#include "pathend/generators.hpp"

#include <stdexcept>

namespace pathend {

Transformation alpha(int n, int i) {
  if (n < 3) throw std::invalid_argument("alpha requires n >= 3");
  if (i < 1 || i > n - 2) throw std::invalid_argument("alpha: i out of range [1, n-2]");
  std::vector<img_t> images(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) {
    int y = (x <= i + 1) ? i + 2 - x : x - i;
    images[static_cast<std::size_t>(x) - 1] = static_cast<img_t>(y);
  }
  return Transformation::unchecked(std::move(images));
}

Transformation beta(int n, int j, int i) {
  if (n < 6) throw std::invalid_argument("beta requires n >= 6");
  if (j < 1 || j > (n - 3) / 3) throw std::invalid_argument("beta: j out of range [1, (n-3)/3]");
  if (i < 1 || i > n - 3 * j - 2)
    throw std::invalid_argument("beta: i out of range [1, n-3j-2]");
  std::vector<img_t> images(static_cast<std::size_t>(n));
  const int fold = i + j + 1;
  for (int x = 1; x <= n; ++x) {
    int y;
    if (x <= fold)
      y = x;
    else if (x <= i + 2 * j + 1)
      y = 2 * fold - x;
    else
      y = x - 2 * j;
    images[static_cast<std::size_t>(x) - 1] = static_cast<img_t>(y);
  }
  return Transformation::unchecked(std::move(images));
}

Transformation gamma(int n, int i) {
  if (n < 2) throw std::invalid_argument("gamma requires n >= 2");
  if (i < 1 || i > n - 1) throw std::invalid_argument("gamma: i out of range [1, n-1]");
  std::vector<img_t> images(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x)
    images[static_cast<std::size_t>(x) - 1] = static_cast<img_t>(x <= i ? x : x - 1);
  return Transformation::unchecked(std::move(images));
}

int beta_stratum_size(int n) {
  int s = 0;
  for (int j = 1; j <= (n - 3) / 3; ++j) s += (n - 3 * j - 1) / 2;
  return s;
}

std::string family_name(FamilyName f) {
  switch (f) {
    case FamilyName::APrime: return "aprime";
    case FamilyName::ADoublePrime: return "adoubleprime";
    case FamilyName::A: return "a";
    case FamilyName::B: return "b";
    case FamilyName::SwGens: return "swgens";
  }
  throw std::invalid_argument("unknown FamilyName");
}

FamilyName family_from_name(std::string_view name) {
  if (name == "aprime" || name == "a'") return FamilyName::APrime;
  if (name == "adoubleprime" || name == "a''") return FamilyName::ADoublePrime;
  if (name == "a") return FamilyName::A;
  if (name == "b") return FamilyName::B;
  if (name == "swgens") return FamilyName::SwGens;
  throw std::invalid_argument("unknown family name: " + std::string(name));
}

GeneratorFamily family(FamilyName f, int n) {
  if (n < 2) throw std::invalid_argument("family requires n >= 2");
  GeneratorFamily out{f, n, {}};
  auto& m = out.members;
  if (f == FamilyName::SwGens) {
    if (n == 3) {
      // The three-vertex case is exceptional: the reversed edge map replaces
      // the second constant.
      m.push_back(reversal(3));
      m.push_back(Transformation({2, 1, 2}));
      m.push_back(constant(3, 1));
      return out;
    }
    m.push_back(reversal(n));
    for (int v = 1; v <= (n + 1) / 2; ++v) m.push_back(constant(n, v));
    return out;
  }
  m.push_back(reversal(n));
  const bool half_alpha = (f == FamilyName::A || f == FamilyName::B);
  const int alpha_hi = half_alpha ? (n - 1) / 2 : n - 2;
  for (int i = 1; i <= alpha_hi; ++i) m.push_back(alpha(n, i));
  if (f != FamilyName::ADoublePrime) {
    for (int j = 1; j <= (n - 3) / 3; ++j) {
      const int i_hi = half_alpha ? (n - 3 * j - 1) / 2 : n - 3 * j - 2;
      for (int i = 1; i <= i_hi; ++i) m.push_back(beta(n, j, i));
    }
  }
  if (f == FamilyName::B)
    for (int i = 1; i <= n / 2; ++i) m.push_back(gamma(n, i));
  return out;
}

}  // namespace pathend
