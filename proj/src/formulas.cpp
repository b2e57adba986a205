#include "pathend/formulas.hpp"

#include <stdexcept>

namespace pathend {

ATable::ATable(int n) : n_(n) {
  if (n < 3) throw std::invalid_argument("ATable requires n >= 3");
  const int rows = n - 2, cols = n - 1;
  data_.assign(static_cast<std::size_t>(rows) * cols, BigCount(0));
  auto cell = [&](int r, int i) -> BigCount& {
    return data_[static_cast<std::size_t>(r - 1) * cols + (i - 1)];
  };
  cell(1, 1) = 1;
  cell(1, 2) = 1;
  for (int k = 2; k <= n - 2; ++k) {
    cell(k, 1) = cell(k - 1, 1) + cell(k - 1, 2);
    for (int p = 2; p <= n - 2; ++p)
      cell(k, p) = cell(k - 1, p - 1) + cell(k - 1, p) + cell(k - 1, p + 1);
    // column n-1 stays 0 up to row n-3
  }
  // Final override: the only admissible prefix from n-1 down to 1 is the
  // straight descent, reached exactly in the last row.
  cell(n - 2, n - 1) = 1;
}

const BigCount& ATable::at(int r, int i) const {
  if (r < 1 || r > n_ - 2 || i < 1 || i > n_ - 1)
    throw std::invalid_argument("ATable::at: index out of range");
  return data_[static_cast<std::size_t>(r - 1) * (n_ - 1) + (i - 1)];
}

ATable a_table(int n) { return ATable(n); }

std::vector<BigCount> b_values(int n) {
  if (n < 3) throw std::invalid_argument("b_values requires n >= 3");
  ATable a(n);
  std::vector<BigCount> out;
  out.reserve(static_cast<std::size_t>(n - 2));
  for (int r = 1; r <= n - 2; ++r) {
    BigCount row = 0;
    for (int i = 1; i <= n - 1; ++i) row += a.at(r, i);
    out.push_back(2 * row);
  }
  return out;
}

BigCount wend_count_closed(int n) {
  if (n < 2) throw std::invalid_argument("wend_count_closed requires n >= 2");
  auto pow3 = [](int e) {
    BigCount p = 1;
    for (int i = 0; i < e; ++i) p *= 3;
    return p;
  };
  BigCount total = pow3(n - 2) * (3 * n - 2);
  if (n >= 3) {
    auto b = b_values(n);
    for (int r = 1; r <= n - 2; ++r)
      total -= pow3(n - r - 2) * b[static_cast<std::size_t>(r) - 1];
  }
  return total;
}

BigCount wend_count_recursive(int n) {
  if (n < 2) throw std::invalid_argument("wend_count_recursive requires n >= 2");
  BigCount c = 3 * n - 2;  // admissible prefixes of length 2
  if (n >= 3) {
    auto b = b_values(n);
    for (int i = 1; i <= n - 2; ++i) c = 3 * c - b[static_cast<std::size_t>(i) - 1];
  }
  return c;
}

}  // namespace pathend
