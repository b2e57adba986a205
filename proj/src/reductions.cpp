#include "pathend/reductions.hpp"

#include <algorithm>
#include <sstream>

#include "pathend/closure.hpp"
#include "pathend/generators.hpp"

namespace pathend {

namespace {

std::vector<int> erase_values(std::vector<int> v, std::initializer_list<int> gone) {
  std::erase_if(v, [&](int x) { return std::find(gone.begin(), gone.end(), x) != gone.end(); });
  return v;
}

}  // namespace

ReductionStep factor_repetition(const Transformation& t) {
  if (!is_in_class(t, EndoClass::WEnd))
    throw std::invalid_argument("factor_repetition: element not a weak endomorphism");
  auto reps = repetitions(t);
  if (reps.empty())
    throw std::invalid_argument("factor_repetition: element has no repetition");
  const int n = t.n();
  const int i = reps.front();
  std::vector<img_t> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int x = 1; x <= i; ++x) images.push_back(static_cast<img_t>(t[x]));
  for (int x = i + 2; x <= n; ++x) images.push_back(static_cast<img_t>(t[x]));
  images.push_back(static_cast<img_t>(t[n] >= 2 ? t[n] - 1 : t[n] + 1));
  Transformation out(std::move(images));
  if (compose(gamma(n, i), out) != t)
    throw std::logic_error("factor_repetition: factorisation check failed");
  if (!is_in_class(out, EndoClass::WEnd) ||
      repetition_count(out) != repetition_count(t) - 1)
    throw std::logic_error("factor_repetition: output shape check failed");
  ReductionStep step{ReductionKind::Repetition, t, std::move(out)};
  step.i = i;
  return step;
}

ReductionStep case1_reduce(const Transformation& t, int k) {
  if (!is_in_class(t, EndoClass::End))
    throw std::invalid_argument("case1_reduce: element not an endomorphism");
  auto inv = inversions(t).positions;
  if (inv.size() < 2)
    throw std::invalid_argument("case1_reduce: needs at least two inversions");
  if (k < 1 || k > static_cast<int>(inv.size()))
    throw std::invalid_argument("case1_reduce: inversion index out of range");
  const int n = t.n();
  const int ik = inv[static_cast<std::size_t>(k) - 1];
  if (t[ik] != 1)
    throw std::invalid_argument("case1_reduce: chosen inversion does not map to 1");
  int a = 0;
  for (int x = ik; x <= n; ++x) a = std::max(a, t[x]);
  std::vector<img_t> images(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) {
    int y = (x < ik) ? t[x] + a - 1 : a + 1 - t[x];
    images[static_cast<std::size_t>(x) - 1] = static_cast<img_t>(y);
  }
  Transformation out(std::move(images));
  if (!is_in_class(out, EndoClass::End))
    throw std::logic_error("case1_reduce: output left the endomorphism monoid");
  if (inversions(out).positions != erase_values(inv, {ik}))
    throw std::logic_error("case1_reduce: inversion set did not shrink by {i_k}");
  if (inversions(compose(out, alpha(n, a - 1))).positions != inv)
    throw std::logic_error("case1_reduce: recomposition does not restore the inversions");
  ReductionStep step{ReductionKind::Case1, t, std::move(out)};
  step.k = k;
  step.a = a;
  return step;
}

ReductionStep case3_reduce(const Transformation& t) {
  if (!is_in_class(t, EndoClass::End))
    throw Case3Error(Case3Reject::NotEnd, "case3_reduce: element not an endomorphism");
  auto inv = inversions(t).positions;
  const int r1 = static_cast<int>(inv.size());  // r + 1 in the usual notation
  if (r1 < 3)
    throw Case3Error(Case3Reject::TooFewInversions,
                     "case3_reduce: needs at least three inversions");
  const int n = t.n();
  int b = 0;
  for (int x = 1; x <= n; ++x) b = std::max(b, t[x]);
  std::vector<int> extreme_preimages;
  for (int x = 1; x <= n; ++x)
    if (t[x] == 1 || t[x] == b) extreme_preimages.push_back(x);
  if (extreme_preimages != std::vector<int>{1, n})
    throw Case3Error(Case3Reject::PreimageCondition,
                     "case3_reduce: preimages of {1, max} are not exactly {1, n}");
  if (t[1] != 1 || t[n] != b)
    throw Case3Error(Case3Reject::Orientation,
                     "case3_reduce: wrong orientation, precompose with the reversal");
  int c = 0, k = 0;
  for (int idx = 1; idx <= r1 - 1; ++idx) {
    const int v = t[inv[static_cast<std::size_t>(idx) - 1]];
    if (v > c) c = v, k = idx;  // smallest index attaining the max
  }
  int d = n + 1, ell = 0;
  for (int idx = k + 1; idx <= r1; ++idx) {
    const int v = t[inv[static_cast<std::size_t>(idx) - 1]];
    if (v < d) d = v, ell = idx;  // smallest index attaining the min
  }
  const int ik = inv[static_cast<std::size_t>(k) - 1];
  const int il = inv[static_cast<std::size_t>(ell) - 1];
  std::vector<img_t> images(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) {
    int y;
    if (x < ik)
      y = t[x];
    else if (x <= il)
      y = 2 * c - t[x];
    else
      y = t[x] + 2 * c - 2 * d;
    images[static_cast<std::size_t>(x) - 1] = static_cast<img_t>(y);
  }
  Transformation out(std::move(images));
  if (!is_in_class(out, EndoClass::End))
    throw std::logic_error("case3_reduce: output left the endomorphism monoid");
  if (inversions(out).positions != erase_values(inv, {ik, il}))
    throw std::logic_error("case3_reduce: inversion set did not shrink by {i_k, i_ell}");
  if (inversions(compose(out, beta(n, c - d, d - 1))).positions != inv)
    throw std::logic_error("case3_reduce: recomposition does not restore the inversions");
  ReductionStep step{ReductionKind::Case3, t, std::move(out)};
  step.k = k;
  step.ell = ell;
  step.c = c;
  step.d = d;
  return step;
}

namespace {

void add_check(StructureReport& report, std::string name, bool ok, std::string detail) {
  report.checks.push_back({std::move(name), ok, std::move(detail)});
}

std::string first_diff(const MonoidSet& got, const MonoidSet& want) {
  for (const auto& t : got.elements())
    if (!want.contains(t)) return "unexpected " + to_string(t);
  for (const auto& t : want.elements())
    if (!got.contains(t)) return "missing " + to_string(t);
  return "";
}

}  // namespace

StructureReport verify_structure(int n, const EnumerationOptions& opts) {
  if (n < 1) throw std::invalid_argument("verify_structure: n must be >= 1");
  StructureReport report;

  {
    MonoidSet aut = enumerate_class(EndoClass::Aut, n, opts);
    std::vector<Transformation> expected{identity(n)};
    if (n >= 2) expected.push_back(reversal(n));
    MonoidSet want = MonoidSet::from_elements(n, std::move(expected));
    add_check(report, "aut-is-identity-and-reversal", aut == want, first_diff(aut, want));
  }

  {
    MonoidSet send = enumerate_class(EndoClass::SEnd, n, opts);
    MonoidSet want = n == 3
        ? MonoidSet::from_elements(3, {Transformation({1, 2, 3}), Transformation({3, 2, 1}),
                                       Transformation({1, 2, 1}), Transformation({2, 1, 2}),
                                       Transformation({2, 3, 2}), Transformation({3, 2, 3})})
        : enumerate_class(EndoClass::Aut, n, opts);
    add_check(report, "send-collapses-to-aut", send == want, first_diff(send, want));
  }

  {
    MonoidSet swend = enumerate_class(EndoClass::SWEnd, n, opts);
    std::vector<Transformation> expected{identity(n)};
    if (n >= 2) expected.push_back(reversal(n));
    if (n == 3) {
      expected = {Transformation({1, 2, 3}), Transformation({3, 2, 1}),
                  Transformation({1, 2, 1}), Transformation({2, 1, 2}),
                  Transformation({2, 3, 2}), Transformation({3, 2, 3})};
    }
    for (int v = 1; v <= n; ++v) expected.push_back(constant(n, v));
    MonoidSet want = MonoidSet::from_elements(n, std::move(expected));
    std::ostringstream detail;
    detail << "size " << swend.size();
    if (auto diff = first_diff(swend, want); !diff.empty()) detail << ", " << diff;
    const bool size_ok = n == 1 || n == 3 || swend.size() == static_cast<std::size_t>(n) + 2;
    add_check(report, "swend-is-aut-plus-constants", swend == want && size_ok, detail.str());
  }

  if (n >= 3) {
    // Every endomorphism with a single inversion at p shares its inversion
    // profile with alpha(n, p-1) and lies in the closure of the reversal and
    // the alphas.
    MonoidSet endo = enumerate_class(EndoClass::End, n, opts);
    MonoidSet hull = generate(family(FamilyName::ADoublePrime, n).members);
    bool ok = true;
    std::string detail;
    int seen = 0;
    for (const auto& t : endo.elements()) {
      auto inv = inversions(t).positions;
      if (inv.size() != 1) continue;
      ++seen;
      const int p = inv.front();
      if (p < 2 || p > n - 1 || inversions(alpha(n, p - 1)).positions != inv ||
          !hull.contains(t)) {
        ok = false;
        detail = "failing element " + to_string(t);
        break;
      }
    }
    if (ok) detail = std::to_string(seen) + " one-inversion elements checked";
    add_check(report, "one-inversion-elements-match-alphas", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int j = 1; ok && j <= (n - 3) / 3; ++j)
      for (int i = 1; ok && i <= (n - 3 * j - 1) / 2; ++i)
        if (!(2 <= i + 1 && i + 1 <= n - 2 && 4 <= i + 2 * j + 1 &&
              i + 2 * j + 1 <= n - 2 && 5 <= i + 3 * j + 1 && i + 3 * j + 1 <= n - 1)) {
          ok = false;
          detail = "violated at j=" + std::to_string(j) + " i=" + std::to_string(i);
        }
    add_check(report, "beta-index-inequalities", ok, detail);
  }

  return report;
}

StructureReport verify_reductions(int n, const EnumerationOptions& opts) {
  if (n < 2) throw std::invalid_argument("verify_reductions: n must be >= 2");
  StructureReport report;
  MonoidSet wend = enumerate_class(EndoClass::WEnd, n, opts);
  MonoidSet endo = enumerate_class(EndoClass::End, n, opts);

  {
    bool ok = true;
    std::string detail;
    int count = 0;
    for (const auto& t : wend.elements()) {
      if (repetition_count(t) == 0) continue;
      ++count;
      try {
        factor_repetition(t);
      } catch (const std::exception& e) {
        ok = false;
        detail = to_string(t) + ": " + e.what();
        break;
      }
    }
    if (ok) detail = std::to_string(count) + " elements factored";
    add_check(report, "repetition-factorisation", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    int count = 0;
    for (const auto& t : endo.elements()) {
      auto inv = inversions(t).positions;
      if (inv.size() < 2) continue;
      for (int k = 1; k <= static_cast<int>(inv.size()); ++k) {
        if (t[inv[static_cast<std::size_t>(k) - 1]] != 1) continue;
        ++count;
        try {
          case1_reduce(t, k);
        } catch (const std::exception& e) {
          ok = false;
          detail = to_string(t) + ": " + e.what();
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) detail = std::to_string(count) + " qualifying (element, inversion) pairs";
    add_check(report, "case1-reduction", ok, detail);
  }

  {
    // Kernel identity used by the middle case: composing with the reversal
    // and then alpha(n, n-b) preserves the kernel whenever b = max im < n.
    bool ok = true;
    std::string detail;
    int count = 0;
    for (const auto& t : endo.elements()) {
      int b = 0;
      for (int x = 1; x <= n; ++x) b = std::max(b, t[x]);
      if (b < 2 || b > n - 1) continue;
      ++count;
      if (kernel(compose(compose(t, reversal(n)), alpha(n, n - b))) != kernel(t)) {
        ok = false;
        detail = "kernel changed for " + to_string(t);
        break;
      }
    }
    if (ok) detail = std::to_string(count) + " elements checked";
    add_check(report, "case2-kernel-identity", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    int count = 0;
    for (const auto& t : endo.elements()) {
      try {
        case3_reduce(t);
        ++count;
      } catch (const Case3Error&) {
        // not a qualifying element
      } catch (const std::exception& e) {
        ok = false;
        detail = to_string(t) + ": " + e.what();
        break;
      }
    }
    if (ok) detail = std::to_string(count) + " qualifying elements reduced";
    add_check(report, "case3-reduction", ok, detail);
  }

  {
    // A two-inversion endomorphism meeting the case3 preconditions is exactly
    // a beta: j = i_2 - i_1 and i = 2 i_1 - i_2 - 1.
    bool ok = true;
    std::string detail;
    int count = 0;
    for (const auto& t : endo.elements()) {
      auto inv = inversions(t).positions;
      if (inv.size() != 2) continue;
      int b = 0;
      for (int x = 1; x <= n; ++x) b = std::max(b, t[x]);
      std::vector<int> extreme_preimages;
      for (int x = 1; x <= n; ++x)
        if (t[x] == 1 || t[x] == b) extreme_preimages.push_back(x);
      if (extreme_preimages != std::vector<int>{1, n} || t[1] != 1 || t[n] != b) continue;
      ++count;
      const int j = inv[1] - inv[0];
      const int i = 2 * inv[0] - inv[1] - 1;
      bool match = false;
      try {
        match = (t == beta(n, j, i));
      } catch (const std::invalid_argument&) {
        match = false;
      }
      if (!match) {
        ok = false;
        detail = to_string(t) + " is not beta(" + std::to_string(j) + "," + std::to_string(i) + ")";
        break;
      }
    }
    if (ok) detail = std::to_string(count) + " qualifying elements identified";
    add_check(report, "two-inversion-beta-identification", ok, detail);
  }

  return report;
}

}  // namespace pathend
