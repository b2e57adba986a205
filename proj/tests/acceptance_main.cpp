// Final verification gate.  Runs ten independent checks covering the counting
// results, the generating families and their ranks, the structure and
// regularity classifications, the inversion identities, and the constructive
// reductions, each against an enforced wall-clock limit.  One line per check;
// exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pathend/closure.hpp"
#include "pathend/enumeration.hpp"
#include "pathend/formulas.hpp"
#include "pathend/generators.hpp"
#include "pathend/reductions.hpp"
#include "pathend/regularity.hpp"
#include "pathend/transformation.hpp"

using namespace pathend;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(std::string what) {
    if (ok) detail = std::move(what);
    ok = false;
  }
  void require(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
};

const char* const kWendTable[16] = {
    "1",       "4",        "17",       "68",       "259",      "950",
    "3387",    "11814",    "40503",    "136946",   "457795",   "1515926",
    "4979777", "16246924", "52694573", "170028792"};

const char* const kWendHundred =
    "15116889835751504709361077940682197429012095346416";

Outcome check_cardinality_table() {
  Outcome out;
  for (int n = 1; n <= 8; ++n)
    out.require(enumerate_class(EndoClass::WEnd, n).cardinality().str() == kWendTable[n - 1],
                "enumerated weak endomorphism count is off at n=" + std::to_string(n));
  for (int n = 9; n <= 16; ++n)
    out.require(count_class_dp(EndoClass::WEnd, n).str() == kWendTable[n - 1],
                "dp weak endomorphism count is off at n=" + std::to_string(n));
  return out;
}

Outcome check_formula_coherence() {
  Outcome out;
  for (int n = 2; n <= 16; ++n) {
    BigCount closed = wend_count_closed(n);
    out.require(closed == wend_count_recursive(n),
                "closed and recursive forms disagree at n=" + std::to_string(n));
    out.require(closed == count_class_dp(EndoClass::WEnd, n),
                "formula and dp disagree at n=" + std::to_string(n));
  }
  out.require(wend_count_closed(100).str() == kWendHundred,
              "50-digit value at n=100 is off");
  return out;
}

Outcome check_family_generation() {
  Outcome out;
  for (int n = 2; n <= 8; ++n) {
    out.require(generates_class(family(FamilyName::A, n).members, EndoClass::End, n),
                "family a fails to generate the endomorphisms at n=" + std::to_string(n));
    out.require(generates_class(family(FamilyName::B, n).members, EndoClass::WEnd, n),
                "family b fails to generate the weak endomorphisms at n=" + std::to_string(n));
  }
  for (int n = 2; n <= 10; ++n)
    out.require(generates_class(family(FamilyName::SwGens, n).members, EndoClass::SWEnd, n),
                "swgens fails at n=" + std::to_string(n));
  return out;
}

Outcome check_rank_bruteforce() {
  Outcome out;
  auto match = [&](EndoClass c, int n, int expected) {
    auto found = brute_force_rank(c, n);
    if (!found) {
      out.fail("rank search ran out of budget for " + class_name(c) + " at n=" +
               std::to_string(n));
      return;
    }
    out.require(*found == expected && *found == rank_formula(c, n),
                "rank mismatch for " + class_name(c) + " at n=" + std::to_string(n) +
                    ": found " + std::to_string(*found));
  };
  const int end_ranks[] = {1, 2, 2, 3};
  for (int n = 2; n <= 5; ++n) match(EndoClass::End, n, end_ranks[n - 2]);
  const int wend_ranks[] = {2, 3, 4};
  for (int n = 2; n <= 4; ++n) match(EndoClass::WEnd, n, wend_ranks[n - 2]);
  for (int n = 2; n <= 8; ++n) match(EndoClass::SWEnd, n, (n + 1) / 2 + 1);
  return out;
}

Outcome check_rank_certificates() {
  Outcome out;
  for (EndoClass c : {EndoClass::End, EndoClass::WEnd})
    for (int n = 2; n <= 8; ++n) {
      RankCertificate cert = rank_certificate(c, n);
      out.require(cert.valid(), "certificate invalid for " + class_name(c) + " at n=" +
                                    std::to_string(n));
    }
  return out;
}

Outcome check_relative_rank() {
  Outcome out;
  for (int n = 2; n <= 5; ++n) {
    RelativeRankResult r = relative_rank_check(n);
    out.require(r.needed == n / 2, "wrong extension size claimed at n=" + std::to_string(n));
    out.require(r.upper_ok, "upper bound fails at n=" + std::to_string(n));
    out.require(r.lower_ok.has_value() && *r.lower_ok,
                "lower bound not confirmed at n=" + std::to_string(n));
  }
  // beyond n=5 only the upper bound is asserted, so skip the subset search
  for (int n = 6; n <= 7; ++n)
    out.require(relative_rank_check(n, 2).upper_ok,
                "upper bound fails at n=" + std::to_string(n));
  return out;
}

Outcome check_structure_classification() {
  Outcome out;
  for (int n = 2; n <= 8; ++n) {
    StructureReport report = verify_structure(n);
    for (const auto& c : report.checks)
      out.require(c.ok, c.name + " fails at n=" + std::to_string(n) + ": " + c.detail);
  }
  return out;
}

Transformation end_witness(int n) {
  std::vector<int> img{1, 2, 3, 2};
  for (int x = 5; x <= n; ++x) img.push_back(x - 2);
  return Transformation(img);
}

Outcome check_regularity() {
  Outcome out;
  for (int n = 2; n <= 6; ++n)
    for (EndoClass c : {EndoClass::End, EndoClass::WEnd}) {
      MonoidSet m = enumerate_class(c, n);
      for (const auto& t : m.elements())
        out.require(regular_by_criterion(t, c).regular == regular_by_oracle(t, m),
                    "criterion and oracle disagree on " + to_string(t));
    }
  for (int n = 2; n <= 7; ++n) {
    out.require(class_regular(EndoClass::WEnd, n).regular == (n <= 3),
                "weak regularity boundary wrong at n=" + std::to_string(n));
    out.require(class_regular(EndoClass::End, n).regular == (n <= 5),
                "regularity boundary wrong at n=" + std::to_string(n));
  }
  for (int n = 6; n <= 8; ++n)
    out.require(!regular_by_criterion(end_witness(n), EndoClass::End).regular,
                "zigzag witness should be non-regular at n=" + std::to_string(n));
  for (int n = 4; n <= 8; ++n)
    out.require(!regular_by_criterion(gamma(n, 2), EndoClass::WEnd).regular,
                "collapse witness should be non-regular at n=" + std::to_string(n));
  int verified = 0;
  for (int n = 2; n <= 7; ++n)
    for (EndoClass c : {EndoClass::End, EndoClass::WEnd})
      for (const auto& t : enumerate_class(c, n).elements()) {
        if (!regular_by_criterion(t, c).regular) continue;
        Transformation b = pseudo_inverse(t);
        out.require(is_in_class(b, EndoClass::End) && compose(compose(t, b), t) == t,
                    "pseudo-inverse postcondition fails for " + to_string(t));
        ++verified;
      }
  out.require(verified > 0, "no regular elements were exercised");
  return out;
}

// The three inversion transfer laws for a product, checked on one pair.
void check_inversion_transfer(const Transformation& a, const Transformation& b, int n,
                              Outcome& out, long& product_hits) {
  Transformation ab = compose(a, b);
  auto inv_a = inversions(a).positions;
  auto inv_b = inversions(b).positions;
  auto inv_ab = inversions(ab).positions;
  auto in = [](const std::vector<int>& v, int x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  if (is_in_class(ab, EndoClass::End)) {
    ++product_hits;
    out.require(is_in_class(a, EndoClass::End),
                "left factor of an endomorphism product must be one: " + to_string(a));
    for (int i : inv_a)
      out.require(in(inv_ab, i), "inversion of the left factor lost in " + to_string(ab));
    for (int i = 2; i <= n - 1; ++i)
      if (in(inv_b, a[i]))
        out.require(in(inv_ab, i), "transferred inversion missing in " + to_string(ab));
  }
  for (int i : inv_ab)
    if (!in(inv_a, i))
      out.require(in(inv_b, a[i]), "new inversion of " + to_string(ab) +
                                       " not explained by the right factor");
}

Outcome check_inversion_identities() {
  Outcome out;

  // kernels determine inversion sets and conversely, on endomorphisms
  for (int n = 2; n <= 6; ++n) {
    MonoidSet endo = enumerate_class(EndoClass::End, n);
    for (const auto& a : endo.elements())
      for (const auto& b : endo.elements())
        out.require((kernel(a) == kernel(b)) == (inversions(a) == inversions(b)),
                    "kernel/inversion equivalence fails on " + to_string(a) + " and " +
                        to_string(b));
  }

  // weak endomorphisms map intervals onto intervals
  for (int n = 2; n <= 7; ++n)
    for (const auto& t : enumerate_class(EndoClass::WEnd, n).elements())
      for (int u = 1; u <= n; ++u)
        for (int v = u; v <= n; ++v) {
          std::set<int> image;
          for (int x = u; x <= v; ++x) image.insert(t[x]);
          try {
            Interval iv = image_interval(t, u, v);
            out.require(iv.lo == *image.begin() && iv.hi == *image.rbegin() &&
                            static_cast<std::size_t>(iv.hi - iv.lo + 1) == image.size(),
                        "interval image wrong for " + to_string(t));
          } catch (const std::logic_error&) {
            out.fail("interval image has a gap for " + to_string(t));
          }
        }

  // transfer laws, exhaustively at small n
  long product_hits = 0;
  for (int n = 2; n <= 5; ++n) {
    MonoidSet wend = enumerate_class(EndoClass::WEnd, n);
    for (const auto& a : wend.elements()) {
      auto inv_a = inversions(a).positions;
      auto inv_mirrored = inversions(compose(reversal(n), a)).positions;
      auto in = [](const std::vector<int>& v, int x) {
        return std::find(v.begin(), v.end(), x) != v.end();
      };
      for (int i = 2; i <= n - 1; ++i)
        out.require(in(inv_a, i) == in(inv_mirrored, n - i + 1),
                    "mirror law fails for " + to_string(a));
      for (const auto& b : wend.elements())
        check_inversion_transfer(a, b, n, out, product_hits);
    }
  }
  out.require(product_hits > 0, "no endomorphism products were exercised");

  // transfer laws on sampled pairs at larger n, fixed seed for repeatability
  std::mt19937_64 rng(0x5eedc0de);
  for (int n = 6; n <= 7; ++n) {
    MonoidSet wend = enumerate_class(EndoClass::WEnd, n);
    std::uniform_int_distribution<std::size_t> pick(0, wend.size() - 1);
    for (int trial = 0; trial < 100'000; ++trial) {
      const auto& a = wend.elements()[pick(rng)];
      const auto& b = wend.elements()[pick(rng)];
      check_inversion_transfer(a, b, n, out, product_hits);
    }
  }

  // the kernel class of an endomorphism lies in the closure of the
  // reversal-and-alphas family extended by that element
  for (int n = 2; n <= 6; ++n) {
    MonoidSet endo = enumerate_class(EndoClass::End, n);
    auto base = family(FamilyName::ADoublePrime, n).members;
    for (const auto& a : endo.elements()) {
      auto gens = base;
      gens.push_back(a);
      MonoidSet hull = generate(gens);
      for (const auto& b : endo.elements())
        if (kernel(b) == kernel(a))
          out.require(hull.contains(b), "kernel class of " + to_string(a) +
                                            " escapes its closure at n=" + std::to_string(n));
    }
  }

  // membership in the reversal-and-alphas closure (with or without the
  // two-inversion generators) is constant on inversion profiles
  for (int n = 2; n <= 6; ++n) {
    MonoidSet endo = enumerate_class(EndoClass::End, n);
    MonoidSet hull2 = generate(family(FamilyName::ADoublePrime, n).members);
    MonoidSet hull1 = generate(family(FamilyName::APrime, n).members);
    std::map<std::vector<int>, std::pair<bool, bool>> seen;
    for (const auto& a : endo.elements()) {
      auto key = inversions(a).positions;
      std::pair<bool, bool> mem{hull2.contains(a), hull1.contains(a)};
      auto [it, inserted] = seen.emplace(std::move(key), mem);
      out.require(inserted || it->second == mem,
                  "closure membership varies inside an inversion profile at n=" +
                      std::to_string(n));
    }
  }

  // mirrored one-inversion generators compose through the reversal
  for (int n = 3; n <= 9; ++n)
    for (int m = 1; m <= n - 2; ++m)
      out.require(alpha(n, m) == compose(reversal(n), alpha(n, n - 1 - m)),
                  "alpha mirror identity fails at n=" + std::to_string(n));

  // mirrored two-inversion generators pair up by kernel, parity deciding the
  // partner index
  int kernel_pairs = 0;
  for (int n = 6; n <= 9; ++n)
    for (int j = 1; j <= (n - 3) / 3; ++j) {
      const int i_max = n - 3 * j - 2;
      const int mid = (n - 3 * j - 1) / 2;
      for (int t = 1;; ++t) {
        const int hi = mid + t;
        const int lo = (i_max % 2 == 0) ? mid - t + 1 : mid - t;
        if (hi > i_max || lo < 1) break;
        out.require(kernel(beta(n, j, hi)) == kernel(compose(reversal(n), beta(n, j, lo))),
                    "beta kernel pairing fails at n=" + std::to_string(n));
        ++kernel_pairs;
      }
    }
  out.require(kernel_pairs > 0, "no beta kernel pairs were exercised");

  // index bounds used throughout the factorisation arguments
  int bound_cases = 0;
  for (int n = 2; n <= 30; ++n)
    for (int j = 1; j <= (n - 3) / 3; ++j)
      for (int i = 1; i <= n - 3 * j - 2; ++i) {
        out.require(2 <= i + 1 && i + 1 <= n - 2 && 4 <= i + 2 * j + 1 &&
                        i + 2 * j + 1 <= n - 2 && 5 <= i + 3 * j + 1 && i + 3 * j + 1 <= n - 1,
                    "index bound fails at n=" + std::to_string(n));
        ++bound_cases;
      }
  out.require(bound_cases > 0, "no index bounds were exercised");

  return out;
}

Outcome check_reduction_scans() {
  Outcome out;

  int factored = 0;
  for (int n = 2; n <= 7; ++n)
    for (const auto& t : enumerate_class(EndoClass::WEnd, n).elements()) {
      if (repetition_count(t) == 0) continue;
      try {
        factor_repetition(t);  // self-verifying
        ++factored;
      } catch (const std::exception& e) {
        out.fail("repetition factorisation fails on " + to_string(t) + ": " + e.what());
      }
    }
  out.require(factored > 0, "no collapsing elements were factored");

  int case1_count = 0;
  for (int n = 3; n <= 8; ++n) {
    for (const auto& t : enumerate_class(EndoClass::End, n).elements()) {
      auto inv = inversions(t).positions;
      if (inv.size() < 2) continue;
      for (int k = 1; k <= static_cast<int>(inv.size()); ++k) {
        if (t[inv[static_cast<std::size_t>(k) - 1]] != 1) continue;
        try {
          case1_reduce(t, k);  // self-verifying
          ++case1_count;
        } catch (const std::exception& e) {
          out.fail("low-anchor reduction fails on " + to_string(t) + ": " + e.what());
        }
      }
    }
  }
  out.require(case1_count > 0, "no low-anchor reductions were exercised");

  for (int n = 2; n <= 7; ++n)
    for (const auto& t : enumerate_class(EndoClass::End, n).elements()) {
      int b = 0;
      for (int x = 1; x <= n; ++x) b = std::max(b, t[x]);
      if (b < 2 || b > n - 1) continue;
      out.require(kernel(compose(compose(t, reversal(n)), alpha(n, n - b))) == kernel(t),
                  "kernel identity fails on " + to_string(t));
    }

  std::map<int, int> case3_counts;
  for (int n = 3; n <= 10; ++n)
    for (const auto& t : enumerate_class(EndoClass::End, n).elements()) {
      try {
        case3_reduce(t);  // self-verifying
        ++case3_counts[n];
      } catch (const Case3Error&) {
        // not a qualifying element
      } catch (const std::exception& e) {
        out.fail("fold reduction fails on " + to_string(t) + ": " + e.what());
      }
    }
  for (int n = 8; n <= 10; ++n)
    out.require(case3_counts[n] > 0, "no fold reductions found at n=" + std::to_string(n));

  int identified = 0;
  for (int n = 3; n <= 9; ++n)
    for (const auto& t : enumerate_class(EndoClass::End, n).elements()) {
      auto inv = inversions(t).positions;
      if (inv.size() != 2) continue;
      int b = 0;
      for (int x = 1; x <= n; ++x) b = std::max(b, t[x]);
      std::vector<int> extremes;
      for (int x = 1; x <= n; ++x)
        if (t[x] == 1 || t[x] == b) extremes.push_back(x);
      if (extremes != std::vector<int>{1, n} || t[1] != 1 || t[n] != b) continue;
      const int j = inv[1] - inv[0];
      const int i = 2 * inv[0] - inv[1] - 1;
      bool match = false;
      try {
        match = (t == beta(n, j, i));
      } catch (const std::invalid_argument&) {
      }
      out.require(match, "two-inversion element " + to_string(t) +
                             " is not the expected generator");
      ++identified;
    }
  out.require(identified > 0, "no two-inversion elements were identified");

  return out;
}

struct Criterion {
  const char* name;
  double limit_seconds;
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"cardinality-table", 10, check_cardinality_table},
      {"formula-coherence", 1, check_formula_coherence},
      {"family-generation", 60, check_family_generation},
      {"rank-bruteforce", 600, check_rank_bruteforce},
      {"rank-certificates", 120, check_rank_certificates},
      {"relative-rank", 300, check_relative_rank},
      {"structure-checks", 10, check_structure_classification},
      {"regularity", 120, check_regularity},
      {"inversion-identities", 600, check_inversion_identities},
      {"reduction-scans", 600, check_reduction_scans},
  };

  int failures = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.fail(std::string("unexpected exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                         .count();
    if (seconds >= c.limit_seconds) out.fail("time limit exceeded");
    std::printf("[%2d/10] %s  %-22s %7.2f s (limit %g s)%s%s\n", index,
                out.ok ? "pass" : "FAIL", c.name, seconds, c.limit_seconds,
                out.detail.empty() ? "" : "  ", out.detail.c_str());
    std::fflush(stdout);
    if (!out.ok) ++failures;
  }
  std::printf("acceptance: %d/10 passed\n", 10 - failures);
  return failures;
}
