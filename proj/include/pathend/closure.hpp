// Monoid closure under composition, generating-set checks, and rank
// computations: formula values, certified generating families, and a
// brute-force subset search usable as an independent cross-check.

#ifndef PATHEND_CLOSURE_HPP
#define PATHEND_CLOSURE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "pathend/enumeration.hpp"
#include "pathend/transformation.hpp"

namespace pathend {

struct ClosureOptions {
  // generate() throws SizeGuardError past this many elements.
  std::size_t max_elements = 10'000'000;
};

// Submonoid generated by gens (the identity is always included).  Worklist
// closure: each frontier element is right-multiplied by every generator.
MonoidSet generate(const std::vector<Transformation>& gens,
                   const ClosureOptions& opts = {});

// True iff the closure of gens equals the full class on n vertices.
bool generates_class(const std::vector<Transformation>& gens, EndoClass c, int n,
                     const EnumerationOptions& enum_opts = {});

// True iff gens generates the class and no proper subset obtained by deleting
// one member still does.
bool irredundant(const std::vector<Transformation>& gens, EndoClass c, int n,
                 const EnumerationOptions& enum_opts = {});

// Minimum generating-set sizes in closed form:
//   End:   1 + (n-1)/2 + beta_stratum_size(n)
//   WEnd:  n + beta_stratum_size(n)
//   SWEnd: ceil(n/2) + 1
// Rejects SEnd and Aut.
int rank_formula(EndoClass c, int n);

inline constexpr std::uint64_t kDefaultRankBudget = 5'000'000;

// Smallest k such that some k-subset of the class generates it, found by
// exhaustive subset search in increasing k over the lexicographically sorted
// element list.  Each closure attempt costs one unit of budget; returns
// nullopt once the budget is exhausted.
std::optional<int> brute_force_rank(EndoClass c, int n,
                                    std::uint64_t budget = kDefaultRankBudget,
                                    const EnumerationOptions& enum_opts = {});

// Stratum counts of a generating family, used as rank lower-bound evidence:
// every generating set needs the reversal, (n-1)/2 one-inversion
// endomorphisms, beta_stratum_size(n) two-inversion endomorphisms, and (for
// the weak case) n/2 inversion-free non-endomorphisms.
struct RankCensus {
  bool has_reversal = false;
  int inv1_end = 0;
  int inv2_end = 0;
  int inv0_non_end = 0;
};

struct RankCertificate {
  EndoClass cls;
  int n;
  int family_size;
  int formula_value;
  RankCensus census;
  bool closure_ok;
  bool lower_bound_ok;
  bool irredundant_ok;

  bool valid() const {
    return closure_ok && lower_bound_ok && irredundant_ok && family_size == formula_value;
  }
};

// Certifies rank_formula(c, n) for c in {End, WEnd} using family A or B:
// the family generates the class, has exactly the formula size, meets the
// census lower bounds, and is irredundant.
RankCertificate rank_certificate(EndoClass c, int n,
                                 const EnumerationOptions& enum_opts = {});

struct RelativeRankResult {
  int needed;                    // n/2, the claimed relative rank
  bool upper_ok;                 // End plus the n/2 gammas generates WEnd
  std::optional<bool> lower_ok;  // no smaller extension works; nullopt if the
                                 // subset search ran out of budget
};

inline constexpr std::uint64_t kDefaultRelativeRankBudget = 20'000;

// Checks that exactly n/2 extra elements are needed to get from the
// endomorphisms to the weak endomorphisms.
RelativeRankResult relative_rank_check(int n,
                                       std::uint64_t budget = kDefaultRelativeRankBudget,
                                       const EnumerationOptions& enum_opts = {});

// Shortest word over gens (0-based indices, left-to-right product) evaluating
// to target; empty word for the identity, nullopt if unreachable.
std::optional<std::vector<int>> word_for(const std::vector<Transformation>& gens,
                                         const Transformation& target,
                                         const ClosureOptions& opts = {});

}  // namespace pathend

#endif  // PATHEND_CLOSURE_HPP
