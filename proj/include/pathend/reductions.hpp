// Constructive reduction steps behind the generating-set results, plus
// whole-structure verification reports.

#ifndef PATHEND_REDUCTIONS_HPP
#define PATHEND_REDUCTIONS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "pathend/enumeration.hpp"
#include "pathend/transformation.hpp"

namespace pathend {

enum class ReductionKind { Repetition, Case1, Case3 };

// One verified factorisation step.  Which parameters are meaningful depends
// on kind: i for Repetition, (k, a) for Case1, (k, ell, c, d) for Case3.
struct ReductionStep {
  ReductionKind kind;
  Transformation input;
  Transformation output;
  int i = 0;
  int k = 0;
  int ell = 0;
  int c = 0;
  int d = 0;
  int a = 0;
};

// For t in WEnd with at least one repetition: writes t = gamma_i . out where
// i is the smallest repetition and out has exactly one repetition fewer.
// Verifies the factorisation before returning.
ReductionStep factor_repetition(const Transformation& t);

// For t in End with >= 2 inversions and the k-th inversion mapping to 1:
// strips that inversion.  With a = max image on the tail [i_k, n], the output
// out satisfies Inv(out) = Inv(t) \ {i_k} and Inv(out . alpha(n, a-1)) =
// Inv(t).  Verified before returning.
ReductionStep case1_reduce(const Transformation& t, int k);

enum class Case3Reject {
  NotEnd,             // t is not an endomorphism
  TooFewInversions,   // fewer than three inversions
  PreimageCondition,  // preimages of {1, max im} are not exactly {1, n}
  Orientation,        // 1t != 1 or nt != max im (precompose with the reversal)
};

class Case3Error : public std::invalid_argument {
 public:
  Case3Error(Case3Reject reason, const std::string& what)
      : std::invalid_argument(what), reason_(reason) {}
  Case3Reject reason() const { return reason_; }

 private:
  Case3Reject reason_;
};

// For t in End with >= 3 inversions, 1t = 1, nt = max im(t) =: b, and
// {1, b} hit only from {1, n}: folds out the highest early inversion against
// the following lowest one, removing the pair {i_k, i_ell} from the
// inversion set.  The output out satisfies Inv(out . beta(n, c-d, d-1)) =
// Inv(t).  Ties in the max and min are broken toward the smallest index.
// Rejects non-qualifying input with a Case3Error carrying the failed
// hypothesis; verifies the factorisation before returning.
ReductionStep case3_reduce(const Transformation& t);

struct StructureReport {
  struct Check {
    std::string name;
    bool ok;
    std::string detail;
  };
  std::vector<Check> checks;
  bool all_ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

// Verifies the classification results at a single n: the automorphisms are
// {identity, reversal}, the strong and strong-weak endomorphisms collapse to
// the known lists (with the three-vertex exceptions), every one-inversion
// endomorphism matches an alpha inversion profile and lies in the closure of
// {reversal, alphas}, and the index-range inequalities for beta hold.
StructureReport verify_structure(int n, const EnumerationOptions& opts = {});

// Runs every reduction property exhaustively at a single n: repetition
// factorisation on WEnd \ End, Case1 and Case3 on all qualifying elements,
// the kernel identity t . reversal . alpha(n, n-b) ~ t used by the middle
// case, and the identification of two-inversion endomorphisms with betas.
StructureReport verify_reductions(int n, const EnumerationOptions& opts = {});

}  // namespace pathend

#endif  // PATHEND_REDUCTIONS_HPP
