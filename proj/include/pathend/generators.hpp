// The named generating transformations and the generating families built
// from them.

#ifndef PATHEND_GENERATORS_HPP
#define PATHEND_GENERATORS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathend/transformation.hpp"

namespace pathend {

// V-shaped endomorphism with valley at vertex i+1:
//   x -> i+2-x for x <= i+1,  x -> x-i for x >= i+1.
// Defined for n >= 3 and 1 <= i <= n-2.  Its only inversion is i+1.
Transformation alpha(int n, int i);

// Endomorphism that folds the window [i+j+1, i+2j+1] back on itself:
//   x -> x            for x <= i+j+1,
//   x -> 2(i+j+1)-x   for i+j+1 <= x <= i+2j+1,
//   x -> x-2j         for x >= i+2j+1.
// Defined for n >= 6, 1 <= j <= (n-3)/3, 1 <= i <= n-3j-2.  Its inversions
// are i+j+1 and i+2j+1.
Transformation beta(int n, int j, int i);

// Weak endomorphism collapsing the edge {i, i+1}:
//   x -> x for x <= i,  x -> x-1 for x > i.
// Defined for n >= 2 and 1 <= i <= n-1.  Its only repetition is i.
Transformation gamma(int n, int i);

// Sum over the beta strata: sum_j floor((n-3j-1)/2) for j = 1..(n-3)/3.
int beta_stratum_size(int n);

enum class FamilyName {
  APrime,        // reversal, all alphas, all betas
  ADoublePrime,  // reversal, all alphas
  A,             // reversal, alphas with i <= (n-1)/2, betas with i <= (n-3j-1)/2
  B,             // A plus gammas with i <= n/2
  SwGens,        // reversal plus constants 1..ceil(n/2); special triple at n = 3
};

std::string family_name(FamilyName f);
FamilyName family_from_name(std::string_view name);

struct GeneratorFamily {
  FamilyName name;
  int n;
  std::vector<Transformation> members;
};

// Builds the named family on n >= 2 vertices.  Index ranges that are empty at
// small n simply contribute nothing, so A = A' = A'' = {reversal} at n = 2.
GeneratorFamily family(FamilyName f, int n);

}  // namespace pathend

#endif  // PATHEND_GENERATORS_HPP
