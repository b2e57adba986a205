#include "pathend/closure.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "pathend/generators.hpp"

namespace pathend {

namespace {

int common_n(const std::vector<Transformation>& gens) {
  if (gens.empty()) throw std::invalid_argument("generator list must be nonempty");
  const int n = gens.front().n();
  for (const auto& g : gens)
    if (g.n() != n) throw std::invalid_argument("generators have mixed sizes");
  return n;
}

using ElementSet = std::unordered_set<Transformation, TransformationHash>;

// Core worklist closure.  Returns false (leaving the partial set behind) as
// soon as the set exceeds limit, so subset searches can bail out cheaply.
bool close_into(ElementSet& seen, const std::vector<Transformation>& gens,
                std::size_t limit) {
  std::vector<Transformation> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Transformation> next;
    for (const auto& t : frontier) {
      for (const auto& g : gens) {
        Transformation p = compose(t, g);
        if (seen.insert(p).second) {
          if (seen.size() > limit) return false;
          next.push_back(std::move(p));
        }
      }
    }
    frontier = std::move(next);
  }
  return true;
}

std::size_t closure_size(const std::vector<Transformation>& gens, int n,
                         std::size_t limit) {
  ElementSet seen;
  seen.insert(identity(n));
  for (const auto& g : gens) seen.insert(g);
  if (!close_into(seen, gens, limit)) return limit + 1;
  return seen.size();
}

}  // namespace

MonoidSet generate(const std::vector<Transformation>& gens, const ClosureOptions& opts) {
  const int n = common_n(gens);
  ElementSet seen;
  seen.insert(identity(n));
  for (const auto& g : gens) seen.insert(g);
  if (seen.size() > opts.max_elements || !close_into(seen, gens, opts.max_elements))
    throw SizeGuardError("generate: closure exceeds max_elements guard");
  std::vector<Transformation> elems(seen.begin(), seen.end());
  return MonoidSet::from_elements(n, std::move(elems));
}

bool generates_class(const std::vector<Transformation>& gens, EndoClass c, int n,
                     const EnumerationOptions& enum_opts) {
  if (common_n(gens) != n) throw std::invalid_argument("generators have wrong size");
  MonoidSet target = enumerate_class(c, n, enum_opts);
  ClosureOptions opts;
  opts.max_elements = target.size() + 1;  // anything larger already differs
  try {
    return generate(gens, opts) == target;
  } catch (const SizeGuardError&) {
    return false;
  }
}

bool irredundant(const std::vector<Transformation>& gens, EndoClass c, int n,
                 const EnumerationOptions& enum_opts) {
  if (!generates_class(gens, c, n, enum_opts)) return false;
  for (std::size_t skip = 0; skip < gens.size(); ++skip) {
    std::vector<Transformation> rest;
    rest.reserve(gens.size() - 1);
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (i != skip) rest.push_back(gens[i]);
    if (rest.empty()) {
      // A singleton family is irredundant iff the identity alone is not the
      // whole class.
      if (enumerate_class(c, n, enum_opts).size() == 1) return false;
      continue;
    }
    if (generates_class(rest, c, n, enum_opts)) return false;
  }
  return true;
}

int rank_formula(EndoClass c, int n) {
  if (n < 2) throw std::invalid_argument("rank_formula requires n >= 2");
  switch (c) {
    case EndoClass::End: return 1 + (n - 1) / 2 + beta_stratum_size(n);
    case EndoClass::WEnd: return n + beta_stratum_size(n);
    case EndoClass::SWEnd: return (n + 1) / 2 + 1;
    default:
      throw std::invalid_argument("rank_formula: supported for End, WEnd, SWEnd only");
  }
}

std::optional<int> brute_force_rank(EndoClass c, int n, std::uint64_t budget,
                                    const EnumerationOptions& enum_opts) {
  MonoidSet monoid = enumerate_class(c, n, enum_opts);
  const auto& elems = monoid.elements();
  const std::size_t m = elems.size();
  std::uint64_t used = 0;
  for (std::size_t k = 1; k <= m; ++k) {
    // k-combinations of element indices in lexicographic order.
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      if (++used > budget) return std::nullopt;
      std::vector<Transformation> gens;
      gens.reserve(k);
      for (std::size_t i : idx) gens.push_back(elems[i]);
      // gens lie inside the monoid, so the closure does too: equality is a
      // size check.
      if (closure_size(gens, n, m) == m) return static_cast<int>(k);
      // advance the combination
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == m - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return std::nullopt;  // unreachable: the full element list generates
}

RankCertificate rank_certificate(EndoClass c, int n, const EnumerationOptions& enum_opts) {
  if (c != EndoClass::End && c != EndoClass::WEnd)
    throw std::invalid_argument("rank_certificate: supported for End and WEnd only");
  GeneratorFamily fam =
      family(c == EndoClass::End ? FamilyName::A : FamilyName::B, n);
  RankCertificate cert{};
  cert.cls = c;
  cert.n = n;
  cert.family_size = static_cast<int>(fam.members.size());
  cert.formula_value = rank_formula(c, n);
  const Transformation rev = reversal(n);
  for (const auto& t : fam.members) {
    const bool in_end = is_in_class(t, EndoClass::End);
    const int inv = inversion_count(t);
    if (t == rev) cert.census.has_reversal = true;
    if (in_end && inv == 1) ++cert.census.inv1_end;
    if (in_end && inv == 2) ++cert.census.inv2_end;
    if (!in_end && inv == 0) ++cert.census.inv0_non_end;
  }
  cert.closure_ok = generates_class(fam.members, c, n, enum_opts);
  cert.lower_bound_ok = cert.census.has_reversal &&
                        cert.census.inv1_end >= (n - 1) / 2 &&
                        cert.census.inv2_end >= beta_stratum_size(n) &&
                        (c == EndoClass::End || cert.census.inv0_non_end >= n / 2);
  cert.irredundant_ok = irredundant(fam.members, c, n, enum_opts);
  return cert;
}

RelativeRankResult relative_rank_check(int n, std::uint64_t budget,
                                       const EnumerationOptions& enum_opts) {
  if (n < 2) throw std::invalid_argument("relative_rank_check requires n >= 2");
  RelativeRankResult result{n / 2, false, std::nullopt};
  MonoidSet endo = enumerate_class(EndoClass::End, n, enum_opts);
  MonoidSet wendo = enumerate_class(EndoClass::WEnd, n, enum_opts);
  const std::size_t target = wendo.size();

  std::vector<Transformation> upper(endo.elements());
  for (int i = 1; i <= n / 2; ++i) upper.push_back(gamma(n, i));
  result.upper_ok = closure_size(upper, n, target) == target;

  // Lower bound: no extension by fewer than n/2 elements suffices.  Extending
  // by endomorphisms changes nothing, so candidates come from WEnd \ End.
  std::vector<Transformation> candidates;
  for (const auto& t : wendo.elements())
    if (!endo.contains(t)) candidates.push_back(t);
  const std::size_t cand = candidates.size();
  std::uint64_t used = 0;
  bool exhausted = false;
  bool refuted = false;
  for (int k = 0; k < n / 2 && !exhausted && !refuted; ++k) {
    const std::size_t kk = static_cast<std::size_t>(k);
    std::vector<std::size_t> idx(kk);
    for (std::size_t i = 0; i < kk; ++i) idx[i] = i;
    if (kk > cand) break;
    while (true) {
      if (++used > budget) {
        exhausted = true;
        break;
      }
      std::vector<Transformation> gens(endo.elements());
      for (std::size_t i : idx) gens.push_back(candidates[i]);
      if (closure_size(gens, n, target) == target) {
        refuted = true;  // a smaller extension generates: claim falsified
        break;
      }
      if (kk == 0) break;
      std::size_t pos = kk;
      while (pos > 0 && idx[pos - 1] == cand - kk + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < kk; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  if (refuted)
    result.lower_ok = false;
  else if (!exhausted)
    result.lower_ok = true;
  return result;
}

std::optional<std::vector<int>> word_for(const std::vector<Transformation>& gens,
                                         const Transformation& target,
                                         const ClosureOptions& opts) {
  const int n = common_n(gens);
  if (target.n() != n) throw std::invalid_argument("word_for: target has wrong size");
  struct Link {
    int parent;  // index into order, -1 for the identity
    int gen;
  };
  std::unordered_map<Transformation, int, TransformationHash> index;
  std::vector<Transformation> order;
  std::vector<Link> links;
  auto emit = [&](int at) {
    std::vector<int> word;
    for (int cur = at; links[static_cast<std::size_t>(cur)].parent >= 0;
         cur = links[static_cast<std::size_t>(cur)].parent)
      word.push_back(links[static_cast<std::size_t>(cur)].gen);
    std::reverse(word.begin(), word.end());
    return word;
  };
  order.push_back(identity(n));
  links.push_back({-1, -1});
  index.emplace(order.front(), 0);
  if (order.front() == target) return emit(0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      Transformation p = compose(order[head], gens[g]);
      auto [it, inserted] = index.emplace(p, static_cast<int>(order.size()));
      if (!inserted) continue;
      order.push_back(std::move(p));
      links.push_back({static_cast<int>(head), static_cast<int>(g)});
      if (order.back() == target) return emit(static_cast<int>(order.size()) - 1);
      if (order.size() > opts.max_elements)
        throw SizeGuardError("word_for: closure exceeds max_elements guard");
    }
  }
  return std::nullopt;
}

}  // namespace pathend
