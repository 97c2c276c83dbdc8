#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "kohn/angle.hpp"
#include "kohn/group_catalog.hpp"

namespace kohn {

/// Bidegree (p, q) of harmonic polynomials on S^{2n-1} in C^n.
struct Bidegree {
  std::int64_t p = 0;
  std::int64_t q = 0;
  int n = 2;
};

/// A multiindex pair (alpha, beta) indexing the standard basis of H_{p,q}.
struct AdmissiblePair {
  std::vector<std::int64_t> alpha;
  std::vector<std::int64_t> beta;
};

/// Calls visit(alpha, beta) for every pair with |alpha| = p, |beta| = q and
/// alpha_1 = 0 or beta_1 = 0. The spans are valid only during the call.
void for_each_admissible_pair(const Bidegree& bd,
                              const std::function<void(const std::vector<std::int64_t>&,
                                                       const std::vector<std::int64_t>&)>& visit);

std::vector<AdmissiblePair> admissible_pairs(const Bidegree& bd);

/// dim H_{p,q}(S^{2n-1}) = C(p+n-1,n-1) C(q+n-1,n-1) - C(p+n-2,n-1) C(q+n-2,n-1).
std::int64_t sphere_dimension(const Bidegree& bd);

/// Formal integer combination of roots of unity over a common denominator:
/// counts[r] is the coefficient of exp(2 pi i r / denominator).
class CharacterValue {
public:
  CharacterValue(std::int64_t denominator, std::vector<std::int64_t> counts);

  std::int64_t denominator() const { return denominator_; }
  const std::vector<std::int64_t>& counts() const { return counts_; }
  /// Sparse view keyed by reduced angle.
  std::map<AngleFraction, std::int64_t> terms() const;
  /// Number of roots summed (the value at the identity).
  std::int64_t term_count() const;
  std::complex<long double> value() const { return value_; }

  /// Exact equality of the formal sums.
  friend bool operator==(const CharacterValue& a, const CharacterValue& b) { return a.terms() == b.terms(); }

private:
  std::int64_t denominator_;
  std::vector<std::int64_t> counts_;
  std::complex<long double> value_;
};

/// Character of H_{p,q} by summing conj(mu)^alpha mu^beta over admissible pairs.
CharacterValue char_general(const Bidegree& bd, const GroupElement& g);

/// n = 2 closed form mu_2^q mu_1^{-p} sum_{j=0}^{p+q} (mu_1/mu_2)^j, with the
/// mu_1 = mu_2 case giving (p+q+1) mu_2^q mu_1^{-p}.
CharacterValue char_su2_closed(const Bidegree& bd, const GroupElement& g);

/// Common denominator of the element's eigenangles.
std::int64_t common_denominator(const GroupElement& g);

}  // namespace kohn
