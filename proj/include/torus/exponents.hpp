#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torus/rational.hpp"

namespace torus {

struct out_of_range_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct no_admissible_target : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct unsupported_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Sobolev smoothness order together with an attainment flag. (v, open)
// grants every s' < v; (v, attained) additionally grants s' = v. This is
// the exact encoding of regularity statements that hold below a threshold
// for every positive margin.
struct RegularityIndex {
  Rat value;
  bool attained = true;

  bool grants(const Rat& s) const {
    return s < value || (attained && s == value);
  }
};

// Membership claim u in L^q(0,T; H^s), p = 2 fixed in space.
struct MixedNorm {
  ExtRat q;
  RegularityIndex s;
};

// The three smoothness indices of a pointwise multiplication map
// H^{s1} x H^{s2} -> H^s.
struct ProductQuery {
  Rat s1, s2, s;
};

enum class ProductRule { nonneg, neg_main, neg_alt, none };

struct ProductResult {
  bool admissible = false;
  ProductRule rule = ProductRule::none;
  // Identifiers like "nonneg(2)" for the conditions of the rule that was
  // closest to applying; empty iff admissible.
  std::vector<std::string> violated_conditions;
};

enum class Outcome { conserves, classical, no_verdict };

struct Verdict {
  Outcome outcome = Outcome::no_verdict;
  std::string theorem;  // citation tag, e.g. "Thm 1.1"
  std::string reason;   // binding inequality, human readable
};

const char* outcome_name(Outcome o);

struct BootstrapStep {
  int n;
  Rat beta_n;
  RegularityIndex sigma_n;  // always open
};

struct BootstrapTrace {
  Rat tau, beta;
  std::vector<BootstrapStep> steps;
  std::optional<int> n0;
  Verdict verdict;
};

// Energy-conservation criterion for u in L^q(0,T;H^s):
//   conserves  iff some granted s' with 5/6 <= s' < 5/2 satisfies q >= 5/(2s')
//   classical  iff some granted s' > 5/2 exists (and q >= 1)
// Rejects q < 1.
Verdict check_energy_criterion(const MixedNorm& m);

// Decides whether H^{s1} x H^{s2} -> H^s multiplication is continuous, by
// the nonnegative rule, the negative rule, or its alternate clause.
ProductResult product_admissible(const ProductQuery& q);

// Supremum of admissible target exponents s for given (s1, s2), with the
// attainment flag recording whether the binding constraint is s <= min(s1,s2)
// (attained) or the strict gap inequality (open). Throws no_admissible_target
// when no target exists.
RegularityIndex best_product_exponent(const Rat& s1, const Rat& s2);

// Exact exponent bookkeeping of the conservation proof. Each field is only
// present on its validity range:
//   p_commutator, alpha : 5/6 <= s < 1
//   theta               : 5/6 <= s < 3/2
//   p, p_dual           : 1 <= s < 3/2
//   p_star              : s < 3/2
struct EmbeddingExponents {
  std::optional<Rat> p_commutator, theta, alpha, p, p_dual, p_star;
};
EmbeddingExponents embedding_exponents(const Rat& s);

// theta = (5-2s)/(4s) on 5/6 <= s < 5/2.
Rat interpolation_theta(const Rat& s);

// Runs the regularity bootstrap for a Beltrami factor in L^beta(0,T;H^tau):
// beta_1 = beta, sigma_1 = tau - 1/2 (open), then
//   beta_{n+1} = beta_n beta / (beta_n + beta)
//   sigma_{n+1} = min{sigma_n, tau, sigma_n + tau - 3/2} + 1
// until sigma exceeds 5/6; the final verdict applies check_energy_criterion.
// Requires 1/2 < tau <= 3/2 and beta >= 1.
BootstrapTrace bootstrap_trace(const Rat& tau, const Rat& beta);

// Closed-form criterion for Beltrami fields: conserves iff
// (1/2 < tau <= 3/2 and beta > 5/(2 tau - 1)) or (tau > 3/2 and beta >= 5/2).
// Agrees with bootstrap_trace(tau, beta).verdict on the overlapping range.
Verdict beltrami_verdict(const Rat& tau, const Rat& beta);

// Time-only Beltrami factor lambda in L^p(0,T): classical (and conserving)
// iff p >= 3, via the vorticity iteration and the BKM continuation criterion.
Verdict constant_lambda_verdict(const ExtRat& p,
                                bool lambda_space_dependent = false);

}  // namespace torus
