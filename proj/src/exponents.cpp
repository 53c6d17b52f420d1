#include "torus/exponents.hpp"

#include <algorithm>
#include <sstream>

namespace torus {

Rat parse_rat(const std::string& text) {
  std::string t = text;
  // trim
  const auto b = t.find_first_not_of(" \t");
  const auto e = t.find_last_not_of(" \t");
  if (b == std::string::npos) throw parse_error("empty rational");
  t = t.substr(b, e - b + 1);
  const auto slash = t.find('/');
  auto parse_int = [](const std::string& s) -> Int {
    if (s.empty()) throw parse_error("empty integer");
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw parse_error("bad integer: " + s);
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw parse_error("bad integer: " + s);
    return Int(s);
  };
  if (slash == std::string::npos) return Rat(parse_int(t));
  const Int num = parse_int(t.substr(0, slash));
  const Int den = parse_int(t.substr(slash + 1));
  if (den == 0) throw parse_error("zero denominator: " + text);
  return Rat(num, den);
}

std::string to_string(const Rat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

ExtRat parse_ext_rat(const std::string& text) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(), ::tolower);
  if (t == "inf" || t == "+inf" || t == "infinity") return ExtRat::infinity();
  return ExtRat(parse_rat(text));
}

std::string to_string(const ExtRat& r) {
  return r.is_finite() ? to_string(r.value()) : "inf";
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::conserves: return "conserves";
    case Outcome::classical: return "classical";
    default: return "no_verdict";
  }
}

namespace {

// q >= x / q > x against an extended q.
bool geq(const ExtRat& q, const Rat& x) { return q >= ExtRat(x); }
bool gt(const ExtRat& q, const Rat& x) { return q > ExtRat(x); }

std::string witness_reason(const Rat& s, const ExtRat& q) {
  std::ostringstream os;
  os << "q = " << to_string(q) << " >= 5/(2s') = " << to_string(Rat(5) / (2 * s))
     << " at witness s' = " << to_string(s);
  return os.str();
}

}  // namespace

Verdict check_energy_criterion(const MixedNorm& m) {
  if (m.q < ExtRat(Rat(1)))
    throw out_of_range_error("check_energy_criterion: q < 1");

  const Rat five_halves(5, 2);
  const Rat five_sixths(5, 6);

  if (m.s.value > five_halves) {
    Verdict v;
    v.outcome = Outcome::classical;
    v.theorem = "Thm 1.1";
    v.reason = "granted smoothness s' > 5/2 embeds H^s into W^{1,inf}; "
               "q >= 1 gives the continuation criterion";
    return v;
  }

  // Granted exponents within [5/6, 5/2): cap at min(value, 5/2); the cap is
  // itself granted only when the index is attained strictly below 5/2.
  const Rat cap = std::min(m.s.value, five_halves);
  const bool cap_granted = m.s.attained && m.s.value < five_halves;

  Verdict v;
  v.theorem = "Thm 1.1";
  if (cap_granted) {
    if (cap >= five_sixths && geq(m.q, Rat(5) / (2 * cap))) {
      v.outcome = Outcome::conserves;
      v.reason = witness_reason(cap, m.q);
      return v;
    }
  } else if (cap > five_sixths && gt(m.q, Rat(5) / (2 * cap))) {
    // Open cap: pick an explicit rational witness strictly below it.
    Rat lo = five_sixths;
    if (m.q.is_finite()) lo = std::max(lo, Rat(5) / (2 * m.q.value()));
    const Rat wit = (lo + cap) / 2;
    v.outcome = Outcome::conserves;
    v.reason = witness_reason(wit, m.q);
    return v;
  }

  v.outcome = Outcome::no_verdict;
  std::ostringstream os;
  os << "criterion not met: no granted s' in [5/6, 5/2) with q = "
     << to_string(m.q) << " >= 5/(2s') (s grants "
     << (m.s.attained ? "up to " : "below ") << to_string(m.s.value) << ")";
  v.reason = os.str();
  return v;
}

ProductResult product_admissible(const ProductQuery& q) {
  const Rat mn = std::min(q.s1, q.s2);
  const Rat gap = q.s1 + q.s2 - q.s;
  const Rat sum = q.s1 + q.s2;
  const Rat three_halves(3, 2);

  ProductResult r;

  // Nonnegative rule: s >= 0, s_i >= s, s1+s2-s > 3/2; when s is a
  // nonnegative integer the strictness of the last two may be interchanged.
  const bool nonneg_plain = q.s >= 0 && mn >= q.s && gap > three_halves;
  const bool nonneg_interchanged =
      is_nonneg_integer(q.s) && mn > q.s && gap >= three_halves;
  if (nonneg_plain || nonneg_interchanged) {
    r.admissible = true;
    r.rule = ProductRule::nonneg;
    return r;
  }

  // Negative rule: s_i >= s, min < 0, s1+s2 >= 0, s1+s2-s > 3/2.
  if (mn >= q.s && mn < 0 && sum >= 0 && gap > three_halves) {
    r.admissible = true;
    r.rule = ProductRule::neg_main;
    return r;
  }

  // Alternate clause: min >= 0 and s < 0, with s1+s2 > 0 strict.
  if (mn >= q.s && mn >= 0 && q.s < 0 && sum > 0 && gap > three_halves) {
    r.admissible = true;
    r.rule = ProductRule::neg_alt;
    return r;
  }

  // Inadmissible: report the violations of the rule selected by the sign
  // pattern of the query.
  r.admissible = false;
  if (q.s >= 0) {
    r.rule = ProductRule::nonneg;
    if (mn < q.s) r.violated_conditions.push_back("nonneg(2)");
    if (!(gap > three_halves)) r.violated_conditions.push_back("nonneg(3)");
  } else if (mn < 0) {
    r.rule = ProductRule::neg_main;
    if (mn < q.s) r.violated_conditions.push_back("neg(1)");
    if (!(sum >= 0)) r.violated_conditions.push_back("neg(3)");
    if (!(gap > three_halves)) r.violated_conditions.push_back("neg(4)");
  } else {
    r.rule = ProductRule::neg_alt;
    if (!(sum > 0)) r.violated_conditions.push_back("neg-alt(3-strict)");
    if (!(gap > three_halves)) r.violated_conditions.push_back("neg-alt(4)");
  }
  if (r.violated_conditions.empty())
    r.violated_conditions.push_back("no rule applies");
  return r;
}

RegularityIndex best_product_exponent(const Rat& s1, const Rat& s2) {
  const Rat mn = std::min(s1, s2);
  const Rat sum = s1 + s2;
  const Rat gap_sup = sum - Rat(3, 2);  // s < gap_sup from the strict condition

  if (mn < 0) {
    if (sum < 0)
      throw no_admissible_target("best_product_exponent: s1+s2 < 0");
    // neg_main everywhere below min(mn, gap_sup).
    if (gap_sup > mn) return {mn, true};
    return {gap_sup, false};
  }

  if (!(sum > 0))
    throw no_admissible_target("best_product_exponent: s1 = s2 = 0");

  if (gap_sup > mn) return {mn, true};  // binding: s <= min(s1, s2)
  // Binding: the gap inequality. The interchange clause attains the endpoint
  // when it is a nonnegative integer strictly below both factors.
  if (is_nonneg_integer(gap_sup) && gap_sup < mn) return {gap_sup, true};
  return {gap_sup, false};
}

EmbeddingExponents embedding_exponents(const Rat& s) {
  EmbeddingExponents e;
  const Rat five_sixths(5, 6), three_halves(3, 2);
  if (s >= five_sixths && s < 1) {
    const Rat p = (5 - 2 * s) / (5 - 4 * s);
    e.p_commutator = p;
    e.alpha = (3 - 3 * p + 2 * p * s) / (2 * p);
  }
  if (s >= five_sixths && s < three_halves) e.theta = (5 - 2 * s) / (4 * s);
  if (s >= 1 && s < three_halves) {
    e.p = Rat(6) / (5 - 2 * s);
    e.p_dual = Rat(6) / (1 + 2 * s);
  }
  if (s < three_halves) e.p_star = Rat(6) / (3 - 2 * s);
  return e;
}

Rat interpolation_theta(const Rat& s) {
  if (s < Rat(5, 6) || s >= Rat(5, 2) || s == 0)
    throw out_of_range_error("interpolation_theta: need 5/6 <= s < 5/2");
  return (5 - 2 * s) / (4 * s);
}

BootstrapTrace bootstrap_trace(const Rat& tau, const Rat& beta) {
  if (tau <= Rat(1, 2))
    throw out_of_range_error(
        "bootstrap_trace: tau <= 1/2 gives no regularity improvement");
  if (tau > Rat(3, 2))
    throw out_of_range_error(
        "bootstrap_trace: tau > 3/2 is decided directly by beltrami_verdict");
  if (beta < 1) throw out_of_range_error("bootstrap_trace: beta < 1");

  BootstrapTrace tr;
  tr.tau = tau;
  tr.beta = beta;

  const Rat incr = tau - Rat(1, 2);
  // Largest n0 >= 0 with n0 * (tau - 1/2) <= 5/6.
  int n0 = 0;
  while ((n0 + 1) * incr <= Rat(5, 6)) ++n0;
  tr.n0 = n0;

  Rat beta_n = beta;
  Rat sigma_n = incr;
  for (int n = 1; n <= n0 + 1; ++n) {
    tr.steps.push_back({n, beta_n, {sigma_n, false}});
    // Exact closed forms; the recursion below reproduces them.
    beta_n = beta_n * beta / (beta_n + beta);
    sigma_n = std::min({sigma_n, tau, sigma_n + tau - Rat(3, 2)}) + 1;
  }

  const BootstrapStep& last = tr.steps.back();
  if (last.beta_n < 1) {
    // Time integrability degraded below L^1: no membership claim survives.
    tr.verdict.outcome = Outcome::no_verdict;
    tr.verdict.reason = "criterion not met: beta_" + std::to_string(n0 + 1) +
                        " = " + to_string(last.beta_n) + " < 1";
  } else {
    tr.verdict = check_energy_criterion({ExtRat(last.beta_n), last.sigma_n});
  }
  tr.verdict.theorem = "Thm 1.3";
  return tr;
}

Verdict beltrami_verdict(const Rat& tau, const Rat& beta) {
  if (beta < 1) throw out_of_range_error("beltrami_verdict: beta < 1");
  Verdict v;
  v.theorem = "Thm 1.3";
  if (tau > Rat(1, 2) && tau <= Rat(3, 2)) {
    const Rat threshold = Rat(5) / (2 * tau - 1);
    if (beta > threshold) {
      v.outcome = Outcome::conserves;
      v.reason = "beta = " + to_string(beta) + " > 5/(2 tau - 1) = " +
                 to_string(threshold);
    } else {
      v.outcome = Outcome::no_verdict;
      v.reason = "criterion not met: beta = " + to_string(beta) +
                 " <= 5/(2 tau - 1) = " + to_string(threshold);
    }
    return v;
  }
  if (tau > Rat(3, 2)) {
    if (beta >= Rat(5, 2)) {
      v.outcome = Outcome::conserves;
      v.reason = "tau > 3/2 and beta = " + to_string(beta) + " >= 5/2";
    } else {
      v.outcome = Outcome::no_verdict;
      v.reason = "criterion not met: tau > 3/2 requires beta >= 5/2";
    }
    return v;
  }
  v.outcome = Outcome::no_verdict;
  v.reason = "criterion not met: tau = " + to_string(tau) +
             " <= 1/2 yields no regularity improvement";
  return v;
}

Verdict constant_lambda_verdict(const ExtRat& p, bool lambda_space_dependent) {
  if (lambda_space_dependent)
    throw unsupported_error(
        "constant_lambda_verdict: space-dependent lambda is handled by "
        "beltrami_verdict");
  if (p < ExtRat(Rat(1)))
    throw out_of_range_error("constant_lambda_verdict: p < 1");
  Verdict v;
  v.theorem = "Prop 1.2";
  if (p >= ExtRat(Rat(3))) {
    v.outcome = Outcome::classical;
    v.reason = "p = " + to_string(p) +
               " >= 3: the iteration omega in L^p(H^0) -> u in L^p(H^1) -> "
               "... -> omega in L^{p/3}(H^2) embedded in L^{p/3}(L^inf) with "
               "p/3 >= 1 closes the BKM continuation criterion";
  } else {
    v.outcome = Outcome::no_verdict;
    v.reason = "criterion not met: p = " + to_string(p) +
               " < 3 leaves omega in L^{p/3}(L^inf) with p/3 < 1";
  }
  return v;
}

}  // namespace torus
