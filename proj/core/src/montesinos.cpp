#include "qalt/montesinos.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>

#include "qalt/error.hpp"

namespace qalt {

namespace {

void validate_tangle(const Tangle& t) {
  if (t.alpha < 1 || t.beta == 0 || std::abs(t.beta) > t.alpha)
    throw InvalidArgument("tangle " + std::to_string(t.alpha) + "/" + std::to_string(t.beta) +
                          " needs 0 < |beta| <= alpha");
  if (std::gcd(t.alpha, std::abs(t.beta)) != 1)
    throw InvalidArgument("tangle " + std::to_string(t.alpha) + "/" + std::to_string(t.beta) +
                          " is not coprime");
}

Rational frac(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

}  // namespace

void validate(const MontesinosPresentation& m) {
  for (const Tangle& t : m.tangles) validate_tangle(t);
  validate_tangle(m.final_tangle);
}

Tangle parse_tangle(const std::string& text) {
  try {
    std::size_t pos = 0;
    Tangle t;
    t.alpha = std::stol(text, &pos);
    if (pos < text.size()) {
      if (text[pos] != '/') throw ParseError("bad tangle '" + text + "'");
      std::size_t pos2 = 0;
      const std::string rest = text.substr(pos + 1);
      t.beta = std::stol(rest, &pos2);
      if (pos2 != rest.size()) throw ParseError("bad tangle '" + text + "'");
    }
    validate_tangle(t);
    return t;
  } catch (const std::logic_error&) {
    throw ParseError("bad tangle '" + text + "'");
  }
}

long continued_fraction_sum(long alpha, long beta) {
  long a = alpha, b = std::abs(beta);
  if (b == 0) throw InvalidArgument("tangle with beta = 0");
  long sum = 0;
  while (b != 0) {
    sum += a / b;
    const long r = a % b;
    a = b;
    b = r;
  }
  return sum;
}

BigInt montesinos_det(const MontesinosPresentation& m) {
  validate(m);
  if (m.e != 1) throw HypothesisViolation("determinant formula needs e = 1");
  Rational sum = -1;
  BigInt prod = m.final_tangle.alpha;
  for (const Tangle& t : m.tangles) {
    sum += frac(t.beta, t.alpha);
    prod *= t.alpha;
  }
  sum += frac(m.final_tangle.beta, m.final_tangle.alpha);
  Rational value = Rational(prod) * sum;
  value.canonicalize();
  if (value.get_den() != 1)
    throw HypothesisViolation("determinant formula gives a non-integer for this presentation");
  return abs(value.get_num());
}

BigInt montesinos_det_product_form(const MontesinosPresentation& m) {
  validate(m);
  BigInt prod = m.final_tangle.beta;
  for (const Tangle& t : m.tangles) prod *= t.alpha;
  return abs(prod);
}

long montesinos_crossing_number(const MontesinosPresentation& m) {
  validate(m);
  long c = std::abs(m.e);
  for (const Tangle& t : m.tangles) c += continued_fraction_sum(t.alpha, t.beta);
  return c + continued_fraction_sum(m.final_tangle.alpha, m.final_tangle.beta);
}

bool standard_form_check(const MontesinosPresentation& m) {
  validate(m);
  auto positive = [](const Tangle& t) { return t.beta > 0 && t.beta < t.alpha; };
  if (!positive(m.final_tangle)) return false;
  for (const Tangle& t : m.tangles)
    if (!positive(t)) return false;
  const Tangle& f = m.final_tangle;
  const Rational final_ratio = frac(f.alpha, f.beta);
  for (std::size_t i = 0; i < m.tangles.size(); ++i) {
    const Tangle& ti = m.tangles[i];
    Rational bound = final_ratio;
    for (std::size_t j = 0; j < m.tangles.size(); ++j)
      if (j != i) bound = std::min(bound, frac(m.tangles[j].alpha, m.tangles[j].beta));
    if (frac(ti.alpha, ti.alpha - ti.beta) > bound) return false;
  }
  if (!m.tangles.empty()) {
    Rational bound = frac(m.tangles[0].alpha, m.tangles[0].beta);
    for (const Tangle& t : m.tangles) bound = std::min(bound, frac(t.alpha, t.beta));
    if (frac(f.alpha, f.alpha - f.beta) > bound) return false;
  }
  return true;
}

TwistFamilyResult twist_family_obstruction(const std::vector<Tangle>& tangles, long beta, long l,
                                          long k) {
  if (beta < 1) throw InvalidArgument("beta must be at least 1");
  if (l < 0 || l >= beta) throw InvalidArgument("l must lie in [0, beta-1]");
  if (k < 1) throw InvalidArgument("k must be at least 1");
  Rational sum = 0;
  for (const Tangle& t : tangles) {
    validate_tangle(t);
    sum += frac(t.beta, t.alpha);
  }
  if (sum != 1) throw HypothesisViolation("sum of beta_i/alpha_i is " + sum.get_str() + ", not 1");
  if (std::gcd(l + k * beta, beta) != 1)
    throw InvalidArgument("alpha = l + k*beta is not coprime to beta");

  auto build = [&](long kk) {
    MontesinosPresentation m;
    m.e = 1;
    m.tangles = tangles;
    m.final_tangle = Tangle{l + kk * beta, beta};
    return m;
  };
  TwistFamilyResult r;
  r.presentation = build(k);
  r.det = montesinos_det(r.presentation);
  r.crossing_number = montesinos_crossing_number(r.presentation);
  r.predicted_deg_q = r.crossing_number - 2;
  r.verdict = r.predicted_deg_q >= r.det ? Verdict::NotQuasiAlternating : Verdict::Inconclusive;
  // c(k) grows with k, so the first k with c - 2 >= det is the threshold
  for (long kk = 1;; ++kk) {
    if (beta > 1 && std::gcd(l + kk * beta, beta) != 1) continue;
    const long c = montesinos_crossing_number(build(kk));
    if (BigInt(c - 2) >= r.det) {
      r.threshold_k = kk;
      break;
    }
  }
  return r;
}

std::vector<int> pretzel_family_twists(PretzelFamily family, long parameter) {
  const int r = static_cast<int>(parameter);
  switch (family) {
    case PretzelFamily::A:
      return {r + 2, r + 1, -r};
    case PretzelFamily::B:
      return {r + 1, r + 1, -r};
    default:
      return {r, r, -r};
  }
}

BigInt pretzel3_det(const std::vector<int>& twists) {
  if (twists.size() != 3) throw InvalidArgument("three twist regions expected");
  const BigInt a = twists[0], b = twists[1], c = twists[2];
  return abs(BigInt(a * b + b * c + c * a));
}

PretzelReport pretzel_family_report(PretzelFamily family, long parameter) {
  PretzelReport rep;
  rep.family = family;
  rep.parameter = parameter;
  const long r = parameter;
  if (family == PretzelFamily::C) {
    if (r < 3) throw HypothesisViolation("family C needs n >= 3");
    rep.deg_q = 3 * r - 2;
    rep.det = BigInt(r) * r;
  } else {
    if (r <= 3 || r % 2 == 0) throw HypothesisViolation("families A and B need an odd r > 3");
    rep.deg_q = family == PretzelFamily::A ? 3 * r + 1 : 3 * r + 2;
    rep.det = family == PretzelFamily::A ? BigInt(r) * r - 2 : BigInt(r) * r - 1;
  }
  rep.twists = pretzel_family_twists(family, parameter);
  rep.deg_below_det = BigInt(rep.deg_q) < rep.det;
  return rep;
}

}  // namespace qalt
