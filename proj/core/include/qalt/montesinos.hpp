#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qalt/poly.hpp"
#include "qalt/verdict.hpp"

namespace qalt {

// Rational tangle alpha/beta: gcd(alpha, |beta|) = 1, 0 < |beta| <= alpha.
// Negative beta gives the mirror tangle, so pretzel entries -r read as
// (r, -1).
struct Tangle {
  long alpha = 1;
  long beta = 1;
  friend bool operator==(const Tangle&, const Tangle&) = default;
};

// M(e; (a_1,b_1), ..., (a_r,b_r), (a,b)).
struct MontesinosPresentation {
  long e = 0;
  std::vector<Tangle> tangles;
  Tangle final_tangle;
};

// Throws InvalidArgument on a malformed tangle.
void validate(const MontesinosPresentation& m);
// Parses "5/2" or "5"; "r" alone means r/1.
Tangle parse_tangle(const std::string& text);

// Sum of the all-positive continued-fraction coefficients of alpha/|beta|.
long continued_fraction_sum(long alpha, long beta);

// (a prod a_i)(-1 + sum b_i/a_i + b/a) for e = 1; must be an integer.
// Returns its absolute value. Requires e = 1.
BigInt montesinos_det(const MontesinosPresentation& m);
// b prod a_i; equal to montesinos_det when sum b_i/a_i = 1.
BigInt montesinos_det_product_form(const MontesinosPresentation& m);
// |e| + sum of continued-fraction sums over all tangles.
long montesinos_crossing_number(const MontesinosPresentation& m);
// All standard-form inequalities, compared exactly.
bool standard_form_check(const MontesinosPresentation& m);

struct TwistFamilyResult {
  Verdict verdict = Verdict::Inconclusive;
  BigInt det;
  long crossing_number = 0;
  long predicted_deg_q = 0;
  // Smallest k from which the verdict stays NotQuasiAlternating.
  long threshold_k = 0;
  MontesinosPresentation presentation;
};

// e = 1, final tangle (l + k beta, beta). Throws HypothesisViolation unless
// sum b_i/a_i = 1, and InvalidArgument if gcd(l + k beta, beta) != 1.
TwistFamilyResult twist_family_obstruction(const std::vector<Tangle>& tangles, long beta, long l,
                                          long k);

enum class PretzelFamily { A, B, C };

struct PretzelReport {
  PretzelFamily family = PretzelFamily::A;
  long parameter = 0;
  std::vector<int> twists;
  long deg_q = 0;
  BigInt det;
  bool deg_below_det = false;
};

// A: P(r+2, r+1, -r), B: P(r+1, r+1, -r) with odd r > 3; C: P(n, n, -n)
// with n >= 3. Closed-form values; HypothesisViolation outside the range.
PretzelReport pretzel_family_report(PretzelFamily family, long parameter);
// Twist counts of the family member, without the range check.
std::vector<int> pretzel_family_twists(PretzelFamily family, long parameter);
// |sum over i<j of p_i p_j|-style determinant of a 3-strand pretzel:
// |p1 p2 + p2 p3 + p3 p1|.
BigInt pretzel3_det(const std::vector<int>& twists);

}  // namespace qalt
