#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "qalt/error.hpp"
#include "qalt/jones.hpp"
#include "qalt/montesinos.hpp"
#include "qalt/qpoly.hpp"

using namespace qalt;

namespace {

MontesinosPresentation pres(long e, std::vector<Tangle> ts, Tangle fin) {
  MontesinosPresentation m;
  m.e = e;
  m.tangles = std::move(ts);
  m.final_tangle = fin;
  return m;
}

}  // namespace

TEST(Tangle, Parse) {
  EXPECT_EQ(parse_tangle("5/2"), (Tangle{5, 2}));
  EXPECT_EQ(parse_tangle("3"), (Tangle{3, 1}));
  EXPECT_EQ(parse_tangle("3/-1"), (Tangle{3, -1}));
  EXPECT_THROW(parse_tangle("5/"), ParseError);
  EXPECT_THROW(parse_tangle("x"), ParseError);
}

TEST(Tangle, Validation) {
  EXPECT_THROW(validate(pres(1, {{2, 1}}, {4, 2})), InvalidArgument);
  EXPECT_THROW(validate(pres(1, {{2, 0}}, {3, 1})), InvalidArgument);
  EXPECT_THROW(validate(pres(1, {{2, 3}}, {3, 1})), InvalidArgument);
  EXPECT_NO_THROW(validate(pres(1, {{2, 1}, {3, -1}}, {3, 1})));
}

TEST(ContinuedFraction, Sums) {
  EXPECT_EQ(continued_fraction_sum(5, 2), 4);
  EXPECT_EQ(continued_fraction_sum(7, 1), 7);
  EXPECT_EQ(continued_fraction_sum(7, -1), 7);
  EXPECT_EQ(continued_fraction_sum(13, 5), 6);  // 13/5 = 2 + 1/(1 + 1/(1 + 1/2))
  EXPECT_EQ(continued_fraction_sum(1, 1), 1);
}

TEST(MontesinosDet, Examples) {
  EXPECT_EQ(montesinos_det(pres(1, {{2, 1}, {2, 1}}, {5, 2})), 8);
  for (long a = 1; a <= 9; ++a) EXPECT_EQ(montesinos_det(pres(1, {{2, 1}, {2, 1}}, {a, 1})), 4);
  EXPECT_THROW(montesinos_det(pres(0, {{2, 1}, {2, 1}}, {5, 2})), InvalidArgument);
  EXPECT_THROW(montesinos_det(pres(1, {{2, 1}, {2, 1}}, {4, 2})), InvalidArgument);
}

TEST(MontesinosDet, GeneralSum) {
  // 105 (-1 + 1/3 + 1/5 + 1/7) = -34
  EXPECT_EQ(montesinos_det(pres(1, {{3, 1}, {5, 1}}, {7, 1})), 34);
  EXPECT_NE(montesinos_det(pres(1, {{3, 1}, {5, 1}}, {7, 1})), montesinos_det_product_form(pres(1, {{3, 1}, {5, 1}}, {7, 1})));
}

TEST(MontesinosDet, BothFormsAgree) {
  // tangles with sum b_i/a_i = 1: pick a_1/b_1 then complete with 1 - b_1/a_1
  std::mt19937 rng(5);
  int checked = 0;
  while (checked < 50) {
    const long a1 = 2 + static_cast<long>(rng() % 12);
    const long b1 = 1 + static_cast<long>(rng() % (a1 - 1));
    if (std::gcd(a1, b1) != 1) continue;
    const long a2 = a1, b2 = a1 - b1;
    const long beta = 1 + static_cast<long>(rng() % 6);
    const long alpha = beta + 1 + static_cast<long>(rng() % 20);
    if (std::gcd(alpha, beta) != 1) continue;
    const auto m = pres(1, {{a1, b1}, {a2, b2}}, {alpha, beta});
    EXPECT_EQ(montesinos_det(m), montesinos_det_product_form(m));
    EXPECT_EQ(montesinos_det(m), BigInt(beta * a1 * a2));
    ++checked;
  }
}

TEST(MontesinosCrossings, Pretzel) {
  const auto p543 = pres(0, {{5, 1}, {4, 1}}, {3, -1});
  EXPECT_EQ(montesinos_crossing_number(p543), 12);
  const int tw[] = {5, 4, -3};
  EXPECT_EQ(q_degree(generate_pretzel(tw)), montesinos_crossing_number(p543) - 2);
  EXPECT_EQ(montesinos_crossing_number(pres(1, {{2, 1}, {2, 1}}, {5, 2})), 9);
}

TEST(StandardForm, Examples) {
  EXPECT_TRUE(standard_form_check(pres(1, {{2, 1}, {2, 1}}, {41, 10})));
  EXPECT_FALSE(standard_form_check(pres(1, {{3, 2}, {3, 2}}, {2, 1})));
  // (2,1), (3,1): 2/1 <= 3/1 and 3/2 <= 2/1
  EXPECT_TRUE(standard_form_check(pres(1, {{2, 1}}, {3, 1})));
}

TEST(TwistFamily, ThresholdAndFixedDet) {
  const std::vector<Tangle> ts{{2, 1}, {2, 1}};
  BigInt det0;
  for (long k = 1; k <= 12; ++k) {
    const TwistFamilyResult r = twist_family_obstruction(ts, 1, 0, k);
    if (k == 1) det0 = r.det;
    EXPECT_EQ(r.det, 4);
    EXPECT_EQ(r.det, det0);
    EXPECT_EQ(r.crossing_number, 5 + k);
    EXPECT_EQ(r.verdict == Verdict::NotQuasiAlternating, k >= r.threshold_k);
  }
  EXPECT_EQ(twist_family_obstruction(ts, 1, 0, 1).threshold_k, 1);
}

TEST(TwistFamily, LargeKIsStandardForm) {
  const std::vector<Tangle> ts{{3, 1}, {3, 2}};
  const TwistFamilyResult r = twist_family_obstruction(ts, 2, 1, 20);
  EXPECT_EQ(r.det, 18);
  EXPECT_TRUE(standard_form_check(r.presentation));
  EXPECT_EQ(r.verdict, Verdict::NotQuasiAlternating);
  EXPECT_GE(20, r.threshold_k);
}

TEST(TwistFamily, Errors) {
  EXPECT_THROW(twist_family_obstruction({{2, 1}, {4, 1}}, 1, 0, 3), HypothesisViolation);
  EXPECT_THROW(twist_family_obstruction({{2, 1}, {2, 1}}, 2, 0, 3), InvalidArgument);
  EXPECT_THROW(twist_family_obstruction({{2, 1}, {2, 1}}, 1, 0, 0), InvalidArgument);
}

TEST(Pretzel, FamilyReports) {
  const PretzelReport a = pretzel_family_report(PretzelFamily::A, 5);
  EXPECT_EQ(a.deg_q, 16);
  EXPECT_EQ(a.det, 23);
  EXPECT_TRUE(a.deg_below_det);
  EXPECT_EQ(a.twists, (std::vector<int>{7, 6, -5}));

  const PretzelReport c = pretzel_family_report(PretzelFamily::C, 3);
  EXPECT_EQ(c.deg_q, 7);
  EXPECT_EQ(c.det, 9);
  EXPECT_TRUE(c.deg_below_det);

  EXPECT_THROW(pretzel_family_report(PretzelFamily::A, 3), HypothesisViolation);
  EXPECT_THROW(pretzel_family_report(PretzelFamily::B, 6), HypothesisViolation);
  EXPECT_THROW(pretzel_family_report(PretzelFamily::C, 2), HypothesisViolation);
}

TEST(Pretzel, DetClosedFormMatchesFamilies) {
  for (long r = 5; r <= 15; r += 2) {
    EXPECT_EQ(pretzel3_det(pretzel_family_twists(PretzelFamily::A, r)), pretzel_family_report(PretzelFamily::A, r).det);
    EXPECT_EQ(pretzel3_det(pretzel_family_twists(PretzelFamily::B, r)), pretzel_family_report(PretzelFamily::B, r).det);
  }
  for (long n = 3; n <= 10; ++n)
    EXPECT_EQ(pretzel3_det(pretzel_family_twists(PretzelFamily::C, n)), pretzel_family_report(PretzelFamily::C, n).det);
}

TEST(Pretzel, PipelineFamilyC) {
  for (int n = 3; n <= 4; ++n) {
    const auto tw = pretzel_family_twists(PretzelFamily::C, n);
    const PDDiagram d = generate_pretzel(tw);
    EXPECT_EQ(q_degree(d), 3 * n - 2);
    EXPECT_EQ(determinant(d), BigInt(n * n));
  }
}

TEST(Pretzel, PipelineFamilyABelowHypothesis) {
  const auto tw = pretzel_family_twists(PretzelFamily::A, 3);
  const PDDiagram d = generate_pretzel(tw);
  EXPECT_EQ(determinant(d), 7);
  EXPECT_EQ(pretzel3_det(tw), 7);
  EXPECT_EQ(q_degree(d), 10);
}

TEST(Pretzel, PipelineFamilyB) {
  // the diagram gives deg Q = 3r; the closed form 3r + 2 exceeds c - 1 = 3r + 1
  QOptions o;
  o.max_crossings = 40;
  for (int r = 3; r <= 7; r += 2) {
    const auto tw = pretzel_family_twists(PretzelFamily::B, r);
    const PDDiagram d = generate_pretzel(tw);
    EXPECT_EQ(q_degree(d, o), 3 * r);
    EXPECT_EQ(determinant(d, 40), BigInt(r * r - 1));
    if (r > 3) {
      const PretzelReport rep = pretzel_family_report(PretzelFamily::B, r);
      EXPECT_EQ(rep.deg_q, 3 * r + 2);
      EXPECT_EQ(rep.det, BigInt(r * r - 1));
      EXPECT_GT(rep.deg_q, static_cast<long>(d.crossing_count()) - 1);
    }
  }
}
