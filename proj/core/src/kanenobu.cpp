#include "qalt/kanenobu.hpp"

#include <cstdlib>

namespace qalt {

const IntLaurent& q_8_8() {
  static const IntLaurent q = parse_int_laurent("2x^7+8x^6+4x^5-14x^4-10x^3+6x^2+4x+1");
  return q;
}

const IntLaurent& q_8_9() {
  static const IntLaurent q = parse_int_laurent("2x^7+8x^6+4x^5-16x^4-10x^3+16x^2+4x-7");
  return q;
}

IntLaurent kanenobu_q(int p, int q) {
  const IntLaurent one(1);
  IntLaurent r = -(sigma(p) * sigma(q) * (q_8_9() - one));
  r += ((sigma(p + 1) * sigma(q + 1) + sigma(p - 1) * sigma(q - 1)) * (q_8_8() - one)).shifted(-1);
  return r + one;
}

int kanenobu_degree(int p, int q) {
  const int base = std::abs(p) + std::abs(q);
  return static_cast<long>(p) * q >= 0 ? base + 6 : base + 5;
}

std::vector<std::pair<int, int>> qa_candidate_scan() {
  // degree >= |p|+|q|+5, so |p|+|q| <= 19 bounds the search
  std::vector<std::pair<int, int>> out;
  for (int p = -19; p <= 19; ++p)
    for (int q = -19; q <= 19; ++q)
      if (kanenobu_degree(p, q) < kKanenobuDet) out.emplace_back(p, q);
  return out;
}

}  // namespace qalt
