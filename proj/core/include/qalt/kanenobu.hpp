#pragma once

#include <utility>
#include <vector>

#include "qalt/poly.hpp"

namespace qalt {

// Q(8_8) and Q(8_9), the constants of the Kanenobu closed form.
const IntLaurent& q_8_8();
const IntLaurent& q_8_9();

// Every K(p,q) has determinant 25 (recorded, not computed).
inline constexpr int kKanenobuDet = 25;

// -s_p s_q (Q(8_9)-1) + x^-1 (s_{p+1} s_{q+1} + s_{p-1} s_{q-1}) (Q(8_8)-1) + 1
IntLaurent kanenobu_q(int p, int q);
// |p|+|q|+6 when pq >= 0, |p|+|q|+5 otherwise.
int kanenobu_degree(int p, int q);
// All (p,q) with kanenobu_degree(p,q) < 25, sorted.
std::vector<std::pair<int, int>> qa_candidate_scan();

}  // namespace qalt
