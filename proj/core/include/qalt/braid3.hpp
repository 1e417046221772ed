#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qalt/braid_word.hpp"
#include "qalt/poly.hpp"

namespace qalt {

// h^n s1^p1 s2^-q1 ... s1^ps s2^-qs with every p_i, q_i >= 1.
struct Family1 {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;
  friend bool operator==(const Family1&, const Family1&) = default;
};
// h^n s2^m.
struct Family2 {
  int n = 0;
  int m = 0;
  friend bool operator==(const Family2&, const Family2&) = default;
};
// h^n s1^m s2^-1 with m in {-1,-2,-3}.
struct Family3 {
  int n = 0;
  int m = -1;
  friend bool operator==(const Family3&, const Family3&) = default;
};
// Conjugacy normal forms of 3-braids; h = (s1 s2)^3.
using B3NormalForm = std::variant<Family1, Family2, Family3>;

// Throws InvalidArgument when the payload breaks the family constraints.
void validate(const B3NormalForm& nf);
// {"family":1,"n":0,"pairs":[[1,1]]}, {"family":2,"n":1,"m":-2}, ...
std::string to_json(const B3NormalForm& nf);
B3NormalForm parse_normal_form_json(const std::string& text);

// 2x2 matrix over Z[t, t^-1]; the x-variable Laurent type stands in for t.
struct BurauMatrix {
  std::array<IntLaurent, 4> e{IntLaurent(1), IntLaurent(0), IntLaurent(0), IntLaurent(1)};

  static BurauMatrix identity() { return {}; }
  const IntLaurent& at(int r, int c) const { return e[2 * r + c]; }
  IntLaurent trace() const { return e[0] + e[3]; }
  // Requires a monomial determinant (true for every braid image).
  BurauMatrix inverse() const;
  friend BurauMatrix operator*(const BurauMatrix& a, const BurauMatrix& b);
  friend bool operator==(const BurauMatrix&, const BurauMatrix&) = default;
};

// Undirected multigraph; loops are allowed and ignored by the tree count.
struct Multigraph {
  int vertices = 0;
  std::map<std::pair<int, int>, int> edges;  // (u <= v) -> multiplicity

  void add_edge(int u, int v, int multiplicity = 1);
  int edge_count() const;
};

BraidWord to_word(const B3NormalForm& nf);
// Throws InvalidArgument unless the word is on 3 strands.
BurauMatrix burau(const BraidWord& w);
// (-s)^e (s^2 + s^-2 + tr psi(w)) with s = t^(1/2).
HalfLaurent birman_jones(const BraidWord& w);
// Closed forms for families 2 and 3; InvalidArgument for family 1.
HalfLaurent closed_form_jones(const B3NormalForm& nf);
BigInt det_formula(const B3NormalForm& nf);
// Cycle u_1..u_q (q = sum q_i) plus hub w; block i attaches p_i parallel
// hub edges at the vertex where block i starts, u_{q_1+...+q_{i-1}} with
// u_0 read as u_q. Vertex ids: u_j -> j-1, w -> q.
Multigraph tutte_graph(const std::vector<std::pair<int, int>>& pairs);
// Matrix-tree theorem with fraction-free elimination.
BigInt spanning_tree_count(const Multigraph& g);
bool baldwin_is_qa(const B3NormalForm& nf);
// Family 1 with n in {-1,0,1} only; InvalidArgument otherwise.
int crossing_upper_bound(const B3NormalForm& nf);

}  // namespace qalt
