#pragma once

#include <vector>

#include "qalt/diagram.hpp"
#include "qalt/poly.hpp"
#include "qalt/qpoly.hpp"
#include "qalt/verdict.hpp"

namespace qalt {

// A diagram with a direction on every strand through every crossing. The
// flags are per crossing: under_forward means the understrand runs from
// slot 0 to slot 2, over_forward means the overstrand runs from slot 1 to
// slot 3.
class OrientedDiagram {
 public:
  // Throws MalformedDiagram if the flags do not form consistent
  // orientations of the components.
  OrientedDiagram(PDDiagram base, std::vector<char> under_forward, std::vector<char> over_forward);

  const PDDiagram& base() const { return base_; }
  bool under_forward(std::size_t i) const { return under_forward_.at(i) != 0; }
  bool over_forward(std::size_t i) const { return over_forward_.at(i) != 0; }
  // +1 or -1.
  int sign(std::size_t i) const;
  int writhe() const;

 private:
  PDDiagram base_;
  std::vector<char> under_forward_;
  std::vector<char> over_forward_;
};

// Orients each component following the PD convention that slot 0 is the
// incoming understrand: a component enters at slot 0 of its lowest-index
// crossing where it passes under; components that never pass under enter at
// slot 1 of their lowest-index crossing. Components are numbered in that
// order and `reverse[k]` flips the k-th one (missing entries mean no flip).
OrientedDiagram orient(const PDDiagram& d, const std::vector<bool>& reverse = {});

// Orientation-respecting smoothing: A at a positive crossing, B at a
// negative one. Remaining crossings keep their orientation.
OrientedDiagram oriented_smooth(const OrientedDiagram& d, std::size_t crossing_index);
OrientedDiagram oriented_switch(const OrientedDiagram& d, std::size_t crossing_index);
OrientedDiagram oriented_mirror(const OrientedDiagram& d);

// Kauffman bracket in the variable A (stored in a HalfLaurent whose
// exponents count powers of A), normalized so the crossingless unknot is 1.
// Computed by sweeping crossings and tracking how open arc ends are paired,
// so cost grows with the sweep width rather than 2^n.
HalfLaurent kauffman_bracket(const PDDiagram& d, std::size_t max_crossings = 16);
// Plain sum over all 2^n states; an independent check for small diagrams.
HalfLaurent kauffman_bracket_state_sum(const PDDiagram& d, std::size_t max_crossings = 16);

// V_L as a polynomial in s = t^(1/2): (-A^3)^(-w) <D> with t = A^-4.
HalfLaurent jones_polynomial(const OrientedDiagram& d, std::size_t max_crossings = 16);
HalfLaurent jones_polynomial(const PDDiagram& d, std::size_t max_crossings = 16);

// |V_L(-1)|.
BigInt determinant(const PDDiagram& d, std::size_t max_crossings = 16);
// Span of V_L in powers of t.
Rational breadth(const PDDiagram& d, std::size_t max_crossings = 16);

struct Evidence {
  int deg_q = -1;
  BigInt det;
  Rational breadth;
};

struct ObstructionResult {
  Verdict verdict = Verdict::Inconclusive;
  Evidence evidence;
};

// NotQuasiAlternating iff deg Q >= det. Breadth is reported only.
ObstructionResult obstruction_check(const PDDiagram& d, const QOptions& options = {},
                                    std::size_t max_jones_crossings = 16);

}  // namespace qalt
