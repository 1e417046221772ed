#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qalt/braid_word.hpp"

namespace qalt {

// One crossing of a planar diagram: four arc ids listed counterclockwise,
// the understrand running through positions 0 and 2, the overstrand through
// positions 1 and 3. (a,b,c,d) and (c,d,a,b) describe the same crossing.
struct Crossing {
  std::array<int, 4> arcs{};

  int operator[](std::size_t i) const { return arcs[i]; }
  int& operator[](std::size_t i) { return arcs[i]; }

  // Equal up to the half-turn (a,b,c,d) ~ (c,d,a,b).
  bool same_as(const Crossing& o) const {
    return arcs == o.arcs ||
           (arcs[0] == o.arcs[2] && arcs[1] == o.arcs[3] && arcs[2] == o.arcs[0] &&
            arcs[3] == o.arcs[1]);
  }
};

// A: joins a-b and c-d.  B: joins a-d and b-c.
enum class SmoothingKind { A, B };

// Position of one arc end: crossing index and slot 0..3.
struct ArcEnd {
  int crossing = -1;
  int slot = -1;
};

// Unoriented link diagram in planar-diagram notation plus a count of
// crossingless unknotted components. Immutable value; every move returns a
// new diagram.
class PDDiagram {
 public:
  PDDiagram() = default;
  // Throws MalformedDiagram unless every arc id occurs exactly twice.
  explicit PDDiagram(std::vector<Crossing> crossings, int free_loops = 0);

  static PDDiagram unlink(int components) { return PDDiagram({}, components); }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(std::size_t i) const { return crossings_.at(i); }
  std::size_t crossing_count() const { return crossings_.size(); }
  int free_loops() const { return free_loops_; }

  // Both ends of every arc, indexed by arc id. Requires dense ids (see
  // renumbered()); for sparse ids use arc_ends_of().
  std::vector<std::pair<ArcEnd, ArcEnd>> arc_ends() const;
  // Both ends of a specific arc id. Throws InvalidArgument if absent.
  std::pair<ArcEnd, ArcEnd> arc_ends_of(int arc) const;

  // Same diagram with arc ids renumbered 0..2n-1 in order of first
  // appearance. Crossing order is preserved.
  PDDiagram renumbered() const;
  bool has_dense_ids() const;

  // Crossing-wise same_as, in order, and equal free loop counts.
  friend bool operator==(const PDDiagram& a, const PDDiagram& b);

 private:
  struct Unchecked {};
  PDDiagram(Unchecked, std::vector<Crossing> crossings, int free_loops)
      : crossings_(std::move(crossings)), free_loops_(free_loops) {}
  friend class DiagramBuilder;

  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
};

// Grammar: terms "X(a,b,c,d)" separated by ';' or whitespace, plus optional
// "O(n)" terms adding n free loops. Also accepts the nested-list form
// "[[a,b,c,d],[...]]". Throws ParseError or MalformedDiagram.
PDDiagram parse_pd(std::string_view text);
// Renders in the X(...)/O(n) grammar; parse_pd(render_pd(d)) == d.
std::string render_pd(const PDDiagram& d);

// Union a-c and b-d at every crossing, count classes, add free loops.
int num_components(const PDDiagram& d);

// Removes the crossing and fuses arcs per `kind`; closed curves created in
// the process become free loops. Remaining crossings keep their order.
PDDiagram smooth(const PDDiagram& d, std::size_t crossing_index, SmoothingKind kind);

// Exchanges over and under at one crossing (rotation (a,b,c,d) -> (b,c,d,a)).
PDDiagram switch_crossing(const PDDiagram& d, std::size_t crossing_index);

// Repeatedly removes Reidemeister I kinks and Reidemeister II bigons.
PDDiagram simplify(const PDDiagram& d);

// Exchanges over and under at every crossing.
PDDiagram mirror(const PDDiagram& d);

// Cuts arc1 of d1 and arc2 of d2 and cross-joins the ends. On a
// crossingless summand the arc id is ignored and one free loop is consumed.
PDDiagram connected_sum(const PDDiagram& d1, const PDDiagram& d2, int arc1, int arc2);

// Standard pretzel diagram P(p_1, ..., p_k): k vertical twist regions with
// |p_i| crossings each. Requires k >= 2 and every p_i != 0.
PDDiagram generate_pretzel(std::span<const int> twists);

// Closure of a braid; a positive generator becomes a positive crossing when
// all strands are oriented the same way. Strands untouched by any letter
// become free loops.
PDDiagram close_braid(const BraidWord& word);

// Memoization key: lexicographically smallest relabel-by-traversal encoding
// over all starting arc ends. Isomorphic diagrams get equal codes.
std::string canonical_code(const PDDiagram& d);

// Crossing indices grouped by connected piece of the projection graph.
std::vector<std::vector<std::size_t>> connected_pieces(const PDDiagram& d);
// Sub-diagram on the given crossings (which must be closed under arcs).
PDDiagram sub_diagram(const PDDiagram& d, std::span<const std::size_t> crossing_indices);

// One traversal step: leaving crossing `c` through `slot` along its arc,
// returns the arc end reached at the far end. Requires dense ids.
inline ArcEnd follow(const std::vector<std::pair<ArcEnd, ArcEnd>>& ends, const PDDiagram& d,
                     ArcEnd from) {
  const auto& [e1, e2] = ends[d.crossing(from.crossing)[from.slot]];
  if (e1.crossing == from.crossing && e1.slot == from.slot) return e2;
  return e1;
}

}  // namespace qalt
