#include "qalt/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <cstdlib>
#include <sstream>
#include <unordered_map>

#include "qalt/error.hpp"

namespace qalt {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

// Builds diagrams from crossings over raw labels 0..label_count-1 joined by
// label unions. Every raw label must lie on some curve; union classes that no
// crossing references are closed crossingless curves and become free loops.
class DiagramBuilder {
 public:
  explicit DiagramBuilder(int label_count) : label_count_(label_count) {}

  int fresh() {
    extra_.push_back(label_count_ + static_cast<int>(extra_.size()));
    return extra_.back();
  }
  void add(const Crossing& c) { crossings_.push_back(c); }
  void join(int a, int b) { pending_.emplace_back(a, b); }
  void add_free_loops(int n) { free_loops_ += n; }

  PDDiagram build() {
    const int total = label_count_ + static_cast<int>(extra_.size());
    UnionFind uf(total);
    // copy unions done before fresh labels were allocated
    for (auto [a, b] : pending_) uf.unite(a, b);
    std::vector<char> used(total, 0);
    for (auto& c : crossings_)
      for (int& a : c.arcs) {
        a = uf.find(a);
        used[a] = 1;
      }
    int loops = free_loops_;
    for (int l = 0; l < total; ++l)
      if (uf.find(l) == l && !used[l]) ++loops;
    PDDiagram raw(PDDiagram::Unchecked{}, std::move(crossings_), loops);
    return raw.renumbered();
  }

 private:
  int label_count_;
  std::vector<int> extra_;
  std::vector<Crossing> crossings_;
  std::vector<std::pair<int, int>> pending_;
  int free_loops_ = 0;
};

PDDiagram::PDDiagram(std::vector<Crossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
  if (free_loops_ < 0) throw MalformedDiagram("negative free loop count");
  std::unordered_map<int, int> count;
  for (const auto& c : crossings_)
    for (int a : c.arcs) ++count[a];
  for (const auto& [arc, n] : count) {
    if (n != 2)
      throw MalformedDiagram("arc " + std::to_string(arc) + " occurs " + std::to_string(n) +
                             " time(s); every arc must occur exactly twice");
  }
}

bool PDDiagram::has_dense_ids() const {
  const int n = static_cast<int>(crossings_.size());
  for (const auto& c : crossings_)
    for (int a : c.arcs)
      if (a < 0 || a >= 2 * n) return false;
  return true;
}

PDDiagram PDDiagram::renumbered() const {
  std::unordered_map<int, int> map;
  std::vector<Crossing> out = crossings_;
  for (auto& c : out)
    for (int& a : c.arcs) {
      auto [it, inserted] = map.try_emplace(a, static_cast<int>(map.size()));
      a = it->second;
    }
  return PDDiagram(Unchecked{}, std::move(out), free_loops_);
}

std::vector<std::pair<ArcEnd, ArcEnd>> PDDiagram::arc_ends() const {
  std::vector<std::pair<ArcEnd, ArcEnd>> ends(2 * crossings_.size());
  for (int ci = 0; ci < static_cast<int>(crossings_.size()); ++ci)
    for (int s = 0; s < 4; ++s) {
      auto& e = ends.at(crossings_[ci][s]);
      (e.first.crossing < 0 ? e.first : e.second) = ArcEnd{ci, s};
    }
  return ends;
}

std::pair<ArcEnd, ArcEnd> PDDiagram::arc_ends_of(int arc) const {
  std::pair<ArcEnd, ArcEnd> e;
  for (int ci = 0; ci < static_cast<int>(crossings_.size()); ++ci)
    for (int s = 0; s < 4; ++s)
      if (crossings_[ci][s] == arc) (e.first.crossing < 0 ? e.first : e.second) = ArcEnd{ci, s};
  if (e.second.crossing < 0) throw InvalidArgument("arc " + std::to_string(arc) + " not in diagram");
  return e;
}

bool operator==(const PDDiagram& a, const PDDiagram& b) {
  if (a.free_loops_ != b.free_loops_ || a.crossings_.size() != b.crossings_.size()) return false;
  for (std::size_t i = 0; i < a.crossings_.size(); ++i)
    if (!a.crossings_[i].same_as(b.crossings_[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// text

PDDiagram parse_pd(std::string_view text) {
  std::string s(text);
  auto is_space = [](char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; };
  auto fail = [&](std::size_t pos, const std::string& why) {
    throw ParseError("PD code: " + why + " at offset " + std::to_string(pos));
  };

  std::size_t first = 0;
  while (first < s.size() && is_space(s[first])) ++first;
  if (first == s.size()) throw ParseError("PD code: empty input");

  std::vector<Crossing> crossings;
  int loops = 0;

  auto read_ints = [&](std::size_t& i, char close) {
    std::vector<long> vals;
    while (true) {
      while (i < s.size() && (is_space(s[i]) || s[i] == ',')) ++i;
      if (i >= s.size()) fail(i, "unterminated term");
      if (s[i] == close) {
        ++i;
        return vals;
      }
      std::size_t start = i;
      if (s[i] == '-' || s[i] == '+') ++i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (start == i || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
        fail(start, "expected integer");
      vals.push_back(std::stol(s.substr(start, i - start)));
    }
  };

  if (s[first] == '[' || s[first] == '{') {
    // nested list form: [[a,b,c,d],...]
    const char open = s[first], close = open == '[' ? ']' : '}';
    std::size_t i = first + 1;
    while (true) {
      while (i < s.size() && (is_space(s[i]) || s[i] == ',')) ++i;
      if (i >= s.size()) fail(i, "unterminated list");
      if (s[i] == close) {
        ++i;
        break;
      }
      if (s[i] != open) fail(i, "expected '" + std::string(1, open) + "'");
      ++i;
      auto vals = read_ints(i, close);
      if (vals.size() != 4) fail(i, "crossing needs 4 arcs");
      Crossing c;
      for (int k = 0; k < 4; ++k) c[k] = static_cast<int>(vals[k]);
      crossings.push_back(c);
    }
    while (i < s.size() && is_space(s[i])) ++i;
    if (i != s.size()) fail(i, "trailing characters");
    return PDDiagram(std::move(crossings), 0);
  }

  std::size_t i = first;
  // optional PD[ ... ] / PD( ... ) wrapper
  bool wrapped = false;
  char wrap_close = ')';
  if (s.compare(i, 2, "PD") == 0 && i + 2 < s.size() && (s[i + 2] == '[' || s[i + 2] == '(')) {
    wrapped = true;
    wrap_close = s[i + 2] == '[' ? ']' : ')';
    i += 3;
  }
  while (true) {
    while (i < s.size() && (is_space(s[i]) || s[i] == ';' || s[i] == ',')) ++i;
    if (i >= s.size()) break;
    if (wrapped && s[i] == wrap_close) {
      ++i;
      wrapped = false;
      continue;
    }
    char kind = s[i];
    if (kind != 'X' && kind != 'O') fail(i, std::string("unexpected '") + kind + "'");
    ++i;
    if (i >= s.size() || (s[i] != '(' && s[i] != '[')) fail(i, "expected '('");
    char close = s[i] == '(' ? ')' : ']';
    ++i;
    auto vals = read_ints(i, close);
    if (kind == 'X') {
      if (vals.size() != 4) fail(i, "X term needs 4 arcs");
      Crossing c;
      for (int k = 0; k < 4; ++k) c[k] = static_cast<int>(vals[k]);
      crossings.push_back(c);
    } else {
      if (vals.size() != 1 || vals[0] < 0) fail(i, "O term needs one non-negative count");
      loops += static_cast<int>(vals[0]);
    }
  }
  if (wrapped) fail(i, "unterminated PD wrapper");
  return PDDiagram(std::move(crossings), loops);
}

std::string render_pd(const PDDiagram& d) {
  std::ostringstream out;
  bool first = true;
  for (const auto& c : d.crossings()) {
    if (!first) out << ';';
    first = false;
    out << "X(" << c[0] << ',' << c[1] << ',' << c[2] << ',' << c[3] << ')';
  }
  if (d.free_loops() > 0 || d.crossing_count() == 0) {
    if (!first) out << ';';
    out << "O(" << d.free_loops() << ')';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// structure

int num_components(const PDDiagram& d) {
  PDDiagram dense = d.renumbered();
  const int labels = static_cast<int>(2 * dense.crossing_count());
  UnionFind uf(labels);
  for (const auto& c : dense.crossings()) {
    uf.unite(c[0], c[2]);
    uf.unite(c[1], c[3]);
  }
  int classes = 0;
  for (int l = 0; l < labels; ++l)
    if (uf.find(l) == l) ++classes;
  return classes + d.free_loops();
}

namespace {

void check_index(const PDDiagram& d, std::size_t idx) {
  if (idx >= d.crossing_count())
    throw InvalidArgument("crossing index " + std::to_string(idx) + " out of range (diagram has " +
                          std::to_string(d.crossing_count()) + " crossings)");
}

// Removes crossings flagged in `removed`; each removed crossing contributes
// the slot joins in `joins[i]`. Input must have dense ids.
PDDiagram remove_crossings(const PDDiagram& dense, const std::vector<char>& removed,
                           const std::vector<std::array<std::pair<int, int>, 2>>& joins) {
  DiagramBuilder b(static_cast<int>(2 * dense.crossing_count()));
  for (std::size_t i = 0; i < dense.crossing_count(); ++i) {
    const Crossing& c = dense.crossing(i);
    if (!removed[i]) {
      b.add(c);
      continue;
    }
    for (auto [s, t] : joins[i]) b.join(c[s], c[t]);
  }
  b.add_free_loops(dense.free_loops());
  return b.build();
}

constexpr std::array<std::pair<int, int>, 2> kPassThrough{{{0, 2}, {1, 3}}};
constexpr std::array<std::pair<int, int>, 2> kJoinA{{{0, 1}, {2, 3}}};
constexpr std::array<std::pair<int, int>, 2> kJoinB{{{0, 3}, {1, 2}}};

bool has_repeated_adjacent(const Crossing& c) {
  for (int s = 0; s < 4; ++s)
    if (c[s] == c[(s + 1) % 4]) return true;
  return false;
}

// Finds one Reidemeister II bigon; returns the two crossing indices.
std::optional<std::pair<int, int>> find_bigon(const PDDiagram& dense) {
  const auto ends = dense.arc_ends();
  const int n = static_cast<int>(dense.crossing_count());
  for (int ci = 0; ci < n; ++ci) {
    const Crossing& c1 = dense.crossing(ci);
    if (has_repeated_adjacent(c1)) continue;
    for (int s = 0; s < 4; ++s) {
      // p at slot s, q at slot s+1 of c1
      const int p = c1[s], q = c1[(s + 1) % 4];
      ArcEnd pe = follow(ends, dense, {ci, s});
      ArcEnd qe = follow(ends, dense, {ci, (s + 1) % 4});
      if (pe.crossing != qe.crossing || pe.crossing == ci) continue;
      const Crossing& c2 = dense.crossing(pe.crossing);
      if (has_repeated_adjacent(c2)) continue;
      (void)p;
      (void)q;
      // the bigon face requires p to follow q counterclockwise at c2
      if (pe.slot != (qe.slot + 1) % 4) continue;
      // same strand over (or under) at both crossings
      if ((pe.slot % 2) != (s % 2)) continue;
      return std::make_pair(ci, pe.crossing);
    }
  }
  return std::nullopt;
}

}  // namespace

PDDiagram smooth(const PDDiagram& d, std::size_t crossing_index, SmoothingKind kind) {
  check_index(d, crossing_index);
  PDDiagram dense = d.renumbered();
  std::vector<char> removed(dense.crossing_count(), 0);
  removed[crossing_index] = 1;
  std::vector<std::array<std::pair<int, int>, 2>> joins(dense.crossing_count());
  joins[crossing_index] = kind == SmoothingKind::A ? kJoinA : kJoinB;
  return remove_crossings(dense, removed, joins);
}

PDDiagram switch_crossing(const PDDiagram& d, std::size_t crossing_index) {
  check_index(d, crossing_index);
  std::vector<Crossing> cs = d.crossings();
  Crossing& c = cs[crossing_index];
  c = Crossing{{c[1], c[2], c[3], c[0]}};
  return PDDiagram(std::move(cs), d.free_loops());
}

PDDiagram mirror(const PDDiagram& d) {
  std::vector<Crossing> cs = d.crossings();
  for (auto& c : cs) c = Crossing{{c[1], c[2], c[3], c[0]}};
  return PDDiagram(std::move(cs), d.free_loops());
}

PDDiagram simplify(const PDDiagram& d) {
  PDDiagram cur = d.renumbered();
  while (cur.crossing_count() > 0) {
    const std::size_t n = cur.crossing_count();
    std::vector<char> removed(n, 0);
    std::vector<std::array<std::pair<int, int>, 2>> joins(n, kPassThrough);
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (has_repeated_adjacent(cur.crossing(i))) {
        removed[i] = 1;
        changed = true;
        break;
      }
    }
    if (!changed) {
      if (auto bigon = find_bigon(cur)) {
        removed[bigon->first] = 1;
        removed[bigon->second] = 1;
        changed = true;
      }
    }
    if (!changed) break;
    cur = remove_crossings(cur, removed, joins);
  }
  return cur;
}

PDDiagram connected_sum(const PDDiagram& d1, const PDDiagram& d2, int arc1, int arc2) {
  if (d1.crossing_count() == 0 || d2.crossing_count() == 0) {
    const PDDiagram& empty = d1.crossing_count() == 0 ? d1 : d2;
    const PDDiagram& other = d1.crossing_count() == 0 ? d2 : d1;
    if (empty.free_loops() == 0) throw InvalidArgument("connected sum with an empty diagram");
    if (other.crossing_count() == 0 && other.free_loops() == 0)
      throw InvalidArgument("connected sum with an empty diagram");
    PDDiagram o = other.renumbered();
    return PDDiagram(o.crossings(), o.free_loops() + empty.free_loops() - 1);
  }
  auto [e1, e1b] = d1.arc_ends_of(arc1);
  auto [e2, e2b] = d2.arc_ends_of(arc2);
  PDDiagram a = d1.renumbered();
  PDDiagram b = d2.renumbered();
  const int offset = static_cast<int>(2 * a.crossing_count());
  std::vector<Crossing> cs = a.crossings();
  for (Crossing c : b.crossings()) {
    for (int& l : c.arcs) l += offset;
    cs.push_back(c);
  }
  const int u = offset + static_cast<int>(2 * b.crossing_count());
  const int v = u + 1;
  const auto n1 = static_cast<int>(a.crossing_count());
  cs[e1.crossing][e1.slot] = u;
  cs[e1b.crossing][e1b.slot] = v;
  cs[n1 + e2b.crossing][e2b.slot] = u;
  cs[n1 + e2.crossing][e2.slot] = v;
  return PDDiagram(std::move(cs), a.free_loops() + b.free_loops()).renumbered();
}

namespace {

// One crossing of a two-strand column read bottom to top: inputs (left,
// right) come in, outputs (left, right) leave. Positive means the strand from
// bottom-left to top-right passes over, which is a positive crossing for
// upward-oriented strands.
Crossing column_crossing(bool positive, int in_left, int in_right, int out_left, int out_right) {
  if (positive) return Crossing{{in_right, out_right, out_left, in_left}};
  return Crossing{{in_left, in_right, out_right, out_left}};
}

}  // namespace

PDDiagram generate_pretzel(std::span<const int> twists) {
  if (twists.size() < 2) throw InvalidArgument("pretzel needs at least 2 twist regions");
  for (int p : twists)
    if (p == 0) throw InvalidArgument("pretzel twist counts must be nonzero");
  DiagramBuilder b(0);
  struct Ends {
    int bl, br, tl, tr;
  };
  std::vector<Ends> cols;
  for (int p : twists) {
    Ends e{};
    e.bl = b.fresh();
    e.br = b.fresh();
    int l = e.bl, r = e.br;
    for (int k = 0; k < std::abs(p); ++k) {
      int nl = b.fresh(), nr = b.fresh();
      b.add(column_crossing(p > 0, l, r, nl, nr));
      l = nl;
      r = nr;
    }
    e.tl = l;
    e.tr = r;
    cols.push_back(e);
  }
  const std::size_t k = cols.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Ends& a = cols[i];
    const Ends& nxt = cols[(i + 1) % k];
    b.join(a.tr, nxt.tl);
    b.join(a.br, nxt.bl);
  }
  return b.build();
}

PDDiagram close_braid(const BraidWord& word) {
  word.validate();
  DiagramBuilder b(0);
  std::vector<int> init(word.strands), cur(word.strands);
  for (int j = 0; j < word.strands; ++j) init[j] = cur[j] = b.fresh();
  for (int l : word.letters) {
    const int i = std::abs(l) - 1;
    int nl = b.fresh(), nr = b.fresh();
    b.add(column_crossing(l > 0, cur[i], cur[i + 1], nl, nr));
    cur[i] = nl;
    cur[i + 1] = nr;
  }
  for (int j = 0; j < word.strands; ++j) b.join(cur[j], init[j]);
  return b.build();
}

// ---------------------------------------------------------------------------
// canonical form and pieces

std::string canonical_code(const PDDiagram& d) {
  const PDDiagram dense = d.renumbered();
  const int n = static_cast<int>(dense.crossing_count());
  if (n == 0) return std::string(1, '\0') + std::to_string(d.free_loops());
  const auto pieces = connected_pieces(dense);
  if (pieces.size() > 1) {
    std::vector<std::string> codes;
    for (const auto& p : pieces) codes.push_back(canonical_code(sub_diagram(dense, p)));
    std::sort(codes.begin(), codes.end());
    std::string out;
    for (const auto& c : codes) out += c + '+';
    return out + std::to_string(d.free_loops());
  }
  const auto ends = dense.arc_ends();

  std::string best;
  std::vector<int> label(2 * n), order(n), visit_seq;
  // entered[c][parity]: slot where the traversal entered that strand
  std::vector<std::array<int, 2>> entered(n);
  std::string code;
  for (int c0 = 0; c0 < n; ++c0) {
    for (int s0 = 0; s0 < 4; ++s0) {
      std::fill(label.begin(), label.end(), -1);
      std::fill(order.begin(), order.end(), -1);
      std::fill(entered.begin(), entered.end(), std::array<int, 2>{-1, -1});
      visit_seq.clear();
      int next_label = 0;
      ArcEnd start{c0, s0};
      while (true) {
        ArcEnd cur = start;
        do {
          if (order[cur.crossing] < 0) {
            order[cur.crossing] = static_cast<int>(visit_seq.size());
            visit_seq.push_back(cur.crossing);
          }
          entered[cur.crossing][cur.slot % 2] = cur.slot;
          const Crossing& c = dense.crossing(cur.crossing);
          if (label[c[cur.slot]] < 0) label[c[cur.slot]] = next_label++;
          const int out = (cur.slot + 2) % 4;
          if (label[c[out]] < 0) label[c[out]] = next_label++;
          cur = follow(ends, dense, {cur.crossing, out});
        } while (!(cur.crossing == start.crossing && cur.slot == start.slot));
        // next component: first half-visited crossing in visit order, entered
        // one slot counterclockwise from where the visited strand came in
        bool found = false;
        for (int ci : visit_seq) {
          const auto& e = entered[ci];
          if (e[0] >= 0 && e[1] >= 0) continue;
          const int known = e[0] >= 0 ? e[0] : e[1];
          start = {ci, (known + 1) % 4};
          found = true;
          break;
        }
        if (!found) break;
      }
      code.clear();
      for (int ci : visit_seq) {
        const Crossing& c = dense.crossing(ci);
        std::array<int, 4> a{label[c[0]], label[c[1]], label[c[2]], label[c[3]]};
        std::array<int, 4> r{a[2], a[3], a[0], a[1]};
        const auto& m = std::min(a, r);
        for (int x : m) code.push_back(static_cast<char>(x));
      }
      if (best.empty() || code < best) best = code;
    }
  }
  best.push_back('|');
  best += std::to_string(d.free_loops());
  return best;
}

std::vector<std::vector<std::size_t>> connected_pieces(const PDDiagram& d) {
  const PDDiagram dense = d.renumbered();
  const std::size_t n = dense.crossing_count();
  UnionFind uf(n);
  const auto ends = dense.arc_ends();
  for (const auto& [a, b] : ends) uf.unite(a.crossing, b.crossing);
  std::vector<std::vector<std::size_t>> pieces;
  std::unordered_map<int, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, inserted] = idx.try_emplace(uf.find(static_cast<int>(i)), pieces.size());
    if (inserted) pieces.emplace_back();
    pieces[it->second].push_back(i);
  }
  return pieces;
}

PDDiagram sub_diagram(const PDDiagram& d, std::span<const std::size_t> crossing_indices) {
  std::vector<Crossing> cs;
  cs.reserve(crossing_indices.size());
  for (std::size_t i : crossing_indices) cs.push_back(d.crossing(i));
  return PDDiagram(std::move(cs), 0).renumbered();
}

}  // namespace qalt
