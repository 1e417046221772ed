#include "qalt/jones.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <map>
#include <tuple>
#include <numeric>
#include <thread>

#include "qalt/error.hpp"

namespace qalt {

namespace {

// Slot at which the understrand (resp. overstrand) enters the crossing.
int under_in(bool fwd) { return fwd ? 0 : 2; }
int over_in(bool fwd) { return fwd ? 1 : 3; }

bool is_incoming(const OrientedDiagram& d, ArcEnd e) {
  const std::size_t c = static_cast<std::size_t>(e.crossing);
  if (e.slot % 2 == 0) return e.slot == under_in(d.under_forward(c));
  return e.slot == over_in(d.over_forward(c));
}

void check_bound(std::size_t n, std::size_t max_crossings) {
  if (n > max_crossings)
    throw ResourceLimit("diagram has " + std::to_string(n) + " crossings; bound is " +
                        std::to_string(max_crossings));
}

}  // namespace

OrientedDiagram::OrientedDiagram(PDDiagram base, std::vector<char> under_forward,
                                 std::vector<char> over_forward)
    : base_(base.renumbered()),
      under_forward_(std::move(under_forward)),
      over_forward_(std::move(over_forward)) {
  const std::size_t n = base_.crossing_count();
  if (under_forward_.size() != n || over_forward_.size() != n)
    throw MalformedDiagram("orientation flags do not match crossing count");
  for (const auto& [e1, e2] : base_.arc_ends()) {
    if (is_incoming(*this, e1) == is_incoming(*this, e2))
      throw MalformedDiagram("inconsistent orientation along an arc");
  }
}

int OrientedDiagram::sign(std::size_t i) const {
  const int u = under_in(under_forward(i));
  const int o = over_in(over_forward(i));
  return o == (u + 3) % 4 ? 1 : -1;
}

int OrientedDiagram::writhe() const {
  int w = 0;
  for (std::size_t i = 0; i < base_.crossing_count(); ++i) w += sign(i);
  return w;
}

OrientedDiagram orient(const PDDiagram& d, const std::vector<bool>& reverse) {
  PDDiagram dense = d.renumbered();
  const std::size_t n = dense.crossing_count();
  std::vector<char> uf(n, 0), of(n, 0), seen_under(n, 0), seen_over(n, 0);
  const auto ends = dense.arc_ends();
  std::size_t comp = 0;
  // components passing under somewhere start at slot 0 (incoming
  // understrand); the rest at slot 1
  for (int s0 : {0, 1}) {
    for (std::size_t ci = 0; ci < n; ++ci) {
      if ((s0 == 0 ? seen_under : seen_over)[ci]) continue;
      const bool flip = comp < reverse.size() && reverse[comp];
      ++comp;
      ArcEnd start{static_cast<int>(ci), flip ? s0 + 2 : s0};
      ArcEnd cur = start;
      do {
        const auto c = static_cast<std::size_t>(cur.crossing);
        if (cur.slot % 2 == 0) {
          seen_under[c] = 1;
          uf[c] = cur.slot == 0;
        } else {
          seen_over[c] = 1;
          of[c] = cur.slot == 1;
        }
        cur = follow(ends, dense, {cur.crossing, (cur.slot + 2) % 4});
      } while (cur.crossing != start.crossing || cur.slot != start.slot);
    }
  }
  return OrientedDiagram(std::move(dense), std::move(uf), std::move(of));
}

OrientedDiagram oriented_smooth(const OrientedDiagram& d, std::size_t crossing_index) {
  const SmoothingKind kind = d.sign(crossing_index) > 0 ? SmoothingKind::A : SmoothingKind::B;
  PDDiagram s = smooth(d.base(), crossing_index, kind);
  std::vector<char> uf, of;
  for (std::size_t i = 0; i < d.base().crossing_count(); ++i) {
    if (i == crossing_index) continue;
    uf.push_back(d.under_forward(i));
    of.push_back(d.over_forward(i));
  }
  return OrientedDiagram(std::move(s), std::move(uf), std::move(of));
}

OrientedDiagram oriented_switch(const OrientedDiagram& d, std::size_t crossing_index) {
  PDDiagram s = switch_crossing(d.base(), crossing_index);
  std::vector<char> uf, of;
  for (std::size_t i = 0; i < d.base().crossing_count(); ++i) {
    uf.push_back(d.under_forward(i));
    of.push_back(d.over_forward(i));
  }
  // rotation (a,b,c,d) -> (b,c,d,a): old overstrand b-d becomes slots 0,2
  const bool old_u = uf[crossing_index];
  uf[crossing_index] = of[crossing_index];
  of[crossing_index] = !old_u;
  return OrientedDiagram(std::move(s), std::move(uf), std::move(of));
}

OrientedDiagram oriented_mirror(const OrientedDiagram& d) {
  OrientedDiagram r = d;
  for (std::size_t i = 0; i < d.base().crossing_count(); ++i) r = oriented_switch(r, i);
  return r;
}

HalfLaurent kauffman_bracket_state_sum(const PDDiagram& d, std::size_t max_crossings) {
  const PDDiagram dense = d.renumbered();
  const std::size_t n = dense.crossing_count();
  check_bound(n, std::min<std::size_t>(max_crossings, 40));
  if (n == 0 && dense.free_loops() == 0) throw InvalidArgument("empty diagram");

  // histogram[(#A - #B + n) * (2n+1) + loops] over all states
  const std::size_t width = 2 * n + 2;
  const std::uint64_t states = std::uint64_t{1} << n;
  auto run = [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> hist((2 * n + 1) * width, 0);
    std::vector<int> parent(2 * n);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::uint64_t st = lo; st < hi; ++st) {
      std::iota(parent.begin(), parent.end(), 0);
      int classes = static_cast<int>(2 * n);
      auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          parent[a] = b;
          --classes;
        }
      };
      int a_count = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const Crossing& c = dense.crossing(i);
        if ((st >> i) & 1U) {  // B
          unite(c[0], c[3]);
          unite(c[1], c[2]);
        } else {
          ++a_count;
          unite(c[0], c[1]);
          unite(c[2], c[3]);
        }
      }
      const int diff = 2 * a_count - static_cast<int>(n);
      ++hist[static_cast<std::size_t>(diff + static_cast<int>(n)) * width +
             static_cast<std::size_t>(classes)];
    }
    return hist;
  };

  std::vector<std::uint64_t> hist;
  const unsigned workers = n >= 12 ? std::max(1U, std::thread::hardware_concurrency()) : 1U;
  if (workers <= 1) {
    hist = run(0, states);
  } else {
    std::vector<std::future<std::vector<std::uint64_t>>> parts;
    const std::uint64_t chunk = (states + workers - 1) / workers;
    for (std::uint64_t lo = 0; lo < states; lo += chunk)
      parts.push_back(std::async(std::launch::async, run, lo, std::min(states, lo + chunk)));
    for (auto& f : parts) {
      auto h = f.get();
      if (hist.empty())
        hist = std::move(h);
      else
        for (std::size_t i = 0; i < h.size(); ++i) hist[i] += h[i];
    }
  }

  const HalfLaurent delta = -HalfLaurent::var(2) - HalfLaurent::var(-2);
  std::vector<HalfLaurent> delta_pow{HalfLaurent(1)};
  HalfLaurent result;
  for (std::size_t di = 0; di <= 2 * n; ++di)
    for (std::size_t loops = 0; loops < width; ++loops) {
      const std::uint64_t count = hist[di * width + loops];
      if (count == 0) continue;
      const std::size_t total_loops = loops + static_cast<std::size_t>(dense.free_loops());
      while (delta_pow.size() < total_loops) delta_pow.push_back(delta_pow.back() * delta);
      const int a_exp = static_cast<int>(di) - static_cast<int>(n);
      BigInt c;
      mpz_import(c.get_mpz_t(), 1, 1, sizeof(count), 0, 0, &count);
      result += delta_pow[total_loops - 1].shifted(a_exp) * HalfLaurent(c);
    }
  return result;
}

namespace {

// Open arc ends of a partially processed diagram, paired by the strands
// already drawn. Sorted (label, partner) pairs, plus whether a loop has
// closed yet (the first closed loop is not weighted).
struct Frontier {
  std::vector<std::pair<int, int>> pairs;
  bool closed_one = false;
  friend bool operator<(const Frontier& a, const Frontier& b) {
    return std::tie(a.closed_one, a.pairs) < std::tie(b.closed_one, b.pairs);
  }
};

// Crossing order keeping the frontier small: greedily take the crossing
// with the most arcs already open.
std::vector<std::size_t> sweep_order(const PDDiagram& dense) {
  const std::size_t n = dense.crossing_count();
  std::vector<char> done(n, 0), open(2 * n, 0);
  std::vector<std::size_t> order;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    int best_score = -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      int score = 0;
      for (int s = 0; s < 4; ++s) score += open[dense.crossing(i)[s]];
      if (score > best_score) {
        best_score = score;
        best = i;
      }
    }
    done[best] = 1;
    order.push_back(best);
    for (int s = 0; s < 4; ++s) open[dense.crossing(best)[s]] ^= 1;
  }
  return order;
}

}  // namespace

HalfLaurent kauffman_bracket(const PDDiagram& d, std::size_t max_crossings) {
  const PDDiagram dense = d.renumbered();
  const std::size_t n = dense.crossing_count();
  check_bound(n, max_crossings);
  if (n == 0 && dense.free_loops() == 0) throw InvalidArgument("empty diagram");
  const HalfLaurent delta = -HalfLaurent::var(2) - HalfLaurent::var(-2);

  std::map<Frontier, HalfLaurent> states;
  states.emplace(Frontier{}, HalfLaurent(1));
  for (std::size_t ci : sweep_order(dense)) {
    const Crossing& c = dense.crossing(ci);
    std::map<Frontier, HalfLaurent> next;
    for (const auto& [f, value] : states) {
      for (SmoothingKind kind : {SmoothingKind::A, SmoothingKind::B}) {
        std::map<int, int> partner(f.pairs.begin(), f.pairs.end());
        bool closed_one = f.closed_one;
        int loops = 0;
        auto add_segment = [&](int x, int y) {
          if (x == y) {
            ++loops;
            return;
          }
          auto ix = partner.find(x), iy = partner.find(y);
          if (ix == partner.end() && iy == partner.end()) {
            partner[x] = y;
            partner[y] = x;
          } else if (ix != partner.end() && iy != partner.end()) {
            if (ix->second == y) {
              partner.erase(ix);
              partner.erase(y);
              ++loops;
            } else {
              const int px = ix->second, py = iy->second;
              partner.erase(x);
              partner.erase(y);
              partner[px] = py;
              partner[py] = px;
            }
          } else {
            if (ix == partner.end()) std::swap(x, y);
            const int px = partner[x];
            partner.erase(x);
            partner[px] = y;
            partner[y] = px;
          }
        };
        if (kind == SmoothingKind::A) {
          add_segment(c[0], c[1]);
          add_segment(c[2], c[3]);
        } else {
          add_segment(c[0], c[3]);
          add_segment(c[1], c[2]);
        }
        HalfLaurent w = value.shifted(kind == SmoothingKind::A ? 1 : -1);
        if (loops > 0 && !closed_one) {
          closed_one = true;
          --loops;
        }
        for (int l = 0; l < loops; ++l) w *= delta;
        Frontier nf{{partner.begin(), partner.end()}, closed_one};
        next[nf] += w;
      }
    }
    states = std::move(next);
  }
  HalfLaurent result;
  for (const auto& [f, value] : states) {
    if (!f.pairs.empty()) throw InternalError("open arcs after processing every crossing");
    if (n > 0 && !f.closed_one) throw InternalError("state without a closed loop");
    result += value;
  }
  int extra = dense.free_loops() - (n == 0 ? 1 : 0);
  for (int l = 0; l < extra; ++l) result *= delta;
  return result;
}

HalfLaurent jones_polynomial(const OrientedDiagram& d, std::size_t max_crossings) {
  const HalfLaurent bracket = kauffman_bracket(d.base(), max_crossings);
  const int w = d.writhe();
  // (-A^3)^(-w) = (-1)^w A^(-3w)
  HalfLaurent f = bracket.shifted(-3 * w);
  if (w % 2 != 0) f = -f;
  HalfLaurent v;
  for (const auto& [e, c] : f.terms()) {
    if (e % 2 != 0) throw InternalError("odd power of A in normalized bracket");
    v.add_term(c, -e / 2);  // A = s^(-1/2)
  }
  return v;
}

HalfLaurent jones_polynomial(const PDDiagram& d, std::size_t max_crossings) {
  return jones_polynomial(orient(d), max_crossings);
}

BigInt determinant(const PDDiagram& d, std::size_t max_crossings) {
  const PDDiagram s = simplify(d);
  check_bound(s.crossing_count(), max_crossings);
  return eval_at_s_equals_i(jones_polynomial(s, max_crossings)).axis_abs();
}

Rational breadth(const PDDiagram& d, std::size_t max_crossings) {
  const PDDiagram s = simplify(d);
  check_bound(s.crossing_count(), max_crossings);
  const HalfLaurent v = jones_polynomial(s, max_crossings);
  if (v.is_zero()) throw InternalError("zero Jones polynomial");
  return breadth_t(v);
}

ObstructionResult obstruction_check(const PDDiagram& d, const QOptions& options,
                                    std::size_t max_jones_crossings) {
  ObstructionResult r;
  r.evidence.deg_q = q_degree(d, options);
  const PDDiagram s = simplify(d);
  check_bound(s.crossing_count(), max_jones_crossings);
  const HalfLaurent v = jones_polynomial(s, max_jones_crossings);
  r.evidence.det = eval_at_s_equals_i(v).axis_abs();
  r.evidence.breadth = breadth_t(v);
  r.verdict = r.evidence.det <= r.evidence.deg_q ? Verdict::NotQuasiAlternating : Verdict::Inconclusive;
  return r;
}

}  // namespace qalt
