#include "qalt/qpoly.hpp"

#include <algorithm>
#include <numeric>

#include "qalt/error.hpp"

namespace qalt {

std::optional<IntLaurent> QCache::find(const std::string& key) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void QCache::insert(const std::string& key, const IntLaurent& value) {
  std::unique_lock lock(mutex_);
  table_.try_emplace(key, value);
}

std::size_t QCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

void QCache::clear() {
  std::unique_lock lock(mutex_);
  table_.clear();
}

IntLaurent unlink_q(int components) {
  if (components < 1) throw InvalidArgument("unlink needs at least one component");
  const IntLaurent mu = IntLaurent::monomial(2, -1) - IntLaurent(1);
  return mu.pow(static_cast<unsigned>(components - 1));
}

namespace {

const IntLaurent& mu() {
  static const IntLaurent m = IntLaurent::monomial(2, -1) - IntLaurent(1);
  return m;
}

// Traversal of one component: the sequence of (crossing, entering slot).
using Walk = std::vector<ArcEnd>;

// Components of a connected dense diagram as traversal walks.
std::vector<Walk> component_walks(const PDDiagram& d,
                                  const std::vector<std::pair<ArcEnd, ArcEnd>>& ends) {
  const std::size_t n = d.crossing_count();
  std::vector<char> seen_under(n, 0), seen_over(n, 0);
  std::vector<Walk> walks;
  for (std::size_t ci = 0; ci < n; ++ci)
    for (int s0 : {0, 1}) {
      if ((s0 == 0 ? seen_under : seen_over)[ci]) continue;
      Walk w;
      ArcEnd start{static_cast<int>(ci), s0}, cur = start;
      do {
        (cur.slot % 2 == 0 ? seen_under : seen_over)[cur.crossing] = 1;
        w.push_back(cur);
        cur = follow(ends, d, {cur.crossing, (cur.slot + 2) % 4});
      } while (cur.crossing != start.crossing || cur.slot != start.slot);
      walks.push_back(std::move(w));
    }
  return walks;
}

// Reorders a walk to begin at position `start`, optionally reversed.
Walk rebased(const Walk& w, std::size_t start, bool reversed) {
  const std::size_t m = w.size();
  Walk out;
  out.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    if (!reversed) {
      out.push_back(w[(start + k) % m]);
    } else {
      const ArcEnd e = w[(start + m - k) % m];
      out.push_back({e.crossing, (e.slot + 2) % 4});
    }
  }
  return out;
}

// Crossings met first on the understrand while walking the components in
// order; switching them all makes the diagram descending. The basepoint and
// direction of each component and the component order are chosen to keep
// this list short.
std::vector<std::size_t> bad_crossings(const PDDiagram& d) {
  const auto ends = d.arc_ends();
  std::vector<Walk> walks = component_walks(d, ends);
  const std::size_t n = d.crossing_count();
  const std::size_t k = walks.size();

  // component of each strand
  std::vector<int> comp_under(n, -1), comp_over(n, -1);
  for (std::size_t c = 0; c < k; ++c)
    for (const ArcEnd& e : walks[c])
      (e.slot % 2 == 0 ? comp_under : comp_over)[e.crossing] = static_cast<int>(c);

  // best basepoint per component for its self-crossings
  std::vector<char> first_seen(n);
  for (std::size_t c = 0; c < k; ++c) {
    const Walk& w = walks[c];
    std::size_t best_bad = SIZE_MAX;
    Walk best;
    for (bool rev : {false, true})
      for (std::size_t st = 0; st < w.size(); ++st) {
        Walk cand = rebased(w, st, rev);
        std::fill(first_seen.begin(), first_seen.end(), 0);
        std::size_t bad = 0;
        for (const ArcEnd& e : cand) {
          if (comp_under[e.crossing] != comp_over[e.crossing]) continue;
          if (!first_seen[e.crossing]) {
            first_seen[e.crossing] = 1;
            if (e.slot % 2 == 0) ++bad;
          }
        }
        if (bad < best_bad) {
          best_bad = bad;
          best = std::move(cand);
        }
      }
    walks[c] = std::move(best);
  }

  // under[i][j]: crossings where component i passes under component j
  std::vector<std::vector<int>> under(k, std::vector<int>(k, 0));
  for (std::size_t i = 0; i < n; ++i)
    if (comp_under[i] != comp_over[i]) ++under[comp_under[i]][comp_over[i]];

  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  auto cost = [&](const std::vector<std::size_t>& ord) {
    int total = 0;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b) total += under[ord[a]][ord[b]];
    return total;
  };
  if (k <= 7) {
    std::vector<std::size_t> best = order;
    int best_cost = cost(order);
    while (std::next_permutation(order.begin(), order.end())) {
      const int c = cost(order);
      if (c < best_cost) {
        best_cost = c;
        best = order;
      }
    }
    order = best;
  } else {
    // greedy: repeatedly take the component that lies under the fewest others left
    std::vector<std::size_t> left = order, chosen;
    while (!left.empty()) {
      auto it = std::min_element(left.begin(), left.end(), [&](std::size_t a, std::size_t b) {
        int ca = 0, cb = 0;
        for (std::size_t o : left) {
          ca += under[a][o];
          cb += under[b][o];
        }
        return ca < cb;
      });
      chosen.push_back(*it);
      left.erase(it);
    }
    order = chosen;
  }

  std::vector<std::size_t> bad;
  std::fill(first_seen.begin(), first_seen.end(), 0);
  for (std::size_t c : order)
    for (const ArcEnd& e : walks[c]) {
      if (first_seen[e.crossing]) continue;
      first_seen[e.crossing] = 1;
      if (e.slot % 2 == 0) bad.push_back(static_cast<std::size_t>(e.crossing));
    }
  return bad;
}

class QEngine {
 public:
  QEngine(std::size_t max_crossings, QCache& cache) : max_(max_crossings), cache_(cache) {}

  IntLaurent eval(const PDDiagram& input) {
    const PDDiagram d = simplify(input);
    if (d.crossing_count() > max_)
      throw ResourceLimit("diagram has " + std::to_string(d.crossing_count()) +
                          " crossings after simplification; bound is " + std::to_string(max_));
    if (d.crossing_count() == 0) return unlink_q(d.free_loops());

    const auto pieces = connected_pieces(d);
    if (pieces.size() > 1 || d.free_loops() > 0) {
      IntLaurent r = mu().pow(static_cast<unsigned>(pieces.size() + d.free_loops() - 1));
      for (const auto& p : pieces) r *= eval(sub_diagram(d, p));
      return r;
    }

    const std::string key = canonical_code(d);
    if (auto hit = cache_.find(key)) return *hit;
    IntLaurent r = expand(d);
    cache_.insert(key, r);
    return r;
  }

 private:
  // Connected diagram without free loops.
  IntLaurent expand(const PDDiagram& d) {
    const std::vector<std::size_t> bad = bad_crossings(d);
    const IntLaurent x = IntLaurent::var();
    IntLaurent sum;
    PDDiagram cur = d;
    for (std::size_t j = 0; j < bad.size(); ++j) {
      const std::size_t c = bad[j];
      IntLaurent term = eval(smooth(cur, c, SmoothingKind::A)) + eval(smooth(cur, c, SmoothingKind::B));
      if (j % 2 == 0)
        sum += term;
      else
        sum -= term;
      cur = switch_crossing(cur, c);
    }
    sum *= x;
    IntLaurent base = unlink_q(num_components(d));
    if (bad.size() % 2 == 0)
      sum += base;
    else
      sum -= base;
    return sum;
  }

  std::size_t max_;
  QCache& cache_;
};

}  // namespace

IntLaurent q_polynomial(const PDDiagram& d, const QOptions& options) {
  if (d.crossing_count() == 0 && d.free_loops() == 0) throw InvalidArgument("empty diagram");
  QCache local;
  QCache& cache = options.cache ? *options.cache : local;
  QEngine engine(options.max_crossings, cache);
  return engine.eval(d);
}

QResult q_compute(const PDDiagram& d, const QOptions& options) {
  return QResult{q_polynomial(d, options), num_components(d)};
}

int q_degree(const PDDiagram& d, const QOptions& options) { return q_polynomial(d, options).degree(); }

bool check_degree_drop(const PDDiagram& d, std::size_t crossing_index, const QOptions& options) {
  if (d.crossing_count() == 0) throw InvalidArgument("diagram has no crossings");
  if (crossing_index >= d.crossing_count())
    throw InvalidArgument("crossing index " + std::to_string(crossing_index) + " out of range");
  QOptions opts = options;
  if (!opts.cache) opts.cache = std::make_shared<QCache>();
  const int deg = q_degree(d, opts);
  const int da = q_degree(smooth(d, crossing_index, SmoothingKind::A), opts);
  const int db = q_degree(smooth(d, crossing_index, SmoothingKind::B), opts);
  return deg <= std::max(da, db) + 1;
}

}  // namespace qalt
