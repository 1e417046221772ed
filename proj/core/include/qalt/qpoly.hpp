#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "qalt/diagram.hpp"
#include "qalt/poly.hpp"

namespace qalt {

// Memo table keyed by canonical diagram codes. Safe for concurrent use; a
// cached value depends only on its key, so results do not depend on which
// thread filled an entry.
class QCache {
 public:
  std::optional<IntLaurent> find(const std::string& key) const;
  void insert(const std::string& key, const IntLaurent& value);
  std::size_t size() const;
  void clear();

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, IntLaurent> table_;
};

struct QOptions {
  // Applied after Reidemeister I/II simplification.
  std::size_t max_crossings = 14;
  // Shared across calls when set; otherwise each call uses a private cache.
  std::shared_ptr<QCache> cache;
};

struct QResult {
  IntLaurent q;
  int diagram_components = 0;
};

// Q of the k-component unlink: (2x^-1 - 1)^(k-1). Requires k >= 1.
IntLaurent unlink_q(int components);

IntLaurent q_polynomial(const PDDiagram& d, const QOptions& options = {});
QResult q_compute(const PDDiagram& d, const QOptions& options = {});
// degree(q_polynomial(d)).
int q_degree(const PDDiagram& d, const QOptions& options = {});

// deg Q(D) <= max(deg Q(D_A), deg Q(D_B)) + 1 at the given crossing.
bool check_degree_drop(const PDDiagram& d, std::size_t crossing_index, const QOptions& options = {});

}  // namespace qalt
