#include "qalt/braid3.hpp"

#include <json.hpp>

#include "qalt/error.hpp"

namespace qalt {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

IntLaurent t_pow(int k) { return IntLaurent::var(k); }

// (-s)^e
HalfLaurent minus_s_pow(int e) { return HalfLaurent::monomial(e % 2 == 0 ? 1 : -1, e); }

BurauMatrix generator(int letter) {
  BurauMatrix m;
  const IntLaurent t = t_pow(1);
  if (std::abs(letter) == 1)
    m.e = {-t, IntLaurent(1), IntLaurent(0), IntLaurent(1)};
  else
    m.e = {IntLaurent(1), IntLaurent(0), t, -t};
  return letter > 0 ? m : m.inverse();
}

}  // namespace

void validate(const B3NormalForm& nf) {
  std::visit(overloaded{
                 [](const Family1& f) {
                   if (f.pairs.empty()) throw InvalidArgument("family 1 needs at least one (p,q) pair");
                   for (auto [p, q] : f.pairs)
                     if (p < 1 || q < 1) throw InvalidArgument("family 1 exponents must be positive");
                 },
                 [](const Family2&) {},
                 [](const Family3& f) {
                   if (f.m > -1 || f.m < -3) throw InvalidArgument("family 3 needs m in {-1,-2,-3}");
                 },
             },
             nf);
}

std::string to_json(const B3NormalForm& nf) {
  nlohmann::json j;
  std::visit(overloaded{
                 [&](const Family1& f) {
                   j["family"] = 1;
                   j["n"] = f.n;
                   j["pairs"] = nlohmann::json::array();
                   for (auto [p, q] : f.pairs) j["pairs"].push_back({p, q});
                 },
                 [&](const Family2& f) {
                   j["family"] = 2;
                   j["n"] = f.n;
                   j["m"] = f.m;
                 },
                 [&](const Family3& f) {
                   j["family"] = 3;
                   j["n"] = f.n;
                   j["m"] = f.m;
                 },
             },
             nf);
  return j.dump();
}

B3NormalForm parse_normal_form_json(const std::string& text) {
  B3NormalForm nf;
  try {
    const auto j = nlohmann::json::parse(text);
    const int family = j.at("family").get<int>();
    const int n = j.at("n").get<int>();
    if (family == 1) {
      Family1 f{n, {}};
      for (const auto& pr : j.at("pairs")) {
        if (!pr.is_array() || pr.size() != 2) throw ParseError("each pair must be [p, q]");
        f.pairs.emplace_back(pr[0].get<int>(), pr[1].get<int>());
      }
      nf = f;
    } else if (family == 2) {
      nf = Family2{n, j.at("m").get<int>()};
    } else if (family == 3) {
      nf = Family3{n, j.at("m").get<int>()};
    } else {
      throw ParseError("family must be 1, 2 or 3");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("normal form JSON: ") + e.what());
  }
  validate(nf);
  return nf;
}

BurauMatrix operator*(const BurauMatrix& a, const BurauMatrix& b) {
  BurauMatrix r;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) r.e[2 * i + k] = a.at(i, 0) * b.at(0, k) + a.at(i, 1) * b.at(1, k);
  return r;
}

BurauMatrix BurauMatrix::inverse() const {
  const IntLaurent det = e[0] * e[3] - e[1] * e[2];
  if (det.size() != 1) throw InternalError("Burau determinant is not a monomial");
  const auto& [exp, coeff] = *det.terms().begin();
  if (coeff != 1 && coeff != -1) throw InternalError("Burau determinant is not a unit");
  const IntLaurent inv = IntLaurent::monomial(coeff, -exp);  // 1/(c t^k) = c t^-k for c = +-1
  BurauMatrix r;
  r.e = {e[3] * inv, -e[1] * inv, -e[2] * inv, e[0] * inv};
  return r;
}

void Multigraph::add_edge(int u, int v, int multiplicity) {
  if (u < 0 || v < 0 || u >= vertices || v >= vertices) throw InvalidArgument("edge endpoint out of range");
  if (multiplicity <= 0) return;
  edges[{std::min(u, v), std::max(u, v)}] += multiplicity;
}

int Multigraph::edge_count() const {
  int total = 0;
  for (const auto& [uv, m] : edges) total += m;
  return total;
}

BraidWord to_word(const B3NormalForm& nf) {
  validate(nf);
  BraidWord w;
  w.strands = 3;
  const int n = std::visit([](const auto& f) { return f.n; }, nf);
  for (int k = 0; k < std::abs(n); ++k)
    for (int r = 0; r < 3; ++r) {
      if (n > 0) {
        w.letters.push_back(1);
        w.letters.push_back(2);
      } else {
        w.letters.push_back(-2);
        w.letters.push_back(-1);
      }
    }
  std::visit(overloaded{
                 [&](const Family1& f) {
                   for (auto [p, q] : f.pairs) {
                     w.append_power(1, p);
                     w.append_power(2, -q);
                   }
                 },
                 [&](const Family2& f) { w.append_power(2, f.m); },
                 [&](const Family3& f) {
                   w.append_power(1, f.m);
                   w.append_power(2, -1);
                 },
             },
             nf);
  return w;
}

BurauMatrix burau(const BraidWord& w) {
  if (w.strands != 3) throw InvalidArgument("Burau matrices here are for 3-strand braids");
  w.validate();
  BurauMatrix m;
  for (int l : w.letters) m = m * generator(l);
  return m;
}

HalfLaurent birman_jones(const BraidWord& w) {
  const IntLaurent tr = burau(w).trace();
  const HalfLaurent inner = HalfLaurent::var(2) + HalfLaurent::var(-2) + from_t(tr);
  return minus_s_pow(w.exponent_sum()) * inner;
}

HalfLaurent closed_form_jones(const B3NormalForm& nf) {
  validate(nf);
  const HalfLaurent t_plus = HalfLaurent::var(2) + HalfLaurent::var(-2);
  auto tp = [](int k) { return HalfLaurent::var(2 * k); };
  return std::visit(
      overloaded{
          [](const Family1&) -> HalfLaurent {
            throw InvalidArgument("no closed-form Jones polynomial for family 1");
          },
          [&](const Family2& f) {
            const HalfLaurent last = (f.m % 2 == 0 ? 1 : -1) * tp(3 * f.n + f.m);
            return minus_s_pow(f.m + 6 * f.n) * (t_plus + tp(3 * f.n) + last);
          },
          [&](const Family3& f) {
            const int n = f.n;
            switch (f.m) {
              case -1:  // t^{3n} (-t)^{-1}
                return minus_s_pow(6 * n - 2) * (t_plus - tp(3 * n - 1));
              case -2:
                return minus_s_pow(6 * n - 3) * t_plus;
              default:  // -t^{3n} (-t)^{-2}; the opposite sign disagrees with the trace formula
                return minus_s_pow(6 * n - 4) * (t_plus - tp(3 * n - 2));
            }
          },
      },
      nf);
}

BigInt det_formula(const B3NormalForm& nf) {
  validate(nf);
  return std::visit(
      overloaded{
          [](const Family1& f) {
            const std::size_t s = f.pairs.size();
            // cum[i] = q_1 + ... + q_i
            std::vector<BigInt> cum(s + 1, 0);
            BigInt p = 0;
            for (std::size_t i = 0; i < s; ++i) {
              cum[i + 1] = cum[i] + f.pairs[i].second;
              p += f.pairs[i].first;
            }
            const BigInt q = cum[s];
            BigInt total = p * q;
            // subsets i_1 < ... < i_k with k >= 2 as bitmasks over blocks
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << s); ++mask) {
              if (__builtin_popcountll(mask) < 2) continue;
              std::vector<std::size_t> idx;
              for (std::size_t i = 0; i < s; ++i)
                if (mask >> i & 1U) idx.push_back(i);
              BigInt term = 1;
              for (std::size_t i : idx) term *= f.pairs[i].first;
              for (std::size_t r = 0; r + 1 < idx.size(); ++r) term *= cum[idx[r + 1]] - cum[idx[r]];
              term *= q - (cum[idx.back()] - cum[idx.front()]);
              total += term;
            }
            if (f.n % 2 != 0) total += 4;
            return total;
          },
          [](const Family2& f) { return BigInt(f.n % 2 == 0 ? 0 : 4); },
          [](const Family3& f) {
            if (f.m == -2) return BigInt(2);
            const int e = 3 * f.n + f.m;
            const int sign = e % 2 == 0 ? 1 : -1;
            // m = -3 takes the opposite sign: n = 0 is the trefoil, det 3
            return BigInt(f.m == -1 ? 2 + sign : 2 - sign);
          },
      },
      nf);
}

Multigraph tutte_graph(const std::vector<std::pair<int, int>>& pairs) {
  if (pairs.empty()) throw InvalidArgument("tutte_graph needs at least one pair");
  int q = 0;
  for (auto [pi, qi] : pairs) {
    if (pi < 1 || qi < 1) throw InvalidArgument("tutte_graph pairs must be positive");
    q += qi;
  }
  Multigraph g;
  g.vertices = q + 1;
  for (int j = 0; j < q; ++j) g.add_edge(j, (j + 1) % q);
  int start = 0;
  for (auto [pi, qi] : pairs) {
    g.add_edge(q, (start + q - 1) % q, pi);  // u_start, with u_0 = u_q
    start += qi;
  }
  return g;
}

BigInt spanning_tree_count(const Multigraph& g) {
  if (g.vertices <= 0) return 0;
  const int m = g.vertices - 1;
  if (m == 0) return 1;
  std::vector<std::vector<BigInt>> a(m, std::vector<BigInt>(m, 0));
  for (const auto& [uv, mult] : g.edges) {
    const auto [u, v] = uv;
    if (u == v) continue;
    if (u < m) a[u][u] += mult;
    if (v < m) a[v][v] += mult;
    if (u < m && v < m) {
      a[u][v] -= mult;
      a[v][u] -= mult;
    }
  }
  // Bareiss
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < m; ++k) {
    if (a[k][k] == 0) {
      int r = k + 1;
      while (r < m && a[r][k] == 0) ++r;
      if (r == m) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < m; ++i) {
      for (int j = k + 1; j < m; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  BigInt det = sign * a[m - 1][m - 1];
  return abs(det);
}

bool baldwin_is_qa(const B3NormalForm& nf) {
  validate(nf);
  return std::visit(overloaded{
                        [](const Family1& f) { return f.n >= -1 && f.n <= 1; },
                        [](const Family2& f) {
                          return (f.n == 1 && f.m >= -3 && f.m <= -1) || (f.n == -1 && f.m >= 1 && f.m <= 3);
                        },
                        [](const Family3& f) { return f.n == 0 || f.n == 1; },
                    },
                    nf);
}

int crossing_upper_bound(const B3NormalForm& nf) {
  validate(nf);
  const auto* f = std::get_if<Family1>(&nf);
  if (f == nullptr || f->n < -1 || f->n > 1)
    throw InvalidArgument("crossing bound is available for family 1 with n in {-1,0,1}");
  int p = 0, q = 0;
  for (auto [pi, qi] : f->pairs) {
    p += pi;
    q += qi;
  }
  const std::size_t s = f->pairs.size();
  if (f->n == 0) {
    // alternating closure; a lone s1 or s2^-1 letter is a nugatory crossing
    if (s >= 2) return p + q;
    if (p == 1 && q == 1) return 0;
    if (p == 1) return q;
    if (q == 1) return p;
    return p + q;
  }
  if (s > 1 || (p > 1 && q > 1)) return 4 + p + q;
  if (p == 1 && q > 1) return 3 + q;
  if (p > 1 && q == 1) return p + 4;
  return 5;
}

}  // namespace qalt
