#include "qalt/poly.hpp"

#include <cctype>
#include <sstream>

#include "qalt/error.hpp"

namespace qalt {

template <class Var>
int Laurent<Var>::low_degree() const {
  if (terms_.empty()) throw InvalidArgument("low_degree of the zero polynomial");
  return terms_.begin()->first;
}

template class Laurent<detail::XVar>;
template class Laurent<detail::SVar>;

BigInt GaussianInt::axis_abs() const {
  if (im == 0) return abs(re);
  if (re == 0) return abs(im);
  throw InternalError("Gaussian integer " + re.get_str() + "+" + im.get_str() +
                      "i is off both axes");
}

namespace {

template <class Poly, class ExpFmt>
std::string render(const Poly& p, std::string_view var, ExpFmt exp_fmt) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = abs(c);
    if (c < 0)
      out << '-';
    else if (!first)
      out << '+';
    first = false;
    if (e == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str();
    out << var;
    std::string ex = exp_fmt(e);
    if (!ex.empty()) out << '^' << ex;
  }
  return out.str();
}

}  // namespace

std::string to_string(const IntLaurent& p, std::string_view var) {
  return render(p, var, [](int e) { return e == 1 ? std::string() : std::to_string(e); });
}

std::string to_string(const HalfLaurent& p, std::string_view var) {
  return render(p, var, [](int e) { return e == 1 ? std::string() : std::to_string(e); });
}

std::string to_string_t(const HalfLaurent& p) {
  return render(p, "t", [](int e) {
    if (e % 2 == 0) return e == 2 ? std::string() : std::to_string(e / 2);
    return "(" + std::to_string(e) + "/2)";
  });
}

IntLaurent parse_int_laurent(std::string_view text, char var) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw ParseError("empty polynomial");

  IntLaurent p;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("polynomial '" + std::string(text) + "': " + why + " at offset " +
                     std::to_string(i));
  };
  auto read_digits = [&]() {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(start, i - start);
  };

  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;

    std::string digits = read_digits();
    BigInt coeff = digits.empty() ? BigInt(1) : BigInt(digits);
    int exponent = 0;
    bool has_var = false;
    if (i < s.size() && s[i] == '*') {
      if (digits.empty()) fail("'*' without coefficient");
      ++i;
      if (i >= s.size() || s[i] != var) fail("expected variable after '*'");
    }
    if (i < s.size() && s[i] == var) {
      has_var = true;
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        int esign = 1;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
          esign = s[i] == '-' ? -1 : 1;
          ++i;
        }
        std::string ed = read_digits();
        if (ed.empty()) fail("missing exponent");
        exponent = esign * std::stoi(ed);
      }
    }
    if (digits.empty() && !has_var) fail("empty term");
    p.add_term(sign * coeff, exponent);
  }
  return p;
}

HalfLaurent from_t(const IntLaurent& p) {
  HalfLaurent r;
  for (const auto& [e, c] : p.terms()) r.add_term(c, 2 * e);
  return r;
}

IntLaurent to_t(const HalfLaurent& p) {
  IntLaurent r;
  for (const auto& [e, c] : p.terms()) {
    if (e % 2 != 0) throw InvalidArgument("odd power of t^(1/2) in " + to_string(p));
    r.add_term(c, e / 2);
  }
  return r;
}

IntLaurent chebyshev_S(int k) {
  if (k < -1) throw InvalidArgument("chebyshev_S requires k >= -1, got " + std::to_string(k));
  IntLaurent prev;      // S_{-1}
  IntLaurent cur(1);    // S_0
  if (k == -1) return prev;
  const IntLaurent x = IntLaurent::var();
  for (int j = 1; j <= k; ++j) {
    IntLaurent next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntLaurent sigma(int n) {
  if (n == 0) return {};
  IntLaurent s = chebyshev_S((n < 0 ? -n : n) - 1);
  return n < 0 ? -s : s;
}

GaussianInt eval_at_s_equals_i(const HalfLaurent& p) {
  GaussianInt z{0, 0};
  for (const auto& [e, c] : p.terms()) {
    switch (((e % 4) + 4) % 4) {
      case 0: z.re += c; break;
      case 1: z.im += c; break;
      case 2: z.re -= c; break;
      case 3: z.im -= c; break;
    }
  }
  return z;
}

Rational breadth_t(const HalfLaurent& p) {
  if (p.is_zero()) throw InvalidArgument("breadth of the zero polynomial");
  Rational r(p.degree() - p.low_degree(), 2);
  r.canonicalize();
  return r;
}

}  // namespace qalt
