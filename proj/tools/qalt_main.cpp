// qalt: command-line front end for the invariant toolkit.
//
// Exit codes: 0 success (including inconclusive verdicts), 1 verification
// mismatch, 2 input error, 3 resource bound exceeded.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "qalt/braid3.hpp"
#include "qalt/catalog.hpp"
#include "qalt/diagram.hpp"
#include "qalt/error.hpp"
#include "qalt/jones.hpp"
#include "qalt/kanenobu.hpp"
#include "qalt/montesinos.hpp"
#include "qalt/qpoly.hpp"

namespace {

using nlohmann::json;
using namespace qalt;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;
constexpr int kResourceError = 3;

struct Globals {
  std::size_t max_crossings = 14;
  bool json = false;
};

// --pd accepts the code itself or a path to a file holding it.
PDDiagram load_pd(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_pd(buf.str());
  }
  return parse_pd(arg);
}

std::string rat(const Rational& r) { return r.get_str(); }

void emit(const Globals& g, const json& j, const std::string& text) {
  if (g.json)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

int cmd_q(const Globals& g, const std::string& pd) {
  const PDDiagram d = load_pd(pd);
  QOptions o;
  o.max_crossings = g.max_crossings;
  const QResult r = q_compute(d, o);
  std::ostringstream t;
  t << "Q = " << to_string(r.q) << "\ndeg Q = " << r.q.degree() << "\ncomponents = "
    << r.diagram_components << '\n';
  emit(g, {{"q", to_string(r.q)}, {"deg_q", r.q.degree()}, {"components", r.diagram_components}},
       t.str());
  return kOk;
}

int cmd_jones(const Globals& g, const std::string& pd) {
  const OrientedDiagram od = orient(load_pd(pd));
  const std::size_t bound = std::max<std::size_t>(g.max_crossings, 16);
  const HalfLaurent v = jones_polynomial(od, bound);
  std::ostringstream t;
  t << "V = " << to_string_t(v) << "\nwrithe = " << od.writhe() << '\n';
  emit(g, {{"jones_t", to_string_t(v)}, {"jones_s", to_string(v, "s")}, {"writhe", od.writhe()}},
       t.str());
  return kOk;
}

int cmd_det(const Globals& g, const std::string& pd) {
  const BigInt det = determinant(load_pd(pd), std::max<std::size_t>(g.max_crossings, 16));
  emit(g, {{"det", det.get_str()}}, "det = " + det.get_str() + "\n");
  return kOk;
}

int cmd_check(const Globals& g, const std::string& pd) {
  QOptions o;
  o.max_crossings = g.max_crossings;
  const ObstructionResult r =
      obstruction_check(load_pd(pd), o, std::max<std::size_t>(g.max_crossings, 16));
  std::ostringstream t;
  t << "verdict: " << to_string(r.verdict) << "\ndeg Q = " << r.evidence.deg_q
    << "\ndet = " << r.evidence.det.get_str() << "\nbreadth V = " << rat(r.evidence.breadth)
    << " (informational)\n";
  emit(g,
       {{"verdict", std::string(to_string(r.verdict))},
        {"deg_q", r.evidence.deg_q},
        {"det", r.evidence.det.get_str()},
        {"breadth", rat(r.evidence.breadth)}},
       t.str());
  return kOk;
}

int cmd_table(const Globals& g, const std::string& path) {
  const auto entries = load_catalog(path);
  VerifyOptions o;
  o.max_crossings = g.max_crossings;
  o.max_jones_crossings = std::max<std::size_t>(g.max_crossings, 16);
  const TableReport rep = verify_table(entries, o);
  std::cout << (g.json ? report_to_json(rep) + "\n" : render_table(rep));
  if (rep.input_errors) return kInputError;
  if (rep.resource_errors) return kResourceError;
  return rep.mismatched ? kMismatch : kOk;
}

int cmd_kanenobu(const Globals& g, bool scan, std::optional<int> p, std::optional<int> q) {
  if (scan) {
    const auto s = qa_candidate_scan();
    json list = json::array();
    for (auto [a, b] : s) list.push_back({a, b});
    if (g.json) {
      std::cout << json{{"det", kKanenobuDet}, {"count", s.size()}, {"candidates", list}}.dump()
                << '\n';
    } else {
      std::cout << list.dump() << '\n';
    }
    return kOk;
  }
  if (!p || !q) throw InvalidArgument("kanenobu needs --scan or both -p and -q");
  const IntLaurent qq = kanenobu_q(*p, *q);
  const int deg = qq.degree();
  const Verdict v = deg >= kKanenobuDet ? Verdict::NotQuasiAlternating : Verdict::Inconclusive;
  std::ostringstream t;
  t << "Q = " << to_string(qq) << "\ndeg Q = " << deg << " (formula " << kanenobu_degree(*p, *q)
    << ")\ndet = 25\nverdict: " << to_string(v) << '\n';
  emit(g,
       {{"p", *p},
        {"q", *q},
        {"q_polynomial", to_string(qq)},
        {"deg_q", deg},
        {"deg_formula", kanenobu_degree(*p, *q)},
        {"det", kKanenobuDet},
        {"verdict", std::string(to_string(v))}},
       t.str());
  return deg == kanenobu_degree(*p, *q) ? kOk : kMismatch;
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
  // "1,1;2,3" or "1:1,2:3"
  std::vector<std::pair<int, int>> out;
  std::string norm = text;
  for (char& c : norm)
    if (c == ':') c = '#';
  const bool colon = norm.find('#') != std::string::npos;
  std::stringstream ss(norm);
  std::string item;
  const char outer = colon ? ',' : ';';
  const char inner = colon ? '#' : ',';
  while (std::getline(ss, item, outer)) {
    const auto pos = item.find(inner);
    if (pos == std::string::npos) throw ParseError("bad pair '" + item + "'");
    try {
      out.emplace_back(std::stoi(item.substr(0, pos)), std::stoi(item.substr(pos + 1)));
    } catch (const std::logic_error&) {
      throw ParseError("bad pair '" + item + "'");
    }
  }
  return out;
}

int cmd_braid3(const Globals& g, int family, int n, const std::string& pairs, std::optional<int> m) {
  B3NormalForm nf;
  if (family == 1) {
    if (pairs.empty()) throw InvalidArgument("family 1 needs --pairs");
    nf = Family1{n, parse_pairs(pairs)};
  } else if (family == 2 || family == 3) {
    if (!m) throw InvalidArgument("families 2 and 3 need --m");
    if (family == 2)
      nf = Family2{n, *m};
    else
      nf = Family3{n, *m};
  } else {
    throw InvalidArgument("--family must be 1, 2 or 3");
  }
  validate(nf);
  const BraidWord w = to_word(nf);
  const HalfLaurent v = birman_jones(w);
  const BigInt det_f = det_formula(nf);
  const BigInt det_b = eval_at_s_equals_i(v).axis_abs();
  const bool qa = baldwin_is_qa(nf);
  json j{{"normal_form", json::parse(to_json(nf))},
         {"word", to_string(w)},
         {"jones_t", to_string_t(v)},
         {"det_formula", det_f.get_str()},
         {"det_trace", det_b.get_str()},
         {"quasi_alternating", qa}};
  std::ostringstream t;
  t << "word: " << to_string(w) << "\nV = " << to_string_t(v) << "\ndet (formula) = " << det_f
    << "\ndet (trace)   = " << det_b << "\nquasi-alternating (classification): "
    << (qa ? "yes" : "no") << '\n';
  if (const auto* f1 = std::get_if<Family1>(&nf); f1 && f1->n >= -1 && f1->n <= 1) {
    const int c = crossing_upper_bound(nf);
    j["crossing_upper_bound"] = c;
    t << "crossing number <= " << c << '\n';
  }
  emit(g, j, t.str());
  return det_f == det_b ? kOk : kMismatch;
}

int cmd_montesinos(const Globals& g, long e, const std::string& tangles, const std::string& final_t) {
  MontesinosPresentation m;
  m.e = e;
  std::stringstream ss(tangles);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) m.tangles.push_back(parse_tangle(item));
  m.final_tangle = parse_tangle(final_t);
  validate(m);
  const long c = montesinos_crossing_number(m);
  json j{{"crossing_number", c}, {"predicted_deg_q", c - 2}, {"standard_form", standard_form_check(m)}};
  std::ostringstream t;
  t << "c(D) = " << c << "\npredicted deg Q = c - 2 = " << c - 2
    << "\nstandard form: " << (standard_form_check(m) ? "yes" : "no") << '\n';
  if (e == 1) {
    const BigInt det = montesinos_det(m);
    j["det"] = det.get_str();
    t << "det = " << det << '\n';
    Rational sum = 0;
    for (const auto& tg : m.tangles) sum += Rational(tg.beta, tg.alpha);
    const Tangle& f = m.final_tangle;
    if (sum == 1 && f.beta > 0) {
      const auto r = twist_family_obstruction(m.tangles, f.beta, f.alpha % f.beta, f.alpha / f.beta);
      j["verdict"] = std::string(to_string(r.verdict));
      j["threshold_k"] = r.threshold_k;
      t << "verdict: " << to_string(r.verdict) << " (NotQuasiAlternating for all k >= "
        << r.threshold_k << ")\n";
    }
  }
  emit(g, j, t.str());
  return kOk;
}

int cmd_pretzel(const Globals& g, const std::string& family, long r, bool pipeline) {
  PretzelFamily f;
  if (family == "A")
    f = PretzelFamily::A;
  else if (family == "B")
    f = PretzelFamily::B;
  else if (family == "C")
    f = PretzelFamily::C;
  else
    throw InvalidArgument("--family must be A, B or C");
  const PretzelReport rep = pretzel_family_report(f, r);
  std::string twists;
  for (int x : rep.twists) twists += (twists.empty() ? "" : ",") + std::to_string(x);
  json j{{"twists", rep.twists},
         {"deg_q", rep.deg_q},
         {"det", rep.det.get_str()},
         {"deg_below_det", rep.deg_below_det}};
  std::ostringstream t;
  t << "P(" << twists << "): deg Q = " << rep.deg_q << ", det = " << rep.det
    << ", deg Q < det: " << (rep.deg_below_det ? "yes" : "no") << '\n';
  int code = kOk;
  if (pipeline) {
    const PDDiagram d = generate_pretzel(rep.twists);
    QOptions o;
    o.max_crossings = g.max_crossings;
    const int deg = q_degree(d, o);
    const BigInt det = determinant(d, 64);
    j["pipeline"] = {{"deg_q", deg}, {"det", det.get_str()}};
    t << "diagram pipeline: deg Q = " << deg << ", det = " << det << '\n';
    if (deg != rep.deg_q || det != rep.det) code = kMismatch;
  }
  emit(g, j, t.str());
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qalt: Q-polynomial, Jones polynomial and determinant obstructions to quasi-alternating links"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--max-crossings", g.max_crossings, "Crossing bound for the Q recursion")
      ->capture_default_str();
  app.add_flag("--json", g.json, "Emit JSON");

  std::string pd;
  auto add_pd = [&](CLI::App* sub) { sub->add_option("--pd", pd, "PD code or file")->required(); };
  auto* q = app.add_subcommand("q", "Q-polynomial of a diagram");
  add_pd(q);
  auto* jn = app.add_subcommand("jones", "Jones polynomial via the Kauffman bracket");
  add_pd(jn);
  auto* dt = app.add_subcommand("det", "Link determinant |V(-1)|");
  add_pd(dt);
  auto* ck = app.add_subcommand("check", "deg Q < det obstruction");
  add_pd(ck);

  std::string catalog;
  auto* tb = app.add_subcommand("table", "Verify a catalog of expected (det, deg Q)");
  tb->add_option("--catalog", catalog, "CSV or JSON catalog")->required();
  tb->add_flag("--json", g.json, "Emit JSON");

  bool scan = false;
  std::optional<int> kp, kq;
  auto* kn = app.add_subcommand("kanenobu", "Kanenobu knots K(p,q)");
  kn->add_flag("--scan", scan, "List (p,q) passing deg Q < 25");
  kn->add_option("-p", kp, "p");
  kn->add_option("-q", kq, "q");

  int family = 0, bn = 0;
  std::string pairs;
  std::optional<int> bm;
  auto* b3 = app.add_subcommand("braid3", "Closed 3-braid normal forms");
  b3->add_option("--family", family, "1, 2 or 3")->required();
  b3->add_option("--n", bn, "Power of the full twist")->required();
  b3->add_option("--pairs", pairs, "Family 1 exponents, e.g. \"1,1;2,3\"");
  b3->add_option("--m", bm, "Families 2 and 3");

  long me = 0;
  std::string mt, mf;
  auto* mo = app.add_subcommand("montesinos", "Montesinos link formulas");
  mo->add_option("--e", me, "e")->required();
  mo->add_option("--tangles", mt, "Comma-separated a/b tangles")->required();
  mo->add_option("--final", mf, "Final tangle a/b")->required();

  std::string pf;
  long pr = 0;
  bool pipeline = false;
  auto* pz = app.add_subcommand("pretzel", "Pretzel families A, B, C");
  pz->add_option("--family", pf, "A, B or C")->required();
  pz->add_option("--r,--n", pr, "Family parameter")->required();
  pz->add_flag("--pipeline", pipeline, "Also compute from the generated diagram");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*q) return cmd_q(g, pd);
    if (*jn) return cmd_jones(g, pd);
    if (*dt) return cmd_det(g, pd);
    if (*ck) return cmd_check(g, pd);
    if (*tb) return cmd_table(g, catalog);
    if (*kn) return cmd_kanenobu(g, scan, kp, kq);
    if (*b3) return cmd_braid3(g, family, bn, pairs, bm);
    if (*mo) return cmd_montesinos(g, me, mt, mf);
    if (*pz) return cmd_pretzel(g, pf, pr, pipeline);
  } catch (const ResourceLimit& e) {
    std::cerr << "resource bound exceeded: " << e.what() << '\n';
    return kResourceError;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kMismatch;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
