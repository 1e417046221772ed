#include "qalt/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <boost/tokenizer.hpp>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "qalt/error.hpp"
#include "qalt/jones.hpp"
#include "qalt/qpoly.hpp"

namespace qalt {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::optional<long> parse_optional_int(const std::string& cell, const std::string& where) {
  const std::string t = trim(cell);
  if (t.empty()) return std::nullopt;
  try {
    std::size_t pos = 0;
    const long v = std::stol(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::logic_error&) {
    throw ParseError(where + ": '" + t + "' is not an integer");
  }
}

void finish_entry(CatalogEntry& e, std::unordered_set<std::string>& names, const std::string& where) {
  if (e.name.empty()) throw ParseError(where + ": empty name");
  if (!names.insert(e.name).second) throw ParseError(where + ": duplicate name '" + e.name + "'");
  try {
    e.diagram = parse_pd(e.pd);
  } catch (const Error& err) {
    throw ParseError(where + " (" + e.name + "): " + err.what());
  }
}

std::string rational_str(const Rational& r) { return r.get_str(); }

}  // namespace

std::vector<CatalogEntry> parse_catalog_csv(const std::string& text) {
  using Tok = boost::tokenizer<boost::escaped_list_separator<char>>;
  std::vector<CatalogEntry> out;
  std::unordered_set<std::string> names;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool header_seen = false;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const std::string where = "line " + std::to_string(lineno);
    std::vector<std::string> cells;
    try {
      Tok tok(line, boost::escaped_list_separator<char>('\\', ',', '"'));
      for (const auto& c : tok) cells.push_back(trim(c));
    } catch (const boost::escaped_list_error& e) {
      throw ParseError(where + ": " + e.what());
    }
    if (!header_seen) {
      const std::vector<std::string> want{"name", "pd", "expected_det", "expected_deg_q"};
      if (cells != want)
        throw ParseError(where + ": header must be name,pd,expected_det,expected_deg_q");
      header_seen = true;
      continue;
    }
    if (cells.size() < 2 || cells.size() > 4)
      throw ParseError(where + ": expected 2 to 4 fields, found " + std::to_string(cells.size()));
    cells.resize(4);
    CatalogEntry e;
    e.name = cells[0];
    e.pd = cells[1];
    e.expected_det = parse_optional_int(cells[2], where);
    e.expected_deg_q = parse_optional_int(cells[3], where);
    e.line = lineno;
    finish_entry(e, names, where);
    out.push_back(std::move(e));
  }
  if (!header_seen && lineno > 0 && !out.empty()) throw ParseError("missing header");
  return out;
}

std::vector<CatalogEntry> parse_catalog_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("catalog JSON: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("catalog JSON must be an array of objects");
  std::vector<CatalogEntry> out;
  std::unordered_set<std::string> names;
  int index = 0;
  for (const auto& item : j) {
    ++index;
    const std::string where = "entry " + std::to_string(index);
    try {
      if (!item.is_object()) throw ParseError(where + ": not an object");
      CatalogEntry e;
      e.name = item.at("name").get<std::string>();
      const auto& pd = item.at("pd");
      e.pd = pd.is_string() ? pd.get<std::string>() : pd.dump();
      for (auto [key, slot] : {std::pair{"expected_det", &e.expected_det},
                               std::pair{"expected_deg_q", &e.expected_deg_q}}) {
        if (item.contains(key) && !item.at(key).is_null()) *slot = item.at(key).get<long>();
      }
      e.line = index;
      finish_entry(e, names, where);
      out.push_back(std::move(e));
    } catch (const json::exception& ex) {
      throw ParseError(where + ": " + ex.what());
    }
  }
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open catalog '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (path.extension() == ".json" || (first != std::string::npos && text[first] == '['))
    return parse_catalog_json(text);
  return parse_catalog_csv(text);
}

namespace {

ReportRow compute_row(const CatalogEntry& e, const VerifyOptions& opt,
                      const std::shared_ptr<QCache>& cache) {
  ReportRow row;
  row.name = e.name;
  try {
    QOptions qo;
    qo.max_crossings = opt.max_crossings;
    qo.cache = cache;
    const ObstructionResult r = obstruction_check(e.diagram, qo, opt.max_jones_crossings);
    row.computed_det = r.evidence.det;
    row.computed_deg_q = r.evidence.deg_q;
    row.breadth = r.evidence.breadth;
    row.verdict = r.verdict;
    if (e.expected_det && BigInt(*e.expected_det) != r.evidence.det)
      row.mismatches.push_back("det: expected " + std::to_string(*e.expected_det) + ", computed " +
                               r.evidence.det.get_str());
    if (e.expected_deg_q && *e.expected_deg_q != r.evidence.deg_q)
      row.mismatches.push_back("deg_q: expected " + std::to_string(*e.expected_deg_q) +
                               ", computed " + std::to_string(r.evidence.deg_q));
  } catch (const ResourceLimit& ex) {
    row.status = RowStatus::ResourceError;
    row.error = ex.what();
  } catch (const Error& ex) {
    row.status = RowStatus::InputError;
    row.error = ex.what();
  }
  return row;
}

}  // namespace

TableReport verify_table(const std::vector<CatalogEntry>& entries, const VerifyOptions& options) {
  TableReport rep;
  rep.rows.resize(entries.size());
  auto cache = std::make_shared<QCache>();
  unsigned workers = options.threads ? options.threads : std::thread::hardware_concurrency();
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(entries.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++)
      rep.rows[i] = compute_row(entries[i], options, cache);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& r : rep.rows) {
    if (!r.mismatches.empty()) ++rep.mismatched;
    if (r.status == RowStatus::InputError) ++rep.input_errors;
    if (r.status == RowStatus::ResourceError) ++rep.resource_errors;
  }
  return rep;
}

TableReport report_obstructions(const std::vector<CatalogEntry>& entries,
                                const VerifyOptions& options) {
  return verify_table(entries, options);
}

std::string render_table(const TableReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(14) << "name" << std::right << std::setw(6) << "det" << std::setw(7)
      << "degQ" << std::setw(9) << "breadth*" << "  " << std::left << std::setw(20) << "verdict"
      << "notes\n";
  for (const auto& r : report.rows) {
    out << std::left << std::setw(14) << r.name << std::right;
    if (r.status != RowStatus::Ok) {
      out << std::setw(6) << "-" << std::setw(7) << "-" << std::setw(9) << "-"
          << "  " << std::left << std::setw(20) << "error" << r.error << '\n';
      continue;
    }
    out << std::setw(6) << r.computed_det->get_str() << std::setw(7) << *r.computed_deg_q
        << std::setw(9) << rational_str(*r.breadth) << "  " << std::left << std::setw(20)
        << to_string(r.verdict);
    for (std::size_t i = 0; i < r.mismatches.size(); ++i)
      out << (i ? "; " : "MISMATCH ") << r.mismatches[i];
    out << '\n';
  }
  out << "* breadth of V is informational only\n";
  out << report.rows.size() << " rows, " << report.mismatched << " mismatched, "
      << report.input_errors << " input errors, " << report.resource_errors << " resource errors\n";
  return out.str();
}

std::string report_to_json(const TableReport& report) {
  json rows = json::array();
  for (const auto& r : report.rows) {
    json j;
    j["name"] = r.name;
    j["det"] = r.computed_det ? json(r.computed_det->get_str()) : json(nullptr);
    j["deg_q"] = r.computed_deg_q ? json(*r.computed_deg_q) : json(nullptr);
    j["breadth"] = r.breadth ? json(rational_str(*r.breadth)) : json(nullptr);
    j["verdict"] = std::string(to_string(r.verdict));
    j["mismatches"] = r.mismatches;
    j["status"] = r.status == RowStatus::Ok            ? "ok"
                  : r.status == RowStatus::InputError ? "input_error"
                                                      : "resource_error";
    j["error"] = r.error;
    rows.push_back(std::move(j));
  }
  json out;
  out["rows"] = std::move(rows);
  out["summary"] = {{"rows", report.rows.size()},
                    {"mismatched", report.mismatched},
                    {"input_errors", report.input_errors},
                    {"resource_errors", report.resource_errors},
                    {"breadth_note", "informational only; never used to rule links out"}};
  return out.dump(2);
}

TableReport report_from_json(const std::string& text) {
  TableReport rep;
  try {
    const json j = json::parse(text);
    for (const auto& r : j.at("rows")) {
      ReportRow row;
      row.name = r.at("name").get<std::string>();
      if (!r.at("det").is_null()) row.computed_det = BigInt(r.at("det").get<std::string>());
      if (!r.at("deg_q").is_null()) row.computed_deg_q = r.at("deg_q").get<int>();
      if (!r.at("breadth").is_null()) {
        row.breadth = Rational(r.at("breadth").get<std::string>());
        row.breadth->canonicalize();
      }
      const auto v = r.at("verdict").get<std::string>();
      row.verdict = v == "NotQuasiAlternating" ? Verdict::NotQuasiAlternating : Verdict::Inconclusive;
      row.mismatches = r.at("mismatches").get<std::vector<std::string>>();
      const auto st = r.at("status").get<std::string>();
      row.status = st == "ok" ? RowStatus::Ok : st == "input_error" ? RowStatus::InputError : RowStatus::ResourceError;
      row.error = r.at("error").get<std::string>();
      rep.rows.push_back(std::move(row));
    }
    const auto& s = j.at("summary");
    rep.mismatched = s.at("mismatched").get<int>();
    rep.input_errors = s.at("input_errors").get<int>();
    rep.resource_errors = s.at("resource_errors").get<int>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("report JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("report JSON: ") + e.what());
  }
  return rep;
}

}  // namespace qalt
