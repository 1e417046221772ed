#include "qalt/braid_word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "qalt/error.hpp"

namespace qalt {

int BraidWord::exponent_sum() const {
  int sum = 0;
  for (int l : letters) sum += l > 0 ? 1 : -1;
  return sum;
}

void BraidWord::validate() const {
  if (strands < 1) throw InvalidArgument("braid must have at least one strand");
  for (int l : letters) {
    if (l == 0 || std::abs(l) >= strands)
      throw InvalidArgument("generator index " + std::to_string(l) + " out of range for " +
                            std::to_string(strands) + " strands");
  }
}

BraidWord& BraidWord::append(const BraidWord& other) {
  strands = std::max(strands, other.strands);
  letters.insert(letters.end(), other.letters.begin(), other.letters.end());
  return *this;
}

BraidWord& BraidWord::append_power(int generator, int exponent) {
  int letter = exponent < 0 ? -generator : generator;
  for (int k = 0; k < std::abs(exponent); ++k) letters.push_back(letter);
  return *this;
}

BraidWord parse_braid_word(std::string_view text, int strands) {
  BraidWord w;
  std::string tok;
  std::vector<std::string> tokens;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      if (!tok.empty()) tokens.push_back(std::move(tok));
      tok.clear();
    } else {
      tok.push_back(ch);
    }
  }
  if (!tok.empty()) tokens.push_back(std::move(tok));

  auto parse_int = [&](const std::string& s, const std::string& whole) {
    if (s.empty()) throw ParseError("bad braid letter '" + whole + "'");
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(s, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad braid letter '" + whole + "'");
    }
    if (pos != s.size()) throw ParseError("bad braid letter '" + whole + "'");
    return v;
  };

  int max_index = 0;
  for (const auto& t : tokens) {
    int gen = 0, exponent = 1;
    if (t[0] == 's' || t[0] == 'S') {
      auto caret = t.find('^');
      gen = parse_int(t.substr(1, caret == std::string::npos ? std::string::npos : caret - 1), t);
      if (caret != std::string::npos) exponent = parse_int(t.substr(caret + 1), t);
      if (gen <= 0) throw ParseError("bad braid letter '" + t + "'");
    } else {
      int v = parse_int(t, t);
      if (v == 0) throw ParseError("generator 0 in braid word");
      gen = std::abs(v);
      exponent = v < 0 ? -1 : 1;
    }
    max_index = std::max(max_index, gen);
    w.append_power(gen, exponent);
  }
  w.strands = strands > 0 ? strands : std::max(2, max_index + 1);
  w.validate();
  return w;
}

std::string to_string(const BraidWord& w) {
  std::string out;
  for (int l : w.letters) {
    if (!out.empty()) out.push_back(' ');
    out += "s" + std::to_string(std::abs(l));
    if (l < 0) out += "^-1";
  }
  return out;
}

}  // namespace qalt
