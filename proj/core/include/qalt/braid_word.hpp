#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qalt {

// A word in the Artin generators of the braid group on `strands` strands.
// Letter +i is sigma_i, -i is sigma_i^-1, with 1 <= i < strands.
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;

  int exponent_sum() const;
  std::size_t length() const { return letters.size(); }
  // Throws InvalidArgument if a letter is 0 or |letter| >= strands.
  void validate() const;

  BraidWord& append(const BraidWord& other);
  BraidWord& append_power(int generator, int exponent);

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// Accepts "s1 s2 s1^-1", "s1^3 s2^-2" or the compact "1 2 -1"; letters may be
// separated by whitespace or commas. When `strands` is 0 the strand count is
// inferred as (largest generator index + 1), at least 2.
BraidWord parse_braid_word(std::string_view text, int strands = 0);

// Inverse of parse_braid_word in the "s1 s2^-1" style; "" for the empty word.
std::string to_string(const BraidWord& w);

}  // namespace qalt
