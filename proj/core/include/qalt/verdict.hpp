#pragma once

#include <string_view>

namespace qalt {

// The obstruction only ever rules links out; it never certifies them.
enum class Verdict { NotQuasiAlternating, Inconclusive };

constexpr std::string_view to_string(Verdict v) {
  return v == Verdict::NotQuasiAlternating ? "NotQuasiAlternating" : "Inconclusive";
}

}  // namespace qalt
