#pragma once

#include <string>

namespace agt {

// Three-valued truth. Unknown is a first-class answer: it reports that the
// question is not decided by the rules implemented here (for cardinal
// comparisons this typically means independence from ZFC).
enum class Verdict { True, False, Unknown };

inline Verdict verdict_of(bool b) { return b ? Verdict::True : Verdict::False; }

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    default: return "unknown";
  }
}

}  // namespace agt
