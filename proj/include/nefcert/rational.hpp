#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace nefcert {

// Exact rational scalar used throughout. mpq_class keeps values canonical
// (lowest terms, positive denominator) after arithmetic.
using Rat = mpq_class;

inline std::string rat_to_string(const Rat& r) {
  Rat c(r);
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Accepts "p" or "p/q".
inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

}  // namespace nefcert
