#include "daw/rational.hpp"

#include <stdexcept>

namespace daw {

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& x) { return x.get_str(); }

bool rat_is_int(const Rat& x) { return x.get_den() == 1; }

bool rat_denominator_divides(const Rat& x, long d) {
  Rat y = x * d;
  y.canonicalize();
  return rat_is_int(y);
}

}  // namespace daw
