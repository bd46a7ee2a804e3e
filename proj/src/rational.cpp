#include "sparsetrace/rational.hpp"

#include "sparsetrace/errors.hpp"

namespace sparsetrace {

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational", 0);
  Rational r;
  if (r.set_str(s, 10) != 0) throw ParseError("malformed rational '" + s + "'", 0);
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'", 0);
  r.canonicalize();
  return r;
}

}  // namespace sparsetrace
