#include "belyi/rational.hpp"

#include <cctype>

namespace belyi {

Rational rational_from_string(const std::string& s) {
  if (s.empty()) fail(ErrorKind::InvalidInput, "empty rational literal");
  for (char ch : s) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' ||
          ch == '/'))
      fail(ErrorKind::InvalidInput, "bad rational literal: " + s);
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    fail(ErrorKind::InvalidInput, "bad rational literal: " + s);
  if (q.get_den() == 0)
    fail(ErrorKind::InvalidInput, "zero denominator in: " + s);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace belyi
