#include "hh/rational.hpp"

#include <stdexcept>

namespace hh {

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::string num = s, den = "1";
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
    if (num.empty() || den.empty() || den.find('/') != std::string::npos)
      throw std::invalid_argument("malformed rational '" + s + "'");
  }
  auto digits_ok = [](const std::string& t, bool sign_allowed) {
    std::size_t i = 0;
    if (sign_allowed && i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (!digits_ok(num, true) || !digits_ok(den, true))
    throw std::invalid_argument("malformed rational '" + s + "'");
  mpz_class n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace hh
