#include "dtop/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace dtop {

Rat rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat rat_parse(const std::string& text) {
  const auto slash = text.find('/');
  std::string num = (slash == std::string::npos) ? text : text.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : text.substr(slash + 1);
  // The wire format keeps the sign on the numerator.
  if (!is_integer_token(num) || !is_integer_token(den) || den.find('-') != std::string::npos)
    throw std::invalid_argument("malformed rational: \"" + text + "\"");
  const mpz_class den_z(den);
  if (den_z == 0)
    throw std::invalid_argument("rational with zero denominator: \"" + text + "\"");
  Rat r{mpz_class(num), den_z};
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

Rat l1_distance(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("l1_distance: dimension mismatch");
  Rat sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += rat_abs(a[i] - b[i]);
  return sum;
}

}  // namespace dtop
