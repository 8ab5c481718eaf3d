#include "updp/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace updp {

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
  if (from >= to) return false;
  for (size_t i = from; i < to; ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat rat_from_string(const std::string& s) {
  size_t slash = s.find('/');
  auto check_int = [&](size_t from, size_t to) {
    size_t start = from;
    if (start < to && (s[start] == '-' || s[start] == '+')) ++start;
    if (!all_digits(s, start, to))
      throw std::invalid_argument("not a rational: '" + s + "'");
  };
  if (slash == std::string::npos) {
    check_int(0, s.size());
    return Rat(mpz_class(s));
  }
  check_int(0, slash);
  check_int(slash + 1, s.size());
  mpz_class num(s.substr(0, slash));
  mpz_class den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace updp
