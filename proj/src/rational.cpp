#include "qca/rational.hpp"

#include <cctype>

namespace qca {

Rational pow_rational(const Rational& r, long e) {
  if (e == 0) return Rational(1);
  if (r == 0) {
    if (e < 0) throw ZeroDivisionError("0 raised to a negative power");
    return Rational(0);
  }
  const unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(), mag);
  mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(), mag);
  if (e < 0) {
    mpz_swap(out.get_num_mpz_t(), out.get_den_mpz_t());
  }
  out.canonicalize();
  return out;
}

Integer pow_integer(const Integer& b, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
  return out;
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw ParseError("empty rational literal");
  // mpq_class(string) aborts on garbage, so validate the grammar first.
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
  };
  const std::size_t slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw ParseError("bad rational literal: " + text);
    return Rational(s);
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) {
    throw ParseError("bad rational literal: " + text);
  }
  Rational d(den);
  if (d == 0) throw ZeroDivisionError("rational literal with zero denominator");
  Rational out = Rational(num) / d;
  out.canonicalize();
  return out;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

Rational invert_elem(const Rational& r) {
  if (r == 0) throw ZeroDivisionError("invert_elem: zero rational");
  return Rational(1) / r;
}

}  // namespace qca
