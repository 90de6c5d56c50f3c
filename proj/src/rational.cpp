#include "shadowlab/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace shadowlab {

void Rational::throw_zero_denominator() {
  throw std::invalid_argument("rational: zero denominator");
}

Rational Rational::parse(const std::string& token) {
  if (token.empty()) throw std::invalid_argument("rational: empty token");
  auto digits_with_sign = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  std::string num = token, den = "1";
  if (auto slash = token.find('/'); slash != std::string::npos) {
    num = token.substr(0, slash);
    den = token.substr(slash + 1);
  }
  if (!digits_with_sign(num) || !digits_with_sign(den))
    throw std::invalid_argument("rational: bad token '" + token + "'");
  // mpz_set_str takes a bare or '-'-signed literal; it rejects a leading '+'.
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class zn(num), zd(den);
  if (zd == 0) throw_zero_denominator();
  mpq_class v(zn, zd);
  v.canonicalize();
  return Rational(v);
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

mpz_class Rational::floor_z() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

Rational Rational::frac() const { return *this - Rational(floor_z()); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational circle_distance(const Rational& x, const Rational& y) {
  Rational d = (x - y).frac();  // in [0,1)
  if (d > Rational(1, 2)) d -= 1;
  return d;  // in (-1/2, 1/2]
}

}  // namespace shadowlab
