#include "diocurve/rat.hpp"

#include <ostream>

namespace diocurve {

Rat::Rat(long n, long d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rat::Rat(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational literal");
  std::string s(text);
  // mpq set_str takes "-p/q" but not an explicit leading plus.
  std::string body = s;
  if (body.size() > 1 && body.front() == '+' &&
      body[1] >= '0' && body[1] <= '9')
    body.erase(0, 1);
  mpq_class q;
  if (q.set_str(body, 10) != 0)
    throw ParseError("bad rational literal: '" + s + "'");
  if (q.get_den() == 0)
    throw ParseError("zero denominator in literal: '" + s + "'");
  q.canonicalize();
  return Rat(std::move(q), canonical_tag{});
}

Rat Rat::inv() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return Rat(mpq_class(1 / q_), canonical_tag{});
}

Rat Rat::pow(long e) const {
  if (e == 0) return Rat(1);
  Rat base = *this;
  if (e < 0) {
    base = base.inv();
    e = -e;
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(e));
  // num/den coprime implies num^e/den^e coprime: already canonical.
  mpq_class q(n, d);
  return Rat(std::move(q), canonical_tag{});
}

std::string Rat::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  return Rat(mpq_class(a.q_ / b.q_), Rat::canonical_tag{});
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.str();
}

mpz_class int_isqrt(const mpz_class& n) {
  if (n < 0) throw DomainError("isqrt of negative integer");
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Rat& x) {
  if (x.sign() < 0) return false;
  return mpz_perfect_square_p(x.num().get_mpz_t()) != 0 &&
         mpz_perfect_square_p(x.den().get_mpz_t()) != 0;
}

Rat sqrt_exact(const Rat& x) {
  if (x.sign() < 0) throw NotASquare("square root of negative rational");
  if (!is_perfect_square(x))
    throw NotASquare("not a rational square: " + x.str());
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), x.num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), x.den().get_mpz_t());
  // sqrt preserves coprimality.
  return Rat(n, d);
}

std::optional<Rat> exact_root(const Rat& x, unsigned k) {
  if (k == 0) throw DomainError("0th root");
  if (k == 1) return x;
  if (x.is_zero()) return Rat(0);
  if (x.sign() < 0 && k % 2 == 0) return std::nullopt;
  mpz_class n, d;
  int n_exact = mpz_root(n.get_mpz_t(), x.num().get_mpz_t(), k);
  int d_exact = mpz_root(d.get_mpz_t(), x.den().get_mpz_t(), k);
  if (!n_exact || !d_exact) return std::nullopt;
  return Rat(n, d);
}

}  // namespace diocurve
