#include "racg/qsqrt2.hpp"

#include <cctype>
#include <stdexcept>

namespace racg {

namespace {

int sign_of_difference_of_squares(const mpq_class& x, const mpq_class& y) {
  // sign(x^2 - 2 y^2)
  return sgn(mpq_class(x * x - 2 * y * y));
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  mpq_class r(rn, rd);
  r.canonicalize();
  return r;
}

mpq_class parse_rational(std::string_view s) {
  std::string text(s);
  if (text.empty()) throw std::invalid_argument("empty rational");
  if (text[0] == '+') text.erase(0, 1);
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-')) {
      throw std::invalid_argument("malformed rational: " + std::string(s));
    }
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational: " + std::string(s));
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + std::string(s));
  q.canonicalize();
  return q;
}

// Parses a signed term that is either rational or a multiple of sqrt2.
void add_term(std::string_view term, mpq_class& a, mpq_class& b) {
  constexpr std::string_view root = "sqrt2";
  if (term.size() >= root.size() && term.substr(term.size() - root.size()) == root) {
    std::string_view coeff = term.substr(0, term.size() - root.size());
    if (!coeff.empty() && coeff.back() == '*') coeff.remove_suffix(1);
    if (coeff.empty() || coeff == "+") {
      b += 1;
    } else if (coeff == "-") {
      b -= 1;
    } else {
      b += parse_rational(coeff);
    }
  } else {
    a += parse_rational(term);
  }
}

}  // namespace

QSqrt2 QSqrt2::parse(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact.empty()) throw std::invalid_argument("empty number");
  mpq_class a = 0, b = 0;
  size_t start = 0;
  for (size_t i = 1; i <= compact.size(); ++i) {
    if (i == compact.size() || ((compact[i] == '+' || compact[i] == '-') && compact[i - 1] != '/')) {
      add_term(std::string_view(compact).substr(start, i - start), a, b);
      start = i;
    }
  }
  return QSqrt2(a, b);
}

int QSqrt2::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sa >= 0 && sb >= 0) return (sa > 0 || sb > 0) ? 1 : 0;
  if (sa <= 0 && sb <= 0) return -1;
  int d = sign_of_difference_of_squares(a_, b_);
  return sa > 0 ? d : -d;
}

QSqrt2 QSqrt2::inverse() const {
  mpq_class n = norm();
  if (sgn(n) == 0) throw std::domain_error("QSqrt2: division by zero");
  return QSqrt2(a_ / n, -b_ / n);
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
  mpq_class a = a_ * o.a_ + 2 * b_ * o.b_;
  mpq_class b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

double QSqrt2::to_double() const {
  // Evaluate the conjugate-stable form when there is cancellation.
  double a = a_.get_d(), b = b_.get_d();
  double naive = a + b * 1.4142135623730951;
  if ((a > 0) == (b > 0) || a == 0 || b == 0) return naive;
  mpq_class n = norm();
  double denom = a - b * 1.4142135623730951;
  return n.get_d() / denom;
}

std::string QSqrt2::str() const {
  std::string out = a_.get_str();
  if (sgn(b_) < 0) {
    out += "-" + mpq_class(-b_).get_str();
  } else {
    out += "+" + b_.get_str();
  }
  return out + "*sqrt2";
}

std::optional<QSqrt2> exact_sqrt(const QSqrt2& x) {
  if (x.sign() < 0) return std::nullopt;
  if (x.is_zero()) return QSqrt2(0);
  const mpq_class& a = x.rational_part();
  const mpq_class& b = x.radical_part();
  // (c + d sqrt2)^2 = c^2 + 2 d^2 + 2 c d sqrt2
  auto s = rational_sqrt(x.norm());
  if (!s) return std::nullopt;
  for (int sign : {1, -1}) {
    mpq_class c2 = (a + sign * *s) / 2;
    if (auto c = rational_sqrt(c2)) {
      QSqrt2 candidate;
      if (sgn(*c) == 0) {
        auto d = rational_sqrt(mpq_class(a / 2));
        if (!d) continue;
        candidate = QSqrt2(0, *d);
      } else {
        candidate = QSqrt2(*c, b / (2 * *c));
      }
      if (candidate.sign() < 0) candidate = -candidate;
      if (candidate * candidate == x) return candidate;
    }
  }
  return std::nullopt;
}

}  // namespace racg
