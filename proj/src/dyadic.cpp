#include "ordia/exact.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace ordia {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

void require_same_dim(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("vector dimension mismatch: " + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("malformed rational: " + std::string(text));
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    out = Rational(mpz_class(std::string(num), 10), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw std::invalid_argument("malformed rational: " + std::string(text));
    }
    mpz_class w = whole.empty() ? mpz_class(0) : mpz_class(std::string(whole), 10);
    mpz_class f = frac.empty() ? mpz_class(0) : mpz_class(std::string(frac), 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    out = Rational(w * den + f, den);
  } else {
    if (!all_digits(s)) throw std::invalid_argument("malformed rational: " + std::string(text));
    out = Rational(mpz_class(std::string(s), 10));
  }
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

// --- DyadicRational --------------------------------------------------------

DyadicRational::DyadicRational(const Rational& value) : value_(value) {
  value_.canonicalize();
  const mpz_class& den = value_.get_den();
  if (mpz_popcount(den.get_mpz_t()) != 1) {
    throw std::invalid_argument("not a dyadic rational: " + value_.get_str());
  }
}

DyadicRational DyadicRational::pow2(long exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return DyadicRational(exponent < 0 ? Rational(1, p) : Rational(p));
}

std::size_t DyadicRational::exponent() const {
  const mpz_class& den = value_.get_den();
  return mpz_scan1(den.get_mpz_t(), 0);
}

DyadicRational DyadicRational::half() const {
  DyadicRational out;
  mpq_div_2exp(out.value_.get_mpq_t(), value_.get_mpq_t(), 1);
  return out;
}

DyadicRational DyadicRational::abs() const {
  DyadicRational out = *this;
  if (out.value_ < 0) out.value_ = -out.value_;
  return out;
}

DyadicRational operator+(const DyadicRational& a, const DyadicRational& b) {
  DyadicRational out;
  out.value_ = a.value_ + b.value_;
  return out;
}

DyadicRational operator-(const DyadicRational& a, const DyadicRational& b) {
  DyadicRational out;
  out.value_ = a.value_ - b.value_;
  return out;
}

DyadicRational operator*(const DyadicRational& a, const DyadicRational& b) {
  DyadicRational out;
  out.value_ = a.value_ * b.value_;
  return out;
}

DyadicRational DyadicRational::operator-() const {
  DyadicRational out;
  out.value_ = -value_;
  return out;
}

DyadicRational& DyadicRational::operator+=(const DyadicRational& o) {
  value_ += o.value_;
  return *this;
}

DyadicRational& DyadicRational::operator-=(const DyadicRational& o) {
  value_ -= o.value_;
  return *this;
}

std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b) {
  int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string DyadicRational::to_string() const { return value_.get_str(10); }

std::string DyadicRational::to_pow2_string() const {
  return value_.get_num().get_str(10) + "/2^" + std::to_string(exponent());
}

DyadicRational min(const DyadicRational& a, const DyadicRational& b) { return b < a ? b : a; }

// --- norms -----------------------------------------------------------------

Norm parse_norm(std::string_view text) {
  if (text == "l1" || text == "L1") return Norm::L1;
  if (text == "l2" || text == "L2") return Norm::L2;
  if (text == "linf" || text == "Linf" || text == "l_inf" || text == "inf") return Norm::LInf;
  throw std::invalid_argument("unknown norm: " + std::string(text));
}

std::string to_string(Norm norm) {
  switch (norm) {
    case Norm::L1: return "l1";
    case Norm::L2: return "l2";
    case Norm::LInf: return "linf";
  }
  return "?";
}

Rational norm_comparable(Norm norm, const Vec& v) {
  Rational acc = 0;
  for (const auto& x : v) {
    switch (norm) {
      case Norm::L1: acc += abs(x); break;
      case Norm::L2: acc += x * x; break;
      case Norm::LInf:
        if (abs(x) > acc) acc = abs(x);
        break;
    }
  }
  return acc;
}

Rational radius_comparable(Norm norm, const Rational& r) {
  if (r < 0) throw std::invalid_argument("negative radius");
  return norm == Norm::L2 ? Rational(r * r) : r;
}

std::strong_ordering compare_norm(Norm norm, const Vec& v, const Rational& r) {
  int c = cmp(norm_comparable(norm, v), radius_comparable(norm, r));
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::strong_ordering compare_dist(Norm norm, const Vec& a, const Vec& b, const Rational& r) {
  return compare_norm(norm, sub(a, b), r);
}

Rational norm_exact(Norm norm, const Vec& v) {
  if (norm == Norm::L2) throw std::logic_error("l2 norm is not exactly representable; use norm_comparable");
  return norm_comparable(norm, v);
}

Vec zeros(std::size_t dim) { return Vec(dim, Rational(0)); }

Vec add(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec scale(const Vec& a, const Rational& s) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

Vec midpoint(const Vec& a, const Vec& b) { return scale(add(a, b), Rational(1, 2)); }

bool is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

std::string to_string(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + ")";
}

}  // namespace ordia
