#include "ordia/ordinal.hpp"

#include <cctype>
#include <limits>

namespace ordia {

namespace {

std::strong_ordering compare_terms(const std::vector<OrdinalTerm>& a, const std::vector<OrdinalTerm>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a[i].exponent <=> b[i].exponent; c != 0) return c;
    if (auto c = a[i].coefficient <=> b[i].coefficient; c != 0) return c;
  }
  return a.size() <=> b.size();
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) throw std::overflow_error("ordinal coefficient overflow");
  return a + b;
}

std::uint64_t checked_mul2_plus1(std::uint64_t a) {
  if (a > (std::numeric_limits<std::uint64_t>::max() - 1) / 2) throw std::overflow_error("enumeration index overflow");
  return 2 * a + 1;
}

// w^exponent * m + rest, where every exponent of rest is below `exponent`.
Ordinal block_start_plus(const Ordinal& exponent, std::uint64_t m, const Ordinal& rest) {
  std::vector<OrdinalTerm> terms;
  if (m > 0) terms.push_back(OrdinalTerm{exponent, m});
  for (const auto& t : rest.terms()) terms.push_back(t);
  return Ordinal::from_terms(terms);
}

Ordinal tail_after(const Ordinal& x, std::size_t skip) {
  std::vector<OrdinalTerm> terms(x.terms().begin() + static_cast<std::ptrdiff_t>(skip), x.terms().end());
  return Ordinal::from_terms(terms);
}

// ---- parser -----------------------------------------------------------------

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Ordinal parse() {
    Ordinal out = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw OrdinalSyntaxError("ordinal syntax error at offset " + std::to_string(pos_) + " in \"" +
                             std::string(text_) + "\": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::uint64_t nat() {
    if (!at_digit()) fail("expected a natural number");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      auto d = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) fail("number too large");
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  Ordinal expr() {
    Ordinal acc = term();
    while (accept('+')) acc = acc + term();
    return acc;
  }

  Ordinal omega_tower() {
    // 'w' already consumed
    if (accept('^')) return Ordinal::power(atom());
    return Ordinal::omega();
  }

  Ordinal term() {
    if (at_digit()) return Ordinal::natural(nat());
    if (!accept('w')) fail("expected 'w' or a natural number");
    Ordinal base = omega_tower();
    if (accept('*')) {
      std::uint64_t c = nat();
      if (c == 0) return Ordinal{};
      return Ordinal::power(base.terms().front().exponent, c);
    }
    return base;
  }

  Ordinal atom() {
    if (at_digit()) return Ordinal::natural(nat());
    if (accept('(')) {
      Ordinal inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (accept('w')) return omega_tower();
    fail("expected an exponent");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

// ---- Ordinal ------------------------------------------------------------------

Ordinal Ordinal::natural(std::uint64_t n) {
  Ordinal out;
  if (n > 0) out.terms_.push_back(OrdinalTerm{Ordinal{}, n});
  return out;
}

Ordinal Ordinal::omega() { return power(natural(1)); }

Ordinal Ordinal::power(const Ordinal& exponent, std::uint64_t coefficient) {
  if (coefficient == 0) throw std::invalid_argument("ordinal term coefficient must be positive");
  Ordinal out;
  out.terms_.push_back(OrdinalTerm{exponent, coefficient});
  return out;
}

Ordinal Ordinal::from_terms(const std::vector<OrdinalTerm>& terms) {
  Ordinal acc;
  for (const auto& t : terms) {
    if (t.coefficient == 0) continue;
    acc = acc + power(t.exponent, t.coefficient);
  }
  return acc;
}

bool Ordinal::is_finite() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero()); }

std::uint64_t Ordinal::as_natural() const {
  if (!is_finite()) throw std::domain_error("ordinal " + to_string() + " is not finite");
  return terms_.empty() ? 0 : terms_[0].coefficient;
}

bool operator==(const Ordinal& a, const Ordinal& b) { return a.terms_ == b.terms_; }

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) { return compare_terms(a.terms_, b.terms_); }

Ordinal operator+(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const Ordinal& lead = b.terms_.front().exponent;
  Ordinal out;
  for (const auto& t : a.terms_) {
    if (t.exponent > lead) {
      out.terms_.push_back(t);
    } else {
      if (t.exponent == lead) {
        out.terms_.push_back(OrdinalTerm{lead, checked_add(t.coefficient, b.terms_.front().coefficient)});
        out.terms_.insert(out.terms_.end(), b.terms_.begin() + 1, b.terms_.end());
        return out;
      }
      break;
    }
  }
  out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
  return out;
}

Ordinal Ordinal::successor() const { return *this + natural(1); }

std::string Ordinal::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (i) out += "+";
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += "w";
    if (!(t.exponent.is_finite() && t.exponent.as_natural() == 1)) {
      const auto& e = t.exponent;
      bool bare = e.is_finite() || (e.terms_.size() == 1 && e.terms_[0].coefficient == 1);
      out += "^";
      out += bare ? e.to_string() : "(" + e.to_string() + ")";
    }
    if (t.coefficient > 1) out += "*" + std::to_string(t.coefficient);
  }
  return out;
}

Ordinal parse_ordinal(std::string_view text) { return Parser(text).parse(); }

// ---- classification -------------------------------------------------------------

Classification classify(const Ordinal& a) {
  if (a.is_zero()) return {OrdinalKind::Zero, std::nullopt};
  const auto& last = a.terms().back();
  if (!last.exponent.is_zero()) return {OrdinalKind::Limit, std::nullopt};
  std::vector<OrdinalTerm> terms = a.terms();
  if (--terms.back().coefficient == 0) terms.pop_back();
  return {OrdinalKind::Successor, Ordinal::from_terms(terms)};
}

bool is_limit(const Ordinal& a) { return classify(a).kind == OrdinalKind::Limit; }

Ordinal predecessor(const Ordinal& a) {
  auto c = classify(a);
  if (c.kind != OrdinalKind::Successor) throw std::domain_error("ordinal " + a.to_string() + " is not a successor");
  return *c.predecessor;
}

// ---- pairing ----------------------------------------------------------------------

std::uint64_t cantor_pair(std::uint64_t m, std::uint64_t k) {
  unsigned __int128 s = static_cast<unsigned __int128>(m) + k;
  unsigned __int128 v = s * (s + 1) / 2 + k;
  if (v > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("Cantor pairing overflow");
  return static_cast<std::uint64_t>(v);
}

std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t n) {
  // Largest s with s(s+1)/2 <= n.
  std::uint64_t lo = 0, hi = std::uint64_t{1} << 33;
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo + 1) / 2;
    unsigned __int128 tri = static_cast<unsigned __int128>(mid) * (mid + 1) / 2;
    if (tri <= n) lo = mid; else hi = mid - 1;
  }
  std::uint64_t tri = static_cast<std::uint64_t>(static_cast<unsigned __int128>(lo) * (lo + 1) / 2);
  std::uint64_t k = n - tri;
  return {lo - k, k};
}

// ---- enumeration ----------------------------------------------------------------------
//
// For alpha = beta + w^gamma (the last CNF term split off):
//   * beta == 0: enumerate [0, w^gamma) directly;
//   * otherwise even indices enumerate [0, beta), odd ones beta + [0, w^gamma).
// [0, w^gamma):
//   * gamma == 1: identity;
//   * gamma == delta+1: n = <m,k> maps to w^delta*m + E(w^delta, k);
//   * gamma limit: 0 maps to 0 and n = <m,k>+1 maps to the k-th element of the
//     block [w^eta, w^(eta+1)) with eta = E(gamma, m).

namespace {

Ordinal enumerate_power(const Ordinal& gamma, std::uint64_t n);

Ordinal enumerate_block(const Ordinal& eta, std::uint64_t k) {
  if (eta.is_zero()) return Ordinal::natural(k + 1);
  auto [c, j] = cantor_unpair(k);
  return block_start_plus(eta, c + 1, enumerate_power(eta, j));
}

Ordinal enumerate_power(const Ordinal& gamma, std::uint64_t n) {
  auto cls = classify(gamma);
  if (cls.kind == OrdinalKind::Zero) throw std::logic_error("enumerate_power on w^0");
  if (cls.kind == OrdinalKind::Successor) {
    const Ordinal& delta = *cls.predecessor;
    if (delta.is_zero()) return Ordinal::natural(n);
    auto [m, k] = cantor_unpair(n);
    return block_start_plus(delta, m, enumerate_power(delta, k));
  }
  if (n == 0) return Ordinal{};
  auto [m, k] = cantor_unpair(n - 1);
  return enumerate_block(enumerate_below(gamma, m), k);
}

std::uint64_t index_power(const Ordinal& gamma, const Ordinal& x) {
  auto cls = classify(gamma);
  if (cls.kind == OrdinalKind::Successor) {
    const Ordinal& delta = *cls.predecessor;
    if (delta.is_zero()) return x.as_natural();
    std::uint64_t m = 0;
    Ordinal rest = x;
    if (!x.is_zero() && x.terms().front().exponent == delta) {
      m = x.terms().front().coefficient;
      rest = tail_after(x, 1);
    }
    return cantor_pair(m, index_power(delta, rest));
  }
  if (x.is_zero()) return 0;
  const auto& lead = x.terms().front();
  const Ordinal& eta = lead.exponent;
  std::uint64_t k;
  if (eta.is_zero()) {
    k = lead.coefficient - 1;
  } else {
    Ordinal rest = tail_after(x, 1);
    k = cantor_pair(lead.coefficient - 1, index_power(eta, rest));
  }
  return checked_add(cantor_pair(enumeration_index(gamma, eta), k), 1);
}

struct LastSplit {
  Ordinal head;   // beta
  Ordinal gamma;  // exponent of the split-off w^gamma
};

LastSplit split_last(const Ordinal& alpha) {
  std::vector<OrdinalTerm> terms = alpha.terms();
  Ordinal gamma = terms.back().exponent;
  if (--terms.back().coefficient == 0) terms.pop_back();
  return {Ordinal::from_terms(terms), gamma};
}

}  // namespace

Ordinal enumerate_below(const Ordinal& alpha, std::uint64_t n) {
  if (!is_limit(alpha)) throw std::domain_error("enumerate_below requires a limit ordinal, got " + alpha.to_string());
  auto [head, gamma] = split_last(alpha);
  if (head.is_zero()) return enumerate_power(gamma, n);
  if (n % 2 == 0) return enumerate_below(head, n / 2);
  return head + enumerate_power(gamma, n / 2);
}

std::uint64_t enumeration_index(const Ordinal& alpha, const Ordinal& beta) {
  if (!is_limit(alpha)) throw std::domain_error("enumeration_index requires a limit ordinal, got " + alpha.to_string());
  if (!(beta < alpha)) throw std::domain_error(beta.to_string() + " is not below " + alpha.to_string());
  auto [head, gamma] = split_last(alpha);
  if (head.is_zero()) return index_power(gamma, beta);
  if (beta < head) {
    std::uint64_t i = enumeration_index(head, beta);
    if (i > std::numeric_limits<std::uint64_t>::max() / 2) throw std::overflow_error("enumeration index overflow");
    return 2 * i;
  }
  // beta = head + y with every exponent of y below gamma: the CNF of beta
  // extends the CNF of head term by term.
  Ordinal y = tail_after(beta, head.terms().size());
  return checked_mul2_plus1(index_power(gamma, y));
}

}  // namespace ordia
