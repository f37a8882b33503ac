#pragma once

// Countable ordinals below epsilon_0 in Cantor normal form.
//
// An ordinal is a strictly decreasing sum  w^e1*c1 + ... + w^ek*ck  with
// ordinal exponents and positive integer coefficients; zero is the empty sum.
// The textual form accepted and printed everywhere is e.g. "w^2*3+w+4",
// with parenthesised compound exponents such as "w^(w+1)".

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ordia {

struct OrdinalTerm;

class Ordinal {
 public:
  Ordinal() = default;  // zero

  static Ordinal natural(std::uint64_t n);
  static Ordinal omega();
  /// w^exponent * coefficient (coefficient >= 1).
  static Ordinal power(const Ordinal& exponent, std::uint64_t coefficient = 1);

  /// Builds the ordinal denoted by the sum of the given terms in order,
  /// normalizing non-decreasing runs ("w + w^2" is w^2).
  static Ordinal from_terms(const std::vector<OrdinalTerm>& terms);

  const std::vector<OrdinalTerm>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  /// Value of a finite ordinal; throws std::domain_error otherwise.
  std::uint64_t as_natural() const;

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

  /// Ordinal (non-commutative) addition.
  friend Ordinal operator+(const Ordinal& a, const Ordinal& b);

  Ordinal successor() const;

  std::string to_string() const;

 private:
  std::vector<OrdinalTerm> terms_;
};

struct OrdinalTerm {
  Ordinal exponent;
  std::uint64_t coefficient = 1;

  friend bool operator==(const OrdinalTerm&, const OrdinalTerm&) = default;
};

/// Ordinal-expression syntax errors.
class OrdinalSyntaxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses the expression grammar; non-canonical sums ("w+w^2") are normalized.
Ordinal parse_ordinal(std::string_view text);

enum class OrdinalKind { Zero, Successor, Limit };

struct Classification {
  OrdinalKind kind;
  std::optional<Ordinal> predecessor;  // set iff kind == Successor
};

Classification classify(const Ordinal& a);
bool is_limit(const Ordinal& a);
/// Throws std::domain_error unless a is a successor.
Ordinal predecessor(const Ordinal& a);

/// Cantor pairing <m,k> = (m+k)(m+k+1)/2 + k. Throws std::overflow_error.
std::uint64_t cantor_pair(std::uint64_t m, std::uint64_t k);
std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t n);

/// The canonical bijection n -> [0, alpha) for a limit ordinal alpha.
/// Throws std::domain_error if alpha is not a limit.
Ordinal enumerate_below(const Ordinal& alpha, std::uint64_t n);

/// Inverse of enumerate_below: the unique n with enumerate_below(alpha, n) ==
/// beta. Requires beta < alpha. Throws std::overflow_error when the index does
/// not fit in 64 bits.
std::uint64_t enumeration_index(const Ordinal& alpha, const Ordinal& beta);

}  // namespace ordia
