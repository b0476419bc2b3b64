#pragma once

#include <functional>
#include <gmpxx.h>
#include <optional>
#include <string>
#include <vector>

namespace cbperm {

/// Multivariate formal power series in 1..3 variables with exact rational
/// coefficients, truncated to a box: a coefficient is kept only when every
/// exponent is within its variable's cap.
///
/// The box is a monomial ideal, so +, -, *, division by a series with a
/// nonzero constant term and sqrt are exact on every stored coefficient.
/// Division by a monomial x_i^e loses the top e layers in x_i; the result's
/// cap for x_i shrinks by e. Binary operations work on the common (minimum)
/// caps of their operands.
class TruncatedSeries {
 public:
  using Exponents = std::vector<int>;

  TruncatedSeries(std::vector<std::string> names, std::vector<int> caps);

  static TruncatedSeries constant(std::vector<std::string> names, std::vector<int> caps,
                                  const mpq_class& c);
  static TruncatedSeries variable(std::vector<std::string> names, std::vector<int> caps,
                                  int var);
  static TruncatedSeries monomial(std::vector<std::string> names, std::vector<int> caps,
                                  const Exponents& exps, const mpq_class& c = 1);

  int num_vars() const { return static_cast<int>(caps_.size()); }
  const std::vector<int>& caps() const { return caps_; }
  const std::vector<std::string>& names() const { return names_; }

  /// Throws std::out_of_range when an exponent exceeds its cap.
  const mpq_class& coefficient(const Exponents& exps) const;
  void set(const Exponents& exps, const mpq_class& value);

  /// Same series on a smaller box. Throws if a requested cap exceeds the
  /// available one.
  TruncatedSeries restricted(const std::vector<int>& caps) const;

  bool is_zero() const;
  bool all_nonnegative_integers() const;
  /// The single term of a monomial series, if it is one.
  std::optional<std::pair<Exponents, mpq_class>> as_monomial() const;

  void for_each_nonzero(const std::function<void(const Exponents&, const mpq_class&)>& f) const;

  /// One line per nonzero monomial, "x^a y^b w^c : num/den", ordered by total
  /// degree then exponents.
  std::string dump() const;

  TruncatedSeries operator-() const;
  TruncatedSeries& operator*=(const mpq_class& c);

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  /// Requires b to have a nonzero constant term.
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const mpq_class& c, TruncatedSeries a) { return a *= c; }
  friend TruncatedSeries operator+(const TruncatedSeries& a, const mpq_class& c);
  friend TruncatedSeries operator+(const mpq_class& c, const TruncatedSeries& a) { return a + c; }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const mpq_class& c) { return a + (-c); }
  friend TruncatedSeries operator-(const mpq_class& c, const TruncatedSeries& a);

  /// Coefficient-wise equality on the common box.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  std::size_t index(const Exponents& exps) const;
  Exponents exponents(std::size_t idx) const;
  bool fits(const Exponents& exps) const;
  void check_compatible(const TruncatedSeries& other) const;

  std::vector<std::string> names_;
  std::vector<int> caps_;
  std::vector<std::size_t> strides_;
  std::vector<mpq_class> coeffs_;
};

/// Newton iteration S <- (S + F/S)/2 from S = 1 until it stops changing, then
/// checks S*S == F. Requires constant term 1.
TruncatedSeries sqrt(const TruncatedSeries& f);

/// f / x^exps. Every coefficient of f outside the shifted box must vanish;
/// anything else means the division is not exact and throws.
TruncatedSeries divide_by_monomial(const TruncatedSeries& f, const TruncatedSeries::Exponents& exps);
/// f / x_0.
TruncatedSeries div_by_x(const TruncatedSeries& f);
/// f / m where m is a monomial series c * x^e.
TruncatedSeries divide_by_monomial_series(const TruncatedSeries& f, const TruncatedSeries& m);

/// Identifies variable `drop` with variable `keep` (3 -> 2 variables, or
/// 2 -> 1). The kept variable's cap becomes the smaller of the two.
TruncatedSeries substitute_equal_vars(const TruncatedSeries& f, int keep, int drop);

/// Exact quotient of two polynomials held within the caps, by multivariate
/// division with a single divisor (lexicographic order). Throws when g does
/// not divide f.
TruncatedSeries divide_exact(const TruncatedSeries& f, const TruncatedSeries& g);

}  // namespace cbperm
