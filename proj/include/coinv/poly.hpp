#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coinv/gf.hpp"

namespace coinv {

struct VarContext {
  Field field;
  int nvars;
  bool operator==(const VarContext& o) const {
    return nvars == o.nvars && field == o.field;
  }
  bool operator!=(const VarContext& o) const { return !(*this == o); }
};

// Exponent vector. Variables are 0-based internally; variable i prints as
// "x{i+1}".
class Monomial {
 public:
  explicit Monomial(int nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> e) : e_(std::move(e)) {}

  int nvars() const { return int(e_.size()); }
  std::uint32_t exp(int i) const { return e_[std::size_t(i)]; }
  const std::vector<std::uint32_t>& exps() const { return e_; }
  long long degree() const;
  bool is_one() const;

  bool divides(const Monomial& o) const;
  Monomial times(const Monomial& o,
                 std::uint32_t cap = default_caps().exponent) const;
  // Componentwise difference; requires o.divides(*this).
  Monomial quotient(const Monomial& o) const;
  Monomial with_exp(int i, std::uint32_t e) const;
  // Sends variable i to variable sigma[i].
  Monomial permuted(const std::vector<int>& sigma) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }
  // Graded lexicographic with x1 > x2 > ... > xn.
  bool operator<(const Monomial& o) const;

  std::string to_string() const;

 private:
  std::vector<std::uint32_t> e_;
};

// Sparse multivariate polynomial over F_q. Terms are kept in a canonical
// map (graded-lex ascending); zero coefficients are never stored.
class Polynomial {
 public:
  explicit Polynomial(VarContext ctx) : ctx_(std::move(ctx)) {}

  static Polynomial zero(const VarContext& ctx) { return Polynomial(ctx); }
  static Polynomial constant(const VarContext& ctx, Field::Elem c);
  static Polynomial one(const VarContext& ctx);
  static Polynomial variable(const VarContext& ctx, int i);
  static Polynomial term(const VarContext& ctx, Monomial m, Field::Elem c);

  const VarContext& context() const { return ctx_; }
  const std::map<Monomial, Field::Elem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  long long degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;
  Field::Elem coeff(const Monomial& m) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(Field::Elem c) const;
  Polynomial pow(std::uint32_t k) const;

  bool operator==(const Polynomial& o) const {
    return ctx_ == o.ctx_ && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Ring homomorphism x_i -> images[i]; the result lives in the images'
  // context, which may differ from this one.
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  // x_i -> x_i for i in keep, x_i -> 0 otherwise (keep is 0-based).
  Polynomial restrict_vars(const std::vector<int>& keep) const;
  Polynomial homogeneous_component(long long d) const;
  std::map<long long, Polynomial> homogeneous_components() const;
  Polynomial permuted(const std::vector<int>& sigma) const;

  void add_term(const Monomial& m, Field::Elem c);

 private:
  VarContext ctx_;
  std::map<Monomial, Field::Elem> terms_;
};

// All componentwise factors of m, including 1 and m, in a deterministic
// odometer order (last variable fastest).
std::vector<Monomial> divisors(const Monomial& m,
                               std::uint64_t cap = default_caps().divisor_count);

unsigned long long count_monomials(int nvars, long long degree);
// All monomials of the given total degree, graded-lex ascending.
std::vector<Monomial> monomials_of_degree(
    int nvars, long long degree,
    std::uint64_t cap = default_caps().degree_monomials);

// Text I/O. Grammar: terms joined by '+'; a term is an optional coefficient
// (integer, or "[c0,c1,...]" for extension fields) joined with '*' to
// variable powers "x3^2". Whitespace is insignificant. Printing is exact
// and uses graded-lex descending term order.
Polynomial parse_polynomial(const std::string& text, const VarContext& ctx);
std::string to_string(const Polynomial& f);

}  // namespace coinv
