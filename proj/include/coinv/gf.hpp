#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "coinv/caps.hpp"
#include "coinv/errors.hpp"

namespace coinv {

// Exact arithmetic in F_q with q = p^r <= 512.
//
// Elements are canonical indices 0..q-1 encoding the coefficient vector of
// the representative modulo the modulus polynomial, least significant digit
// first: index = c_0 + c_1*p + ... + c_{r-1}*p^{r-1}. Index 0 is the zero
// element and index 1 the one element, so prime fields read as plain
// integers mod p. All arithmetic goes through precomputed tables.
class Field {
 public:
  using Elem = std::uint16_t;

  // Deterministic construction: the modulus is the monic irreducible of
  // degree r whose non-leading coefficient vector has the smallest base-p
  // encoding (t^2+t+1 for F_4, t^3+t+1 for F_8, t^2+1 for F_9, ...).
  // Note this differs from Conway-polynomial labelling.
  static Field make(unsigned p, unsigned r,
                    std::uint64_t cap = default_caps().field_q);

  unsigned p() const { return t_->p; }
  unsigned r() const { return t_->r; }
  unsigned q() const { return t_->q; }
  // Monic modulus polynomial, length r+1, constant term first.
  const std::vector<unsigned>& modulus() const { return t_->modulus; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const { return t_->add[std::size_t(a) * t_->q + b]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const { return t_->mul[std::size_t(a) * t_->q + b]; }
  Elem neg(Elem a) const { return t_->neg[a]; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, long long e) const;

  // Embeds an integer via Z -> Z/p -> F_q.
  Elem from_int(long long v) const;
  // Builds the element with the given coefficient vector (length <= r),
  // entries reduced mod p.
  Elem from_coeffs(const std::vector<long long>& c) const;
  std::vector<unsigned> coeffs(Elem a) const;

  // All q elements; elements()[0] == 0, elements()[1] == 1.
  std::vector<Elem> elements() const;

  unsigned multiplicative_order(Elem a) const;
  // Smallest element (in index order) of multiplicative order exactly m.
  // Requires m | q-1.
  Elem primitive_mth_root(unsigned m) const;

  // "3" for prime-field elements, "[c0,c1,...]" otherwise.
  std::string to_string(Elem a) const;

  bool operator==(const Field& o) const {
    return t_ == o.t_ || (t_->p == o.t_->p && t_->modulus == o.t_->modulus);
  }
  bool operator!=(const Field& o) const { return !(*this == o); }

 private:
  struct Tables {
    unsigned p = 0, r = 0, q = 0;
    std::vector<unsigned> modulus;
    std::vector<Elem> add, mul;  // q*q, row-major
    std::vector<Elem> neg, inv;  // inv[0] is unused
  };

  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  std::shared_ptr<const Tables> t_;
};

// An element tagged with its field; arithmetic checks field compatibility.
struct FieldElement {
  Field field;
  Field::Elem value = 0;

  FieldElement(Field f, Field::Elem v) : field(std::move(f)), value(v) {}

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  bool operator==(const FieldElement& o) const {
    return field == o.field && value == o.value;
  }

  // Accepts "3" or "[1,1]".
  static FieldElement parse(const Field& f, const std::string& text);
  std::string to_string() const { return field.to_string(value); }
};

}  // namespace coinv
