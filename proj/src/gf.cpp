#include "coinv/gf.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace coinv {

namespace {

bool is_prime(unsigned long long v) {
  if (v < 2) return false;
  for (unsigned long long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

using Coeffs = std::vector<unsigned>;  // dense, constant term first

Coeffs decode(unsigned idx, unsigned p, unsigned r) {
  Coeffs c(r);
  for (unsigned i = 0; i < r; ++i) {
    c[i] = idx % p;
    idx /= p;
  }
  return c;
}

unsigned encode(const Coeffs& c, unsigned p) {
  unsigned idx = 0;
  for (std::size_t i = c.size(); i-- > 0;) idx = idx * p + c[i];
  return idx;
}

// Remainder of a modulo b over Z_p; b monic.
Coeffs poly_mod(Coeffs a, const Coeffs& b, unsigned p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    unsigned lead = a.back();
    if (lead != 0) {
      std::size_t shift = a.size() - 1 - db;
      for (std::size_t k = 0; k <= db; ++k) {
        unsigned sub = (lead * b[k]) % p;
        a[shift + k] = (a[shift + k] + p - sub) % p;
      }
    }
    a.pop_back();
  }
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  return a;
}

Coeffs poly_mul(const Coeffs& a, const Coeffs& b, unsigned p) {
  Coeffs c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  return c;
}

bool is_zero_poly(const Coeffs& a) {
  return std::all_of(a.begin(), a.end(), [](unsigned v) { return v == 0; });
}

// Exhaustive irreducibility test: no monic divisor of degree 1..deg/2.
bool irreducible(const Coeffs& f, unsigned p) {
  const unsigned deg = unsigned(f.size() - 1);
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    unsigned long long count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (unsigned long long enc = 0; enc < count; ++enc) {
      Coeffs g = decode(unsigned(enc), p, d);
      g.push_back(1);  // monic
      if (is_zero_poly(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

}  // namespace

Field Field::make(unsigned p, unsigned r, std::uint64_t cap) {
  if (!is_prime(p)) throw NonPrime(p);
  if (r < 1) throw InvalidSpec("extension degree must be >= 1");
  unsigned long long q = 1;
  for (unsigned i = 0; i < r; ++i) {
    q *= p;
    if (q > cap)
      throw CapExceeded("field size " + std::to_string(p) + "^" +
                        std::to_string(r) + " exceeds cap " +
                        std::to_string(cap));
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->r = r;
  t->q = unsigned(q);

  if (r == 1) {
    t->modulus = {0, 1};  // t + 0: prime-field convention
  } else {
    for (unsigned enc = 0;; ++enc) {
      if (enc >= q) throw InternalError("no irreducible modulus found");
      Coeffs f = decode(enc, p, r);
      f.push_back(1);
      if (irreducible(f, p)) {
        t->modulus.assign(f.begin(), f.end());
        break;
      }
    }
  }

  const unsigned n = t->q;
  Coeffs mod(t->modulus.begin(), t->modulus.end());
  t->add.resize(std::size_t(n) * n);
  t->mul.resize(std::size_t(n) * n);
  t->neg.resize(n);
  t->inv.assign(n, 0);
  for (unsigned a = 0; a < n; ++a) {
    Coeffs ca = decode(a, p, r);
    Coeffs na(r);
    for (unsigned i = 0; i < r; ++i) na[i] = (p - ca[i]) % p;
    t->neg[a] = Elem(encode(na, p));
    for (unsigned b = 0; b < n; ++b) {
      Coeffs cb = decode(b, p, r);
      Coeffs s(r);
      for (unsigned i = 0; i < r; ++i) s[i] = (ca[i] + cb[i]) % p;
      t->add[std::size_t(a) * n + b] = Elem(encode(s, p));
      Coeffs m = poly_mod(poly_mul(ca, cb, p), mod, p);
      m.resize(r, 0);
      Elem prod = Elem(encode(m, p));
      t->mul[std::size_t(a) * n + b] = prod;
      if (prod == 1) t->inv[a] = Elem(b);
    }
  }
  return Field(std::move(t));
}

Field::Elem Field::inv(Elem a) const {
  if (a == 0) throw DivisionByZero();
  return t_->inv[a];
}

Field::Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Field::Elem Field::pow(Elem a, long long e) const {
  if (e < 0) return pow(inv(a), -e);
  Elem result = 1, base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Field::Elem Field::from_int(long long v) const {
  long long m = v % static_cast<long long>(t_->p);
  if (m < 0) m += t_->p;
  return Elem(m);
}

Field::Elem Field::from_coeffs(const std::vector<long long>& c) const {
  if (c.size() > t_->r)
    throw InvalidSpec("coefficient vector longer than extension degree");
  Coeffs cc(t_->r, 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    long long m = c[i] % static_cast<long long>(t_->p);
    if (m < 0) m += t_->p;
    cc[i] = unsigned(m);
  }
  return Elem(encode(cc, t_->p));
}

std::vector<unsigned> Field::coeffs(Elem a) const {
  return decode(a, t_->p, t_->r);
}

std::vector<Field::Elem> Field::elements() const {
  std::vector<Elem> out(t_->q);
  for (unsigned i = 0; i < t_->q; ++i) out[i] = Elem(i);
  return out;
}

unsigned Field::multiplicative_order(Elem a) const {
  if (a == 0) throw InvalidSpec("zero has no multiplicative order");
  unsigned ord = 1;
  Elem x = a;
  while (x != 1) {
    x = mul(x, a);
    ++ord;
    if (ord > t_->q) throw InternalError("order scan exceeded field size");
  }
  return ord;
}

Field::Elem Field::primitive_mth_root(unsigned m) const {
  if (m == 0) throw InvalidSpec("root order must be positive");
  if ((t_->q - 1) % m != 0) throw NotDividing(m, t_->q - 1);
  for (unsigned a = 1; a < t_->q; ++a)
    if (multiplicative_order(Elem(a)) == m) return Elem(a);
  throw InternalError("cyclic group missing an element of dividing order");
}

std::string Field::to_string(Elem a) const {
  if (t_->r == 1) return std::to_string(a);
  auto c = coeffs(a);
  std::ostringstream os;
  os << '[';
  for (unsigned i = 0; i < t_->r; ++i) {
    if (i) os << ',';
    os << c[i];
  }
  os << ']';
  return os.str();
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  if (field != o.field) throw FieldMismatch();
  return {field, field.add(value, o.value)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  if (field != o.field) throw FieldMismatch();
  return {field, field.sub(value, o.value)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  if (field != o.field) throw FieldMismatch();
  return {field, field.mul(value, o.value)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  if (field != o.field) throw FieldMismatch();
  return {field, field.div(value, o.value)};
}

FieldElement FieldElement::parse(const Field& f, const std::string& text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '[') {
    std::vector<long long> cs;
    ++i;
    while (true) {
      std::size_t end;
      try {
        cs.push_back(std::stoll(text.substr(i), &end));
      } catch (const std::exception&) {
        throw ParseError("expected integer in coefficient list", i);
      }
      i += end;
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
    if (i >= text.size() || text[i] != ']')
      throw ParseError("expected ']' closing coefficient list", i);
    return {f, f.from_coeffs(cs)};
  }
  try {
    std::size_t end;
    long long v = std::stoll(text.substr(i), &end);
    return {f, f.from_int(v)};
  } catch (const std::exception&) {
    throw ParseError("expected field element", i);
  }
}

}  // namespace coinv
