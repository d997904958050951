#include "coinv/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace coinv {

long long Monomial::degree() const {
  long long d = 0;
  for (auto e : e_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(),
                     [](std::uint32_t e) { return e == 0; });
}

bool Monomial::divides(const Monomial& o) const {
  if (e_.size() != o.e_.size()) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::times(const Monomial& o, std::uint32_t cap) const {
  if (e_.size() != o.e_.size()) throw ContextMismatch();
  std::vector<std::uint32_t> e(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) {
    std::uint64_t s = std::uint64_t(e_[i]) + o.e_[i];
    if (s > cap)
      throw CapExceeded("monomial exponent " + std::to_string(s) +
                        " exceeds cap " + std::to_string(cap));
    e[i] = std::uint32_t(s);
  }
  return Monomial(std::move(e));
}

Monomial Monomial::quotient(const Monomial& o) const {
  if (!o.divides(*this)) throw OutOfRange("monomial quotient is not exact");
  std::vector<std::uint32_t> e(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) e[i] = e_[i] - o.e_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::with_exp(int i, std::uint32_t e) const {
  std::vector<std::uint32_t> v = e_;
  v[std::size_t(i)] = e;
  return Monomial(std::move(v));
}

Monomial Monomial::permuted(const std::vector<int>& sigma) const {
  std::vector<std::uint32_t> e(e_.size(), 0);
  for (std::size_t i = 0; i < e_.size(); ++i) e[std::size_t(sigma[i])] = e_[i];
  return Monomial(std::move(e));
}

bool Monomial::operator<(const Monomial& o) const {
  long long da = degree(), db = o.degree();
  if (da != db) return da < db;
  // Same degree: lexicographic with x1 heaviest.
  return e_ < o.e_;
}

std::string Monomial::to_string() const {
  if (is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << (i + 1);
    if (e_[i] > 1) os << '^' << e_[i];
  }
  return os.str();
}

Polynomial Polynomial::constant(const VarContext& ctx, Field::Elem c) {
  Polynomial f(ctx);
  f.add_term(Monomial(ctx.nvars), c);
  return f;
}

Polynomial Polynomial::one(const VarContext& ctx) {
  return constant(ctx, ctx.field.one());
}

Polynomial Polynomial::variable(const VarContext& ctx, int i) {
  if (i < 0 || i >= ctx.nvars)
    throw OutOfRange("variable index out of range");
  Polynomial f(ctx);
  f.add_term(Monomial(ctx.nvars).with_exp(i, 1), ctx.field.one());
  return f;
}

Polynomial Polynomial::term(const VarContext& ctx, Monomial m, Field::Elem c) {
  if (m.nvars() != ctx.nvars) throw ContextMismatch();
  Polynomial f(ctx);
  f.add_term(m, c);
  return f;
}

long long Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  long long d = terms_.begin()->first.degree();
  return terms_.rbegin()->first.degree() == d;
}

Field::Elem Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ctx_.field.zero() : it->second;
}

void Polynomial::add_term(const Monomial& m, Field::Elem c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = ctx_.field.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (ctx_ != o.ctx_) throw ContextMismatch();
  Polynomial out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  if (ctx_ != o.ctx_) throw ContextMismatch();
  Polynomial out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, ctx_.field.neg(c));
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(ctx_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, ctx_.field.neg(c));
  return out;
}

Polynomial Polynomial::scaled(Field::Elem c) const {
  Polynomial out(ctx_);
  if (c == 0) return out;
  for (const auto& [m, v] : terms_)
    out.terms_.emplace(m, ctx_.field.mul(v, c));
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (ctx_ != o.ctx_) throw ContextMismatch();
  Polynomial out(ctx_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_)
      out.add_term(ma.times(mb), ctx_.field.mul(ca, cb));
  return out;
}

Polynomial Polynomial::pow(std::uint32_t k) const {
  Polynomial result = one(ctx_);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    if (k >>= 1) base = base * base;
  }
  return result;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (int(images.size()) != ctx_.nvars)
    throw ContextMismatch("substitution needs one image per variable");
  const VarContext* octx = nullptr;
  for (const auto& im : images) {
    if (!octx)
      octx = &im.context();
    else if (*octx != im.context())
      throw ContextMismatch("substitution images disagree on context");
  }
  if (!octx) {  // zero variables: constants only
    throw ContextMismatch("substitution needs at least one image");
  }
  Polynomial out(*octx);
  for (const auto& [m, c] : terms_) {
    Polynomial t = Polynomial::constant(*octx, c);
    for (int i = 0; i < ctx_.nvars; ++i)
      if (m.exp(i) > 0) t = t * images[std::size_t(i)].pow(m.exp(i));
    out = out + t;
  }
  return out;
}

Polynomial Polynomial::restrict_vars(const std::vector<int>& keep) const {
  std::vector<bool> keepmask(std::size_t(ctx_.nvars), false);
  for (int i : keep) {
    if (i < 0 || i >= ctx_.nvars) throw OutOfRange("variable index out of range");
    keepmask[std::size_t(i)] = true;
  }
  Polynomial out(ctx_);
  for (const auto& [m, c] : terms_) {
    bool dies = false;
    for (int i = 0; i < ctx_.nvars; ++i)
      if (m.exp(i) > 0 && !keepmask[std::size_t(i)]) {
        dies = true;
        break;
      }
    if (!dies) out.add_term(m, c);
  }
  return out;
}

Polynomial Polynomial::homogeneous_component(long long d) const {
  Polynomial out(ctx_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) out.terms_.emplace(m, c);
  return out;
}

std::map<long long, Polynomial> Polynomial::homogeneous_components() const {
  std::map<long long, Polynomial> out;
  for (const auto& [m, c] : terms_) {
    auto [it, _] = out.try_emplace(m.degree(), ctx_);
    it->second.terms_.emplace(m, c);
  }
  return out;
}

Polynomial Polynomial::permuted(const std::vector<int>& sigma) const {
  Polynomial out(ctx_);
  for (const auto& [m, c] : terms_) out.add_term(m.permuted(sigma), c);
  return out;
}

std::vector<Monomial> divisors(const Monomial& m, std::uint64_t cap) {
  unsigned long long count = 1;
  for (int i = 0; i < m.nvars(); ++i) {
    count *= (std::uint64_t(m.exp(i)) + 1);
    if (count > cap)
      throw CapExceeded("factor count exceeds cap " + std::to_string(cap));
  }
  std::vector<Monomial> out;
  out.reserve(count);
  std::vector<std::uint32_t> e(std::size_t(m.nvars()), 0);
  while (true) {
    out.push_back(Monomial(e));
    int i = m.nvars() - 1;
    while (i >= 0 && e[std::size_t(i)] == m.exp(i)) {
      e[std::size_t(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++e[std::size_t(i)];
  }
  return out;
}

unsigned long long count_monomials(int nvars, long long degree) {
  // C(degree + nvars - 1, nvars - 1)
  unsigned long long c = 1;
  for (long long i = 1; i < nvars; ++i) {
    c = c * std::uint64_t(degree + i);
    c /= std::uint64_t(i);
  }
  return c;
}

std::vector<Monomial> monomials_of_degree(int nvars, long long degree,
                                          std::uint64_t cap) {
  if (degree < 0) return {};
  unsigned long long count = count_monomials(nvars, degree);
  if (count > cap)
    throw CapExceeded("monomial count " + std::to_string(count) +
                      " at degree " + std::to_string(degree) +
                      " exceeds cap " + std::to_string(cap));
  std::vector<Monomial> out;
  out.reserve(count);
  std::vector<std::uint32_t> e(std::size_t(nvars), 0);
  // Recursive descent emits graded-lex descending; build then reverse.
  auto emit = [&](auto&& self, int pos, long long rest) -> void {
    if (pos == nvars - 1) {
      e[std::size_t(pos)] = std::uint32_t(rest);
      out.push_back(Monomial(e));
      return;
    }
    for (long long v = rest; v >= 0; --v) {
      e[std::size_t(pos)] = std::uint32_t(v);
      self(self, pos + 1, rest - v);
    }
  };
  emit(emit, 0, degree);
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

struct Parser {
  const std::string& s;
  const VarContext& ctx;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  unsigned long long integer() {
    skip_ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("expected integer", i);
    unsigned long long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + std::uint64_t(s[i] - '0');
      if (v > (1ull << 40)) throw ParseError("integer too large", i);
      ++i;
    }
    return v;
  }

  Field::Elem coefficient() {
    skip_ws();
    if (i < s.size() && s[i] == '[') {
      ++i;
      std::vector<long long> cs;
      cs.push_back(static_cast<long long>(integer()));
      while (eat(',')) cs.push_back(static_cast<long long>(integer()));
      if (!eat(']')) throw ParseError("expected ']'", i);
      return ctx.field.from_coeffs(cs);
    }
    return ctx.field.from_int(static_cast<long long>(integer()));
  }

  // var power "x3^2"; returns (index, exponent)
  std::pair<int, std::uint32_t> var_power() {
    skip_ws();
    std::size_t at = i;
    ++i;  // 'x' already checked by caller
    unsigned long long idx = integer();
    if (idx < 1 || idx > std::uint64_t(ctx.nvars))
      throw ParseError("variable index out of range 1.." +
                           std::to_string(ctx.nvars),
                       at);
    std::uint32_t e = 1;
    if (eat('^')) {
      unsigned long long v = integer();
      if (v > default_caps().exponent)
        throw CapExceeded("exponent " + std::to_string(v) + " exceeds cap");
      e = std::uint32_t(v);
    }
    return {int(idx) - 1, e};
  }

  Polynomial term() {
    skip_ws();
    Field::Elem c = ctx.field.one();
    Monomial m(ctx.nvars);
    bool have_coeff = false, have_var = false;
    if (i < s.size() &&
        (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '[')) {
      c = coefficient();
      have_coeff = true;
    }
    while (true) {
      skip_ws();
      std::size_t save = i;
      if ((have_coeff || have_var) && !eat('*')) break;
      skip_ws();
      if (i < s.size() && s[i] == 'x') {
        auto [idx, e] = var_power();
        m = m.times(Monomial(ctx.nvars).with_exp(idx, e));
        have_var = true;
      } else if (have_coeff || have_var) {
        i = save;
        break;
      } else {
        throw ParseError("expected coefficient or variable", i);
      }
    }
    if (!have_coeff && !have_var)
      throw ParseError("expected term", i);
    return Polynomial::term(ctx, m, c);
  }

  Polynomial poly() {
    Polynomial f = term();
    while (eat('+')) f = f + term();
    skip_ws();
    if (i != s.size()) throw ParseError("unexpected trailing input", i);
    return f;
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const VarContext& ctx) {
  Parser p{text, ctx};
  return p.poly();
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const Field& k = f.context().field;
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << " + ";
    first = false;
    if (m.is_one()) {
      os << k.to_string(c);
    } else if (c == k.one()) {
      os << m.to_string();
    } else {
      os << k.to_string(c) << '*' << m.to_string();
    }
  }
  return os.str();
}

}  // namespace coinv
