#include "coinv/groups.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>

#include "coinv/linalg.hpp"

namespace coinv {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidSpec("composition needs at least one part");
  partial_.push_back(0);
  for (int p : parts_) {
    if (p < 1) throw InvalidSpec("composition parts must be positive");
    partial_.push_back(partial_.back() + p);
  }
}

int Composition::tau(int s) const {
  if (s < 1 || s > n()) throw OutOfRange("tau index out of range");
  for (std::size_t j = 0; j + 1 < partial_.size(); ++j)
    if (partial_[j] < s && s <= partial_[j + 1]) return partial_[j];
  throw InternalError("tau lookup failed");
}

int Composition::block_of(int s) const {
  if (s < 1 || s > n()) throw OutOfRange("block index out of range");
  for (std::size_t j = 0; j + 1 < partial_.size(); ++j)
    if (partial_[j] < s && s <= partial_[j + 1]) return int(j) + 1;
  throw InternalError("block lookup failed");
}

std::string Composition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

Matrix Matrix::identity(const Field& f, int n) {
  Matrix m(f, n);
  for (int i = 0; i < n; ++i) m.set(i, i, f.one());
  return m;
}

Matrix Matrix::permutation(const Field& f, const std::vector<int>& sigma) {
  Matrix m(f, int(sigma.size()));
  for (int j = 0; j < int(sigma.size()); ++j)
    m.set(sigma[std::size_t(j)], j, f.one());
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (n_ != o.n_) throw SizeMismatch("matrix sizes differ");
  if (field_ != o.field_) throw FieldMismatch();
  Matrix out(field_, n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      Field::Elem v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < n_; ++j)
        out.set(i, j, field_.add(out.at(i, j), field_.mul(v, o.at(k, j))));
    }
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n_; ++i) {
    if (i) os << ';';
    for (int j = 0; j < n_; ++j) {
      if (j) os << ',';
      os << field_.to_string(at(i, j));
    }
  }
  os << ']';
  return os.str();
}

unsigned matrix_rank(const Matrix& m) {
  FqMatrix fm(m.field(), m.n(), m.n());
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) fm.at(i, j) = m.at(i, j);
  return rank(std::move(fm));
}

bool is_invertible(const Matrix& m) {
  return matrix_rank(m) == unsigned(m.n());
}

bool is_pseudo_reflection(const Matrix& g) {
  const Field& k = g.field();
  Matrix d = g;
  for (int i = 0; i < g.n(); ++i) d.set(i, i, k.sub(d.at(i, i), k.one()));
  return matrix_rank(d) == 1;
}

GroupSpec GroupSpec::gl(int n) {
  GroupSpec s;
  s.kind = Kind::GL;
  s.n = n;
  return s;
}

GroupSpec GroupSpec::parabolic(Composition c) {
  GroupSpec s;
  s.kind = Kind::Parabolic;
  s.comp = std::move(c);
  return s;
}

GroupSpec GroupSpec::unipotent(Composition c) {
  GroupSpec s;
  s.kind = Kind::Unipotent;
  s.comp = std::move(c);
  return s;
}

GroupSpec GroupSpec::levi(Composition c, std::vector<GroupSpec> blocks) {
  GroupSpec s;
  s.kind = Kind::Levi;
  s.comp = std::move(c);
  s.blocks = std::move(blocks);
  return s;
}

GroupSpec GroupSpec::block_triangular(Composition c,
                                      std::vector<GroupSpec> blocks) {
  GroupSpec s;
  s.kind = Kind::BlockTriangular;
  s.comp = std::move(c);
  s.blocks = std::move(blocks);
  return s;
}

GroupSpec GroupSpec::imprimitive(int m, int a, int n) {
  GroupSpec s;
  s.kind = Kind::Imprimitive;
  s.m = m;
  s.a = a;
  s.gn = n;
  return s;
}

GroupSpec GroupSpec::borel(int n) {
  GroupSpec s;
  s.kind = Kind::Borel;
  s.n = n;
  return s;
}

GroupSpec GroupSpec::weyl_cartan(int n1, int n2, int m) {
  GroupSpec s;
  s.kind = Kind::WeylCartan;
  s.n1 = n1;
  s.n2 = n2;
  s.wm = m;
  return s;
}

int GroupSpec::dimension() const {
  switch (kind) {
    case Kind::GL:
    case Kind::Borel:
      return n;
    case Kind::Parabolic:
    case Kind::Unipotent:
    case Kind::Levi:
    case Kind::BlockTriangular:
      return comp->n();
    case Kind::Imprimitive:
      return gn;
    case Kind::WeylCartan:
      return n1 + n2;
  }
  throw InternalError("unknown group kind");
}

void GroupSpec::validate(const Field& f) const {
  switch (kind) {
    case Kind::GL:
    case Kind::Borel:
      if (n < 1) throw InvalidSpec("group dimension must be positive");
      return;
    case Kind::Parabolic:
    case Kind::Unipotent:
      return;  // composition validated at construction
    case Kind::Levi:
    case Kind::BlockTriangular: {
      if (int(blocks.size()) != comp->blocks())
        throw InvalidSpec("one block group per composition part required");
      for (int i = 1; i <= comp->blocks(); ++i) {
        const GroupSpec& b = blocks[std::size_t(i - 1)];
        if (b.dimension() != comp->part(i))
          throw InvalidSpec("block group " + std::to_string(i) +
                            " has dimension " + std::to_string(b.dimension()) +
                            ", expected " + std::to_string(comp->part(i)));
        b.validate(f);
      }
      return;
    }
    case Kind::Imprimitive: {
      if (m < 1 || a < 1 || gn < 1) throw InvalidSpec("G(m,a,n) needs positive parameters");
      if (m % a != 0) throw InvalidSpec("G(m,a,n) requires a | m");
      if ((f.q() - 1) % unsigned(m) != 0)
        throw InvalidSpec("G(m,a,n) over F_q requires m | q-1 (m=" +
                          std::to_string(m) + ", q=" + std::to_string(f.q()) +
                          ")");
      return;
    }
    case Kind::WeylCartan: {
      if (n1 < 1 || n2 < 1) throw InvalidSpec("block sizes must be positive");
      if (wm != 1 && wm != 2) throw InvalidSpec("preset requires m in {1,2}");
      if (f.r() != 1) throw InvalidSpec("preset requires a prime field (q = p)");
      if ((f.q() - 1) % unsigned(wm) != 0)
        throw InvalidSpec("preset requires m | p-1");
      return;
    }
  }
  throw InternalError("unknown group kind");
}

std::string GroupSpec::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::GL:
      os << "GL(" << n << ')';
      break;
    case Kind::Borel:
      os << "B(" << n << ')';
      break;
    case Kind::Parabolic:
      os << "P(" << comp->to_string() << ')';
      break;
    case Kind::Unipotent:
      os << "U(" << comp->to_string() << ')';
      break;
    case Kind::Levi:
    case Kind::BlockTriangular: {
      os << (kind == Kind::Levi ? "L(" : "GI(") << comp->to_string() << ';';
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) os << ',';
        os << blocks[i].to_string();
      }
      os << ')';
      break;
    }
    case Kind::Imprimitive:
      os << "G(" << m << ',' << a << ',' << gn << ')';
      break;
    case Kind::WeylCartan:
      os << "W(" << n1 << ',' << n2 << ";m=" << wm << ')';
      break;
  }
  return os.str();
}

namespace {

// Embeds g into the identity of size n at diagonal offset.
Matrix embed_block(const Matrix& g, int n, int offset) {
  Matrix out = Matrix::identity(g.field(), n);
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.n(); ++j) out.set(offset + i, offset + j, g.at(i, j));
  return out;
}

Matrix transvection(const Field& f, int n, int s, int t, Field::Elem c) {
  Matrix m = Matrix::identity(f, n);
  m.set(s, t, c);
  return m;
}

void append_unipotent_generators(const Composition& c, const Field& f,
                                 std::vector<Matrix>& out) {
  const int n = c.n();
  // One generator per F_p-basis scalar so extension fields are covered.
  std::vector<Field::Elem> basis;
  for (unsigned u = 0; u < f.r(); ++u) {
    std::vector<long long> cs(f.r(), 0);
    cs[u] = 1;
    basis.push_back(f.from_coeffs(cs));
  }
  for (int s = 1; s <= n; ++s)
    for (int t = 1; t <= n; ++t)
      if (c.block_of(s) < c.block_of(t))
        for (Field::Elem b : basis)
          out.push_back(transvection(f, n, s - 1, t - 1, b));
}

std::vector<Matrix> gl_generators(const Field& f, int n) {
  std::vector<Matrix> out;
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> sigma(std::size_t(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::swap(sigma[std::size_t(i)], sigma[std::size_t(i) + 1]);
    out.push_back(Matrix::permutation(f, sigma));
  }
  if (n >= 2) out.push_back(transvection(f, n, 0, 1, f.one()));
  if (f.q() > 2) {
    Matrix d = Matrix::identity(f, n);
    d.set(0, 0, f.primitive_mth_root(f.q() - 1));
    out.push_back(d);
  }
  if (out.empty()) out.push_back(Matrix::identity(f, n));
  return out;
}

std::vector<Matrix> imprimitive_generators(const Field& f, int m, int a,
                                           int n) {
  std::vector<Matrix> out;
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> sigma(std::size_t(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::swap(sigma[std::size_t(i)], sigma[std::size_t(i) + 1]);
    out.push_back(Matrix::permutation(f, sigma));
  }
  if (m > 1) {
    Field::Elem zeta = f.primitive_mth_root(unsigned(m));
    // Determinant-one torus part.
    for (int i = 0; i + 1 < n; ++i) {
      Matrix d = Matrix::identity(f, n);
      d.set(i, i, zeta);
      d.set(i + 1, i + 1, f.inv(zeta));
      out.push_back(d);
    }
    // Determinant zeta^a part.
    Field::Elem za = f.pow(zeta, a);
    if (za != f.one()) {
      Matrix d = Matrix::identity(f, n);
      d.set(0, 0, za);
      out.push_back(d);
    }
  }
  if (out.empty()) out.push_back(Matrix::identity(f, n));
  return out;
}

}  // namespace

std::vector<Matrix> generators(const GroupSpec& spec, const Field& f) {
  spec.validate(f);
  switch (spec.kind) {
    case GroupSpec::Kind::GL:
      return gl_generators(f, spec.n);
    case GroupSpec::Kind::Borel: {
      std::vector<int> ones(std::size_t(spec.n), 1);
      return generators(GroupSpec::parabolic(Composition(ones)), f);
    }
    case GroupSpec::Kind::Unipotent: {
      std::vector<Matrix> out;
      append_unipotent_generators(*spec.comp, f, out);
      if (out.empty()) out.push_back(Matrix::identity(f, spec.comp->n()));
      return out;
    }
    case GroupSpec::Kind::Parabolic: {
      std::vector<Matrix> out;
      const Composition& c = *spec.comp;
      for (int i = 1; i <= c.blocks(); ++i)
        for (const Matrix& g : gl_generators(f, c.part(i)))
          out.push_back(embed_block(g, c.n(), c.partial(i - 1)));
      append_unipotent_generators(c, f, out);
      return out;
    }
    case GroupSpec::Kind::Levi:
    case GroupSpec::Kind::BlockTriangular: {
      std::vector<Matrix> out;
      const Composition& c = *spec.comp;
      for (int i = 1; i <= c.blocks(); ++i)
        for (const Matrix& g : generators(spec.blocks[std::size_t(i - 1)], f))
          out.push_back(embed_block(g, c.n(), c.partial(i - 1)));
      if (spec.kind == GroupSpec::Kind::BlockTriangular)
        append_unipotent_generators(c, f, out);
      return out;
    }
    case GroupSpec::Kind::Imprimitive:
      return imprimitive_generators(f, spec.m, spec.a, spec.gn);
    case GroupSpec::Kind::WeylCartan: {
      return generators(
          GroupSpec::block_triangular(
              Composition({spec.n1, spec.n2}),
              {GroupSpec::gl(spec.n1),
               GroupSpec::imprimitive(spec.wm, 1, spec.n2)}),
          f);
    }
  }
  throw InternalError("unknown group kind");
}

std::set<Matrix> closure(const std::vector<Matrix>& gens, std::uint64_t cap) {
  if (gens.empty()) throw InvalidSpec("closure needs at least one generator");
  for (const Matrix& g : gens)
    if (!is_invertible(g)) throw InvalidSpec("generator is singular");
  const Field& f = gens.front().field();
  const int n = gens.front().n();
  std::set<Matrix> seen;
  std::deque<Matrix> queue;
  Matrix id = Matrix::identity(f, n);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Matrix u = queue.front();
    queue.pop_front();
    for (const Matrix& g : gens) {
      Matrix v = u * g;
      if (seen.insert(v).second) {
        if (seen.size() > cap)
          throw CapExceeded("group closure exceeds cap " + std::to_string(cap));
        queue.push_back(std::move(v));
      }
    }
  }
  return seen;
}

unsigned long long group_order(const GroupSpec& spec, const Field& f,
                               std::uint64_t cap) {
  return closure(generators(spec, f), cap).size();
}

Polynomial act(const Matrix& g, const Polynomial& f) {
  const VarContext& ctx = f.context();
  if (g.n() != ctx.nvars) throw SizeMismatch("matrix size != variable count");
  if (g.field() != ctx.field) throw FieldMismatch();
  std::vector<Polynomial> images;
  images.reserve(std::size_t(ctx.nvars));
  for (int i = 0; i < ctx.nvars; ++i) {
    Polynomial im(ctx);
    for (int j = 0; j < ctx.nvars; ++j)
      im.add_term(Monomial(ctx.nvars).with_exp(j, 1), g.at(j, i));
    images.push_back(std::move(im));
  }
  return f.substitute(images);
}

bool is_invariant(const Polynomial& f, const std::vector<Matrix>& gens) {
  for (const Matrix& g : gens)
    if (act(g, f) != f) return false;
  return true;
}

bool is_invariant(const Polynomial& f, const GroupSpec& spec, const Field& k) {
  return is_invariant(f, generators(spec, k));
}

std::vector<std::vector<int>> fixing_permutations(
    const std::vector<Polynomial>& gens, int max_n) {
  if (gens.empty()) throw InvalidSpec("empty generator list");
  const int n = gens.front().context().nvars;
  if (n > max_n)
    throw CapExceeded("permutation scan capped at " + std::to_string(max_n) +
                      " variables");
  std::vector<int> sigma(std::size_t(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool fixes = true;
    for (const Polynomial& f : gens)
      if (f.permuted(sigma) != f) {
        fixes = false;
        break;
      }
    if (fixes) out.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

namespace {

struct SpecParser {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool peek_is(char c) {
    skip_ws();
    return i < s.size() && s[i] == c;
  }

  void expect(char c) {
    skip_ws();
    if (i >= s.size() || s[i] != c)
      throw ParseError(std::string("expected '") + c + "'", i);
    ++i;
  }

  int integer() {
    skip_ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("expected integer", i);
    long long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      if (v > 1000000) throw ParseError("integer too large", i);
      ++i;
    }
    return int(v);
  }

  std::string ident() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw ParseError("expected group name", i);
    return s.substr(start, i - start);
  }

  std::vector<int> int_list() {
    std::vector<int> v{integer()};
    while (peek_is(',')) {
      ++i;
      v.push_back(integer());
    }
    return v;
  }

  GroupSpec spec(std::optional<int> block_size = std::nullopt) {
    std::string name = ident();
    skip_ws();
    if (name == "GL") {
      if (!peek_is('(')) {
        if (block_size) return GroupSpec::gl(*block_size);
        throw ParseError("GL needs a dimension", i);
      }
      expect('(');
      int n = integer();
      expect(')');
      return GroupSpec::gl(n);
    }
    if (name == "B") {
      expect('(');
      int n = integer();
      expect(')');
      return GroupSpec::borel(n);
    }
    if (name == "U" || name == "P") {
      expect('(');
      Composition c(int_list());
      expect(')');
      return name == "U" ? GroupSpec::unipotent(c) : GroupSpec::parabolic(c);
    }
    if (name == "G") {
      expect('(');
      int m = integer();
      expect(',');
      int a = integer();
      expect(',');
      int n = integer();
      expect(')');
      return GroupSpec::imprimitive(m, a, n);
    }
    if (name == "GI" || name == "L") {
      expect('(');
      Composition c(int_list());
      expect(';');
      std::vector<GroupSpec> blocks;
      for (int b = 1; b <= c.blocks(); ++b) {
        if (b > 1) expect(',');
        blocks.push_back(spec(c.part(b)));
      }
      expect(')');
      return name == "GI" ? GroupSpec::block_triangular(c, std::move(blocks))
                          : GroupSpec::levi(c, std::move(blocks));
    }
    if (name == "W") {
      expect('(');
      int a = integer();
      expect(',');
      int b = integer();
      int m = 1;
      if (peek_is(';')) {
        ++i;
        std::string key = ident();
        if (key != "m") throw ParseError("expected 'm='", i);
        expect('=');
        m = integer();
      }
      expect(')');
      return GroupSpec::weyl_cartan(a, b, m);
    }
    throw ParseError("unknown group '" + name + "'", i);
  }
};

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
  SpecParser p{text};
  GroupSpec g = p.spec();
  p.skip_ws();
  if (p.i != text.size())
    throw ParseError("unexpected trailing input", p.i);
  return g;
}

}  // namespace coinv
