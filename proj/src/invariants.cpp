#include "coinv/invariants.hpp"

#include <sstream>

namespace coinv {

namespace {

std::string idx2(const char* sym, int i, int j) {
  std::ostringstream os;
  os << sym << '_' << i << ',' << j;
  return os.str();
}

// Iterates over all vectors in F_q^k (odometer order).
template <typename Fn>
void for_each_tuple(const Field& f, int k, Fn&& fn) {
  std::vector<Field::Elem> lambda(std::size_t(k), 0);
  while (true) {
    fn(lambda);
    int i = k - 1;
    while (i >= 0 && lambda[std::size_t(i)] == f.q() - 1) {
      lambda[std::size_t(i)] = 0;
      --i;
    }
    if (i < 0) break;
    lambda[std::size_t(i)] = Field::Elem(lambda[std::size_t(i)] + 1);
  }
}

std::uint64_t checked_power(std::uint64_t base, int e, std::uint64_t cap,
                            const char* what) {
  std::uint64_t v = 1;
  for (int i = 0; i < e; ++i) {
    v *= base;
    if (v > cap)
      throw CapExceeded(std::string(what) + " needs " + std::to_string(v) +
                        "+ factors, cap is " + std::to_string(cap));
  }
  return v;
}

}  // namespace

InvariantSystem make_system(VarContext ctx, GroupSpec group,
                            std::vector<Polynomial> gens,
                            std::vector<std::string> provenance) {
  if (int(gens.size()) != ctx.nvars)
    throw InvalidSpec("system needs exactly one generator per variable");
  if (provenance.size() != gens.size())
    throw InvalidSpec("one provenance tag per generator required");
  InvariantSystem sys{std::move(ctx), std::move(group), std::move(gens),
                      {}, std::move(provenance)};
  std::vector<Matrix> gmats = generators(sys.group, sys.ctx.field);
  for (std::size_t i = 0; i < sys.gens.size(); ++i) {
    const Polynomial& g = sys.gens[i];
    if (g.context() != sys.ctx) throw ContextMismatch();
    if (g.is_zero() || !g.is_homogeneous() || g.degree() < 1)
      throw InvalidSpec("generator " + std::to_string(i + 1) +
                        " is not homogeneous of positive degree");
    if (!is_invariant(g, gmats))
      throw InternalError("generator " + sys.provenance[i] + " = " +
                          to_string(g) + " is not invariant under " +
                          sys.group.to_string());
    sys.degrees.push_back(g.degree());
  }
  return sys;
}

Polynomial orbit_product_v(const VarContext& ctx, int k, std::uint64_t cap) {
  if (k < 1 || k > ctx.nvars) throw OutOfRange("orbit product index out of range");
  const Field& f = ctx.field;
  checked_power(f.q(), k - 1, cap, "orbit product");
  Polynomial prod = Polynomial::one(ctx);
  for_each_tuple(f, k - 1, [&](const std::vector<Field::Elem>& lambda) {
    Polynomial lin(ctx);
    for (int i = 0; i < k - 1; ++i)
      lin.add_term(Monomial(ctx.nvars).with_exp(i, 1), lambda[std::size_t(i)]);
    lin.add_term(Monomial(ctx.nvars).with_exp(k - 1, 1), f.one());
    prod = prod * lin;
  });
  return prod;
}

Polynomial orbit_product_l(const VarContext& ctx, int k, std::uint64_t cap) {
  Polynomial prod = Polynomial::one(ctx);
  for (int i = 1; i <= k; ++i) prod = prod * orbit_product_v(ctx, i, cap);
  return prod;
}

std::vector<Polynomial> dickson_polynomials(const VarContext& ctx,
                                            std::uint64_t cap) {
  const Field& f = ctx.field;
  const int n = ctx.nvars;
  checked_power(f.q(), n, cap, "Dickson product");
  // Carry X as variable index 0 of an (n+1)-variable context.
  VarContext xctx{f, n + 1};
  Polynomial prod = Polynomial::one(xctx);
  for_each_tuple(f, n, [&](const std::vector<Field::Elem>& lambda) {
    Polynomial lin(xctx);
    lin.add_term(Monomial(n + 1).with_exp(0, 1), f.one());
    for (int i = 0; i < n; ++i)
      lin.add_term(Monomial(n + 1).with_exp(i + 1, 1), lambda[std::size_t(i)]);
    prod = prod * lin;
  });
  // Slice by the X-exponent; only q-powers may occur.
  std::vector<std::uint64_t> qpow(std::size_t(n) + 1);
  qpow[0] = 1;
  for (int k = 1; k <= n; ++k) qpow[std::size_t(k)] = qpow[std::size_t(k - 1)] * f.q();
  std::vector<Polynomial> slices(std::size_t(n) + 1, Polynomial::zero(ctx));
  for (const auto& [mon, c] : prod.terms()) {
    std::uint64_t xe = mon.exp(0);
    int k = -1;
    for (int j = 0; j <= n; ++j)
      if (qpow[std::size_t(j)] == xe) {
        k = j;
        break;
      }
    if (k < 0)
      throw InternalError(
          "additive polynomial has a non-q-power X exponent " +
          std::to_string(xe));
    std::vector<std::uint32_t> e(std::size_t(n));
    for (int i = 0; i < n; ++i) e[std::size_t(i)] = mon.exp(i + 1);
    slices[std::size_t(k)].add_term(Monomial(std::move(e)), c);
  }
  if (slices[std::size_t(n)] != Polynomial::one(ctx))
    throw InternalError("leading X coefficient is not 1");
  slices.pop_back();  // drop the X^{q^n} slice; Q_{n,0}..Q_{n,n-1} remain
  return slices;
}

InvariantSystem dickson_system(const Field& f, int n) {
  VarContext ctx{f, n};
  std::vector<Polynomial> q = dickson_polynomials(ctx);
  std::vector<Polynomial> gens;
  std::vector<std::string> prov;
  for (int j = 1; j <= n; ++j) {
    gens.push_back(q[std::size_t(n - j)]);
    prov.push_back(idx2("Q", n, n - j));
  }
  return make_system(ctx, GroupSpec::gl(n), std::move(gens), std::move(prov));
}

std::vector<std::vector<Polynomial>> steinberg_generators(const Field& f,
                                                          const Composition& c,
                                                          std::uint64_t cap) {
  VarContext ctx{f, c.n()};
  std::vector<std::vector<Polynomial>> v;
  for (int i = 1; i <= c.blocks(); ++i) {
    const int base = c.partial(i - 1);
    checked_power(f.q(), base, cap, "orbit product");
    std::vector<Polynomial> row;
    for (int j = 1; j <= c.part(i); ++j) {
      // F_{m_{i-1}}(x_{m_{i-1}+j}): the orbit product of x over the span of
      // the first m_{i-1} variables.
      Polynomial prod = Polynomial::one(ctx);
      for_each_tuple(f, base, [&](const std::vector<Field::Elem>& lambda) {
        Polynomial lin(ctx);
        lin.add_term(Monomial(ctx.nvars).with_exp(base + j - 1, 1), f.one());
        for (int s = 0; s < base; ++s)
          lin.add_term(Monomial(ctx.nvars).with_exp(s, 1), lambda[std::size_t(s)]);
        prod = prod * lin;
      });
      row.push_back(std::move(prod));
    }
    v.push_back(std::move(row));
  }
  return v;
}

InvariantSystem unipotent_system(const Field& f, const Composition& c) {
  VarContext ctx{f, c.n()};
  auto v = steinberg_generators(f, c);
  std::vector<Polynomial> gens;
  std::vector<std::string> prov;
  for (int j = 1; j <= c.part(1); ++j) {
    gens.push_back(Polynomial::variable(ctx, j - 1));
    prov.push_back("x_" + std::to_string(j));
  }
  for (int i = 2; i <= c.blocks(); ++i)
    for (int j = 1; j <= c.part(i); ++j) {
      gens.push_back(v[std::size_t(i - 1)][std::size_t(j - 1)]);
      prov.push_back(idx2("v", i, j));
    }
  return make_system(ctx, GroupSpec::unipotent(c), std::move(gens),
                     std::move(prov));
}

InvariantSystem parabolic_system(const Field& f, const Composition& c) {
  VarContext ctx{f, c.n()};
  auto v = steinberg_generators(f, c);
  std::vector<Polynomial> gens;
  std::vector<std::string> prov;
  for (int i = 1; i <= c.blocks(); ++i) {
    const int ni = c.part(i);
    VarContext bctx{f, ni};
    std::vector<Polynomial> q = dickson_polynomials(bctx);
    for (int j = 1; j <= ni; ++j) {
      gens.push_back(q[std::size_t(ni - j)].substitute(v[std::size_t(i - 1)]));
      prov.push_back(idx2("q", i, j));
    }
  }
  return make_system(ctx, GroupSpec::parabolic(c), std::move(gens),
                     std::move(prov));
}

InvariantSystem imprimitive_system(const Field& f, int m, int a, int n) {
  GroupSpec spec = GroupSpec::imprimitive(m, a, n);
  spec.validate(f);
  VarContext ctx{f, n};
  std::vector<Polynomial> gens;
  std::vector<std::string> prov;
  // e_i = sum over i-subsets of products of m-th powers.
  for (int i = 1; i < n; ++i) {
    Polynomial e(ctx);
    std::vector<int> subset;
    auto rec = [&](auto&& self, int next) -> void {
      if (int(subset.size()) == i) {
        Monomial mon(n);
        for (int s : subset) mon = mon.with_exp(s, std::uint32_t(m));
        e.add_term(mon, f.one());
        return;
      }
      for (int s = next; s < n; ++s) {
        subset.push_back(s);
        self(self, s + 1);
        subset.pop_back();
      }
    };
    rec(rec, 0);
    gens.push_back(std::move(e));
    prov.push_back("e_" + std::to_string(i));
  }
  {
    Monomial mon(n);
    for (int s = 0; s < n; ++s) mon = mon.with_exp(s, std::uint32_t(m / a));
    gens.push_back(Polynomial::term(ctx, mon, f.one()));
    prov.push_back("e_" + std::to_string(n));
  }
  return make_system(ctx, spec, std::move(gens), std::move(prov));
}

InvariantSystem block_triangular_system(
    const Field& f, const Composition& c,
    const std::vector<InvariantSystem>& blocks) {
  if (int(blocks.size()) != c.blocks())
    throw BlockMismatch("one block system per composition part required");
  std::vector<GroupSpec> block_groups;
  for (int i = 1; i <= c.blocks(); ++i) {
    const InvariantSystem& b = blocks[std::size_t(i - 1)];
    if (b.ctx.nvars != c.part(i))
      throw BlockMismatch("block system " + std::to_string(i) + " has " +
                          std::to_string(b.ctx.nvars) + " variables, expected " +
                          std::to_string(c.part(i)));
    if (b.ctx.field != f) throw FieldMismatch();
    block_groups.push_back(b.group);
  }
  VarContext ctx{f, c.n()};
  auto v = steinberg_generators(f, c);
  std::vector<Polynomial> gens;
  std::vector<std::string> prov;
  for (int i = 1; i <= c.blocks(); ++i) {
    const InvariantSystem& b = blocks[std::size_t(i - 1)];
    for (int j = 1; j <= c.part(i); ++j) {
      gens.push_back(
          b.gens[std::size_t(j - 1)].substitute(v[std::size_t(i - 1)]));
      prov.push_back(idx2("u", i, j));
    }
  }
  return make_system(ctx,
                     GroupSpec::block_triangular(c, std::move(block_groups)),
                     std::move(gens), std::move(prov));
}

InvariantSystem weyl_cartan_system(const Field& f, int n1, int n2, int m) {
  GroupSpec::weyl_cartan(n1, n2, m).validate(f);
  return block_triangular_system(
      f, Composition({n1, n2}),
      {dickson_system(f, n1), imprimitive_system(f, m, 1, n2)});
}

InvariantSystem system_for(const GroupSpec& spec, const Field& f) {
  spec.validate(f);
  switch (spec.kind) {
    case GroupSpec::Kind::GL:
      return dickson_system(f, spec.n);
    case GroupSpec::Kind::Borel: {
      std::vector<int> ones(std::size_t(spec.n), 1);
      return parabolic_system(f, Composition(ones));
    }
    case GroupSpec::Kind::Parabolic:
      return parabolic_system(f, *spec.comp);
    case GroupSpec::Kind::Unipotent:
      return unipotent_system(f, *spec.comp);
    case GroupSpec::Kind::Imprimitive:
      return imprimitive_system(f, spec.m, spec.a, spec.gn);
    case GroupSpec::Kind::BlockTriangular: {
      std::vector<InvariantSystem> blocks;
      for (const GroupSpec& b : spec.blocks) blocks.push_back(system_for(b, f));
      return block_triangular_system(f, *spec.comp, blocks);
    }
    case GroupSpec::Kind::WeylCartan:
      return weyl_cartan_system(f, spec.n1, spec.n2, spec.wm);
    case GroupSpec::Kind::Levi:
      throw InvalidSpec("no canonical generator system for Levi subgroups");
  }
  throw InternalError("unknown group kind");
}

std::vector<std::vector<int>> sigma_group(const InvariantSystem& sys,
                                          int max_n) {
  return fixing_permutations(sys.gens, max_n);
}

}  // namespace coinv
