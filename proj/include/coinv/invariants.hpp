#pragma once

#include <string>
#include <vector>

#include "coinv/groups.hpp"

namespace coinv {

// An ordered homogeneous system of parameters together with the group it is
// invariant under. Construction verifies homogeneity and invariance against
// the group's generators; a failure there is a hard error because it means
// the action convention or a generator formula is wrong.
struct InvariantSystem {
  VarContext ctx;
  GroupSpec group;
  std::vector<Polynomial> gens;
  std::vector<long long> degrees;
  std::vector<std::string> provenance;
};

InvariantSystem make_system(VarContext ctx, GroupSpec group,
                            std::vector<Polynomial> gens,
                            std::vector<std::string> provenance);

// V_k = prod over (lambda_1..lambda_{k-1}) in F_q^{k-1} of
//       (lambda_1 x_1 + ... + lambda_{k-1} x_{k-1} + x_k), degree q^{k-1}.
// L_k = V_1 * ... * V_k.
Polynomial orbit_product_v(const VarContext& ctx, int k,
                           std::uint64_t cap = default_caps().product_factors);
Polynomial orbit_product_l(const VarContext& ctx, int k,
                           std::uint64_t cap = default_caps().product_factors);

// Dickson invariants Q_{n,0}..Q_{n,n-1}: the coefficients of
// F_n(X) = prod (X + lambda.x) = X^{q^n} + sum_k Q_{n,k} X^{q^k}.
// Asserts that only q-power exponents of X occur.
std::vector<Polynomial> dickson_polynomials(
    const VarContext& ctx, std::uint64_t cap = default_caps().product_factors);

// The GL_n(q) system ordered by increasing degree: generator j is
// Q_{n,n-j} with degree q^n - q^{n-j}.
InvariantSystem dickson_system(const Field& f, int n);

// v[i-1][j-1] = F_{m_{i-1}}(x_{m_{i-1}+j}), degree q^{m_{i-1}}; v[0][j-1] = x_j.
std::vector<std::vector<Polynomial>> steinberg_generators(
    const Field& f, const Composition& c,
    std::uint64_t cap = default_caps().product_factors);

// P^{U_I} = F_q[x_1..x_{n_1}, v_{2,*}, ..., v_{l,*}].
InvariantSystem unipotent_system(const Field& f, const Composition& c);

// Kuhn-Mitchell generators q_{i,j} = Q_{n_i, n_i-j}(v_{i,1}..v_{i,n_i}) with
// deg q_{i,j} = q^{m_i} - q^{m_i-j}. The mirrored Dickson index is what makes
// that degree formula hold.
InvariantSystem parabolic_system(const Field& f, const Composition& c);

// G(m,a,n): e_i = sum of i-fold products of m-th powers for i < n, and
// e_n = (x_1...x_n)^{m/a}.
InvariantSystem imprimitive_system(const Field& f, int m, int a, int n);

// u_{i,j} = e_{i,j}(v_{i,1}..v_{i,n_i}) where e_{i,*} is block i's system in
// its own n_i variables. Degrees multiply by q^{m_{i-1}}.
InvariantSystem block_triangular_system(const Field& f, const Composition& c,
                                        const std::vector<InvariantSystem>& blocks);

// The two-block preset: GL_{n1}(p) over G(m,1,n2).
InvariantSystem weyl_cartan_system(const Field& f, int n1, int n2, int m);

// Dispatch on the group kinds that carry a canonical generator system.
InvariantSystem system_for(const GroupSpec& spec, const Field& f);

// Sigma(A): the variable permutations fixing every generator.
std::vector<std::vector<int>> sigma_group(
    const InvariantSystem& sys, int max_n = default_caps().sigma_vars);

}  // namespace coinv
