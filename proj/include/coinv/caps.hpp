#pragma once

#include <cstdint>

namespace coinv {

// Resource limits for enumeration-heavy operations. Everything in this
// library is exact, so the caps are the only thing standing between a typo
// in a command line and a week of CPU time.
struct Caps {
  std::uint64_t field_q = 512;               // largest supported |F_q|
  std::uint64_t closure = 100000;            // BFS group closure size
  std::uint64_t divisor_count = 10000000;    // monomial factor enumeration
  std::uint64_t degree_monomials = 5000000;  // dense vector length per degree
  std::uint64_t product_factors = 100000;    // factors in orbit products
  std::uint64_t rewrite_steps = 100000;      // rewrite engine step budget
  std::uint32_t exponent = 1u << 20;         // per-variable exponent bound
  int sigma_vars = 8;                        // n! scan bound for Sigma(A)
  int refute_vars = 6;                       // n! scan bound for refutations
};

inline const Caps& default_caps() {
  static const Caps c{};
  return c;
}

}  // namespace coinv
