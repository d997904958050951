#pragma once

#include <map>
#include <mutex>

#include "coinv/invariants.hpp"

namespace coinv {

// Coefficients of prod_i (1 - t^{d_i}) / (1 - t)^n truncated at the top
// degree D = sum (d_i - 1). For a regular sequence these are the graded
// dimensions of the quotient; total = prod d_i.
struct HilbertData {
  std::vector<long long> coeffs;  // h_0 .. h_D
  long long top_degree = 0;
  unsigned long long total = 0;

  long long h(long long d) const {
    if (d < 0 || d > top_degree) return 0;
    return coeffs[std::size_t(d)];
  }
};

// Computed by explicit numerator / (1-t)^n division; a negative truncated
// coefficient (impossible for equal generator and variable counts, but kept
// as a guard) raises NotRegular.
HilbertData hilbert_series(const std::vector<long long>& degrees);

// Exact degree-by-degree linear algebra for the ideal I = (f_1,...,f_n).
// Per degree d the span of { mon * f_i : deg mon = d - d_i } is row-reduced
// over the monomial basis of degree d with columns in graded-lex ascending
// order, so the pivots land on the small monomials and the free (non-pivot)
// monomials are the canonical complement basis. Every computed degree is
// checked against the Hilbert series; a rank defect raises NotRegular.
class GradedIdealBasis {
 public:
  explicit GradedIdealBasis(InvariantSystem system,
                            Caps caps = default_caps());

  const InvariantSystem& system() const { return sys_; }
  const HilbertData& hilbert() const { return hilbert_; }

  struct DegreeData {
    std::vector<Monomial> monomials;             // graded-lex ascending
    std::vector<std::vector<Field::Elem>> rows;  // reduced echelon
    std::vector<int> pivots;                     // pivot column per row
    std::vector<int> free_cols;
    int rank() const { return int(rows.size()); }
  };

  const DegreeData& degree(long long d) const;

  bool member(const Polynomial& f) const;
  // The unique representative of f + I supported on free monomials;
  // linear, idempotent, and zero exactly on ideal members.
  Polynomial normal_form(const Polynomial& f) const;
  // Sum of free-monomial counts up to the top degree; cross-checked against
  // the Hilbert total.
  unsigned long long coinvariant_dimension() const;

 private:
  const DegreeData& degree_locked(long long d) const;

  InvariantSystem sys_;
  Caps caps_;
  HilbertData hilbert_;
  mutable std::map<long long, DegreeData> cache_;  // write-once per degree
  mutable std::mutex mu_;
};

}  // namespace coinv
