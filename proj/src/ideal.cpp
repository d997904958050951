#include "coinv/ideal.hpp"

#include <algorithm>

namespace coinv {

HilbertData hilbert_series(const std::vector<long long>& degrees) {
  // Numerator prod (1 - t^{d_i}).
  std::vector<long long> num{1};
  for (long long d : degrees) {
    if (d < 1) throw InvalidSpec("generator degrees must be positive");
    std::vector<long long> next(num.size() + std::size_t(d), 0);
    for (std::size_t i = 0; i < num.size(); ++i) {
      next[i] += num[i];
      next[i + std::size_t(d)] -= num[i];
    }
    num = std::move(next);
  }
  // Divide by (1 - t) once per variable: quotient coefficients are prefix
  // sums; the final prefix sum is the remainder and must vanish.
  for (std::size_t v = 0; v < degrees.size(); ++v) {
    long long acc = 0;
    for (std::size_t i = 0; i + 1 < num.size(); ++i) {
      acc += num[i];
      num[i] = acc;
    }
    if (acc + num.back() != 0)
      throw InternalError("Hilbert numerator not divisible by (1-t)");
    num.pop_back();
  }
  long long top = 0;
  for (long long d : degrees) top += d - 1;
  num.resize(std::size_t(top) + 1, 0);
  HilbertData h;
  h.top_degree = top;
  h.coeffs = std::move(num);
  for (long long c : h.coeffs) {
    if (c < 0) throw NotRegular(-1);
    h.total += static_cast<unsigned long long>(c);
  }
  unsigned long long prod = 1;
  for (long long d : degrees) prod *= static_cast<unsigned long long>(d);
  if (prod != h.total)
    throw InternalError("Hilbert total disagrees with degree product");
  return h;
}

GradedIdealBasis::GradedIdealBasis(InvariantSystem system, Caps caps)
    : sys_(std::move(system)), caps_(caps), hilbert_(hilbert_series(sys_.degrees)) {}

const GradedIdealBasis::DegreeData& GradedIdealBasis::degree(long long d) const {
  std::lock_guard<std::mutex> lock(mu_);
  return degree_locked(d);
}

const GradedIdealBasis::DegreeData& GradedIdealBasis::degree_locked(
    long long d) const {
  if (d < 0) throw OutOfRange("negative degree");
  auto it = cache_.find(d);
  if (it != cache_.end()) return it->second;

  DegreeData dd;
  dd.monomials = monomials_of_degree(sys_.ctx.nvars, d, caps_.degree_monomials);
  const Field& k = sys_.ctx.field;
  std::map<Monomial, int> index;
  for (int i = 0; i < int(dd.monomials.size()); ++i)
    index.emplace(dd.monomials[std::size_t(i)], i);

  auto reduce_and_insert = [&](std::vector<Field::Elem> row) {
    // Eliminate against existing echelon rows.
    for (std::size_t r = 0; r < dd.rows.size(); ++r) {
      Field::Elem c = row[std::size_t(dd.pivots[r])];
      if (c == 0) continue;
      const auto& er = dd.rows[r];
      for (std::size_t j = 0; j < row.size(); ++j)
        row[j] = k.sub(row[j], k.mul(c, er[j]));
    }
    int pivot = -1;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) {
        pivot = int(j);
        break;
      }
    if (pivot < 0) return;
    Field::Elem s = k.inv(row[std::size_t(pivot)]);
    for (auto& v : row) v = k.mul(v, s);
    // Back-eliminate so rows stay fully reduced.
    for (std::size_t r = 0; r < dd.rows.size(); ++r) {
      Field::Elem c = dd.rows[r][std::size_t(pivot)];
      if (c == 0) continue;
      for (std::size_t j = 0; j < row.size(); ++j)
        dd.rows[r][j] = k.sub(dd.rows[r][j], k.mul(c, row[j]));
    }
    // Keep rows sorted by pivot column.
    auto pos = std::upper_bound(dd.pivots.begin(), dd.pivots.end(), pivot);
    std::size_t at = std::size_t(pos - dd.pivots.begin());
    dd.pivots.insert(pos, pivot);
    dd.rows.insert(dd.rows.begin() + long(at), std::move(row));
  };

  for (std::size_t i = 0; i < sys_.gens.size(); ++i) {
    long long di = sys_.degrees[i];
    if (di > d) continue;
    for (const Monomial& mu :
         monomials_of_degree(sys_.ctx.nvars, d - di, caps_.degree_monomials)) {
      std::vector<Field::Elem> row(dd.monomials.size(), 0);
      for (const auto& [mon, c] : sys_.gens[i].terms())
        row[std::size_t(index.at(mon.times(mu)))] = c;
      reduce_and_insert(std::move(row));
    }
  }

  std::vector<bool> is_pivot(dd.monomials.size(), false);
  for (int p : dd.pivots) is_pivot[std::size_t(p)] = true;
  for (int j = 0; j < int(dd.monomials.size()); ++j)
    if (!is_pivot[std::size_t(j)]) dd.free_cols.push_back(j);

  long long expected_rank =
      static_cast<long long>(dd.monomials.size()) - hilbert_.h(d);
  if (dd.rank() != expected_rank) throw NotRegular(d);

  auto [pos, inserted] = cache_.emplace(d, std::move(dd));
  (void)inserted;
  return pos->second;
}

bool GradedIdealBasis::member(const Polynomial& f) const {
  return normal_form(f).is_zero();
}

Polynomial GradedIdealBasis::normal_form(const Polynomial& f) const {
  if (f.context() != sys_.ctx) throw ContextMismatch();
  const Field& k = sys_.ctx.field;
  Polynomial out(sys_.ctx);
  for (const auto& [d, comp] : f.homogeneous_components()) {
    const DegreeData& dd = degree(d);
    std::map<Monomial, int> index;
    for (int i = 0; i < int(dd.monomials.size()); ++i)
      index.emplace(dd.monomials[std::size_t(i)], i);
    std::vector<Field::Elem> v(dd.monomials.size(), 0);
    for (const auto& [mon, c] : comp.terms()) v[std::size_t(index.at(mon))] = c;
    for (std::size_t r = 0; r < dd.rows.size(); ++r) {
      Field::Elem c = v[std::size_t(dd.pivots[r])];
      if (c == 0) continue;
      const auto& er = dd.rows[r];
      for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = k.sub(v[j], k.mul(c, er[j]));
    }
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) out.add_term(dd.monomials[j], v[j]);
  }
  return out;
}

unsigned long long GradedIdealBasis::coinvariant_dimension() const {
  unsigned long long dim = 0;
  for (long long d = 0; d <= hilbert_.top_degree; ++d)
    dim += static_cast<unsigned long long>(degree(d).free_cols.size());
  if (dim != hilbert_.total)
    throw InternalError("free-monomial count disagrees with Hilbert total");
  return dim;
}

}  // namespace coinv
