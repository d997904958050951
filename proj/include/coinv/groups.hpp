#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coinv/poly.hpp"

namespace coinv {

// Ordered composition I = (n_1, ..., n_l) of n with partial sums m_k and the
// block-start map tau(s) = m_j for m_j < s <= m_{j+1} (s is 1-based).
class Composition {
 public:
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts)
      : Composition(std::vector<int>(parts)) {}

  int blocks() const { return int(parts_.size()); }
  int n() const { return partial_.back(); }
  int part(int i) const { return parts_[std::size_t(i - 1)]; }          // 1-based
  int partial(int k) const { return partial_[std::size_t(k)]; }         // m_k
  int tau(int s) const;                                                 // 1-based s
  int block_of(int s) const;                                            // 1-based
  const std::vector<int>& parts() const { return parts_; }

  bool operator==(const Composition& o) const { return parts_ == o.parts_; }
  std::string to_string() const;

 private:
  std::vector<int> parts_;
  std::vector<int> partial_;  // m_0..m_l
};

// Square matrix over F_q, row-major.
class Matrix {
 public:
  Matrix(Field f, int n)
      : field_(std::move(f)), n_(n), a_(std::size_t(n) * std::size_t(n), 0) {}

  static Matrix identity(const Field& f, int n);
  // sigma is 0-based: column j has its 1 in row sigma[j], i.e. the matrix
  // sends basis vector e_j to e_{sigma[j]}.
  static Matrix permutation(const Field& f, const std::vector<int>& sigma);

  const Field& field() const { return field_; }
  int n() const { return n_; }
  Field::Elem at(int i, int j) const {
    return a_[std::size_t(i) * std::size_t(n_) + std::size_t(j)];
  }
  void set(int i, int j, Field::Elem v) {
    a_[std::size_t(i) * std::size_t(n_) + std::size_t(j)] = v;
  }

  Matrix operator*(const Matrix& o) const;
  bool operator==(const Matrix& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool operator<(const Matrix& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return a_ < o.a_;
  }
  std::string to_string() const;

 private:
  Field field_;
  int n_;
  std::vector<Field::Elem> a_;
};

unsigned matrix_rank(const Matrix& m);
bool is_invertible(const Matrix& m);
// A pseudo-reflection fixes a hyperplane pointwise: rank(g - id) == 1.
bool is_pseudo_reflection(const Matrix& g);

// The group families: GL_n(q); the parabolic GL_I; its unipotent radical
// U_I; the Levi L_I; block-triangular G_I with prescribed diagonal blocks;
// the imprimitive reflection groups G(m,a,n) embedded by diagonal m-th roots
// of unity; the Borel subgroup; and the two-block preset with G_1 = GL_{n_1}(p)
// and G_2 = G(m,1,n_2).
struct GroupSpec {
  enum class Kind {
    GL,
    Parabolic,
    Unipotent,
    Levi,
    BlockTriangular,
    Imprimitive,
    Borel,
    WeylCartan
  };

  Kind kind = Kind::GL;
  int n = 0;                         // GL, Borel
  std::optional<Composition> comp;   // the composition kinds
  int m = 0, a = 0, gn = 0;          // Imprimitive(m, a, gn)
  int n1 = 0, n2 = 0, wm = 0;        // WeylCartan(n1, n2, wm)
  std::vector<GroupSpec> blocks;     // Levi, BlockTriangular

  static GroupSpec gl(int n);
  static GroupSpec parabolic(Composition c);
  static GroupSpec unipotent(Composition c);
  static GroupSpec levi(Composition c, std::vector<GroupSpec> blocks);
  static GroupSpec block_triangular(Composition c, std::vector<GroupSpec> blocks);
  static GroupSpec imprimitive(int m, int a, int n);
  static GroupSpec borel(int n);
  static GroupSpec weyl_cartan(int n1, int n2, int m);

  int dimension() const;
  // Throws InvalidSpec when the parameters are incompatible with the field
  // (e.g. m does not divide q-1 for Imprimitive).
  void validate(const Field& f) const;
  std::string to_string() const;
};

// Compact syntax: "GL(3)", "U(2,1)", "P(2,1)", "B(3)", "G(2,1,2)",
// "GI(2,1;GL,G(2,1,1))", "W(2,1;m=2)".
GroupSpec parse_group_spec(const std::string& text);

std::vector<Matrix> generators(const GroupSpec& spec, const Field& f);

// BFS closure of the generated group; throws CapExceeded past cap.
std::set<Matrix> closure(const std::vector<Matrix>& gens,
                         std::uint64_t cap = default_caps().closure);
unsigned long long group_order(const GroupSpec& spec, const Field& f,
                               std::uint64_t cap = default_caps().closure);

// Action on polynomials by x_i -> sum_j g[j][i] x_j (column substitution).
// With this convention act(g, act(h, f)) == act(g*h, f) and the first-block
// variables are fixed by the block-unitriangular groups.
Polynomial act(const Matrix& g, const Polynomial& f);
bool is_invariant(const Polynomial& f, const std::vector<Matrix>& gens);
bool is_invariant(const Polynomial& f, const GroupSpec& spec, const Field& k);

// All variable permutations fixing every polynomial in the list (0-based
// images). Brute force over S_n, so n is capped.
std::vector<std::vector<int>> fixing_permutations(
    const std::vector<Polynomial>& gens, int max_n = default_caps().sigma_vars);

}  // namespace coinv
