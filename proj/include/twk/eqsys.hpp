#pragma once
// Linear systems whose unknowns are matrices.  Equations have the shape
//   Σ_k  L_k · X_{id_k} · R_k  +  C  ≡ 0   (optionally modulo span(S))
// and are flattened through vec(L X R) = (Rᵀ ⊗ L) vec(X).  "Modulo span(S)"
// introduces a slack unknown W and the extra term S·W, which is how
// congruences between presented-module morphisms become honest equalities.

#include "twk/exact.hpp"

namespace twk {

class EqSys {
 public:
  explicit EqSys(Ring ring) : ring_(ring) {}

  int add_unknown(long rows, long cols);

  struct Term {
    int id;
    Mat L, R;  // contribution L · X_id · R
  };
  // All terms must share the equation shape m×n; C may be zero-sized only if m*n==0.
  void add_eq(std::vector<Term> terms, Mat C, const Mat* modulo_span = nullptr);

  // Canonical particular solution of the inhomogeneous system; real unknowns only.
  std::optional<std::vector<Mat>> solve_sys();

  // Generators of the homogeneous solution space/lattice, projected to the
  // real unknowns (slacks dropped).  Each generator is one value per unknown.
  std::vector<std::vector<Mat>> kernel_gens();

 private:
  struct Shape {
    long m, n;
    bool slack;
  };
  struct Eq {
    std::vector<Term> terms;
    Mat C;
  };

  Mat assemble(Mat* rhs) const;  // big coefficient matrix + rhs
  std::vector<Mat> split(const Mat& u) const;

  Ring ring_;
  std::vector<Shape> shapes_;
  std::vector<Eq> eqs_;
};

}  // namespace twk
