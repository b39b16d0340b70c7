#pragma once

#include "macdual/duality.hpp"

namespace macdual {

using Matrix = std::vector<std::vector<Scalar>>;

Matrix mat_identity(int n);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_inverse(const Matrix& a);  // throws "singular matrix"
Scalar mat_det(Matrix a);             // square, exact

// Invertible linear change of ring coordinates, x_i -> sum_j A[i][j] x_j.
// Dual polynomials transform contragrediently: substitute by the inverse
// transpose, conjugated by the monomial rescaling X^b -> X^b / b! that
// mediates between the contraction pairing (<x^a, X^b> = delta) and the
// substitution-friendly differentiation pairing.  The outcome is
//   <f, F> = <apply_ring(f), apply_dual(F)>   for all f, F,
// hence also apply_dual(f o F) = apply_ring(f) o apply_dual(F).
class LinearChange {
  public:
    explicit LinearChange(Matrix a);
    static LinearChange identity(int m);

    int nvars() const { return static_cast<int>(a_.size()); }
    const Matrix& matrix() const { return a_; }
    LinearChange inverse() const;

    Polynomial apply_ring(const Polynomial& f) const;
    Polynomial apply_dual(const Polynomial& F) const;
    Ideal apply(const Ideal& I) const;

  private:
    Matrix a_;
    Matrix ainv_;  // cached exact inverse; also proves invertibility
};

}  // namespace macdual
