#pragma once

#include <Eigen/Dense>
#include <complex>

#include "kerrcat/errors.hpp"

namespace kerrcat {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Fock space truncated to the levels |0> .. |dim-1>.
struct TruncatedFockSpace {
    int dim;

    explicit TruncatedFockSpace(int dim_) : dim(dim_) {
        if (dim < 2) throw InvalidParameter("TruncatedFockSpace: dim must be >= 2");
    }
    bool operator==(const TruncatedFockSpace&) const = default;
};

class Operator {
  public:
    Operator(TruncatedFockSpace space, Matrix entries);

    const TruncatedFockSpace& space() const { return space_; }
    const Matrix& entries() const { return entries_; }
    Operator adjoint() const { return Operator(space_, entries_.adjoint()); }

  private:
    TruncatedFockSpace space_;
    Matrix entries_;
};

// Unit-norm pure state; amplitudes are normalized at construction.
class StateVector {
  public:
    StateVector(TruncatedFockSpace space, Vector amplitudes);

    const TruncatedFockSpace& space() const { return space_; }
    const Vector& amplitudes() const { return amplitudes_; }

  private:
    TruncatedFockSpace space_;
    Vector amplitudes_;
};

// Hermitian, unit-trace matrix. Construction checks hermiticity (1e-10)
// and trace (1e-10); positivity is only probed at sampled times via
// min_eigenvalue, not at every construction.
class DensityMatrix {
  public:
    DensityMatrix(TruncatedFockSpace space, Matrix entries);

    static DensityMatrix from_pure(const StateVector& psi);
    static DensityMatrix maximally_mixed(TruncatedFockSpace space);

    const TruncatedFockSpace& space() const { return space_; }
    const Matrix& entries() const { return entries_; }

  private:
    TruncatedFockSpace space_;
    Matrix entries_;
};

// Mode operators. a has entries a[n-1, n] = sqrt(n).
Operator annihilation_op(TruncatedFockSpace space);
Operator creation_op(TruncatedFockSpace space);
Operator number_op(TruncatedFockSpace space);
Operator identity_op(TruncatedFockSpace space);

// Coherent state with amplitudes c_n = e^{-|a|^2/2} a^n / sqrt(n!)
// (stable two-term recurrence), renormalized on the truncated space.
// Emits a warning when the truncation is inadequate.
StateVector coherent_state(Complex alpha, TruncatedFockSpace space);

// (|alpha> + i|-alpha>)/sqrt(2); the cross terms cancel, so the norm is 1.
StateVector ys_state(Complex alpha, TruncatedFockSpace space);

// Untruncated Poisson tail mass sum_{n >= dim} |c_n|^2.
double coherent_tail_mass(Complex alpha, int dim);

// |alpha|^2 + 6|alpha| + 10 <= dim.
bool truncation_adequate(Complex alpha, int dim);

Complex expectation(const DensityMatrix& rho, const Operator& op);
Complex trace(const DensityMatrix& rho);
double purity(const DensityMatrix& rho);
double hermiticity_defect(const DensityMatrix& rho);
double hermiticity_defect(const Matrix& m);
double min_eigenvalue(const DensityMatrix& rho);

// <psi|rho|psi>, clamped to [0, 1]; values outside by more than 1e-8
// indicate an invalid state and throw.
double fidelity_pure(const DensityMatrix& rho, const StateVector& psi);

}  // namespace kerrcat
