#include "kerrcat/fock.hpp"

#include <atomic>
#include <cmath>
#include <iostream>
#include <sstream>

namespace kerrcat {

namespace {

std::atomic<bool> g_warnings{true};

}  // namespace

void emit_warning(const std::string& message) {
    if (g_warnings.load())
        std::cerr << "[kerrcat] warning: " << message << "\n";
}

void set_warnings_enabled(bool enabled) { g_warnings.store(enabled); }

bool warnings_enabled() { return g_warnings.load(); }

Operator::Operator(TruncatedFockSpace space, Matrix entries)
    : space_(space), entries_(std::move(entries)) {
    if (entries_.rows() != space_.dim || entries_.cols() != space_.dim)
        throw DimensionMismatch("Operator: entries must be dim x dim");
}

StateVector::StateVector(TruncatedFockSpace space, Vector amplitudes)
    : space_(space), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != space_.dim)
        throw DimensionMismatch("StateVector: amplitudes must have length dim");
    const double norm = amplitudes_.norm();
    if (!(norm > 0))
        throw InvalidParameter("StateVector: zero amplitudes");
    amplitudes_ /= norm;
}

DensityMatrix::DensityMatrix(TruncatedFockSpace space, Matrix entries)
    : space_(space), entries_(std::move(entries)) {
    if (entries_.rows() != space_.dim || entries_.cols() != space_.dim)
        throw DimensionMismatch("DensityMatrix: entries must be dim x dim");
    const double herm = hermiticity_defect(entries_);
    if (herm > 1e-10) {
        std::ostringstream os;
        os << "DensityMatrix: hermiticity defect " << herm << " > 1e-10";
        throw SanityViolation(os.str());
    }
    const double trace_err = std::abs(entries_.trace() - Complex(1.0, 0.0));
    if (trace_err > 1e-10) {
        std::ostringstream os;
        os << "DensityMatrix: |trace - 1| = " << trace_err << " > 1e-10";
        throw SanityViolation(os.str());
    }
}

DensityMatrix DensityMatrix::from_pure(const StateVector& psi) {
    Matrix rho = psi.amplitudes() * psi.amplitudes().adjoint();
    return DensityMatrix(psi.space(), std::move(rho));
}

DensityMatrix DensityMatrix::maximally_mixed(TruncatedFockSpace space) {
    Matrix rho = Matrix::Identity(space.dim, space.dim) / double(space.dim);
    return DensityMatrix(space, std::move(rho));
}

Operator annihilation_op(TruncatedFockSpace space) {
    Matrix a = Matrix::Zero(space.dim, space.dim);
    for (int n = 1; n < space.dim; ++n) a(n - 1, n) = std::sqrt(double(n));
    return Operator(space, std::move(a));
}

Operator creation_op(TruncatedFockSpace space) { return annihilation_op(space).adjoint(); }

Operator number_op(TruncatedFockSpace space) {
    Matrix n = Matrix::Zero(space.dim, space.dim);
    for (int k = 0; k < space.dim; ++k) n(k, k) = double(k);
    return Operator(space, std::move(n));
}

Operator identity_op(TruncatedFockSpace space) {
    return Operator(space, Matrix::Identity(space.dim, space.dim));
}

namespace {

void warn_truncation(Complex alpha, int dim, const char* who) {
    if (!truncation_adequate(alpha, dim)) {
        std::ostringstream os;
        os << who << ": dim " << dim << " below the recommended |alpha|^2 + 6|alpha| + 10 = "
           << std::norm(alpha) + 6.0 * std::abs(alpha) + 10.0;
        emit_warning(os.str());
    }
    const double tail = coherent_tail_mass(alpha, dim);
    if (tail > 1e-10) {
        std::ostringstream os;
        os << who << ": truncated tail mass " << tail << " > 1e-10 for |alpha| = "
           << std::abs(alpha) << ", dim " << dim;
        emit_warning(os.str());
    }
}

Vector coherent_amplitudes(Complex alpha, int dim) {
    Vector c(dim);
    c(0) = Complex(1.0, 0.0);
    for (int n = 0; n + 1 < dim; ++n) c(n + 1) = c(n) * alpha / std::sqrt(double(n + 1));
    c *= std::exp(-0.5 * std::norm(alpha));
    return c;
}

}  // namespace

StateVector coherent_state(Complex alpha, TruncatedFockSpace space) {
    warn_truncation(alpha, space.dim, "coherent_state");
    return StateVector(space, coherent_amplitudes(alpha, space.dim));
}

StateVector ys_state(Complex alpha, TruncatedFockSpace space) {
    warn_truncation(alpha, space.dim, "ys_state");
    Vector plus = coherent_amplitudes(alpha, space.dim);
    Vector minus = coherent_amplitudes(-alpha, space.dim);
    Vector cat = (plus + Complex(0.0, 1.0) * minus) / std::sqrt(2.0);
    return StateVector(space, std::move(cat));
}

double coherent_tail_mass(Complex alpha, int dim) {
    const double mu = std::norm(alpha);
    if (mu == 0.0) return 0.0;
    // Poisson survival probability P(N >= dim), summed upward from the
    // log-space pmf at n = dim to dodge cancellation.
    double log_term = -mu + dim * std::log(mu) - std::lgamma(double(dim) + 1.0);
    double term = std::exp(log_term);
    double tail = 0.0;
    for (int n = dim; n < dim + 4096; ++n) {
        tail += term;
        term *= mu / double(n + 1);
        if (term < tail * 1e-18 + 1e-300) break;
    }
    return tail;
}

bool truncation_adequate(Complex alpha, int dim) {
    return std::norm(alpha) + 6.0 * std::abs(alpha) + 10.0 <= double(dim);
}

Complex expectation(const DensityMatrix& rho, const Operator& op) {
    if (!(rho.space() == op.space()))
        throw DimensionMismatch("expectation: mismatched spaces");
    // tr(rho op) without forming the product.
    return rho.entries().cwiseProduct(op.entries().transpose()).sum();
}

Complex trace(const DensityMatrix& rho) { return rho.entries().trace(); }

double purity(const DensityMatrix& rho) {
    // tr(rho^2) = ||rho||_F^2 for Hermitian rho.
    return rho.entries().squaredNorm();
}

double hermiticity_defect(const Matrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double hermiticity_defect(const DensityMatrix& rho) { return hermiticity_defect(rho.entries()); }

double min_eigenvalue(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.entries(), Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

double fidelity_pure(const DensityMatrix& rho, const StateVector& psi) {
    if (!(rho.space() == psi.space()))
        throw DimensionMismatch("fidelity_pure: mismatched spaces");
    const double value = std::real(psi.amplitudes().dot(rho.entries() * psi.amplitudes()));
    if (value < -1e-8 || value > 1.0 + 1e-8) {
        std::ostringstream os;
        os << "fidelity_pure: value " << value << " outside [0, 1]";
        throw SanityViolation(os.str());
    }
    return std::min(1.0, std::max(0.0, value));
}

}  // namespace kerrcat
