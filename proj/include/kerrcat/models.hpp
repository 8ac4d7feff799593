#pragma once

#include <optional>
#include <vector>

#include "kerrcat/fock.hpp"

namespace kerrcat {

// Dimensionless feedback gain; time is measured in scaled units tau so
// that chi*tau is the natural phase variable.
struct FeedbackGain {
    double chi;

    explicit FeedbackGain(double chi_) : chi(chi_) {
        if (!(chi > 0)) throw InvalidParameter("FeedbackGain: chi must be > 0");
    }
};

enum class ChannelKind {
    dephasing,  // L = a^dag a
    damping,    // L = a
};

struct Channel {
    ChannelKind kind;
    double rate;

    Channel(ChannelKind kind_, double rate_) : kind(kind_), rate(rate_) {
        if (rate < 0) throw InvalidParameter("Channel: rate must be >= 0");
    }
};

// Hamiltonian H = chi (a^dag a)^2 plus a list of dissipation channels.
// With this convention a coherent state evolves into the Yurke-Stoler
// superposition exactly at chi*tau = pi/2.
struct ModelSpec {
    FeedbackGain chi;
    std::vector<Channel> channels;

    double total_damping_rate() const;
    bool has_damping() const;
};

enum class PresetName { pure_kerr, kerr_dephasing, kerr_damping };

// kerr_dephasing carries a single dephasing channel at rate 2 chi^2,
// the unique D[a^dag a] rate for which |n - m| = 1 coherences decay as
// e^{-chi^2 tau}.
ModelSpec pure_kerr(double chi);
ModelSpec kerr_dephasing(double chi);
ModelSpec kerr_damping(double chi, double gamma);
ModelSpec preset(PresetName name, double chi, std::optional<double> gamma = std::nullopt);

Operator hamiltonian(const ModelSpec& model, TruncatedFockSpace space);

// Precomputed Lindblad generator for a (model, space) pair:
//   d rho / d tau = -i [chi n^2, rho] + sum_c rate_c D[L_c] rho.
// The Kerr commutator and every dephasing channel act entrywise in the
// Fock basis; damping adds a diagonal shift rho_{n+1,m+1}.
class Generator {
  public:
    Generator(const ModelSpec& model, TruncatedFockSpace space);

    void apply(const Matrix& rho, Matrix& out) const;
    Matrix apply(const Matrix& rho) const;

    // True when the generator is purely entrywise (no damping channel).
    bool entrywise() const { return damping_rate_ == 0.0; }
    const Matrix& entrywise_coefficients() const { return coef_; }
    const TruncatedFockSpace& space() const { return space_; }

  private:
    TruncatedFockSpace space_;
    Matrix coef_;
    double damping_rate_ = 0.0;
};

// d rho / d tau for the given model; the result has zero trace.
Matrix generator_apply(const ModelSpec& model, const DensityMatrix& rho);

}  // namespace kerrcat
