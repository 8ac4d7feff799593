#include "kerrcat/models.hpp"

#include <cmath>

namespace kerrcat {

double ModelSpec::total_damping_rate() const {
    double total = 0.0;
    for (const auto& c : channels)
        if (c.kind == ChannelKind::damping) total += c.rate;
    return total;
}

bool ModelSpec::has_damping() const { return total_damping_rate() > 0.0; }

ModelSpec pure_kerr(double chi) { return ModelSpec{FeedbackGain(chi), {}}; }

ModelSpec kerr_dephasing(double chi) {
    return ModelSpec{FeedbackGain(chi), {Channel(ChannelKind::dephasing, 2.0 * chi * chi)}};
}

ModelSpec kerr_damping(double chi, double gamma) {
    if (gamma < 0) throw InvalidParameter("kerr_damping: gamma must be >= 0");
    return ModelSpec{FeedbackGain(chi), {Channel(ChannelKind::damping, gamma)}};
}

ModelSpec preset(PresetName name, double chi, std::optional<double> gamma) {
    switch (name) {
        case PresetName::pure_kerr:
            return pure_kerr(chi);
        case PresetName::kerr_dephasing:
            return kerr_dephasing(chi);
        case PresetName::kerr_damping:
            if (!gamma) throw InvalidParameter("preset: kerr_damping requires gamma");
            return kerr_damping(chi, *gamma);
    }
    throw InvalidParameter("preset: unknown model name");
}

Operator hamiltonian(const ModelSpec& model, TruncatedFockSpace space) {
    Matrix h = Matrix::Zero(space.dim, space.dim);
    for (int n = 0; n < space.dim; ++n) h(n, n) = model.chi.chi * double(n) * double(n);
    return Operator(space, std::move(h));
}

Generator::Generator(const ModelSpec& model, TruncatedFockSpace space) : space_(space) {
    const int dim = space.dim;
    coef_ = Matrix::Zero(dim, dim);
    double dephasing_rate = 0.0;
    for (const auto& c : model.channels) {
        if (c.kind == ChannelKind::dephasing)
            dephasing_rate += c.rate;
        else
            damping_rate_ += c.rate;
    }
    // Entry (n, m) of the generator acting on rho_{nm}:
    //   -i chi (n^2 - m^2)                  Kerr commutator
    //   -(r/2) (n - m)^2                    D[n] at rate r
    //   -(g/2) (n + m)                      anticommutator half of D[a]
    // The remaining damping piece, g sqrt((n+1)(m+1)) rho_{n+1,m+1}, is a
    // diagonal shift applied separately.
    for (int n = 0; n < dim; ++n) {
        for (int m = 0; m < dim; ++m) {
            const double dn = double(n), dm = double(m);
            double re = -0.5 * dephasing_rate * (dn - dm) * (dn - dm) -
                        0.5 * damping_rate_ * (dn + dm);
            double im = -model.chi.chi * (dn * dn - dm * dm);
            coef_(n, m) = Complex(re, im);
        }
    }
}

void Generator::apply(const Matrix& rho, Matrix& out) const {
    out.array() = coef_.array() * rho.array();
    if (damping_rate_ > 0.0) {
        const int dim = space_.dim;
        for (int n = 0; n + 1 < dim; ++n)
            for (int m = 0; m + 1 < dim; ++m)
                out(n, m) += damping_rate_ * std::sqrt(double(n + 1) * double(m + 1)) *
                             rho(n + 1, m + 1);
    }
}

Matrix Generator::apply(const Matrix& rho) const {
    Matrix out(rho.rows(), rho.cols());
    apply(rho, out);
    return out;
}

Matrix generator_apply(const ModelSpec& model, const DensityMatrix& rho) {
    Generator gen(model, rho.space());
    return gen.apply(rho.entries());
}

}  // namespace kerrcat
