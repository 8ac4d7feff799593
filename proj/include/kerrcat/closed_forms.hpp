#pragma once

#include <complex>

namespace kerrcat::closed_forms {

using Complex = std::complex<double>;

// C(chi*tau) = 2 - exp(-2i chi*tau); |C| lies in [1, 3], C = 1 exactly at
// chi*tau = k*pi and C = 3 at chi*tau = pi/2 + k*pi.
struct CFactor {
    Complex value;
};

CFactor c_factor(double chi_tau);

struct MomentFactors {
    Complex rotation;      // e^{-i chi tau} / C^2
    Complex interference;  // exp(-2|alpha0|^2 (C - 1)/C)
    double damping;        // e^{-chi^2 tau}
};

// value = alpha0 * rotation * interference * damping.
struct MomentResult {
    Complex value;
    MomentFactors factors;
};

// First moment of the feedback master equation,
//   <a(tau)> = alpha0 e^{-i chi tau} / C^2
//              * exp(-2|alpha0|^2 [C-1]/C) * e^{-chi^2 tau}.
// Kept separate from the surrogate-model moments below: the 1/C^2
// structure does not arise from the Kerr+dephasing generator.
MomentResult sm_first_moment(Complex alpha0, double chi, double tau);

// Pure Kerr (H = chi n^2): alpha0 e^{-i chi tau} exp(|alpha0|^2 (e^{-2i chi tau} - 1)).
Complex kerr_first_moment(Complex alpha0, double chi, double tau);

// Kerr + dephasing at rate 2 chi^2. From the coherence law
//   rho_{nm}(tau) = rho_{nm}(0) e^{-i chi (n^2-m^2) tau - chi^2 (n-m)^2 tau}
// the first moment is the Kerr result times e^{-chi^2 tau}, independent of
// alpha0, and the second moment carries the fourth power of that factor.
Complex dephasing_first_moment(Complex alpha0, double chi, double tau);
Complex dephasing_second_moment(Complex alpha0, double chi, double tau);

// Variance of X_theta = (a e^{-i theta} + a^dag e^{i theta})/2 for the
// Kerr+dephasing state: (1 + 2<n> + 2 Re(e^{-2i theta}<a^2>))/4
// - (Re(e^{-i theta}<a>))^2 with <n> = |alpha0|^2.
double dephasing_quadrature_variance(Complex alpha0, double chi, double tau, double theta);

// |<a>|/|alpha0| at the k-th recurrence chi*tau = k*pi: e^{-k pi chi}.
double recurrence_envelope(double chi, int k);

}  // namespace kerrcat::closed_forms
