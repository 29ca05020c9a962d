// observables.hpp — Symplectic spectrum and Gaussian mutual information

#pragma once

#include "cosc/covariance.hpp"

namespace cosc {

struct SymplecticSpectrum {
    double n_minus{0.5};
    double n_plus{0.5};
};

// Williamson spectrum via the Hermitian matrix i s^{1/2} Omega s^{1/2}.
// Throws UnphysicalCovariance if sigma is not PSD or n_minus < 1/2 - 1e-9.
SymplecticSpectrum symplectic_eigenvalues(const CovarianceMatrix& cov);

// f(x) = (x + 1/2) ln(x + 1/2) - (x - 1/2) ln(x - 1/2), f(1/2) = 0.
double entropy_function(double x);

double gaussian_mutual_information(const CovarianceMatrix& cov);

} // namespace cosc
