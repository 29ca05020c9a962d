// gibbs.hpp — Thermal second moments of the coupled Hamiltonian via its normal modes

#pragma once

#include "cosc/covariance.hpp"
#include "cosc/model.hpp"

namespace cosc {

// Bath temperatures of the model are ignored; T is the common temperature.
struct GibbsSpec {
    ModelParams model;
    double T{1.0};
};

CovarianceMatrix gibbs_second_moments(const GibbsSpec& spec);
double gibbs_occupation(const GibbsSpec& spec, int mode);

} // namespace cosc
