#pragma once

#include <cmath>

namespace exnet {

// Standard normal density.
inline double norm_pdf(double z) {
    static const double inv_sqrt_2pi = 0.3989422804014326779;
    return inv_sqrt_2pi * std::exp(-0.5 * z * z);
}

// Standard normal CDF via erfc; accurate in both tails.
inline double norm_cdf(double z) {
    return 0.5 * std::erfc(-z * 0.70710678118654752440);
}

// log(Phi(z)) without underflow for z << 0.
double log_norm_cdf(double z);

// Inverse standard normal CDF (Acklam rational approximation plus one
// Halley refinement step; max relative error near machine epsilon).
double norm_ppf(double p);

// Inverse Mills ratio pdf(z)/cdf(z), stable for z << 0.
double mills_ratio(double z);

}  // namespace exnet
