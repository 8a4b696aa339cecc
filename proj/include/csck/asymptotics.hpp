#ifndef CSCK_ASYMPTOTICS_HPP
#define CSCK_ASYMPTOTICS_HPP

#include <cmath>
#include <string>
#include <vector>

#include "csck/rational.hpp"

namespace csck {

/// Where an expansion applies.  The first four cover the flat families;
/// InfinityBundle covers the bundle far ends (finite-b double root and
/// power-law growth cases).
enum class AsymptoticLocation {
    PunctureZero,
    InfinityALE,
    BoundaryPoincare,
    InfinityIncomplete,
    InfinityBundle,
};

/// Basis functions, expressed through t = log r^2 (for bundles read nu
/// for t).  Pow tags take the exponent in `p`; ExpNegOverKappa reads
/// kappa from `p`.
enum class BasisTag {
    R2,               ///< r^2 = e^t
    LogR2,            ///< t
    R2Pow,            ///< (r^2)^p
    LogNegLog,        ///< log(-t),  t < 0
    NegLogPow,        ///< (-t)^p,   t < 0
    ExpNegOverKappa,  ///< r^(-2/kappa) = e^(-t/kappa)
    LogLogPos,        ///< log(t),   t > 0
    LogNegLogOverT,   ///< log(-t)/t, t < 0  (PMY remainder companion)
    One,              ///< constant column (absorbs the potential's free constant)
};

struct AsymptoticTerm {
    real coefficient;       ///< predicted value; ignored when !checked
    BasisTag basis;
    real p = 0;
    bool checked = true;    ///< false: fitted only (constants, remainder columns)
};

struct AsymptoticModel {
    AsymptoticLocation location;
    std::vector<AsymptoticTerm> terms;
    real check_rel_tol = 0.01;
    std::string note;       ///< recorded discrepancies / free parameters
};

inline real basis_value(BasisTag tag, real p, real t) {
    switch (tag) {
        case BasisTag::R2: return std::exp(t);
        case BasisTag::LogR2: return t;
        case BasisTag::R2Pow: return std::exp(p * t);
        case BasisTag::LogNegLog: return std::log(-t);
        case BasisTag::NegLogPow: return std::pow(-t, p);
        case BasisTag::ExpNegOverKappa: return std::exp(-t / p);
        case BasisTag::LogLogPos: return std::log(t);
        case BasisTag::LogNegLogOverT: return std::log(-t) / t;
        case BasisTag::One: return 1;
    }
    return 0;
}

std::string basis_label(BasisTag tag, real p);
std::string location_label(AsymptoticLocation loc);

} // namespace csck

#endif
