#include "csck/asymptotics.hpp"

#include <sstream>

namespace csck {

std::string basis_label(BasisTag tag, real p) {
    std::ostringstream os;
    switch (tag) {
        case BasisTag::R2: return "r2";
        case BasisTag::LogR2: return "log_r2";
        case BasisTag::R2Pow:
            os << "r2^" << static_cast<double>(p);
            return os.str();
        case BasisTag::LogNegLog: return "log(-log_r2)";
        case BasisTag::NegLogPow:
            os << "(-log_r2)^" << static_cast<double>(p);
            return os.str();
        case BasisTag::ExpNegOverKappa:
            os << "r^(-2/kappa), kappa=" << static_cast<double>(p);
            return os.str();
        case BasisTag::LogLogPos: return "log(log_r2)";
        case BasisTag::LogNegLogOverT: return "log(-log_r2)/log_r2";
        case BasisTag::One: return "1";
    }
    return "?";
}

std::string location_label(AsymptoticLocation loc) {
    switch (loc) {
        case AsymptoticLocation::PunctureZero: return "puncture";
        case AsymptoticLocation::InfinityALE: return "infinity_ale";
        case AsymptoticLocation::BoundaryPoincare: return "boundary_poincare";
        case AsymptoticLocation::InfinityIncomplete: return "infinity_incomplete";
        case AsymptoticLocation::InfinityBundle: return "infinity_bundle";
    }
    return "?";
}

} // namespace csck
