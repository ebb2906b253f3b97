#include "skewcc/skewpoly.hpp"

namespace skewcc {

bool is_central(const SkewPoly& f) {
    if (!f.autom().is_psi())
        throw std::invalid_argument("center test applies to the psi-twisted ring");
    if (f.is_zero()) return true;
    std::size_t l = f.coeffs().front().ring().l();
    for (std::size_t d = 0; d < f.coeffs().size(); ++d) {
        const RingElement& c = f.coeffs()[d];
        if (c.is_zero()) continue;
        if (!c.is_constant()) return false;
        if (d % l != 0) return false;
    }
    return true;
}

}  // namespace skewcc
