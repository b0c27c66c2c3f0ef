#include "pgl/params.hpp"

#include <cmath>
#include <sstream>

#include "pgl/errors.hpp"

namespace pgl {

namespace {

void require_positive(double value, const char* name) {
    if (!std::isfinite(value) || value <= 0.0) {
        std::ostringstream os;
        os << name << " must be a finite positive number, got " << value;
        throw DomainError(os.str());
    }
}

}  // namespace

GameParams GameParams::make(double r0, double eta, double c) {
    require_positive(r0, "r0");
    require_positive(c, "c");
    if (!std::isfinite(eta) || eta <= 0.0 || eta > 1.0) {
        std::ostringstream os;
        os << "eta must lie in (0, 1], got " << eta;
        throw DomainError(os.str());
    }
    return GameParams(r0, eta, c);
}

GameParams GameParams::disease_free(double r0, double c) {
    require_positive(r0, "r0");
    require_positive(c, "c");
    return GameParams(r0, 0.0, c);
}

std::string GameParams::describe() const {
    std::ostringstream os;
    os.precision(17);
    os << "(r0=" << r0_ << ", eta=" << eta_ << ", c=" << c_ << ")";
    return os.str();
}

}  // namespace pgl
