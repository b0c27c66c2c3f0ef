#pragma once

#include <string>

namespace pgl {

/// A pandemic location game instance: basic reproduction number, initial
/// infected fraction and isolation cost coefficient.
///
/// Game instances require 0 < eta <= 1. A disease-free instance (eta = 0)
/// can be built through `disease_free()` for diagnostics; in that mode no
/// one is ever infected.
class GameParams {
public:
    /// Throws DomainError unless r0 > 0, c > 0 and 0 < eta <= 1.
    static GameParams make(double r0, double eta, double c);

    /// eta = 0 diagnostic instance. Throws DomainError unless r0 > 0, c > 0.
    static GameParams disease_free(double r0, double c);

    double r0() const noexcept { return r0_; }
    double eta() const noexcept { return eta_; }
    double c() const noexcept { return c_; }

    bool is_disease_free() const noexcept { return eta_ == 0.0; }
    bool is_fully_infected() const noexcept { return eta_ == 1.0; }

    std::string describe() const;

    friend bool operator==(const GameParams&, const GameParams&) = default;

private:
    GameParams(double r0, double eta, double c) : r0_(r0), eta_(eta), c_(c) {}

    double r0_;
    double eta_;
    double c_;
};

}  // namespace pgl
