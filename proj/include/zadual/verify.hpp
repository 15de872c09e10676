#pragma once

#include <functional>
#include <string>
#include <vector>

#include "zadual/calculus.hpp"
#include "zadual/enumerate.hpp"

namespace zadual {

struct VerifyOptions {
    bool involution = true;
    bool commutation = true;
    bool inverse_laws = true;
    bool irreducibility = true;
    int irr_max_x2 = 7; // probe x <= 7/2
    size_t max_failures = 20;
    // Injectable derivative for fault-injection tests; defaults to the real one.
    std::function<DerivativeResult(const LanglandsDatum&, const Point&)> der;
};

struct VerifyReport {
    long cases = 0;
    long involution_checks = 0;
    long commutation_checks = 0;
    long inverse_checks = 0;
    long irreducibility_checks = 0;
    std::vector<std::string> failures;
    long failure_count = 0;

    bool ok() const { return failure_count == 0; }
    std::string summary() const;
};

// Runs the property suite over the enumerated family: involution,
// derivative/duality commutation, inverse laws, irreducibility criterion
// agreement and rank bookkeeping.
VerifyReport verify(const EnumParams& params, const VerifyOptions& opts = {});

} // namespace zadual
