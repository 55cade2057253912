#pragma once

#include <optional>
#include <string>
#include <vector>

#include "montesinos/surface.hpp"

namespace montesinos {

struct RealizationRequest {
    BigInt boundary_components;  // b, even and >= 2
    BigInt slope_denominator;    // q >= 1
};

enum class RealizationFamily { even_n, odd_n };

struct RealizationResult {
    MontesinosKnot knot;
    CandidateSurface surface;
    RealizationFamily family = RealizationFamily::even_n;
};

/// The pretzel knot whose candidate surface realizes b = 2n boundary
/// components with slope denominator q: P(-(n+1), n+1, 2n^2 q - n + 1) for
/// even n, P(-(n+1), n+2, n(2nq + 1) + 2) for odd n.
MontesinosKnot realization_knot(const BigInt& n, const BigInt& q);

class RealizationError : public std::runtime_error {
public:
    enum class Kind { invalid_request, not_realized };

    RealizationError(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Constructs the family knot and verifies the requested pair by running
/// the full pipeline (sweep, solve, analyze) rather than by formula
/// substitution. Odd b is rejected: an essential orientable surface with an
/// odd number of boundary components is forced to be non-separating and
/// hence to have slope denominator 1, and odd-b realization is out of
/// scope here. Throws RealizationError with kind not_realized when the
/// sweep produces no surface with the requested invariants (see README:
/// this is the case for every odd n, where the family needs edgepath
/// systems beyond the right-region enumeration implemented here).
RealizationResult realize(const RealizationRequest& request);

enum class CheckStatus { pass, fail, finding };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
};

struct VerifyOptions {
    // Corrupts one computed value before comparison; the report must then
    // show at least one failure. Exists to prove the harness can fail.
    bool fault_injection = false;
};

/// Desk-scale verification grids: the closed-form family, the even-n
/// realization family, the odd-n realization family (reported as findings
/// where the pipeline cannot produce the stated pair), and the
/// odd-boundary-count consistency sweeps.
std::vector<CheckResult> verify_paper(const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

std::string to_string(CheckStatus s);

}  // namespace montesinos
