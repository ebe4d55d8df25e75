#pragma once

#include <stdexcept>
#include <string>

namespace qident {

enum class errc {
    degenerate_product,
    non_convergent_theta,
    not_invertible,
    not_unit_leading,
    tail_too_large,
    log_domain,
    divergent_term,
    order_too_low,
    insufficient_precision,
    degenerate_basis,
    incompatible_specialization,
    out_of_domain,
    inexact_division,
    fractional_grid,
    bad_argument,
    parse_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::degenerate_product: return "degenerate-product";
        case errc::non_convergent_theta: return "non-convergent-theta";
        case errc::not_invertible: return "not-invertible";
        case errc::not_unit_leading: return "not-unit-leading";
        case errc::tail_too_large: return "tail-too-large";
        case errc::log_domain: return "log-domain";
        case errc::divergent_term: return "divergent-term";
        case errc::order_too_low: return "order-too-low";
        case errc::insufficient_precision: return "insufficient-precision";
        case errc::degenerate_basis: return "degenerate-basis";
        case errc::incompatible_specialization: return "incompatible-specialization";
        case errc::out_of_domain: return "out-of-domain";
        case errc::inexact_division: return "inexact-division";
        case errc::fractional_grid: return "fractional-grid";
        case errc::bad_argument: return "bad-argument";
        case errc::parse_error: return "parse-error";
    }
    return "unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace qident
