#pragma once

#include <stdexcept>
#include <string>

namespace agc {

enum class errc {
    non_prime_characteristic,
    reducible_modulus,
    division_by_zero,
    field_mismatch,
    index_out_of_range,
    unsupported_family,
    eval_at_infinity,
    not_sag,
    duplicate_points,
    multiplier_not_found,
    length_mismatch,
    too_large_to_exhaust,
    capacity_zero,
    height_unknown,
    budget_exceeded,
    bad_config,
};

const char* to_string(errc c);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace agc
