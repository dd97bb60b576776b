#include "agc/error.hpp"

namespace agc {

const char* to_string(errc c) {
    switch (c) {
        case errc::non_prime_characteristic: return "NonPrimeCharacteristic";
        case errc::reducible_modulus: return "ReducibleModulus";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::unsupported_family: return "UnsupportedFamily";
        case errc::eval_at_infinity: return "EvalAtInfinity";
        case errc::not_sag: return "NotSAG";
        case errc::duplicate_points: return "DuplicatePoints";
        case errc::multiplier_not_found: return "MultiplierNotFound";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::too_large_to_exhaust: return "TooLargeToExhaust";
        case errc::capacity_zero: return "CapacityZero";
        case errc::height_unknown: return "HeightUnknown";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::bad_config: return "BadConfig";
    }
    return "UnknownError";
}

}  // namespace agc
