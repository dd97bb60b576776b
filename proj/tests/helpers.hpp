#pragma once

#include <doctest.h>

#include "agc/agcode.hpp"

namespace agc::test {

// Shipped desk-scale configurations used across the suites.

inline CodeConfig rs7_m3_config() {
    Curve curve = Curve::rational(Field::prime(7));
    return CodeConfig{curve, curve.rational_points(), 3};
}

inline CodeConfig hermitian4_m4_config() {
    Curve curve = Curve::hermitian(Field::make(2, 2, {1, 1, 1}));
    return CodeConfig{curve, curve.rational_points(), 4};
}

inline CodeConfig rs11_m6_config() {
    Curve curve = Curve::rational(Field::prime(11));
    return CodeConfig{curve, curve.rational_points(), 6};
}

inline GoppaCode rs7_m3() { return GoppaCode::build(rs7_m3_config()); }
inline GoppaCode hermitian4_m4() { return GoppaCode::build(hermitian4_m4_config()); }
inline GoppaCode rs11_m6() { return GoppaCode::build(rs11_m6_config()); }

template <typename Fn>
errc error_code_of(Fn&& fn) {
    try {
        fn();
    } catch (const error& e) {
        return e.code();
    }
    FAIL("expected an agc::error");
    return errc::bad_config;
}

}  // namespace agc::test
