#include "agc/decoder.hpp"

#include <algorithm>

namespace agc {

const char* to_string(DecodeStatus s) {
    switch (s) {
        case DecodeStatus::corrected: return "corrected";
        case DecodeStatus::detected_beyond_capacity: return "detected_beyond_capacity";
        case DecodeStatus::ambiguous: return "ambiguous";
        case DecodeStatus::fail: return "fail";
    }
    return "?";
}

namespace {

// Shared value-recovery path: solve parity[:, support] * e = syndrome.
std::optional<Vector> recover_values(const GoppaCode& code, const std::vector<int>& support,
                                      const Vector& synd) {
    return solve(column_submatrix(code.parity(), support), synd);
}

Vector apply_correction(const Vector& y, const std::vector<int>& support, const Vector& values) {
    Vector corrected = y;
    for (size_t i = 0; i < support.size(); ++i)
        corrected[support[i]] = corrected[support[i]] - values[i];
    return corrected;
}

}  // namespace

DecodeResult decode_geometric(const GoppaCode& code, const Vector& y) {
    if (code.t() < 1) fail(errc::capacity_zero, "t = 0, no correctable errors");
    if (static_cast<int>(y.size()) != code.n())
        fail(errc::length_mismatch, "received word length != n");

    const SyndromePoint p = syndrome(code, y);
    const StratumLabel label = secant_height(code, p, code.t());

    DecodeResult result;
    if (!label.h) {
        result.status = DecodeStatus::detected_beyond_capacity;
        return result;
    }
    result.height = *label.h;
    if (label.witnesses.size() > 1) {
        // cannot happen for h <= t on a correctly built code
        result.status = DecodeStatus::ambiguous;
        return result;
    }
    const std::vector<int>& support = label.witnesses.front();
    if (*label.h == 0) {
        result.status = DecodeStatus::corrected;
        result.codeword = y;
        return result;
    }
    const std::optional<Vector> values = recover_values(code, support, p.v);
    if (!values || std::any_of(values->begin(), values->end(),
                               [](const FieldElement& x) { return x.is_zero(); })) {
        // minimality of the witness guarantees all values nonzero
        result.status = DecodeStatus::fail;
        return result;
    }
    result.status = DecodeStatus::corrected;
    result.support = support;
    result.values = *values;
    result.codeword = apply_correction(y, support, *values);
    return result;
}

DecodeResult decode_toeplitz_g0(const GoppaCode& code, const Vector& y) {
    if (code.curve().family() != CurveFamily::rational)
        fail(errc::unsupported_family, "Toeplitz decoding needs the rational family");
    if (code.t() < 1) fail(errc::capacity_zero, "t = 0, no correctable errors");
    if (static_cast<int>(y.size()) != code.n())
        fail(errc::length_mismatch, "received word length != n");

    const FieldPtr& field = code.field();
    // Parity rows are the multiplier-weighted monomials x^j, so the
    // syndrome components are already the power sums of the (multiplier
    // weighted) error values at the locators.
    const Vector s = syndrome(code, y).v;

    DecodeResult result;
    if (vec_is_zero(s)) {
        result.status = DecodeStatus::corrected;
        result.codeword = y;
        result.height = 0;
        return result;
    }

    for (int w = code.t(); w >= 1; --w) {
        // sigma(z) = z^w + lambda_{w-1} z^{w-1} + ... + lambda_0 with the
        // error locators as roots; the power sums satisfy the symmetric
        // Hankel system A[r][c] = s[r+c], rhs[r] = -s[r+w].
        Matrix a(field, w, w);
        Vector rhs;
        rhs.reserve(w);
        for (int r = 0; r < w; ++r) {
            for (int c = 0; c < w; ++c) a.set(r, c, s[r + c]);
            rhs.push_back(-s[r + w]);
        }
        const std::optional<Vector> lambda = solve(a, rhs);
        if (!lambda) continue;

        std::vector<int> support;
        for (int i = 0; i < code.n(); ++i) {
            const FieldElement xi = code.points()[i].x();
            FieldElement value = xi.pow(w);
            for (int j = 0; j < w; ++j) value = value + (*lambda)[j] * xi.pow(j);
            if (value.is_zero()) support.push_back(i);
        }
        if (static_cast<int>(support.size()) != w) continue;

        const std::optional<Vector> values = recover_values(code, support, s);
        if (!values) continue;
        // a zero value contradicts the exactly-w-errors assumption; the
        // next trial weight will pick the smaller error up
        if (std::any_of(values->begin(), values->end(),
                        [](const FieldElement& x) { return x.is_zero(); }))
            continue;

        result.status = DecodeStatus::corrected;
        result.codeword = apply_correction(y, support, *values);
        result.height = w;
        result.support = std::move(support);
        result.values = *values;
        return result;
    }
    result.status = DecodeStatus::detected_beyond_capacity;
    return result;
}

bool results_agree(const DecodeResult& a, const DecodeResult& b) {
    if (a.status != b.status) return false;
    if (a.support != b.support) return false;
    if (a.values != b.values) return false;
    if (a.codeword.has_value() != b.codeword.has_value()) return false;
    if (a.codeword && *a.codeword != *b.codeword) return false;
    return true;
}

CrossReport cross_validate(const GoppaCode& code, std::span<const Vector> received) {
    CrossReport report;
    for (const Vector& y : received) {
        const DecodeResult g = decode_geometric(code, y);
        const DecodeResult t = decode_toeplitz_g0(code, y);
        if (g.status == DecodeStatus::corrected && t.status == DecodeStatus::corrected)
            ++report.both_corrected;
        if (g.status != DecodeStatus::corrected && t.status != DecodeStatus::corrected)
            ++report.both_rejected;
        if (!results_agree(g, t)) {
            ++report.disagreements;
            if (report.defects.size() < 32) report.defects.push_back({report.trials, g, t});
        }
        ++report.trials;
    }
    return report;
}

}  // namespace agc
