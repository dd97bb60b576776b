#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "agc/linalg.hpp"

namespace agc {

/// Single source of randomness for the harness. mt19937_64 output is
/// fixed by the standard, and bounded draws use rejection sampling, so
/// every run is reproducible from the seed alone.
class Rng {
public:
    static constexpr const char* algorithm = "mt19937_64";

    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

private:
    std::mt19937_64 gen_;
};

struct ErrorPattern {
    std::vector<int> support;  // ascending
    Vector values;             // nonzero, one per support position
};

/// q-ary symmetric injection with fixed weight: support uniform over
/// w-subsets, values uniform over nonzero elements.
class ChannelModel {
public:
    ChannelModel(FieldPtr field, int n, int weight);

    int weight() const { return weight_; }

    ErrorPattern draw(Rng& rng) const;
    Vector error_vector(const ErrorPattern& e) const;
    Vector apply(const Vector& word, const ErrorPattern& e) const;

private:
    FieldPtr field_;
    int n_;
    int weight_;
};

/// Number of error vectors of exact weight w, C(n,w) * (q-1)^w,
/// saturating on overflow.
unsigned long long weight_class_size(int q, int n, int w);

/// Enumerate every error vector of exact weight w, supports in
/// lexicographic order, value tuples in index order.
/// fn(error, support, values).
void for_each_error(const FieldPtr& field, int n, int w,
                    const std::function<void(const Vector&, const std::vector<int>&,
                                             const Vector&)>& fn);

/// Draw a uniform message of the given length.
Vector random_message(const FieldPtr& field, int length, Rng& rng);

}  // namespace agc
