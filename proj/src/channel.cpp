#include "agc/channel.hpp"

#include <algorithm>
#include <numeric>

#include "agc/combinat.hpp"

namespace agc {

ChannelModel::ChannelModel(FieldPtr field, int n, int weight)
    : field_(std::move(field)), n_(n), weight_(weight) {
    if (weight < 0 || weight > n)
        fail(errc::bad_config, "error weight must lie in [0, n]");
}

ErrorPattern ChannelModel::draw(Rng& rng) const {
    std::vector<int> idx(n_);
    std::iota(idx.begin(), idx.end(), 0);
    for (int i = 0; i < weight_; ++i) {
        const int j = i + static_cast<int>(rng.below(n_ - i));
        std::swap(idx[i], idx[j]);
    }
    ErrorPattern e;
    e.support.assign(idx.begin(), idx.begin() + weight_);
    std::sort(e.support.begin(), e.support.end());
    e.values.reserve(weight_);
    for (int i = 0; i < weight_; ++i)
        e.values.push_back(field_->element(1 + static_cast<int>(rng.below(field_->q() - 1))));
    return e;
}

Vector ChannelModel::error_vector(const ErrorPattern& e) const {
    Vector v(n_, field_->zero());
    for (size_t i = 0; i < e.support.size(); ++i) v[e.support[i]] = e.values[i];
    return v;
}

Vector ChannelModel::apply(const Vector& word, const ErrorPattern& e) const {
    if (static_cast<int>(word.size()) != n_) fail(errc::length_mismatch, "word length != n");
    Vector y = word;
    for (size_t i = 0; i < e.support.size(); ++i) y[e.support[i]] = y[e.support[i]] + e.values[i];
    return y;
}

unsigned long long weight_class_size(int q, int n, int w) {
    unsigned long long size = binomial(n, w);
    for (int i = 0; i < w; ++i) {
        const unsigned long long f = static_cast<unsigned long long>(q - 1);
        if (size > std::numeric_limits<unsigned long long>::max() / f)
            return std::numeric_limits<unsigned long long>::max();
        size *= f;
    }
    return size;
}

void for_each_error(const FieldPtr& field, int n, int w,
                    const std::function<void(const Vector&, const std::vector<int>&,
                                             const Vector&)>& fn) {
    if (w == 0) {
        const Vector zero(n, field->zero());
        fn(zero, {}, {});
        return;
    }
    const int q = field->q();
    for_each_combination(n, w, [&](const std::vector<int>& support) {
        std::vector<int> value_idx(w, 1);
        while (true) {
            Vector e(n, field->zero());
            Vector values;
            values.reserve(w);
            for (int i = 0; i < w; ++i) {
                values.push_back(field->element(value_idx[i]));
                e[support[i]] = values.back();
            }
            fn(e, support, values);
            int pos = w - 1;
            while (pos >= 0 && value_idx[pos] == q - 1) {
                value_idx[pos] = 1;
                --pos;
            }
            if (pos < 0) break;
            ++value_idx[pos];
        }
    });
}

Vector random_message(const FieldPtr& field, int length, Rng& rng) {
    Vector msg;
    msg.reserve(length);
    for (int i = 0; i < length; ++i)
        msg.push_back(field->element(static_cast<int>(rng.below(field->q()))));
    return msg;
}

}  // namespace agc
