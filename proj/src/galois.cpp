#include "agc/galois.hpp"

#include <algorithm>

namespace agc {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Dense polynomials over GF(p), little-endian coefficients, trimmed.
using Poly = std::vector<int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

// Remainder of a modulo monic b.
Poly poly_rem(Poly a, const Poly& b, int p) {
    trim(a);
    const int db = degree(b);
    while (degree(a) >= db) {
        const int shift = degree(a) - db;
        const int lead = a.back();
        for (int i = 0; i <= db; ++i) {
            a[i + shift] = ((a[i + shift] - static_cast<long long>(lead) * b[i]) % p + p) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<int>((c[i + j] + static_cast<long long>(a[i]) * b[j]) % p);
    return c;
}

// Trial division by every monic polynomial of degree 1..deg(m)/2.
bool is_irreducible(const Poly& m, int p) {
    const int dm = degree(m);
    if (dm < 1) return false;
    if (dm == 1) return true;
    for (int d = 1; 2 * d <= dm; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long code = 0; code < count; ++code) {
            Poly div(d + 1, 0);
            long long c = code;
            for (int i = 0; i < d; ++i) {
                div[i] = static_cast<int>(c % p);
                c /= p;
            }
            div[d] = 1;
            if (poly_rem(m, div, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

Field::Field(int p, int e, std::vector<int> modulus) : p_(p), e_(e), modulus_(std::move(modulus)) {
    long long q = 1;
    for (int i = 0; i < e_; ++i) {
        q *= p_;
        if (q > (1 << 20)) fail(errc::bad_config, "field too large (q > 2^20)");
    }
    q_ = static_cast<int>(q);

    if (q_ <= 256) {
        add_table_.resize(static_cast<size_t>(q_) * q_);
        mul_table_.resize(static_cast<size_t>(q_) * q_);
        neg_table_.resize(q_);
        inv_table_.assign(q_, 0);
        for (int a = 0; a < q_; ++a) {
            for (int b = 0; b < q_; ++b) {
                // addition is coefficientwise, computable on packed indices
                int x = a, y = b, s = 0, pw = 1;
                for (int i = 0; i < e_; ++i) {
                    s += ((x % p_ + y % p_) % p_) * pw;
                    x /= p_;
                    y /= p_;
                    pw *= p_;
                }
                add_table_[static_cast<size_t>(a) * q_ + b] = static_cast<std::uint16_t>(s);
                mul_table_[static_cast<size_t>(a) * q_ + b] =
                    static_cast<std::uint16_t>(mul_slow(a, b));
            }
        }
        for (int a = 0; a < q_; ++a) {
            int x = a, s = 0, pw = 1;
            for (int i = 0; i < e_; ++i) {
                s += ((p_ - x % p_) % p_) * pw;
                x /= p_;
                pw *= p_;
            }
            neg_table_[a] = static_cast<std::uint16_t>(s);
        }
        for (int a = 1; a < q_; ++a) {
            for (int b = 1; b < q_; ++b) {
                if (mul_table_[static_cast<size_t>(a) * q_ + b] == 1) {
                    inv_table_[a] = static_cast<std::uint16_t>(b);
                    break;
                }
            }
        }
    }
}

FieldPtr Field::make(int p, int e, std::vector<int> modulus) {
    if (!is_prime(p)) fail(errc::non_prime_characteristic, "p = " + std::to_string(p));
    if (e < 1) fail(errc::bad_config, "extension degree must be >= 1");
    if (static_cast<int>(modulus.size()) != e + 1)
        fail(errc::bad_config, "modulus must have degree e (e+1 coefficients)");
    for (int& c : modulus) c = ((c % p) + p) % p;
    if (modulus.back() != 1) fail(errc::bad_config, "modulus must be monic");
    if (!is_irreducible(modulus, p))
        fail(errc::reducible_modulus, "modulus factors over GF(" + std::to_string(p) + ")");
    return FieldPtr(new Field(p, e, std::move(modulus)));
}

FieldPtr Field::prime(int p) { return make(p, 1, {0, 1}); }

FieldElement Field::element(int index) const {
    if (index < 0 || index >= q_)
        fail(errc::index_out_of_range, "element index " + std::to_string(index));
    return FieldElement(this, index);
}

FieldElement Field::from_coeffs(const std::vector<int>& coeffs) const {
    Poly c(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) c[i] = ((coeffs[i] % p_) + p_) % p_;
    c = poly_rem(std::move(c), modulus_, p_);
    return FieldElement(this, encode(c));
}

std::vector<int> Field::coeffs(const FieldElement& a) const { return decode(a.index()); }

std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (int i = 0; i < q_; ++i) out.push_back(FieldElement(this, i));
    return out;
}

std::vector<int> Field::decode(int idx) const {
    std::vector<int> c(e_);
    for (int i = 0; i < e_; ++i) {
        c[i] = idx % p_;
        idx /= p_;
    }
    return c;
}

int Field::encode(const std::vector<int>& c) const {
    int idx = 0, pw = 1;
    for (int i = 0; i < e_; ++i) {
        if (i < static_cast<int>(c.size())) idx += c[i] * pw;
        pw *= p_;
    }
    return idx;
}

int Field::mul_slow(int a, int b) const {
    Poly prod = poly_mul(decode(a), decode(b), p_);
    return encode(poly_rem(std::move(prod), modulus_, p_));
}

int Field::add_i(int a, int b) const {
    if (!add_table_.empty()) return add_table_[static_cast<size_t>(a) * q_ + b];
    int s = 0, pw = 1;
    for (int i = 0; i < e_; ++i) {
        s += ((a % p_ + b % p_) % p_) * pw;
        a /= p_;
        b /= p_;
        pw *= p_;
    }
    return s;
}

int Field::neg_i(int a) const {
    if (!neg_table_.empty()) return neg_table_[a];
    int s = 0, pw = 1;
    for (int i = 0; i < e_; ++i) {
        s += ((p_ - a % p_) % p_) * pw;
        a /= p_;
        pw *= p_;
    }
    return s;
}

int Field::sub_i(int a, int b) const { return add_i(a, neg_i(b)); }

int Field::mul_i(int a, int b) const {
    if (!mul_table_.empty()) return mul_table_[static_cast<size_t>(a) * q_ + b];
    return mul_slow(a, b);
}

int Field::inv_i(int a) const {
    if (a == 0) fail(errc::division_by_zero, "inverse of zero");
    if (!inv_table_.empty()) return inv_table_[a];
    // a^(q-2) by square and multiply
    int result = 1, base = a;
    long long exp = q_ - 2;
    while (exp > 0) {
        if (exp & 1) result = mul_i(result, base);
        base = mul_i(base, base);
        exp >>= 1;
    }
    return result;
}

namespace {
void check_same(const FieldElement& a, const FieldElement& b) {
    if (&a.field() == &b.field()) return;
    if (a.field() == b.field()) return;
    fail(errc::field_mismatch, "operands from different fields");
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(*this, o);
    return FieldElement(field_, field_->add_i(idx_, o.idx_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(*this, o);
    return FieldElement(field_, field_->sub_i(idx_, o.idx_));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(*this, o);
    return FieldElement(field_, field_->mul_i(idx_, o.idx_));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same(*this, o);
    return FieldElement(field_, field_->mul_i(idx_, field_->inv_i(o.idx_)));
}

FieldElement FieldElement::operator-() const { return FieldElement(field_, field_->neg_i(idx_)); }

FieldElement FieldElement::inv() const { return FieldElement(field_, field_->inv_i(idx_)); }

FieldElement FieldElement::pow(long long exponent) const {
    if (exponent < 0) return inv().pow(-exponent);
    FieldElement result = field_->one();
    FieldElement base = *this;
    while (exponent > 0) {
        if (exponent & 1) result = result * base;
        base = base * base;
        exponent >>= 1;
    }
    return result;
}

bool FieldElement::operator==(const FieldElement& o) const {
    check_same(*this, o);
    return idx_ == o.idx_;
}

}  // namespace agc
