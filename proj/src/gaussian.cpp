#include "gnet/gaussian.hpp"

#include <array>
#include <ostream>
#include <stdexcept>

namespace gnet {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("gaussian add overflow");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("gaussian sub overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("gaussian mul overflow");
    return r;
}

std::int64_t checked_neg(std::int64_t a) {
    return checked_sub(0, a);
}

std::int64_t checked_abs(std::int64_t a) {
    return a < 0 ? checked_neg(a) : a;
}

// Nearest integer to num/den for den > 0, ties rounded toward zero.
std::int64_t div_round_nearest(std::int64_t num, std::int64_t den) {
    const std::int64_t a = checked_abs(num);
    const std::int64_t q = (checked_add(checked_mul(2, a), den) - 1) / (2 * den);
    return num < 0 ? -q : q;
}

}  // namespace

GInt operator+(GInt a, GInt b) {
    return {checked_add(a.re, b.re), checked_add(a.im, b.im)};
}

GInt operator-(GInt a, GInt b) {
    return {checked_sub(a.re, b.re), checked_sub(a.im, b.im)};
}

GInt operator*(GInt a, GInt b) {
    return {checked_sub(checked_mul(a.re, b.re), checked_mul(a.im, b.im)),
            checked_add(checked_mul(a.re, b.im), checked_mul(a.im, b.re))};
}

GInt operator-(GInt a) {
    return {checked_neg(a.re), checked_neg(a.im)};
}

GInt conj(GInt a) {
    return {a.re, checked_neg(a.im)};
}

std::int64_t norm(GInt a) {
    return checked_add(checked_mul(a.re, a.re), checked_mul(a.im, a.im));
}

std::int64_t l1_norm(GInt a) {
    return checked_add(checked_abs(a.re), checked_abs(a.im));
}

std::ostream& operator<<(std::ostream& os, GInt a) {
    if (a.im == 0) return os << a.re;
    if (a.re != 0) {
        os << a.re;
        if (a.im > 0) os << '+';
    }
    if (a.im == -1)
        os << '-';
    else if (a.im != 1)
        os << a.im;
    return os << 'i';
}

DenseModulus::DenseModulus(std::int64_t k_) : k(k_), alpha{k_, k_ + 1}, n(0) {
    if (k < 1) throw std::invalid_argument("dense modulus requires k >= 1");
    n = norm(alpha);
}

bool is_canonical(GInt g, const DenseModulus& m) {
    return l1_norm(g) <= m.k;
}

bool divisible_by_alpha(GInt g, const DenseModulus& m) {
    const GInt t = g * conj(m.alpha);
    return t.re % m.n == 0 && t.im % m.n == 0;
}

GInt canonical_mod(GInt g, const DenseModulus& m) {
    const GInt t = g * conj(m.alpha);
    const GInt q{div_round_nearest(t.re, m.n), div_round_nearest(t.im, m.n)};
    static constexpr std::array<GInt, 9> offsets{{{0, 0},
                                                  {1, 0},
                                                  {-1, 0},
                                                  {0, 1},
                                                  {0, -1},
                                                  {1, 1},
                                                  {1, -1},
                                                  {-1, 1},
                                                  {-1, -1}}};
    for (const GInt& off : offsets) {
        const GInt r = g - (q + off) * m.alpha;
        if (is_canonical(r, m)) return r;
    }
    throw std::logic_error("canonical_mod: no diamond representative near quotient estimate");
}

}  // namespace gnet
