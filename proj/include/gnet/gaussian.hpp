#pragma once

#include <cstdint>
#include <iosfwd>

namespace gnet {

// Gaussian integer a + b*i with exact 64-bit components. All arithmetic is
// overflow-checked and throws std::overflow_error when it would wrap; the
// lattices handled by this library are tiny, so an overflow always means a
// caller bug rather than a big input.
struct GInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    friend bool operator==(const GInt&, const GInt&) = default;
};

GInt operator+(GInt a, GInt b);
GInt operator-(GInt a, GInt b);
GInt operator*(GInt a, GInt b);
GInt operator-(GInt a);

GInt conj(GInt a);

// re^2 + im^2, multiplicative over products.
std::int64_t norm(GInt a);

// |re| + |im|, the diamond radius used for canonical representatives.
std::int64_t l1_norm(GInt a);

// Prints compact complex form: "0", "i", "-2i", "1+i", "3-2i".
std::ostream& operator<<(std::ostream& os, GInt a);

// The dense modulus alpha_k = k + (k+1)i. Its norm n = 2k^2 + 2k + 1 is the
// number of residue classes, hence the node count of the network built on it.
struct DenseModulus {
    std::int64_t k;
    GInt alpha;
    std::int64_t n;

    explicit DenseModulus(std::int64_t k);
};

// True iff g already lies in the canonical diamond |re| + |im| <= k.
bool is_canonical(GInt g, const DenseModulus& m);

// True iff g is a Z[i]-multiple of alpha_k.
bool divisible_by_alpha(GInt g, const DenseModulus& m);

// Unique r == g (mod alpha_k) with l1_norm(r) <= k. The quotient is first
// estimated by rounding g*conj(alpha)/n to the nearest Gaussian integer
// (ties toward zero, exact integer arithmetic); the estimate can be off by
// one unit per component, so the nine neighbouring quotients are searched
// for the one whose remainder lands in the diamond.
GInt canonical_mod(GInt g, const DenseModulus& m);

}  // namespace gnet
