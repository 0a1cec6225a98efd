#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace lee {

// Prime field F_p. Construction runs a deterministic primality check.
struct PrimeFieldSpec {
    std::int64_t p = 0;
    explicit PrimeFieldSpec(std::int64_t p);
};

bool is_prime(std::int64_t n);

// Smallest quadratic non-residue mod p; fixes the basis {1, alpha} with
// alpha^2 = d for F_{p^2}.
std::int64_t smallest_nonresidue(std::int64_t p);

enum class FpOp { add, sub, mul, inv, pow };

// Arithmetic in F_p on residues 0..p-1. For inv, b is ignored; for pow, b is
// the (nonnegative) exponent.
std::int64_t fp_arith(FpOp op, std::int64_t a, std::int64_t b, std::int64_t p);

std::int64_t fp_add(std::int64_t a, std::int64_t b, std::int64_t p);
std::int64_t fp_sub(std::int64_t a, std::int64_t b, std::int64_t p);
std::int64_t fp_mul(std::int64_t a, std::int64_t b, std::int64_t p);
std::int64_t fp_inv(std::int64_t a, std::int64_t p);
std::int64_t fp_pow(std::int64_t a, std::int64_t e, std::int64_t p);

// Element x + y*alpha of F_{p^2}, alpha^2 = d with d a non-residue mod p.
struct QuadExtElement {
    std::int64_t x = 0, y = 0;
    std::int64_t p = 0, d = 0;

    QuadExtElement() = default;
    QuadExtElement(std::int64_t x, std::int64_t y, std::int64_t p, std::int64_t d);
    // uses d = smallest_nonresidue(p)
    static QuadExtElement make(std::int64_t x, std::int64_t y, std::int64_t p);
    friend bool operator==(const QuadExtElement& a, const QuadExtElement& b) {
        return a.x == b.x && a.y == b.y && a.p == b.p && a.d == b.d;
    }
};

enum class QuadOp { add, mul, inv };

QuadExtElement quad_ext_arith(QuadOp op, const QuadExtElement& a, const QuadExtElement& b);
QuadExtElement quad_add(const QuadExtElement& a, const QuadExtElement& b);
QuadExtElement quad_mul(const QuadExtElement& a, const QuadExtElement& b);
QuadExtElement quad_inv(const QuadExtElement& a);

// Coordinates of z in the basis {1, alpha}. The extended Lee weight of z is
// the sum of the Lee weights of the two coordinates.
std::pair<std::int64_t, std::int64_t> expand_symbol(const QuadExtElement& z);

// A finite field of order p (deg 1) or p^2 (deg 2) with elements encoded as
// integers 0..order-1; a degree-2 element x + y*alpha has index x + p*y.
// This indexed view is what the code machinery works with.
struct FieldSpec {
    std::int64_t order = 0;
    std::int64_t p = 0;
    int deg = 1;
    std::int64_t d = 0; // alpha^2 for deg 2

    static FieldSpec prime(std::int64_t p);
    static FieldSpec quadratic(std::int64_t p);
    // order must be a prime or the square of a prime
    static FieldSpec of_order(std::int64_t q);

    std::int64_t add(std::int64_t a, std::int64_t b) const;
    std::int64_t sub(std::int64_t a, std::int64_t b) const;
    std::int64_t mul(std::int64_t a, std::int64_t b) const;
    std::int64_t inv(std::int64_t a) const;
    std::int64_t pow(std::int64_t a, std::int64_t e) const;
    std::int64_t neg(std::int64_t a) const { return sub(0, a); }

    // Lee weight of the element with this index (coordinate-wise for deg 2).
    std::int64_t lee_weight(std::int64_t idx) const;

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.order == b.order && a.p == b.p && a.deg == b.deg && a.d == b.d;
    }
};

// Element of multiplicative order q-1, found by searching indices upward.
std::int64_t primitive_element(const FieldSpec& f);

} // namespace lee
