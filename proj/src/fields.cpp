#include "lee/fields.hpp"

#include "lee/lee_metric.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lee {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

PrimeFieldSpec::PrimeFieldSpec(std::int64_t p_) : p(p_) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

std::int64_t smallest_nonresidue(std::int64_t p) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("need an odd prime");
    std::vector<bool> residue(p, false);
    for (std::int64_t x = 1; x < p; ++x) residue[(x * x) % p] = true;
    for (std::int64_t d = 2; d < p; ++d)
        if (!residue[d]) return d;
    throw std::logic_error("no non-residue found"); // unreachable for p >= 3
}

std::int64_t fp_add(std::int64_t a, std::int64_t b, std::int64_t p) { return (a + b) % p; }
std::int64_t fp_sub(std::int64_t a, std::int64_t b, std::int64_t p) { return (a - b % p + p) % p; }
std::int64_t fp_mul(std::int64_t a, std::int64_t b, std::int64_t p) { return (a * b) % p; }

std::int64_t fp_pow(std::int64_t a, std::int64_t e, std::int64_t p) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    std::int64_t r = 1 % p, base = a % p;
    while (e > 0) {
        if (e & 1) r = (r * base) % p;
        base = (base * base) % p;
        e >>= 1;
    }
    return r;
}

std::int64_t fp_inv(std::int64_t a, std::int64_t p) {
    if (a % p == 0) throw std::domain_error("inverse of zero");
    return fp_pow(a, p - 2, p);
}

std::int64_t fp_arith(FpOp op, std::int64_t a, std::int64_t b, std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
    if (a < 0 || a >= p || (op != FpOp::inv && op != FpOp::pow && (b < 0 || b >= p)))
        throw std::invalid_argument("operand out of range");
    switch (op) {
        case FpOp::add: return fp_add(a, b, p);
        case FpOp::sub: return fp_sub(a, b, p);
        case FpOp::mul: return fp_mul(a, b, p);
        case FpOp::inv: return fp_inv(a, p);
        case FpOp::pow: return fp_pow(a, b, p);
    }
    throw std::invalid_argument("unknown op");
}

QuadExtElement::QuadExtElement(std::int64_t x_, std::int64_t y_, std::int64_t p_, std::int64_t d_)
    : x(x_), y(y_), p(p_), d(d_) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("need an odd prime");
    if (x < 0 || x >= p || y < 0 || y >= p || d < 0 || d >= p)
        throw std::invalid_argument("coordinates out of range");
}

QuadExtElement QuadExtElement::make(std::int64_t x, std::int64_t y, std::int64_t p) {
    return QuadExtElement(x, y, p, smallest_nonresidue(p));
}

namespace {
void check_same_field(const QuadExtElement& a, const QuadExtElement& b) {
    if (a.p != b.p || a.d != b.d) throw std::invalid_argument("mismatched field spec");
}
} // namespace

QuadExtElement quad_add(const QuadExtElement& a, const QuadExtElement& b) {
    check_same_field(a, b);
    return QuadExtElement(fp_add(a.x, b.x, a.p), fp_add(a.y, b.y, a.p), a.p, a.d);
}

QuadExtElement quad_mul(const QuadExtElement& a, const QuadExtElement& b) {
    check_same_field(a, b);
    // (x1 + y1 a)(x2 + y2 a) = x1 x2 + d y1 y2 + (x1 y2 + x2 y1) a
    std::int64_t p = a.p;
    std::int64_t x = fp_add(fp_mul(a.x, b.x, p), fp_mul(a.d, fp_mul(a.y, b.y, p), p), p);
    std::int64_t y = fp_add(fp_mul(a.x, b.y, p), fp_mul(b.x, a.y, p), p);
    return QuadExtElement(x, y, p, a.d);
}

QuadExtElement quad_inv(const QuadExtElement& a) {
    if (a.x == 0 && a.y == 0) throw std::domain_error("inverse of zero");
    // norm x^2 - d y^2 is nonzero since d is a non-residue
    std::int64_t p = a.p;
    std::int64_t nrm = fp_sub(fp_mul(a.x, a.x, p), fp_mul(a.d, fp_mul(a.y, a.y, p), p), p);
    std::int64_t ninv = fp_inv(nrm, p);
    return QuadExtElement(fp_mul(a.x, ninv, p), fp_mul(fp_sub(0, a.y, p), ninv, p), p, a.d);
}

QuadExtElement quad_ext_arith(QuadOp op, const QuadExtElement& a, const QuadExtElement& b) {
    switch (op) {
        case QuadOp::add: return quad_add(a, b);
        case QuadOp::mul: return quad_mul(a, b);
        case QuadOp::inv: return quad_inv(a);
    }
    throw std::invalid_argument("unknown op");
}

std::pair<std::int64_t, std::int64_t> expand_symbol(const QuadExtElement& z) {
    return {z.x, z.y};
}

FieldSpec FieldSpec::prime(std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    FieldSpec f;
    f.order = p;
    f.p = p;
    f.deg = 1;
    return f;
}

FieldSpec FieldSpec::quadratic(std::int64_t p) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("need an odd prime");
    FieldSpec f;
    f.order = p * p;
    f.p = p;
    f.deg = 2;
    f.d = smallest_nonresidue(p);
    return f;
}

FieldSpec FieldSpec::of_order(std::int64_t q) {
    if (is_prime(q)) return prime(q);
    std::int64_t r = std::int64_t(0.5 + std::sqrt(double(q)));
    if (r * r == q && is_prime(r)) return quadratic(r);
    throw std::invalid_argument("field order must be a prime or the square of a prime, got " + std::to_string(q));
}

namespace {
void check_elem(const FieldSpec& f, std::int64_t a) {
    if (a < 0 || a >= f.order) throw std::invalid_argument("element index out of range");
}
} // namespace

std::int64_t FieldSpec::add(std::int64_t a, std::int64_t b) const {
    check_elem(*this, a); check_elem(*this, b);
    if (deg == 1) return fp_add(a, b, p);
    return fp_add(a % p, b % p, p) + p * fp_add(a / p, b / p, p);
}

std::int64_t FieldSpec::sub(std::int64_t a, std::int64_t b) const {
    check_elem(*this, a); check_elem(*this, b);
    if (deg == 1) return fp_sub(a, b, p);
    return fp_sub(a % p, b % p, p) + p * fp_sub(a / p, b / p, p);
}

std::int64_t FieldSpec::mul(std::int64_t a, std::int64_t b) const {
    check_elem(*this, a); check_elem(*this, b);
    if (deg == 1) return fp_mul(a, b, p);
    QuadExtElement r = quad_mul(QuadExtElement(a % p, a / p, p, d), QuadExtElement(b % p, b / p, p, d));
    return r.x + p * r.y;
}

std::int64_t FieldSpec::inv(std::int64_t a) const {
    check_elem(*this, a);
    if (deg == 1) return fp_inv(a, p);
    QuadExtElement r = quad_inv(QuadExtElement(a % p, a / p, p, d));
    return r.x + p * r.y;
}

std::int64_t FieldSpec::pow(std::int64_t a, std::int64_t e) const {
    check_elem(*this, a);
    if (e < 0) throw std::invalid_argument("negative exponent");
    std::int64_t r = 1, base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::int64_t FieldSpec::lee_weight(std::int64_t idx) const {
    check_elem(*this, idx);
    if (deg == 1) return lee_weight_symbol(idx, p);
    return lee_weight_symbol(idx % p, p) + lee_weight_symbol(idx / p, p);
}

std::int64_t primitive_element(const FieldSpec& f) {
    const std::int64_t m = f.order - 1;
    std::vector<std::int64_t> prime_factors;
    std::int64_t mm = m;
    for (std::int64_t d = 2; d * d <= mm; ++d)
        if (mm % d == 0) {
            prime_factors.push_back(d);
            while (mm % d == 0) mm /= d;
        }
    if (mm > 1) prime_factors.push_back(mm);
    for (std::int64_t g = 2; g < f.order; ++g) {
        bool ok = true;
        for (std::int64_t ell : prime_factors)
            if (f.pow(g, m / ell) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw std::logic_error("no generator found"); // unreachable for a true field
}

} // namespace lee
