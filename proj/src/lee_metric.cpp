#include "lee/lee_metric.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lee {

namespace {

void check_odd_prime(std::int64_t p) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
    for (std::int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
}

} // namespace

std::int64_t lee_weight_symbol(std::int64_t x, std::int64_t q) {
    if (q < 2) throw std::invalid_argument("modulus must be >= 2");
    if (x < 0 || x >= q) throw std::invalid_argument("symbol out of range for modulus " + std::to_string(q));
    return x <= q - x ? x : q - x;
}

std::int64_t lee_weight_ext_symbol(std::pair<std::int64_t, std::int64_t> z, std::int64_t p) {
    return lee_weight_symbol(z.first, p) + lee_weight_symbol(z.second, p);
}

std::int64_t lee_weight_word(const std::vector<std::int64_t>& c, std::int64_t q) {
    std::int64_t w = 0;
    for (std::int64_t x : c) w += lee_weight_symbol(x, q);
    return w;
}

std::int64_t sphere_size(std::int64_t j, std::int64_t p) {
    check_odd_prime(p);
    if (j < 0 || j > p - 1) throw std::invalid_argument("sphere radius out of range [0, p-1]");
    if (j == 0) return 1;
    return j <= (p - 1) / 2 ? 4 * j : 4 * (p - j);
}

std::int64_t ball_size(std::int64_t M, std::int64_t p) {
    check_odd_prime(p);
    if (M < 0 || M > p - 1) throw std::invalid_argument("ball radius out of range [0, p-1]");
    if (M <= (p - 1) / 2) return 1 + 2 * M * (M + 1);
    return p * p - 2 * (p - M) * (p - 1 - M);
}

SphereTable SphereTable::make(std::int64_t p) {
    check_odd_prime(p);
    SphereTable st;
    st.p = p;
    st.S.resize(p);
    st.B.resize(p);
    st.Wb.resize(p);
    std::int64_t b = 0, w = 0;
    for (std::int64_t j = 0; j < p; ++j) {
        st.S[j] = (j == 0) ? 1 : (j <= (p - 1) / 2 ? 4 * j : 4 * (p - j));
        b += st.S[j];
        w += j * st.S[j];
        st.B[j] = b;
        st.Wb[j] = w;
    }
    return st;
}

std::int64_t choose_M(double tau, std::int64_t p) {
    return choose_M(tau, SphereTable::make(p));
}

std::int64_t choose_M(double tau, const SphereTable& st) {
    const std::int64_t p = st.p;
    const double p2 = double(p) * double(p);
    if (!(tau >= 1.0 && tau <= p2)) throw std::invalid_argument("tau out of range [1, p^2]");
    if (tau == p2) return p - 1; // full ball; for p = 3 the branch split below sits exactly at p^2
    // Invert the two closed ball-size forms; the branch split is where the
    // low form stops being valid, at (p^2 + 4p - 3)/2 = B((p+1)/2).
    std::int64_t M;
    if (tau <= (p2 + 4.0 * p - 3.0) / 2.0)
        M = std::int64_t(std::floor((-1.0 + std::sqrt(2.0 * tau - 1.0)) / 2.0));
    else
        M = std::int64_t(std::floor(double(p) - (1.0 + std::sqrt(2.0 * p2 + 1.0 - 2.0 * tau)) / 2.0));
    if (M < 0) M = 0;
    if (M > p - 1) M = p - 1;
    // Fix any floating-point slip against the exact breakpoints.
    while (M > 0 && double(st.B[M]) > tau) --M;
    while (M + 1 <= p - 1 && double(st.B[M + 1]) < tau) ++M;
    if (M == p - 1 && tau < p2) M = p - 2; // segment p-1 is the single point p^2
    return M;
}

std::int64_t choose_M_frac(std::int64_t num, std::int64_t den, const SphereTable& st) {
    if (den <= 0 || num < den || num > den * st.p * st.p)
        throw std::invalid_argument("tau out of range [1, p^2]");
    if (num == den * st.p * st.p) return st.p - 1;
    std::int64_t M = choose_M(double(num) / double(den), st);
    while (M > 0 && st.B[M] * den > num) --M;
    while (M + 1 <= st.p - 1 && st.B[M + 1] * den < num) ++M;
    if (M == st.p - 1 && num < den * st.p * st.p) M = st.p - 2;
    return M;
}

double weight_sum_W(double t, std::int64_t p) {
    return weight_sum_W(t, SphereTable::make(p));
}

double weight_sum_W(double t, const SphereTable& st) {
    const std::int64_t M = choose_M(t, st); // validates range
    if (M == st.p - 1) return double(st.Wb[M]);
    return double(st.Wb[M]) + double(M + 1) * (t - double(st.B[M]));
}

double weight_sum_W_approx(double t) {
    if (!(t >= 1.0)) throw std::invalid_argument("t must be >= 1");
    return (t - 1.0) * std::sqrt(2.0 * t - 1.0) / 3.0;
}

std::vector<std::pair<std::int64_t, std::int64_t>> enumerate_sphere(std::int64_t j, std::int64_t p) {
    check_odd_prime(p);
    if (j < 0 || j > p - 1) throw std::invalid_argument("sphere radius out of range [0, p-1]");
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t x = 0; x < p; ++x)
        for (std::int64_t y = 0; y < p; ++y)
            if (lee_weight_symbol(x, p) + lee_weight_symbol(y, p) == j) out.emplace_back(x, y);
    return out;
}

} // namespace lee
