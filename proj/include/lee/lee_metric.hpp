#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace lee {

// Lee weight of a single symbol x in Z_q: min(x, q-x).
std::int64_t lee_weight_symbol(std::int64_t x, std::int64_t q);

// Lee weight of a coordinate pair (x, y) over F_p, i.e. of x + y*alpha in
// F_{p^2} under the basis {1, alpha}: wt(x) + wt(y).
std::int64_t lee_weight_ext_symbol(std::pair<std::int64_t, std::int64_t> z, std::int64_t p);

// Lee weight of a word: sum over coordinates.
std::int64_t lee_weight_word(const std::vector<std::int64_t>& c, std::int64_t q);

// Number of elements of F_{p^2} at Lee weight exactly j:
// S(0)=1, S(j)=4j for j <= (p-1)/2, S(j)=4(p-j) for j >= (p+1)/2.
std::int64_t sphere_size(std::int64_t j, std::int64_t p);

// Ball size B(M) = sum_{j<=M} S(j); B(p-1) = p^2.
std::int64_t ball_size(std::int64_t M, std::int64_t p);

// Sphere sizes, ball sizes, and weight sums at ball breakpoints for one p.
struct SphereTable {
    std::int64_t p = 0;
    std::vector<std::int64_t> S;   // S[j], j = 0..p-1
    std::vector<std::int64_t> B;   // B[M] = S[0] + ... + S[M]
    std::vector<std::int64_t> Wb;  // Wb[M] = W(B(M)) = sum_{j<=M} j*S(j)

    static SphereTable make(std::int64_t p);
};

// The index M with B(M) <= tau <= B(M+1), computed by the two-branch floor
// formulas (sqrt inversion of the ball sizes) and then validated against the
// exact integer breakpoints. tau = p^2 yields p-1.
std::int64_t choose_M(double tau, std::int64_t p);
std::int64_t choose_M(double tau, const SphereTable& st);

// Exact variant for rational tau = num/den (comparisons done in integers).
std::int64_t choose_M_frac(std::int64_t num, std::int64_t den, const SphereTable& st);

// W(t): sum of the Lee weights of the t smallest-weight elements of F_{p^2},
// extended to real t by linear interpolation between ball breakpoints.
double weight_sum_W(double t, std::int64_t p);
double weight_sum_W(double t, const SphereTable& st);

// Convex lower bound W_approx(t) = (1/3)(t-1)sqrt(2t-1), t >= 1.
double weight_sum_W_approx(double t);

// All coordinate pairs of F_{p^2} at Lee weight exactly j, in row-major
// (x, y) scan order.
std::vector<std::pair<std::int64_t, std::int64_t>> enumerate_sphere(std::int64_t j, std::int64_t p);

} // namespace lee
