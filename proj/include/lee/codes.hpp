#pragma once

#include "lee/fields.hpp"
#include "lee/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace lee {

// Generator-matrix presentation of a linear code; rows are vectors of element
// indices. Rank k is verified at construction time by make().
struct LinearCode {
    FieldSpec field;
    std::int64_t n = 0, k = 0;
    std::vector<std::vector<std::int64_t>> G;
    std::string construction;       // how this code was built
    nlohmann::ordered_json params;  // construction parameters

    static LinearCode make(FieldSpec field, std::vector<std::vector<std::int64_t>> G,
                           std::string construction, nlohmann::ordered_json params);
};

// Rank of a matrix over the field (Gaussian elimination; input copied).
std::int64_t matrix_rank(const FieldSpec& f, std::vector<std::vector<std::int64_t>> rows);

// Evaluation code of polynomials of degree <= r at distinct points: the
// genus-0 code with dimension r+1 and (MDS) Hamming distance n-r.
struct EvaluationCodeSpec {
    FieldSpec field;
    std::vector<std::int64_t> eval_points;
    std::int64_t r = 0;
};

LinearCode rs_code(const EvaluationCodeSpec& spec);

// Subcode of words vanishing at `position`, with that coordinate deleted:
// [n-1, k-1]. Requires some codeword nonzero at the position.
LinearCode shorten_at(const LinearCode& code, std::int64_t position);

// Coordinate expansion of a code over F_{p^2} to one over F_p: each symbol
// x + y*alpha becomes the adjacent pair (x, y), giving [2n, 2k]. The map
// preserves Lee weight.
LinearCode expand_code(const LinearCode& code);

// Inner code of length p-1 over Z_p cut out by the parity checks
// sum_j c_j g^(i*j) = 0 for i = 0..t-1 (g a generator of Z_p*): dimension
// p-1-t and minimum Lee distance >= 2t. With certify=true the distance
// claim is checked exhaustively and a failure throws construction_error;
// instances too large for the cap throw resource_error.
LinearCode bch_lee_inner(std::int64_t p, std::int64_t t, bool certify = true,
                         std::uint64_t cap = 100'000'000ULL);

// Outer code over F_Q concatenated with an inner code over Z_q, Q = q^k_in.
// Labeling F_Q <-> (Z_q)^k_in is the identity for k_in = 1 and the {1, alpha}
// coordinate map for k_in = 2.
struct ConcatenationScheme {
    LinearCode outer;
    LinearCode inner;
};

LinearCode concatenate(const ConcatenationScheme& scheme);

struct DistanceOptions {
    std::uint64_t cap = 100'000'000ULL; // maximum number of messages
    int workers = 1;
};

// Exhaustive minimum distances over all q^k - 1 nonzero messages. The message
// space is split into contiguous index ranges processed independently, so the
// result does not depend on the worker count.
std::int64_t min_lee_distance_bruteforce(const LinearCode& code, const DistanceOptions& opt = {});
std::int64_t min_hamming_distance_bruteforce(const LinearCode& code, const DistanceOptions& opt = {});

// (n^2 - r^2) / (4r), the guarantee for a genus-0 code of length n and degree
// r shortened at one position.
Rational victorian_bound_value(std::int64_t n, std::int64_t r);

// r * W(n/r) and its closed-form floor ((n-r)/3) sqrt((2n-r)/r) for the
// expanded shortened construction. The exact value is an integer.
struct DescentBoundValue {
    std::int64_t exact = 0;
    double approx_floor = 0.0;
};

DescentBoundValue descent_bound_value(std::int64_t n, std::int64_t r, std::int64_t p);

// JSON document {field_order, n, k, generator, provenance}.
nlohmann::ordered_json code_to_json(const LinearCode& code);
LinearCode code_from_json(const nlohmann::ordered_json& doc);

// Build a code from a construction spec {construction, params}; accepts
// "rs", "bch", "expand", "concat", "literal" (an explicit code document),
// each optionally followed by shortening positions.
LinearCode build_code(const nlohmann::ordered_json& spec);

} // namespace lee
