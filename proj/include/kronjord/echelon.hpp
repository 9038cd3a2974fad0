#pragma once

#include "kronjord/kronecker.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kronjord {

enum class EchelonCase { B, C, D };

std::string to_string(EchelonCase c);

/// Data of an echelon representation: M(gamma_i) = I(phi_i), with phi an
/// injection {1..r} -> {1..b-a+1} (values stored 1-based).
struct EchelonSpec {
    int r = 2;
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::vector<std::int64_t> phi;
    EchelonCase case_tag = EchelonCase::B;
};

/// The b x a matrix with an identity block starting at row l (1-based).
Matrix<Rational> shifted_identity(std::int64_t b, std::int64_t a, std::int64_t l);

/// Chooses phi for (a,b) with q(a,b) <= 0, a >= 2, r-1 <= b-a and
/// b <= (r-1)a. Writing b = qa + s with 0 <= s < a:
///   b-case (q = 1):               1 -> 1, 2 -> b-a+1, 3 -> 2
///   c-case (2 <= q <= r-1, s = 0): i -> (i-1)a+1 for i <= q, q+1 -> 2
///   d-case (2 <= q <= r-2, s > 0): i -> (i-1)a+1 for i <= q, q+1 -> b-a+1, q+2 -> 2
/// and the remaining arrows take the smallest unused indices in order.
EchelonSpec select_phi(int r, std::int64_t a, std::int64_t b);

QRep build_echelon_rep(const EchelonSpec& spec);

/// True iff every M(gamma_i) is some I(l_i) with the l_i pairwise distinct.
/// Then column j of any nonzero pencil has its first nonzero entry in row
/// min{l_i : alpha_i != 0} + j - 1, so every pencil is injective. Needs a >= 1.
bool ekp_echelon_certificate(const QRep& m);

}  // namespace kronjord
