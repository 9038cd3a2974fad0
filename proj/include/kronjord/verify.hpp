#pragma once

#include "kronjord/kronecker.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kronjord {

/// A morphism M -> N of Kronecker representations: f1 : M_1 -> N_1 and
/// f2 : M_2 -> N_2 with f2 M(gamma_i) = N(gamma_i) f1 for every arrow.
template <class T>
struct Morphism {
    Matrix<T> f1;
    Matrix<T> f2;
};

template <class T>
struct HomSpace {
    std::vector<Morphism<T>> basis;
    std::size_t dim() const { return basis.size(); }
};

namespace detail {

/// Matrix of the linear map (f1, f2) -> (f2 M_i - N_i f1)_i. Unknowns are f1
/// (row-major, a_N x a_M) followed by f2 (row-major, b_N x b_M).
template <class T>
Matrix<T> intertwining_system(const KroneckerRep<T>& m, const KroneckerRep<T>& n) {
    if (m.r() != n.r()) throw std::invalid_argument("Hom/Ext between representations with different arrow counts");
    const std::size_t am = m.a(), bm = m.b(), an = n.a(), bn = n.b();
    const std::size_t off2 = an * am;
    const std::size_t unknowns = an * am + bn * bm;
    const std::size_t per_arrow = bn * am;
    Matrix<T> sys(static_cast<std::size_t>(m.r()) * per_arrow, unknowns, m.field());
    for (int i = 0; i < m.r(); ++i) {
        const auto& mi = m.mat(i);
        const auto& ni = n.mat(i);
        for (std::size_t s = 0; s < bn; ++s)
            for (std::size_t t = 0; t < am; ++t) {
                const std::size_t row = i * per_arrow + s * am + t;
                for (std::size_t q = 0; q < bm; ++q)
                    if (!mi(q, t).is_zero()) sys(row, off2 + s * bm + q) += mi(q, t);
                for (std::size_t p = 0; p < an; ++p)
                    if (!ni(s, p).is_zero()) sys(row, p * am + t) -= ni(s, p);
            }
    }
    return sys;
}

}  // namespace detail

template <class T>
HomSpace<T> hom_space(const KroneckerRep<T>& m, const KroneckerRep<T>& n) {
    const auto sys = detail::intertwining_system(m, n);
    const std::size_t am = m.a(), bm = m.b(), an = n.a(), bn = n.b();
    HomSpace<T> out;
    for (const auto& v : kernel_basis(sys)) {
        Morphism<T> f{Matrix<T>(an, am, m.field()), Matrix<T>(bn, bm, m.field())};
        for (std::size_t p = 0; p < an; ++p)
            for (std::size_t q = 0; q < am; ++q) f.f1(p, q) = v[p * am + q];
        for (std::size_t p = 0; p < bn; ++p)
            for (std::size_t q = 0; q < bm; ++q) f.f2(p, q) = v[an * am + p * bm + q];
        out.basis.push_back(std::move(f));
    }
    return out;
}

/// dim Ext^1(M, N) as the cokernel dimension of the intertwining map,
/// r a_M b_N - rank. Computed without reference to the Euler form.
template <class T>
std::size_t ext_dim(const KroneckerRep<T>& m, const KroneckerRep<T>& n) {
    const auto sys = detail::intertwining_system(m, n);
    return sys.rows() - rank(sys);
}

template <class T>
bool is_brick(const KroneckerRep<T>& m) {
    return hom_space(m, m).dim() == 1;
}

struct LocalityReport {
    bool local = false;
    std::size_t end_dim = 0;
    std::size_t radical_dim = 0;
};

/// End(M) is local iff End(M)/rad End(M) is one-dimensional. The radical is
/// the kernel of the trace form of the left regular representation, valid in
/// characteristic 0 only; hence rationals only.
LocalityReport endomorphism_locality(const QRep& m);
bool end_is_local(const QRep& m);

struct SampleCheck {
    bool pass = false;
    SamplingRecord record;
    std::optional<std::size_t> failing_probe;  // index into the probe sequence
};

namespace detail {

template <class T>
SampleCheck pencil_rank_check(const KroneckerRep<T>& m, std::size_t samples, std::uint64_t seed, std::size_t wanted) {
    if (samples < 1) throw std::invalid_argument("sample check needs at least one sample");
    SampleCheck out;
    out.record.seed = seed;
    out.record.samples = samples;
    const auto probes = probe_points(m.r(), samples, seed, m.field());
    for (std::size_t k = 0; k < probes.size(); ++k) {
        const auto rk = rank(pencil(m, probes[k]));
        out.record.ranks_seen.insert(static_cast<std::int64_t>(rk));
        if (rk != wanted && !out.failing_probe) out.failing_probe = k;
    }
    out.pass = !out.failing_probe.has_value();
    return out;
}

}  // namespace detail

/// Probabilistic equal-kernels check: M^alpha injective at the coordinate
/// probes and `samples` seeded random parameters.
template <class T>
SampleCheck ekp_sample_check(const KroneckerRep<T>& m, std::size_t samples, std::uint64_t seed) {
    return detail::pencil_rank_check(m, samples, seed, m.a());
}

/// Probabilistic equal-images check: M^alpha surjective onto M_2.
template <class T>
SampleCheck eip_sample_check(const KroneckerRep<T>& m, std::size_t samples, std::uint64_t seed) {
    return detail::pencil_rank_check(m, samples, seed, m.b());
}

struct RestrictionVerdict {
    bool pass = false;
    GenericRank generic;
    std::int64_t form_value = 0;   // q(d_M, d_M + c_M)
    bool constant_type = false;    // sampled
    bool min_blocks_applies = false;
    std::string failed;            // empty on pass
};

/// For an indecomposable M: q(d_M, d_M + c_M) <= 1, and c_M >= r-1 when M is
/// non-simple of constant Jordan type.
template <class T>
RestrictionVerdict restriction_check(const KroneckerRep<T>& m, std::size_t samples, std::uint64_t seed) {
    RestrictionVerdict out;
    out.generic = generic_rank(m, samples, seed);
    out.form_value = tits_form(m.r(), {out.generic.d, out.generic.d + out.generic.c});
    out.constant_type = is_constant_jordan_type(m, std::max<std::size_t>(samples, 2), seed).constant;
    const bool simple = m.dim() == DimVector{1, 0} || m.dim() == DimVector{0, 1};
    out.min_blocks_applies = out.constant_type && !simple;
    if (out.form_value > 1) {
        out.failed = "q(d_M, d_M + c_M) <= 1";
    } else if (out.min_blocks_applies && out.generic.c < m.r() - 1) {
        out.failed = "c_M >= r-1";
    }
    out.pass = out.failed.empty();
    return out;
}

}  // namespace kronjord
