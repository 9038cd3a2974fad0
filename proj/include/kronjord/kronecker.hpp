#pragma once

#include "kronjord/forms.hpp"
#include "kronjord/matrix.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace kronjord {

/// Representation of the r-Kronecker quiver: spaces k^a (vertex 1) and k^b
/// (vertex 2) with r maps M(gamma_i) stored as b x a matrices acting on
/// column vectors.
template <class T>
class KroneckerRep {
public:
    KroneckerRep() = default;
    KroneckerRep(int r, DimVector dim, std::vector<Matrix<T>> mats, Field<T> field = Field<T>{})
        : r_(r), dim_(dim), mats_(std::move(mats)), field_(field) {
        require_arrow_count(r);
        if (!dim.is_dimension()) throw std::invalid_argument("representation with negative dimension");
        if (mats_.size() != static_cast<std::size_t>(r)) {
            throw std::invalid_argument("expected " + std::to_string(r) + " matrices, got " + std::to_string(mats_.size()));
        }
        for (const auto& m : mats_) {
            if (m.rows() != static_cast<std::size_t>(dim.b) || m.cols() != static_cast<std::size_t>(dim.a)) {
                throw std::invalid_argument("arrow matrix has shape " + m.shape() + ", expected " +
                                            std::to_string(dim.b) + "x" + std::to_string(dim.a));
            }
        }
    }

    /// All maps zero.
    static KroneckerRep zero(int r, DimVector dim, Field<T> field = Field<T>{}) {
        std::vector<Matrix<T>> mats(r, Matrix<T>(dim.b, dim.a, field));
        return KroneckerRep(r, dim, std::move(mats), field);
    }

    int r() const { return r_; }
    DimVector dim() const { return dim_; }
    std::size_t a() const { return static_cast<std::size_t>(dim_.a); }
    std::size_t b() const { return static_cast<std::size_t>(dim_.b); }
    const std::vector<Matrix<T>>& mats() const { return mats_; }
    const Matrix<T>& mat(std::size_t i) const { return mats_.at(i); }
    const Field<T>& field() const { return field_; }

    friend bool operator==(const KroneckerRep& x, const KroneckerRep& y) {
        return x.r_ == y.r_ && x.dim_ == y.dim_ && x.field_ == y.field_ && x.mats_ == y.mats_;
    }

private:
    int r_ = 2;
    DimVector dim_{};
    std::vector<Matrix<T>> mats_;
    [[no_unique_address]] Field<T> field_{};
};

using QRep = KroneckerRep<Rational>;

/// Simple representation at vertex 1, dimension (1,0).
template <class T>
KroneckerRep<T> simple_source(int r, Field<T> field = Field<T>{}) {
    return KroneckerRep<T>::zero(r, {1, 0}, field);
}

/// Simple projective P_1, dimension (0,1).
template <class T>
KroneckerRep<T> simple_sink(int r, Field<T> field = Field<T>{}) {
    return KroneckerRep<T>::zero(r, {0, 1}, field);
}

/// Projective P_2 of dimension (1,r): M(gamma_i) is the i-th standard column.
template <class T>
KroneckerRep<T> projective_p2(int r, Field<T> field = Field<T>{}) {
    require_arrow_count(r);
    std::vector<Matrix<T>> mats;
    for (int i = 0; i < r; ++i) {
        Matrix<T> m(r, 1, field);
        m(i, 0) = field.one();
        mats.push_back(std::move(m));
    }
    return KroneckerRep<T>(r, {1, r}, std::move(mats), field);
}

template <class T>
void require_nonzero(const Vector<T>& alpha) {
    for (const auto& x : alpha)
        if (!x.is_zero()) return;
    throw std::invalid_argument("pencil parameter alpha must be nonzero");
}

/// M^alpha = sum_i alpha_i M(gamma_i).
template <class T>
Matrix<T> pencil(const KroneckerRep<T>& m, const Vector<T>& alpha) {
    if (alpha.size() != static_cast<std::size_t>(m.r())) throw std::invalid_argument("alpha must have r entries");
    require_nonzero(alpha);
    Matrix<T> out(m.b(), m.a(), m.field());
    for (int i = 0; i < m.r(); ++i) {
        if (alpha[i].is_zero()) continue;
        out += m.mat(i) * alpha[i];
    }
    return out;
}

/// Jordan type of the operator sum_i alpha_i x_i on M_1 + M_2: rank(M^alpha)
/// blocks of size 2, the remaining dimensions as blocks of size 1.
template <class T>
JordanType jordan_type_at(const KroneckerRep<T>& m, const Vector<T>& alpha) {
    const auto d = static_cast<std::int64_t>(rank(pencil(m, alpha)));
    return {m.dim().a + m.dim().b - 2 * d, d};
}

/// Dual representation: spaces swapped, every map transposed.
template <class T>
KroneckerRep<T> dual(const KroneckerRep<T>& m) {
    std::vector<Matrix<T>> mats;
    mats.reserve(m.mats().size());
    for (const auto& x : m.mats()) mats.push_back(x.transpose());
    return KroneckerRep<T>(m.r(), {m.dim().b, m.dim().a}, std::move(mats), m.field());
}

template <class T>
KroneckerRep<T> direct_sum(const KroneckerRep<T>& m, const KroneckerRep<T>& n) {
    if (m.r() != n.r()) throw std::invalid_argument("direct sum of representations with different arrow counts");
    std::vector<Matrix<T>> mats;
    for (int i = 0; i < m.r(); ++i) mats.push_back(direct_sum(m.mat(i), n.mat(i)));
    return KroneckerRep<T>(m.r(), {m.dim().a + n.dim().a, m.dim().b + n.dim().b}, std::move(mats), m.field());
}

/// Nilpotent operators X_i = [[0,0],[M(gamma_i),0]] on M_1 + M_2, describing
/// the representation as a module of Loewy length at most 2.
template <class T>
std::vector<Matrix<T>> to_module_operators(const KroneckerRep<T>& m) {
    const std::size_t n = m.a() + m.b();
    std::vector<Matrix<T>> ops;
    for (const auto& x : m.mats()) {
        Matrix<T> op(n, n, m.field());
        op.set_block(m.a(), 0, x);
        ops.push_back(std::move(op));
    }
    return ops;
}

/// Seeded generator of pencil parameters: entries uniform in [-999, 999],
/// the zero vector rejected.
template <class T>
class AlphaSampler {
public:
    static constexpr long kBound = 999;

    AlphaSampler(int r, std::uint64_t seed, Field<T> field = Field<T>{}) : r_(r), field_(field), rng_(seed) {}

    Vector<T> next() {
        std::uniform_int_distribution<long> dist(-kBound, kBound);
        for (;;) {
            Vector<T> alpha;
            bool nonzero = false;
            for (int i = 0; i < r_; ++i) {
                alpha.push_back(field_.from_int(dist(rng_)));
                nonzero = nonzero || !alpha.back().is_zero();
            }
            if (nonzero) return alpha;
        }
    }

private:
    int r_;
    Field<T> field_;
    std::mt19937_64 rng_;
};

/// Coordinate vectors e_1..e_r followed by `samples` seeded random vectors.
/// Degeneracies of Kronecker pencils often sit on coordinate axes, which
/// random points would almost never hit.
template <class T>
std::vector<Vector<T>> probe_points(int r, std::size_t samples, std::uint64_t seed, Field<T> field = Field<T>{}) {
    std::vector<Vector<T>> out;
    for (int i = 0; i < r; ++i) {
        Vector<T> e(r, field.zero());
        e[i] = field.one();
        out.push_back(std::move(e));
    }
    AlphaSampler<T> sampler(r, seed, field);
    for (std::size_t k = 0; k < samples; ++k) out.push_back(sampler.next());
    return out;
}

struct SamplingRecord {
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::set<std::int64_t> ranks_seen;
};

struct GenericRank {
    std::int64_t d = 0;  // generic rank d_M
    std::int64_t c = 0;  // c_M = dim M - 2 d_M
    SamplingRecord record;
};

/// Maximal pencil rank over seeded random parameters. A certified lower bound
/// for the generic rank, equal to it with overwhelming probability.
template <class T>
GenericRank generic_rank(const KroneckerRep<T>& m, std::size_t samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("generic_rank needs at least one sample");
    AlphaSampler<T> sampler(m.r(), seed, m.field());
    GenericRank out;
    out.record.seed = seed;
    out.record.samples = samples;
    for (std::size_t k = 0; k < samples; ++k) {
        const auto rk = static_cast<std::int64_t>(rank(pencil(m, sampler.next())));
        out.record.ranks_seen.insert(rk);
        out.d = std::max(out.d, rk);
    }
    out.c = m.dim().a + m.dim().b - 2 * out.d;
    return out;
}

struct ConstantJordanVerdict {
    bool constant = false;
    JordanType type;  // type at the first probe
    SamplingRecord record;
};

/// Compares the pencil rank over the coordinate probes plus `samples` random
/// parameters.
template <class T>
ConstantJordanVerdict is_constant_jordan_type(const KroneckerRep<T>& m, std::size_t samples, std::uint64_t seed) {
    if (samples < 2) throw std::invalid_argument("constant Jordan type check needs at least two samples");
    ConstantJordanVerdict out;
    out.record.seed = seed;
    out.record.samples = samples;
    bool first = true;
    for (const auto& alpha : probe_points(m.r(), samples, seed, m.field())) {
        const auto t = jordan_type_at(m, alpha);
        out.record.ranks_seen.insert(t.d);
        if (first) {
            out.type = t;
            first = false;
        }
    }
    out.constant = out.record.ranks_seen.size() == 1;
    return out;
}

}  // namespace kronjord
