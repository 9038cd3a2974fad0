#include "kronjord/verify.hpp"

namespace kronjord {

namespace {

Vector<Rational> flatten(const Morphism<Rational>& f) {
    Vector<Rational> v;
    v.reserve(f.f1.rows() * f.f1.cols() + f.f2.rows() * f.f2.cols());
    for (std::size_t i = 0; i < f.f1.rows(); ++i)
        for (std::size_t j = 0; j < f.f1.cols(); ++j) v.push_back(f.f1(i, j));
    for (std::size_t i = 0; i < f.f2.rows(); ++i)
        for (std::size_t j = 0; j < f.f2.cols(); ++j) v.push_back(f.f2(i, j));
    return v;
}

/// Coordinates of algebra elements in a fixed basis, via an invertible
/// square sub-system of the basis coordinates.
class Coordinates {
public:
    explicit Coordinates(const std::vector<Vector<Rational>>& basis) {
        const std::size_t n = basis.size();
        const std::size_t len = basis.front().size();
        Matrix<Rational> bt(n, len);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < len; ++j) bt(k, j) = basis[k][j];
        rows_ = row_reduce(bt).pivots;  // n independent coordinates
        Matrix<Rational> sq(n, 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) sq(i, k) = basis[k][rows_[i]];
            sq(i, n + i) = Rational(1);
        }
        inverse_ = row_reduce(sq).reduced.block(0, n, n, n);
    }

    Vector<Rational> of(const Vector<Rational>& v) const {
        Vector<Rational> sub;
        for (auto r : rows_) sub.push_back(v[r]);
        return inverse_.apply(sub);
    }

private:
    std::vector<std::size_t> rows_;
    Matrix<Rational> inverse_;
};

}  // namespace

LocalityReport endomorphism_locality(const QRep& m) {
    const auto end = hom_space(m, m);
    const std::size_t n = end.dim();
    LocalityReport out;
    out.end_dim = n;
    if (n == 0) return out;  // zero representation
    if (n == 1) {
        out.local = true;
        return out;
    }

    std::vector<Vector<Rational>> flat;
    for (const auto& f : end.basis) flat.push_back(flatten(f));
    const Coordinates coords(flat);

    // structure constants: e_i e_j = sum_l c[i][j][l] e_l
    std::vector<std::vector<Vector<Rational>>> c(n, std::vector<Vector<Rational>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Morphism<Rational> prod{end.basis[i].f1 * end.basis[j].f1, end.basis[i].f2 * end.basis[j].f2};
            c[i][j] = coords.of(flatten(prod));
        }

    // tr(L_{e_k}) = sum_j c[k][j][j]
    Vector<Rational> trace(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) trace[k] += c[k][j][j];

    Matrix<Rational> form(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l)
                if (!c[i][j][l].is_zero()) form(i, j) += c[i][j][l] * trace[l];

    const std::size_t semisimple_dim = rank(form);
    out.radical_dim = n - semisimple_dim;
    out.local = semisimple_dim == 1;
    return out;
}

bool end_is_local(const QRep& m) {
    return endomorphism_locality(m).local;
}

}  // namespace kronjord
