#include "kronjord/bgp.hpp"

#include <stdexcept>

namespace kronjord {

DimensionMap weyl_reflect(const TreeQuiver& q, const DimensionMap& v, const Address& vertex) {
    if (!q.contains(vertex)) throw std::invalid_argument("vertex " + address_string(vertex) + " is not in the quiver");
    auto value = [&](const Address& x) {
        auto it = v.find(x);
        return it == v.end() ? std::int64_t{0} : it->second;
    };
    DimensionMap out = v;
    std::int64_t s = -value(vertex);
    for (const auto& y : neighbors(vertex, q.r))
        if (q.contains(y)) s += value(y);
    out[vertex] = s;
    return out;
}

TreeRep reflect_functor_source(const TreeRep& m, const Address& x) {
    if (!m.has_vertex(x)) throw std::invalid_argument("vertex " + address_string(x) + " is not in the representation");
    const int r = m.r();
    std::vector<Address> targets;
    std::vector<Matrix<Rational>> parts;
    const std::size_t dx = m.dim(x);
    for (const auto& y : neighbors(x, r)) {
        if (!m.has_vertex(y)) continue;
        const auto tail = m.arrow_tail(x, y);
        if (tail && *tail != x) {
            throw std::invalid_argument("vertex " + address_string(x) + " is not a source: arrow from " + address_string(y));
        }
        targets.push_back(y);
        parts.push_back(tail ? *m.map(x, y) : Matrix<Rational>(m.dim(y), dx));
    }
    const auto combined = vstack(parts, dx);
    const auto projection = cokernel_projection(combined);

    TreeRep out = m;
    out.set_dim(x, projection.rows());
    std::size_t offset = 0;
    for (const auto& y : targets) {
        const std::size_t dy = m.dim(y);
        out.set_map(y, x, projection.block(0, projection.rows(), offset, dy));
        offset += dy;
    }
    return out;
}

TreeRep tau_inverse_tree(const TreeRep& m) {
    const int r = m.r();
    if (!m.has_standard_orientation()) throw std::invalid_argument("tau^{-1} needs the standard orientation");
    TreeRep work = m.trimmed();
    const auto support = work.support();
    if (support.empty()) throw std::domain_error("tau^{-1} of the zero representation");

    std::set<Address> v1 = support;
    for (const auto& x : support)
        if (is_sink_vertex(x))
            for (const auto& y : neighbors(x, r)) v1.insert(y);
    std::set<Address> v2 = v1;
    for (const auto& x : v1)
        if (is_source_vertex(x))
            for (const auto& y : neighbors(x, r)) v2.insert(y);
    for (const auto& x : v2)
        if (!work.has_vertex(x)) work.set_dim(x, 0);
    work.complete_arrows();

    for (const auto& x : v2)
        if (is_source_vertex(x)) work = reflect_functor_source(work, x);
    for (const auto& y : v2)
        if (is_sink_vertex(y)) work = reflect_functor_source(work, y);

    TreeRep out = work.trimmed();
    if (out.support().empty()) throw std::domain_error("tau^{-1} is zero (the representation is injective)");
    return out;
}

QRep tau_inverse_kronecker(const QRep& m) {
    const int r = m.r();
    const auto first = cokernel_projection(vstack(m.mats(), m.a()));
    const std::size_t a2 = first.rows();
    std::vector<Matrix<Rational>> betas;
    for (int i = 0; i < r; ++i) betas.push_back(first.block(0, a2, i * m.b(), m.b()));
    const auto second = cokernel_projection(vstack(betas, m.b()));
    const std::size_t b2 = second.rows();
    if (a2 == 0 && b2 == 0) throw std::domain_error("tau^{-1} is zero (the representation is injective)");
    std::vector<Matrix<Rational>> mats;
    for (int i = 0; i < r; ++i) mats.push_back(second.block(0, b2, i * a2, a2));
    return QRep(r, {static_cast<std::int64_t>(a2), static_cast<std::int64_t>(b2)}, std::move(mats));
}

std::string to_string(WindowCase c) {
    return c == WindowCase::Cover ? "cover" : "thin";
}

ReflectionPlan coxeter_shift_plan(int r, std::int64_t a, std::int64_t b) {
    require_arrow_count(r);
    const DimVector start{a, b};
    if (!start.is_dimension() || start.is_zero()) throw std::invalid_argument("shift plan needs a nonzero dimension vector");
    const std::int64_t rr = static_cast<std::int64_t>(r) * r;
    if ((r - 1) * b <= (rr - r - 1) * a || tits_form(r, start) > 0) {
        throw std::invalid_argument("shift plan needs (r-1)b > (r^2-r-1)a and q(a,b) <= 0");
    }
    DimVector v = start;
    for (std::int64_t l = 1; l <= kMaxShift; ++l) {
        v = coxeter_apply(r, v, 1);
        if (v.a >= 1 && v.a < v.b && (r - 1) * v.b <= (rr - r - 1) * v.a) {
            const bool thin = v.b <= (r - 1) * v.a + 1;
            return {l, thin ? WindowCase::Thin : WindowCase::Cover, v};
        }
    }
    throw std::logic_error("no Coxeter shift into the window within " + std::to_string(kMaxShift) + " steps");
}

QRep build_preprojective(int r, std::int64_t a, std::int64_t b) {
    require_arrow_count(r);
    const DimVector target{a, b};
    const auto chain = preprojective_dim_vectors(r, std::max(a, b));
    std::size_t index = chain.size();
    for (std::size_t i = 0; i < chain.size(); ++i)
        if (chain[i] == target) index = i;
    if (index == chain.size()) {
        throw std::invalid_argument("(" + std::to_string(a) + "," + std::to_string(b) + ") is not a preprojective dimension vector");
    }
    QRep even = simple_sink<Rational>(r);
    QRep odd = projective_p2<Rational>(r);
    for (std::size_t i = 0; i < index / 2; ++i) {
        if (index % 2 == 0) {
            even = tau_inverse_kronecker(even);
        } else {
            odd = tau_inverse_kronecker(odd);
        }
    }
    QRep out = index % 2 == 0 ? even : odd;
    if (out.dim() != target) throw std::logic_error("preprojective construction produced the wrong dimension vector");
    return out;
}

}  // namespace kronjord
