#include "kronjord/cover.hpp"

#include "kronjord/bgp.hpp"
#include "kronjord/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace kronjord {

namespace {

Matrix<Rational> scalar_matrix(long v) {
    return Matrix<Rational>::from_ints({{v}});
}

void require_positive(std::int64_t n, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

std::int64_t alpha_at(const DimensionMap& alpha, const Address& x) {
    auto it = alpha.find(x);
    return it == alpha.end() ? 0 : it->second;
}

/// Source of a (multi-source) source-regular quiver whose neighbors are all
/// leaves except one; returns it with that neighbor.
std::pair<Address, Address> peelable_source(const TreeQuiver& q) {
    for (const auto& x : q.sources()) {
        std::optional<Address> inner;
        int inner_count = 0;
        for (const auto& y : neighbors(x, q.r)) {
            if (q.degree(y) > 1) {
                inner = y;
                ++inner_count;
            }
        }
        if (inner_count == 1) return {x, *inner};
    }
    throw std::logic_error("no peelable source in a multi-source tree");
}

TreeRep build_recursive(const TreeQuiver& q, const DimensionMap& alpha) {
    const int r = q.r;
    const auto sources = q.sources();
    if (sources.size() == 1) {
        // a star with all-one dimension vector
        const Address& x = sources.front();
        TreeRep star(r);
        star.set_dim(x, 1);
        for (const auto& y : neighbors(x, r)) {
            star.set_dim(y, 1);
            star.set_map(x, y, scalar_matrix(1));
        }
        return star;
    }

    const auto [x, y] = peelable_source(q);
    const auto deg_y = static_cast<std::int64_t>(q.degree(y));
    const std::int64_t alpha_y = alpha_at(alpha, y);

    TreeQuiver smaller{r, q.vertices};
    smaller.vertices.erase(x);
    std::vector<Address> leaves;
    for (const auto& z : neighbors(x, r)) {
        if (z == y) continue;
        leaves.push_back(z);
        smaller.vertices.erase(z);
    }
    DimensionMap smaller_alpha;
    for (const auto& v : smaller.vertices) smaller_alpha[v] = alpha_at(alpha, v);

    TreeRep out(r);
    if (alpha_y <= deg_y - 2) {
        out = build_recursive(smaller, smaller_alpha);
        out.set_dim(x, 1);
        Matrix<Rational> inclusion(static_cast<std::size_t>(alpha_y), 1);
        inclusion(0, 0) = Rational(1);
        out.set_map(x, y, std::move(inclusion));
    } else {
        smaller_alpha[y] = 1;
        out = build_recursive(smaller, smaller_alpha);

        // Dualized star at y: y is a one-dimensional source mapping to its
        // neighbors by the scalars of the recursive representation, and to x
        // by 1. Reflecting at y grows it to deg(y) - 1 dimensions with the
        // original orientation restored.
        TreeRep star(r);
        star.set_dim(y, 1);
        std::vector<Address> inner_neighbors;
        for (const auto& z : neighbors(y, r)) {
            if (!smaller.contains(z)) continue;
            const auto m = out.map(z, y);
            if (!m) throw std::logic_error("recursive representation lacks arrow " + address_string(z) + " -> " + address_string(y));
            star.set_dim(z, 1);
            star.set_map(y, z, m->transpose());
            inner_neighbors.push_back(z);
        }
        star.set_dim(x, 1);
        star.set_map(y, x, scalar_matrix(1));
        const TreeRep reflected = reflect_functor_source(star, y);

        out.set_dim(y, reflected.dim(y));
        for (const auto& z : inner_neighbors) out.set_map(z, y, *reflected.map(z, y));
        out.set_dim(x, 1);
        out.set_map(x, y, *reflected.map(x, y));
    }
    for (const auto& z : leaves) {
        out.set_dim(z, 1);
        out.set_map(x, z, scalar_matrix(1));
    }
    return out;
}

}  // namespace

TreeQuiver build_source_regular(int r, std::int64_t n) {
    require_arrow_count(r);
    require_positive(n, "number of sources");
    TreeQuiver q{r, {}};
    const Address root{};
    q.vertices.insert(root);
    for (const auto& y : neighbors(root, r)) q.vertices.insert(y);

    for (std::int64_t k = 2; k <= n; ++k) {
        std::optional<Address> y = intermediate_sink(q);
        if (!y) {
            for (const auto& z : q.sinks()) {
                if (q.degree(z) == 1) {
                    y = z;
                    break;
                }
            }
        }
        if (!y) throw std::logic_error("source-regular quiver has no sink to extend at");
        Address x;
        bool found = false;
        for (const auto& z : neighbors(*y, r)) {  // least address not yet present
            if (q.contains(z)) continue;
            if (!found || z < x) x = z;
            found = true;
        }
        if (!found) throw std::logic_error("extension sink has full degree");
        q.vertices.insert(x);
        for (const auto& z : neighbors(x, r)) q.vertices.insert(z);
    }
    return q;
}

std::vector<Address> full_degree_sinks(const TreeQuiver& q) {
    std::vector<Address> out;
    for (const auto& y : q.sinks())
        if (q.degree(y) == static_cast<std::size_t>(q.r)) out.push_back(y);
    return out;
}

std::optional<Address> intermediate_sink(const TreeQuiver& q) {
    for (const auto& y : q.sinks()) {
        const auto d = q.degree(y);
        if (d > 1 && d < static_cast<std::size_t>(q.r)) return y;
    }
    return std::nullopt;
}

std::int64_t max_cover_sinks(int r, std::int64_t a) {
    require_arrow_count(r);
    require_positive(a, "number of sources");
    const std::int64_t full = (a - 1) / (r - 1);
    const std::int64_t rest = a - 1 - full * (r - 1);
    return (r - 1) * a + 1 + full * (r - 2) + rest - 1;
}

DimensionMap build_root_vector(const TreeQuiver& q, std::int64_t a, std::int64_t b) {
    const int r = q.r;
    require_arrow_count(r);
    if (static_cast<std::int64_t>(q.sources().size()) != a) {
        throw std::invalid_argument("quiver has " + std::to_string(q.sources().size()) + " sources, expected " + std::to_string(a));
    }
    const std::int64_t rr = static_cast<std::int64_t>(r) * r;
    if (b < (r - 1) * a + 1 || (r - 1) * b > (rr - r - 1) * a) {
        throw std::invalid_argument("(" + std::to_string(a) + "," + std::to_string(b) + ") lies outside the cover window for r=" +
                                    std::to_string(r));
    }
    const auto full = full_degree_sinks(q);
    const auto middle = intermediate_sink(q);
    const auto nfull = static_cast<std::int64_t>(full.size());
    const std::int64_t s = a - 1 - nfull * (r - 1);
    if (s < 0 || s > r - 2 || (s != 0) != middle.has_value() ||
        (middle && static_cast<std::int64_t>(q.degree(*middle)) != s + 1)) {
        throw std::logic_error("quiver does not have the sink census of a grown source-regular quiver");
    }

    DimensionMap alpha;
    for (const auto& v : q.vertices) alpha[v] = 1;
    std::int64_t excess = b - (r - 1) * a - 1;
    for (const auto& y : full) {
        const std::int64_t take = std::min<std::int64_t>(excess, r - 2);
        alpha[y] += take;
        excess -= take;
    }
    if (middle) {
        const std::int64_t take = std::min<std::int64_t>(excess, s - 1);
        alpha[*middle] += take;
        excess -= take;
    }
    if (excess != 0) throw std::logic_error("excess sink dimension could not be distributed");
    return alpha;
}

TreeRep build_indecomposable_tree_rep(const TreeQuiver& q, const DimensionMap& alpha) {
    require_arrow_count(q.r);
    if (q.sources().empty() || !q.is_connected()) throw std::invalid_argument("quiver must be connected with a source");
    for (const auto& x : q.sources()) {
        for (const auto& y : neighbors(x, q.r))
            if (!q.contains(y)) throw std::invalid_argument("quiver is not source-regular at " + address_string(x));
        if (alpha_at(alpha, x) != 1) throw std::invalid_argument("source " + address_string(x) + " must have dimension 1");
    }
    for (const auto& [v, n] : alpha)
        if (!q.contains(v) && n != 0) throw std::invalid_argument("dimension vector outside the quiver at " + address_string(v));
    for (const auto& y : q.sinks()) {
        const auto n = alpha_at(alpha, y);
        const auto bound = std::max<std::int64_t>(1, static_cast<std::int64_t>(q.degree(y)) - 1);
        if (n < 1 || n > bound) {
            throw std::invalid_argument("sink " + address_string(y) + " has dimension " + std::to_string(n) + ", allowed 1.." +
                                        std::to_string(bound));
        }
    }
    return build_recursive(q, alpha);
}

TreeRep thin_path_rep(int r, std::int64_t u, std::int64_t v) {
    require_arrow_count(r);
    require_positive(u, "u");
    if (v < u || v > (r - 1) * u + 1) {
        throw std::invalid_argument("thin path needs u <= v <= (r-1)u + 1, got (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    std::vector<Address> path_sources, path_sinks;
    Address x{};
    for (std::int64_t i = 0; i < u; ++i) {
        path_sources.push_back(x);
        Address y = neighbor(x, 1);
        path_sinks.push_back(y);
        x = neighbor(y, 2);
    }
    std::vector<Address> chosen = path_sinks;
    for (const auto& s : path_sources) {
        for (const auto& w : neighbors(s, r)) {
            if (static_cast<std::int64_t>(chosen.size()) == v) break;
            if (std::find(chosen.begin(), chosen.end(), w) == chosen.end()) chosen.push_back(w);
        }
    }
    TreeRep t(r);
    for (const auto& s : path_sources) t.set_dim(s, 1);
    for (const auto& w : chosen) t.set_dim(w, 1);
    for (const auto& s : path_sources)
        for (const auto& w : neighbors(s, r))
            if (t.has_vertex(w)) t.set_map(s, w, scalar_matrix(1));
    return t;
}

TreeRep point_rep(int r, const Address& x, std::size_t dim) {
    TreeRep t(r);
    t.set_dim(x, dim);
    return t;
}

QRep push_down(const TreeRep& m) {
    const int r = m.r();
    std::map<Address, std::size_t> offset;
    std::size_t a = 0, b = 0;
    for (const auto& [x, d] : m.dims()) {
        if (d == 0) continue;
        if (is_source_vertex(x)) {
            offset[x] = a;
            a += d;
        } else {
            offset[x] = b;
            b += d;
        }
    }
    std::vector<Matrix<Rational>> mats(r, Matrix<Rational>(b, a));
    for (const auto& e : m.edges()) {
        if (m.dim(e.src) == 0 || m.dim(e.dst) == 0) continue;
        if (!is_source_vertex(e.src)) {
            throw std::invalid_argument("push-down needs the standard orientation; arrow " + address_string(e.src) + " -> " +
                                        address_string(e.dst) + " is reversed");
        }
        mats[e.color - 1].set_block(offset.at(e.dst), offset.at(e.src), e.mat);
    }
    return QRep(r, {static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)}, std::move(mats));
}

InjVerdict is_inj(const TreeRep& m) {
    const int r = m.r();
    for (const auto& [x, d] : m.dims()) {
        if (d == 0) continue;
        // arrows between support vertices must run source -> sink
        for (const auto& y : neighbors(x, r)) {
            if (m.dim(y) == 0) continue;
            const auto tail = m.arrow_tail(x, y);
            if (tail && is_sink_vertex(*tail)) {
                throw std::invalid_argument("Inj check needs the standard orientation at " + address_string(x));
            }
        }
        if (!is_source_vertex(x)) continue;
        for (int c = 1; c <= r; ++c) {
            const Address y = neighbor(x, c);
            Matrix<Rational> mat(m.dim(y), d);
            if (const auto found = m.map(x, y)) mat = *found;
            if (rank(mat) < d) return {false, TreeEdge{x, y, c, mat}};
        }
    }
    return {true, std::nullopt};
}

BoundCheck source_regular_bound_check(const TreeRep& m) {
    BoundCheck out;
    if (!is_inj(m).injective) {
        out.precondition_failure = "representation is not in Inj";
        return out;
    }
    const auto down = push_down(m);
    if (!end_is_local(down)) {
        out.precondition_failure = "representation is not indecomposable";
        return out;
    }
    std::int64_t max_source = 0;
    for (const auto& [x, d] : m.dims())
        if (is_source_vertex(x)) max_source = std::max<std::int64_t>(max_source, static_cast<std::int64_t>(d));
    out.slack = down.dim().b - (m.r() - 1) * down.dim().a - max_source;
    out.holds = out.slack >= 0;
    return out;
}

}  // namespace kronjord
