#include "kronjord/tree.hpp"

#include <deque>
#include <stdexcept>

namespace kronjord {

Address neighbor(const Address& x, int color) {
    Address y = x;
    if (!y.empty() && y.back() == color) {
        y.pop_back();
    } else {
        y.push_back(color);
    }
    return y;
}

std::vector<Address> neighbors(const Address& x, int r) {
    std::vector<Address> out;
    out.reserve(r);
    for (int c = 1; c <= r; ++c) out.push_back(neighbor(x, c));
    return out;
}

bool adjacent(const Address& x, const Address& y) {
    const Address& shorter = x.size() < y.size() ? x : y;
    const Address& longer = x.size() < y.size() ? y : x;
    if (longer.size() != shorter.size() + 1) return false;
    return std::equal(shorter.begin(), shorter.end(), longer.begin());
}

int edge_color(const Address& x, const Address& y) {
    if (!adjacent(x, y)) throw std::invalid_argument("vertices " + address_string(x) + " and " + address_string(y) + " are not adjacent");
    return x.size() > y.size() ? x.back() : y.back();
}

void require_address(const Address& x, int r) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 1 || x[i] > r) throw std::invalid_argument("address letter out of range in " + address_string(x));
        if (i > 0 && x[i] == x[i - 1]) throw std::invalid_argument("address is not a reduced word: " + address_string(x));
    }
}

std::string address_string(const Address& x) {
    std::string s = "[";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
    return s + "]";
}

std::vector<Address> TreeQuiver::sources() const {
    std::vector<Address> out;
    for (const auto& x : vertices)
        if (is_source_vertex(x)) out.push_back(x);
    return out;
}

std::vector<Address> TreeQuiver::sinks() const {
    std::vector<Address> out;
    for (const auto& x : vertices)
        if (is_sink_vertex(x)) out.push_back(x);
    return out;
}

std::size_t TreeQuiver::degree(const Address& x) const {
    std::size_t n = 0;
    for (int c = 1; c <= r; ++c) n += vertices.count(neighbor(x, c));
    return n;
}

bool TreeQuiver::is_connected() const {
    if (vertices.empty()) return true;
    std::set<Address> seen{*vertices.begin()};
    std::deque<Address> queue{*vertices.begin()};
    while (!queue.empty()) {
        const Address x = queue.front();
        queue.pop_front();
        for (int c = 1; c <= r; ++c) {
            Address y = neighbor(x, c);
            if (vertices.count(y) && seen.insert(y).second) queue.push_back(std::move(y));
        }
    }
    return seen.size() == vertices.size();
}

void TreeRep::set_dim(const Address& x, std::size_t dim) {
    require_address(x, r_);
    dims_[x] = dim;
    for (int c = 1; c <= r_; ++c) {
        const Address y = neighbor(x, c);
        auto it = arrows_.find(child_of(x, y));
        if (it == arrows_.end()) continue;
        const bool x_is_tail = (it->second.downward == (x.size() < y.size()));
        const auto& m = it->second.mat;
        if ((x_is_tail ? m.cols() : m.rows()) != dim) arrows_.erase(it);
    }
}

std::size_t TreeRep::dim(const Address& x) const {
    auto it = dims_.find(x);
    return it == dims_.end() ? 0 : it->second;
}

void TreeRep::set_map(const Address& src, const Address& dst, Matrix<Rational> mat) {
    if (!has_vertex(src) || !has_vertex(dst)) {
        throw std::invalid_argument("arrow " + address_string(src) + " -> " + address_string(dst) + " has an unknown endpoint");
    }
    if (!adjacent(src, dst)) {
        throw std::invalid_argument("arrow " + address_string(src) + " -> " + address_string(dst) + " joins non-adjacent vertices");
    }
    if (mat.rows() != dim(dst) || mat.cols() != dim(src)) {
        throw std::invalid_argument("arrow " + address_string(src) + " -> " + address_string(dst) + " has shape " + mat.shape() +
                                    ", expected " + std::to_string(dim(dst)) + "x" + std::to_string(dim(src)));
    }
    arrows_[child_of(src, dst)] = TreeArrow{src.size() < dst.size(), std::move(mat)};
}

std::optional<Address> TreeRep::arrow_tail(const Address& x, const Address& y) const {
    auto it = arrows_.find(child_of(x, y));
    if (it == arrows_.end() || !adjacent(x, y)) return std::nullopt;
    const bool x_is_parent = x.size() < y.size();
    return (it->second.downward == x_is_parent) ? x : y;
}

std::optional<Matrix<Rational>> TreeRep::map(const Address& src, const Address& dst) const {
    const auto tail = arrow_tail(src, dst);
    if (!tail || *tail != src) return std::nullopt;
    return arrows_.at(child_of(src, dst)).mat;
}

void TreeRep::remove_vertex(const Address& x) {
    for (int c = 1; c <= r_; ++c) arrows_.erase(child_of(x, neighbor(x, c)));
    dims_.erase(x);
}

void TreeRep::complete_arrows() {
    for (const auto& [x, dx] : dims_) {
        if (!is_source_vertex(x)) continue;
        for (int c = 1; c <= r_; ++c) {
            const Address y = neighbor(x, c);
            if (!has_vertex(y) || arrows_.count(child_of(x, y))) continue;
            set_map(x, y, Matrix<Rational>(dim(y), dx));
        }
    }
}

std::vector<TreeEdge> TreeRep::edges() const {
    std::vector<TreeEdge> out;
    for (const auto& [child, arrow] : arrows_) {
        Address parent(child.begin(), child.end() - 1);
        TreeEdge e;
        e.src = arrow.downward ? parent : child;
        e.dst = arrow.downward ? child : parent;
        e.color = child.back();
        e.mat = arrow.mat;
        out.push_back(std::move(e));
    }
    return out;
}

std::set<Address> TreeRep::support() const {
    std::set<Address> out;
    for (const auto& [x, d] : dims_)
        if (d > 0) out.insert(x);
    return out;
}

bool TreeRep::has_standard_orientation() const {
    for (const auto& [child, arrow] : arrows_) {
        // parent is a source iff its length is even, i.e. the child has odd length
        const bool parent_is_source = is_sink_vertex(child);
        if (arrow.downward != parent_is_source) return false;
    }
    return true;
}

TreeRep TreeRep::trimmed() const {
    TreeRep out(r_);
    for (const auto& [x, d] : dims_)
        if (d > 0) out.dims_[x] = d;
    for (const auto& [child, arrow] : arrows_) {
        Address parent(child.begin(), child.end() - 1);
        if (out.has_vertex(child) && out.has_vertex(parent)) out.arrows_[child] = arrow;
    }
    return out;
}

std::int64_t TreeRep::source_total() const {
    std::int64_t n = 0;
    for (const auto& [x, d] : dims_)
        if (is_source_vertex(x)) n += static_cast<std::int64_t>(d);
    return n;
}

std::int64_t TreeRep::sink_total() const {
    std::int64_t n = 0;
    for (const auto& [x, d] : dims_)
        if (is_sink_vertex(x)) n += static_cast<std::int64_t>(d);
    return n;
}

bool operator==(const TreeArrow& x, const TreeArrow& y) {
    return x.downward == y.downward && x.mat == y.mat;
}

bool operator==(const TreeRep& x, const TreeRep& y) {
    return x.r_ == y.r_ && x.dims_ == y.dims_ && x.arrows_ == y.arrows_;
}

}  // namespace kronjord
