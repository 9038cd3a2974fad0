#pragma once

#include "kronjord/matrix.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace kronjord {

/// Vertex of the universal cover C_r: a reduced word over the colors 1..r
/// read from a fixed source root. Even length = source, odd length = sink.
/// The neighbor across color c appends c, or deletes a trailing c.
using Address = std::vector<int>;

inline bool is_source_vertex(const Address& x) { return x.size() % 2 == 0; }
inline bool is_sink_vertex(const Address& x) { return x.size() % 2 == 1; }

Address neighbor(const Address& x, int color);
std::vector<Address> neighbors(const Address& x, int r);
/// Color of the edge between adjacent vertices (the last letter of the longer word).
int edge_color(const Address& x, const Address& y);
bool adjacent(const Address& x, const Address& y);
void require_address(const Address& x, int r);
std::string address_string(const Address& x);

/// Finite full subquiver of C_r on a vertex set, with the bipartite orientation.
struct TreeQuiver {
    int r = 2;
    std::set<Address> vertices;

    std::vector<Address> sources() const;
    std::vector<Address> sinks() const;
    /// Number of C_r-neighbors of x inside the vertex set.
    std::size_t degree(const Address& x) const;
    bool contains(const Address& x) const { return vertices.count(x) != 0; }
    bool is_connected() const;
};

/// An arrow of a tree representation. Arrows are keyed by the longer endpoint
/// (the child); `downward` says whether the map runs parent -> child.
struct TreeArrow {
    bool downward = true;
    Matrix<Rational> mat;  // rows = head dimension, cols = tail dimension
};

/// Plain description of an arrow, used for serialization and iteration.
struct TreeEdge {
    Address src;
    Address dst;
    int color = 1;
    Matrix<Rational> mat;
};

/// Finite-dimensional representation of a finite full subquiver of C_r. The
/// orientation of each arrow is stored explicitly, since reflection functors
/// pass through non-bipartite orientations; every representation produced for
/// push-down has the standard orientation (source-class -> sink-class).
class TreeRep {
public:
    explicit TreeRep(int r = 2) : r_(r) {}

    int r() const { return r_; }

    /// Adds a vertex (dimension may be 0). Re-adding overwrites the dimension
    /// and drops incident arrows whose shapes no longer fit.
    void set_dim(const Address& x, std::size_t dim);
    std::size_t dim(const Address& x) const;
    bool has_vertex(const Address& x) const { return dims_.count(x) != 0; }
    const std::map<Address, std::size_t>& dims() const { return dims_; }

    /// Sets the map src -> dst; both vertices must exist and be adjacent.
    void set_map(const Address& src, const Address& dst, Matrix<Rational> mat);
    /// The map src -> dst if an arrow in that direction exists.
    std::optional<Matrix<Rational>> map(const Address& src, const Address& dst) const;
    /// Tail of the arrow between adjacent x and y, if present.
    std::optional<Address> arrow_tail(const Address& x, const Address& y) const;
    void remove_vertex(const Address& x);

    /// Adds zero arrows (standard orientation) between adjacent vertices that
    /// lack one, so the quiver is the full subquiver on the vertex set.
    void complete_arrows();

    std::vector<TreeEdge> edges() const;
    std::set<Address> support() const;
    bool has_standard_orientation() const;
    /// Drops zero-dimensional vertices and their arrows.
    TreeRep trimmed() const;
    /// Sum of dimensions over sources and over sinks.
    std::int64_t source_total() const;
    std::int64_t sink_total() const;

    friend bool operator==(const TreeRep& x, const TreeRep& y);

private:
    static Address child_of(const Address& x, const Address& y) { return x.size() > y.size() ? x : y; }

    int r_;
    std::map<Address, std::size_t> dims_;
    std::map<Address, TreeArrow> arrows_;  // keyed by child address
};

bool operator==(const TreeArrow& x, const TreeArrow& y);

}  // namespace kronjord
