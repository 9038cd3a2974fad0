#pragma once

#include "kronjord/kronecker.hpp"
#include "kronjord/tree.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace kronjord {

using DimensionMap = std::map<Address, std::int64_t>;

/// Source-regular subquiver with n sources: every source keeps all r tree
/// neighbors, and at most one sink has a neighbor count strictly between 1
/// and r. Grown one source at a time, extending at the intermediate sink when
/// there is one and otherwise at the least-addressed sink of degree 1.
TreeQuiver build_source_regular(int r, std::int64_t n);

/// Sinks of q whose full r-neighborhood lies in q.
std::vector<Address> full_degree_sinks(const TreeQuiver& q);
/// The unique sink with 1 < degree < r, if any.
std::optional<Address> intermediate_sink(const TreeQuiver& q);

/// floor((r - 1/(r-1)) a), evaluated through the sink census of the
/// source-regular quiver: (r-1)a + 1 + q(r-2) + s - 1 with q(r-1) + s = a-1.
std::int64_t max_cover_sinks(int r, std::int64_t a);

/// Dimension vector on a source-regular quiver with a sources whose sinks
/// sum to b: ones everywhere, plus the excess b - (r-1)a - 1 distributed
/// greedily over the full-degree sinks (at most r-2 each, address order) and
/// then the intermediate sink (at most s-1).
DimensionMap build_root_vector(const TreeQuiver& q, std::int64_t a, std::int64_t b);

/// Indecomposable representation with dimension vector alpha on a
/// source-regular quiver, for alpha with ones at sources, full support and
/// alpha_l <= max(1, deg(l) - 1) at sinks. Recursion peels a source whose
/// neighbors are all leaves but one (y): if alpha_y <= deg(y) - 2 the source
/// is re-attached to the smaller representation through the first basis
/// vector at y; otherwise y is shrunk to dimension one for the recursive call
/// and re-grown by a source reflection on the star around y.
TreeRep build_indecomposable_tree_rep(const TreeQuiver& q, const DimensionMap& alpha);

/// Thin indecomposable representation on the zigzag x_1 -1-> y_1 <-2- x_2 -1-> ...
/// y_u plus further neighbors of the x_i, with v sinks in total. All maps
/// are identities, every arrow covering gamma_1 is injective.
TreeRep thin_path_rep(int r, std::int64_t u, std::int64_t v);

/// Representation of a single vertex with the given dimension.
TreeRep point_rep(int r, const Address& x, std::size_t dim);

/// Push-down to the Kronecker quiver: sources (resp. sinks) of the support in
/// address order give the basis of M_1 (resp. M_2); M(gamma_i) collects the
/// maps of all color-i arrows. Requires the standard orientation.
QRep push_down(const TreeRep& m);

struct InjVerdict {
    bool injective = false;
    std::optional<TreeEdge> witness;  // first failing arrow; its mat is the offending map
};

/// True iff every arrow of C_r touching the support has injective map,
/// counting arrows into zero-dimensional neighbors. For indecomposable M this
/// is exactly the equal kernels property of the push-down.
InjVerdict is_inj(const TreeRep& m);

struct BoundCheck {
    bool holds = false;
    std::int64_t slack = 0;  // b - (r-1) a - max source dimension
    std::string precondition_failure;
};

/// b >= (r-1) a + m on push-down dimensions, m the largest source dimension.
BoundCheck source_regular_bound_check(const TreeRep& m);

}  // namespace kronjord
