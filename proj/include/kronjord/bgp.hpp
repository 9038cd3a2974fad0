#pragma once

#include "kronjord/cover.hpp"
#include "kronjord/kronecker.hpp"
#include "kronjord/tree.hpp"

#include <cstdint>

namespace kronjord {

/// Weyl reflection of an integer vector at a vertex of q:
/// x_i -> -x_i + sum of x over the neighbors of i in q.
DimensionMap weyl_reflect(const TreeQuiver& q, const DimensionMap& v, const Address& vertex);

/// BGP reflection at a source x: the space at x becomes the cokernel of the
/// combined map M_x -> (+)_{x->y} M_y, and the arrows at x are reversed with
/// maps given by the cokernel projection. Throws if x is not a source.
TreeRep reflect_functor_source(const TreeRep& m, const Address& x);

/// tau^{-1} on the cover: source reflections at every source near the
/// support, then at every former sink. The support is first padded with the
/// zero-dimensional neighbors needed for the boundary cokernels. Throws
/// std::domain_error if the result is zero.
TreeRep tau_inverse_tree(const TreeRep& m);

/// tau^{-1} on the Kronecker quiver itself, as reflection at vertex 1 and
/// then at vertex 2.
QRep tau_inverse_kronecker(const QRep& m);

enum class WindowCase { Cover, Thin };

struct ReflectionPlan {
    std::int64_t l = 0;
    WindowCase window_case = WindowCase::Thin;
    DimVector intermediate;  // Phi^l (a, b)
};

std::string to_string(WindowCase c);

/// Smallest l >= 1 with Phi^l(a,b) = (u,v) satisfying u < v and
/// (r-1) v <= (r^2-r-1) u. Requires (r-1) b > (r^2-r-1) a and q(a,b) <= 0.
/// v <= (r-1)u + 1 is the thin case, otherwise the cover case.
ReflectionPlan coxeter_shift_plan(int r, std::int64_t a, std::int64_t b);

inline constexpr std::int64_t kMaxShift = 64;

/// The indecomposable preprojective with dimension vector (a,b): P_1 simple,
/// P_2 with standard columns, P_{i+2} = tau^{-1} P_i.
QRep build_preprojective(int r, std::int64_t a, std::int64_t b);

}  // namespace kronjord
