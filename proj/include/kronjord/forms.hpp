#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace kronjord {

/// Dimension vector (dim M_1, dim M_2) of a Kronecker representation. Integer
/// arithmetic on it (Coxeter transformation) may leave the positive cone, so
/// the components are signed; `is_dimension()` checks nonnegativity.
struct DimVector {
    std::int64_t a = 0;
    std::int64_t b = 0;

    bool is_dimension() const { return a >= 0 && b >= 0; }
    bool is_zero() const { return a == 0 && b == 0; }
    friend bool operator==(const DimVector&, const DimVector&) = default;
    friend std::ostream& operator<<(std::ostream& os, const DimVector& v) {
        return os << '(' << v.a << ',' << v.b << ')';
    }
};

/// Jordan type [1]^c [2]^d of a nilpotent operator of degree at most 2.
struct JordanType {
    std::int64_t c = 0;
    std::int64_t d = 0;

    friend bool operator==(const JordanType&, const JordanType&) = default;
    friend std::ostream& operator<<(std::ostream& os, const JordanType& t) {
        return os << "[1]^" << t.c << "[2]^" << t.d;
    }
};

enum class RootKind { NotARoot, Real, Imaginary };
enum class RootPosition { Preprojective, Preinjective, Regular, Simple, NotApplicable };

struct RootClass {
    RootKind kind = RootKind::NotARoot;
    RootPosition position = RootPosition::NotApplicable;
    friend bool operator==(const RootClass&, const RootClass&) = default;
};

std::string to_string(RootKind kind);
std::string to_string(RootPosition position);

/// q(a,b) = a^2 + b^2 - r a b.
std::int64_t tits_form(int r, DimVector v);

/// <x,y> = x_1 y_1 + x_2 y_2 - r x_1 y_2.
std::int64_t euler_form(int r, DimVector x, DimVector y);

/// Phi^power v with Phi = [[r^2-1, -r], [r, -1]] and the integer inverse
/// [[-1, r], [-r, r^2-1]] for negative powers. Throws std::overflow_error if
/// an intermediate value leaves 64-bit range.
DimVector coxeter_apply(int r, DimVector v, std::int64_t power);

/// Throws std::invalid_argument for the zero vector or negative entries.
RootClass classify_root(int r, DimVector v);

struct IjtVerdict {
    bool member = false;
    std::string failed_clause;  // empty when member
};

/// Membership in IJT = {(c,d) : c >= 1, d >= 1, q(d, d+c) <= 1, c >= r-1}.
IjtVerdict is_in_ijt(int r, JordanType t);

/// (c,d) -> (d, d+c).
DimVector xi(JordanType t);
/// (a,b) -> (b-a, a); requires b >= a.
JordanType xi_inverse(DimVector v);

/// Dimension vectors of P_1, P_2, ... until a component exceeds `limit`.
std::vector<DimVector> preprojective_dim_vectors(int r, std::int64_t limit);
/// Dimension vectors of I_1, I_2, ... until a component exceeds `limit`.
std::vector<DimVector> preinjective_dim_vectors(int r, std::int64_t limit);

void require_arrow_count(int r);

}  // namespace kronjord
