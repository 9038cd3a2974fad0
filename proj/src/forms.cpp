#include "kronjord/forms.hpp"

#include <stdexcept>

namespace kronjord {

namespace {

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t out;
    if (__builtin_mul_overflow(x, y, &out)) throw std::overflow_error("integer overflow in Coxeter transformation");
    return out;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t out;
    if (__builtin_add_overflow(x, y, &out)) throw std::overflow_error("integer overflow in Coxeter transformation");
    return out;
}

std::vector<DimVector> chain(int r, DimVector first, DimVector second, std::int64_t limit) {
    if (limit < 1) throw std::invalid_argument("dimension chain limit must be >= 1");
    std::vector<DimVector> out;
    DimVector prev = first, cur = second;
    if (prev.a > limit || prev.b > limit) return out;
    out.push_back(prev);
    while (cur.a <= limit && cur.b <= limit) {
        out.push_back(cur);
        DimVector next{checked_add(checked_mul(r, cur.a), -prev.a), checked_add(checked_mul(r, cur.b), -prev.b)};
        prev = cur;
        cur = next;
    }
    return out;
}

}  // namespace

void require_arrow_count(int r) {
    if (r < 2) throw std::invalid_argument("arrow count r must be >= 2, got " + std::to_string(r));
}

std::string to_string(RootKind kind) {
    switch (kind) {
        case RootKind::NotARoot: return "not-a-root";
        case RootKind::Real: return "real";
        case RootKind::Imaginary: return "imaginary";
    }
    return "?";
}

std::string to_string(RootPosition position) {
    switch (position) {
        case RootPosition::Preprojective: return "preprojective";
        case RootPosition::Preinjective: return "preinjective";
        case RootPosition::Regular: return "regular";
        case RootPosition::Simple: return "simple";
        case RootPosition::NotApplicable: return "n/a";
    }
    return "?";
}

std::int64_t tits_form(int r, DimVector v) {
    return euler_form(r, v, v);
}

std::int64_t euler_form(int r, DimVector x, DimVector y) {
    require_arrow_count(r);
    return checked_add(checked_add(checked_mul(x.a, y.a), checked_mul(x.b, y.b)), -checked_mul(checked_mul(r, x.a), y.b));
}

DimVector coxeter_apply(int r, DimVector v, std::int64_t power) {
    require_arrow_count(r);
    const std::int64_t rr = static_cast<std::int64_t>(r) * r;
    for (std::int64_t k = 0; k < power; ++k) {
        v = {checked_add(checked_mul(rr - 1, v.a), -checked_mul(r, v.b)), checked_add(checked_mul(r, v.a), -v.b)};
    }
    for (std::int64_t k = 0; k > power; --k) {
        v = {checked_add(-v.a, checked_mul(r, v.b)), checked_add(-checked_mul(r, v.a), checked_mul(rr - 1, v.b))};
    }
    return v;
}

RootClass classify_root(int r, DimVector v) {
    require_arrow_count(r);
    if (v.is_zero()) throw std::invalid_argument("classify_root: zero vector");
    if (!v.is_dimension()) throw std::invalid_argument("classify_root: negative dimension");
    const auto q = tits_form(r, v);
    if (q > 1) return {RootKind::NotARoot, RootPosition::NotApplicable};
    if (q == 1) {
        if ((v.a == 1 && v.b == 0) || (v.a == 0 && v.b == 1)) return {RootKind::Real, RootPosition::Simple};
        return {RootKind::Real, v.a < v.b ? RootPosition::Preprojective : RootPosition::Preinjective};
    }
    return {RootKind::Imaginary, RootPosition::Regular};
}

IjtVerdict is_in_ijt(int r, JordanType t) {
    require_arrow_count(r);
    if (t.c < 0 || t.d < 0) throw std::invalid_argument("Jordan type counts must be nonnegative");
    if (t.d < 1) return {false, "d >= 1"};
    if (t.c < r - 1) return {false, "c >= r-1"};
    if (t.c < 1) return {false, "c >= 1"};
    if (tits_form(r, xi(t)) > 1) return {false, "q(d,d+c) <= 1"};
    return {true, {}};
}

DimVector xi(JordanType t) {
    return {t.d, t.d + t.c};
}

JordanType xi_inverse(DimVector v) {
    if (v.b < v.a) throw std::invalid_argument("xi_inverse requires b >= a");
    return {v.b - v.a, v.a};
}

std::vector<DimVector> preprojective_dim_vectors(int r, std::int64_t limit) {
    require_arrow_count(r);
    return chain(r, {0, 1}, {1, r}, limit);
}

std::vector<DimVector> preinjective_dim_vectors(int r, std::int64_t limit) {
    require_arrow_count(r);
    return chain(r, {1, 0}, {r, 1}, limit);
}

}  // namespace kronjord
