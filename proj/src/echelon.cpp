#include "kronjord/echelon.hpp"

#include <set>
#include <stdexcept>

namespace kronjord {

std::string to_string(EchelonCase c) {
    switch (c) {
        case EchelonCase::B: return "b-case";
        case EchelonCase::C: return "c-case";
        case EchelonCase::D: return "d-case";
    }
    return "unknown";
}

Matrix<Rational> shifted_identity(std::int64_t b, std::int64_t a, std::int64_t l) {
    if (a < 0 || b < a) throw std::invalid_argument("shifted identity needs 0 <= a <= b");
    if (l < 1 || l > b - a + 1) {
        throw std::invalid_argument("shift " + std::to_string(l) + " outside 1.." + std::to_string(b - a + 1));
    }
    Matrix<Rational> m(static_cast<std::size_t>(b), static_cast<std::size_t>(a));
    for (std::int64_t j = 0; j < a; ++j) m(static_cast<std::size_t>(l - 1 + j), static_cast<std::size_t>(j)) = Rational(1);
    return m;
}

EchelonSpec select_phi(int r, std::int64_t a, std::int64_t b) {
    require_arrow_count(r);
    if (a < 2) throw std::invalid_argument("echelon construction needs a >= 2");
    if (tits_form(r, {a, b}) > 0) throw std::invalid_argument("echelon construction needs q(a,b) <= 0");
    if (b > (r - 1) * a) throw std::invalid_argument("echelon construction needs b <= (r-1)a");
    if (b - a < r - 1) throw std::invalid_argument("echelon construction needs b - a >= r-1");

    const std::int64_t q = b / a;
    const std::int64_t s = b % a;
    EchelonSpec spec{r, a, b, {}, EchelonCase::B};
    std::vector<std::int64_t> seeds;
    if (q == 1 && s >= r - 1) {
        spec.case_tag = EchelonCase::B;
        seeds = {1, b - a + 1, 2};
    } else if (q >= 2 && q <= r - 1 && s == 0) {
        spec.case_tag = EchelonCase::C;
        for (std::int64_t i = 1; i <= q; ++i) seeds.push_back((i - 1) * a + 1);
        seeds.push_back(2);
    } else if (q >= 2 && q <= r - 2 && s > 0) {
        spec.case_tag = EchelonCase::D;
        for (std::int64_t i = 1; i <= q; ++i) seeds.push_back((i - 1) * a + 1);
        seeds.push_back(b - a + 1);
        seeds.push_back(2);
    } else {
        throw std::logic_error("(" + std::to_string(a) + "," + std::to_string(b) + ") falls in no echelon case");
    }
    if (seeds.size() > static_cast<std::size_t>(r)) seeds.resize(static_cast<std::size_t>(r));

    std::set<std::int64_t> used(seeds.begin(), seeds.end());
    if (used.size() != seeds.size()) throw std::logic_error("echelon seeds are not distinct");
    spec.phi = seeds;
    for (std::int64_t l = 1; spec.phi.size() < static_cast<std::size_t>(r); ++l)
        if (!used.count(l)) spec.phi.push_back(l);
    for (auto l : spec.phi)
        if (l > b - a + 1) throw std::logic_error("echelon index out of range");
    return spec;
}

QRep build_echelon_rep(const EchelonSpec& spec) {
    if (spec.phi.size() != static_cast<std::size_t>(spec.r)) throw std::invalid_argument("phi must have r values");
    std::set<std::int64_t> seen(spec.phi.begin(), spec.phi.end());
    if (seen.size() != spec.phi.size()) throw std::invalid_argument("phi is not injective");
    std::vector<Matrix<Rational>> mats;
    for (auto l : spec.phi) mats.push_back(shifted_identity(spec.b, spec.a, l));
    return QRep(spec.r, {spec.a, spec.b}, std::move(mats));
}

bool ekp_echelon_certificate(const QRep& m) {
    if (m.a() == 0) return false;
    std::set<std::int64_t> shifts;
    for (const auto& x : m.mats()) {
        std::int64_t l = 0;
        for (std::size_t i = 0; i < x.rows(); ++i) {
            if (!x(i, 0).is_zero()) {
                l = static_cast<std::int64_t>(i) + 1;
                break;
            }
        }
        if (l == 0 || l > m.dim().b - m.dim().a + 1) return false;
        if (!(x == shifted_identity(m.dim().b, m.dim().a, l))) return false;
        if (!shifts.insert(l).second) return false;
    }
    return true;
}

}  // namespace kronjord
