#include "kronjord/pipeline.hpp"

#include "kronjord/verify.hpp"

#include <sstream>
#include <stdexcept>

namespace kronjord {

namespace {

template <class E>
E parse_enum(const std::string& s, std::initializer_list<E> values, const char* what) {
    for (E v : values)
        if (to_string(v) == s) return v;
    throw std::invalid_argument(std::string("unknown ") + what + " '" + s + "'");
}

std::string dim_string(DimVector v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

Route window_route(int r, DimVector v) {
    const std::int64_t q = tits_form(r, v);
    if (q == 1) return Route::Preprojective;
    if (v.b <= (r - 1) * v.a) return Route::Echelon;
    const std::int64_t rr = static_cast<std::int64_t>(r) * r;
    if ((r - 1) * v.b <= (rr - r - 1) * v.a) return Route::Cover;
    return Route::Shift;
}

struct CoverBuild {
    TreeRep tree;
    std::vector<std::string> trace;
};

CoverBuild build_cover_tree(int r, std::int64_t a, std::int64_t b) {
    CoverBuild out;
    const auto q = build_source_regular(r, a);
    const auto alpha = build_root_vector(q, a, b);
    out.trace.push_back("source-regular quiver: " + std::to_string(q.sources().size()) + " sources, " +
                        std::to_string(q.sinks().size()) + " sinks");
    std::int64_t raised = 0;
    for (const auto& [x, n] : alpha)
        if (n > 1) ++raised;
    out.trace.push_back("root vector: " + std::to_string(raised) + " sinks above dimension 1");
    out.tree = build_indecomposable_tree_rep(q, alpha);
    return out;
}

QRep ekp_side(const CertifiedWitness& w) {
    return w.mode == Mode::EKP ? w.rep : dual(w.rep);
}

DimVector expected_dim(const CertifiedWitness& w) {
    DimVector v = w.jordan == JordanType{1, 0} ? DimVector{0, 1} : xi(w.jordan);
    if (w.mode == Mode::EIP) std::swap(v.a, v.b);
    return v;
}

CheckOutcome outcome(std::string name, bool pass, std::string detail) {
    return {std::move(name), pass ? "pass" : "fail", std::move(detail)};
}

CheckOutcome check_certificate(const CertifiedWitness& w, std::size_t samples, std::uint64_t seed) {
    const std::string name = "certificate";
    const QRep ekp = ekp_side(w);
    switch (w.certificate) {
        case CertificateKind::Vacuous:
            return outcome(name, ekp.a() == 0, "kernel condition vacuous at M_1 = 0");
        case CertificateKind::Sampled: {
            const auto s = w.mode == Mode::EKP ? ekp_sample_check(w.rep, samples, seed) : eip_sample_check(w.rep, samples, seed);
            std::string detail = std::to_string(samples) + " random parameters plus coordinate axes";
            if (s.failing_probe) detail += ", rank drop at probe " + std::to_string(*s.failing_probe);
            return outcome(name, s.pass, detail);
        }
        case CertificateKind::Echelon:
            return outcome(name, ekp_echelon_certificate(ekp), "every arrow is a shifted identity with distinct shifts");
        case CertificateKind::InjCover: {
            if (!w.cover) return outcome(name, false, "no cover representation recorded");
            const auto inj = is_inj(*w.cover);
            if (!inj.injective) {
                return outcome(name, false, "arrow " + address_string(inj.witness->src) + " -> " + address_string(inj.witness->dst) +
                                                " is not injective");
            }
            if (!(push_down(*w.cover) == ekp)) return outcome(name, false, "push-down of the cover differs from the witness");
            return outcome(name, true, "all cover arrows injective and push-down matches");
        }
    }
    return outcome(name, false, "unknown certificate");
}

CheckOutcome check_evidence(const CertifiedWitness& w) {
    const std::string name = "indecomposable";
    switch (w.evidence) {
        case Evidence::Simple: {
            const auto d = w.rep.dim();
            return outcome(name, d == DimVector{1, 0} || d == DimVector{0, 1}, "simple representation");
        }
        case Evidence::Brick: {
            const auto n = hom_space(w.rep, w.rep).dim();
            return outcome(name, n == 1, "dim End = " + std::to_string(n));
        }
        case Evidence::LocalEnd: {
            const auto loc = endomorphism_locality(w.rep);
            return outcome(name, loc.local,
                           "dim End = " + std::to_string(loc.end_dim) + ", dim rad = " + std::to_string(loc.radical_dim));
        }
    }
    return outcome(name, false, "unknown evidence");
}

CheckOutcome check_jordan(const QRep& rep, JordanType want, std::size_t samples, std::uint64_t seed) {
    const auto v = is_constant_jordan_type(rep, std::max<std::size_t>(samples, 2), seed);
    std::ostringstream os;
    os << "type " << v.type << " at " << (v.record.samples + static_cast<std::size_t>(rep.r())) << " probes, "
       << v.record.ranks_seen.size() << " distinct rank(s)";
    return outcome("jordan-type", v.constant && v.type == want, os.str());
}

CheckOutcome check_restriction(const QRep& rep, std::size_t samples, std::uint64_t seed) {
    const auto v = restriction_check(rep, samples, seed);
    std::string detail = "q(d_M, d_M + c_M) = " + std::to_string(v.form_value);
    if (!v.pass) detail += "; violated: " + v.failed;
    return outcome("restriction", v.pass, detail);
}

}  // namespace

std::string to_string(Mode m) {
    return m == Mode::EKP ? "EKP" : "EIP";
}

std::string to_string(Route r) {
    switch (r) {
        case Route::Simple: return "simple";
        case Route::Preprojective: return "preprojective";
        case Route::Echelon: return "echelon";
        case Route::Cover: return "cover";
        case Route::Shift: return "shift";
    }
    return "unknown";
}

std::string to_string(CertificateKind k) {
    switch (k) {
        case CertificateKind::Vacuous: return "vacuous";
        case CertificateKind::Sampled: return "sampled";
        case CertificateKind::Echelon: return "echelon";
        case CertificateKind::InjCover: return "inj-cover";
    }
    return "unknown";
}

std::string to_string(Evidence e) {
    switch (e) {
        case Evidence::Simple: return "simple";
        case Evidence::Brick: return "brick";
        case Evidence::LocalEnd: return "local-endo";
    }
    return "unknown";
}

Mode parse_mode(const std::string& s) {
    if (s == "ekp" || s == "EKP") return Mode::EKP;
    if (s == "eip" || s == "EIP") return Mode::EIP;
    throw std::invalid_argument("unknown mode '" + s + "'");
}

Route parse_route(const std::string& s) {
    return parse_enum(s, {Route::Simple, Route::Preprojective, Route::Echelon, Route::Cover, Route::Shift}, "route");
}

CertificateKind parse_certificate_kind(const std::string& s) {
    return parse_enum(s, {CertificateKind::Vacuous, CertificateKind::Sampled, CertificateKind::Echelon, CertificateKind::InjCover},
                      "certificate kind");
}

Evidence parse_evidence(const std::string& s) {
    return parse_enum(s, {Evidence::Simple, Evidence::Brick, Evidence::LocalEnd}, "indecomposability evidence");
}

Classification classify(int r, std::int64_t c, std::int64_t d) {
    require_arrow_count(r);
    Classification out;
    out.r = r;
    out.jordan = {c, d};
    if (c == 1 && d == 0) {
        out.realizable = true;
        out.dim = DimVector{0, 1};
        out.route = Route::Simple;
        out.failed_clause = "d >= 1";
        return out;
    }
    const auto ijt = is_in_ijt(r, {c, d});
    out.in_ijt = ijt.member;
    out.realizable = ijt.member;
    out.failed_clause = ijt.failed_clause;
    if (!ijt.member) return out;
    const DimVector v = xi({c, d});
    out.dim = v;
    out.route = window_route(r, v);
    if (*out.route == Route::Shift) out.plan = coxeter_shift_plan(r, v.a, v.b);
    return out;
}

RealizeResult realize(int r, std::int64_t c, std::int64_t d, const RealizeOptions& options) {
    const auto cls = classify(r, c, d);
    if (!cls.realizable) return Rejection{r, {c, d}, cls.failed_clause};

    CertifiedWitness w;
    w.r = r;
    w.jordan = {c, d};
    w.mode = options.mode;
    w.route = *cls.route;
    w.seed = options.seed;
    const DimVector v = *cls.dim;
    w.trace.push_back("classify: dimension " + dim_string(v) + ", route " + to_string(w.route));

    QRep ekp;
    switch (w.route) {
        case Route::Simple:
            ekp = simple_sink<Rational>(r);
            w.certificate = CertificateKind::Vacuous;
            w.evidence = Evidence::Simple;
            break;
        case Route::Preprojective:
            ekp = build_preprojective(r, v.a, v.b);
            w.trace.push_back("preprojective built by repeated tau^{-1}");
            w.certificate = CertificateKind::Sampled;
            w.samples = options.property_samples;
            w.evidence = Evidence::LocalEnd;
            break;
        case Route::Echelon: {
            w.echelon = select_phi(r, v.a, v.b);
            ekp = build_echelon_rep(*w.echelon);
            w.trace.push_back("echelon " + to_string(w.echelon->case_tag));
            w.certificate = CertificateKind::Echelon;
            w.evidence = Evidence::Brick;
            break;
        }
        case Route::Cover: {
            auto built = build_cover_tree(r, v.a, v.b);
            w.trace.insert(w.trace.end(), built.trace.begin(), built.trace.end());
            w.cover = std::move(built.tree);
            ekp = push_down(*w.cover);
            w.certificate = CertificateKind::InjCover;
            w.evidence = Evidence::LocalEnd;
            break;
        }
        case Route::Shift: {
            w.plan = cls.plan;
            const auto& plan = *w.plan;
            w.trace.push_back("shift by l = " + std::to_string(plan.l) + " from " + dim_string(plan.intermediate) + " (" +
                              to_string(plan.window_case) + ")");
            TreeRep tree(r);
            if (plan.window_case == WindowCase::Cover) {
                auto built = build_cover_tree(r, plan.intermediate.a, plan.intermediate.b);
                w.trace.insert(w.trace.end(), built.trace.begin(), built.trace.end());
                tree = std::move(built.tree);
            } else {
                tree = thin_path_rep(r, plan.intermediate.a, plan.intermediate.b);
                w.trace.push_back("thin path representation");
            }
            for (std::int64_t i = 0; i < plan.l; ++i) tree = tau_inverse_tree(tree);
            w.trace.push_back("tau^{-1} applied " + std::to_string(plan.l) + " time(s) on the cover");
            w.cover = std::move(tree);
            ekp = push_down(*w.cover);
            w.certificate = CertificateKind::InjCover;
            w.evidence = Evidence::LocalEnd;
            break;
        }
    }
    if (ekp.dim() != v) {
        throw std::logic_error("construction produced dimension " + dim_string(ekp.dim()) + ", expected " + dim_string(v));
    }
    w.trace.push_back("push-down dimension " + dim_string(ekp.dim()));
    w.rep = options.mode == Mode::EKP ? ekp : dual(ekp);
    if (options.mode == Mode::EIP) w.trace.push_back("dualized to the equal images side");

    const std::size_t prop_samples = w.certificate == CertificateKind::Sampled ? options.property_samples : 1;
    const auto cert = check_certificate(w, prop_samples, options.seed);
    if (cert.failed()) throw std::logic_error("internal certificate failure: " + cert.detail);
    w.trace.push_back("certificate " + to_string(w.certificate) + ": " + cert.detail);
    const auto ev = check_evidence(w);
    if (ev.failed()) throw std::logic_error("internal indecomposability failure: " + ev.detail);
    w.trace.push_back("indecomposable (" + to_string(w.evidence) + "): " + ev.detail);
    const auto jt = check_jordan(w.rep, w.jordan, options.jordan_samples, options.seed);
    if (jt.failed()) throw std::logic_error("internal Jordan type failure: " + jt.detail);
    w.trace.push_back("constant Jordan type: " + jt.detail);
    const auto rs = check_restriction(w.rep, options.restriction_samples, options.seed);
    if (rs.failed()) throw std::logic_error("internal restriction failure: " + rs.detail);
    w.trace.push_back("restriction: " + rs.detail);
    return w;
}

std::vector<CheckOutcome> revalidate(const CertifiedWitness& w, std::size_t samples, std::uint64_t seed) {
    std::vector<CheckOutcome> out;
    const DimVector want = expected_dim(w);
    out.push_back(outcome("dimension", w.rep.dim() == want, "dimension " + dim_string(w.rep.dim()) + ", expected " + dim_string(want)));
    out.push_back(check_certificate(w, samples, seed));
    out.push_back(check_jordan(w.rep, w.jordan, samples, seed));
    out.push_back(check_evidence(w));
    out.push_back(check_restriction(w.rep, samples, seed));
    return out;
}

}  // namespace kronjord
