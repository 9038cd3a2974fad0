#include "kronjord/io.hpp"

#include <fstream>
#include <stdexcept>

namespace kronjord {

namespace {

Rational scalar_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw std::invalid_argument("rational entry must be a string or an integer");
}

Fp fp_from_json(const Json& j, std::uint32_t p) {
    if (!j.is_number_integer()) throw std::invalid_argument("prime-field entry must be an integer");
    const auto v = j.get<std::int64_t>();
    if (v < 0 || v >= static_cast<std::int64_t>(p)) throw std::invalid_argument("prime-field entry outside [0, p)");
    return Fp{static_cast<std::uint32_t>(v), p};
}

Json matrix_to_json(const Matrix<Rational>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json matrix_to_json(const Matrix<Fp>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).v);
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class T, class Parse>
Matrix<T> matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, Field<T> field, Parse parse) {
    if (!j.is_array() || j.size() != rows) {
        throw std::invalid_argument("matrix must have " + std::to_string(rows) + " rows");
    }
    Matrix<T> m(rows, cols, field);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = j[i];
        if (!row.is_array() || row.size() != cols) {
            throw std::invalid_argument("matrix row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
        }
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = parse(row[k]);
    }
    return m;
}

std::size_t size_from_json(const Json& j, const char* what) {
    const auto v = j.get<std::int64_t>();
    if (v < 0) throw std::invalid_argument(std::string(what) + " must be nonnegative");
    return static_cast<std::size_t>(v);
}

Address address_from_json(const Json& j) {
    return j.get<Address>();
}

Json dim_to_json(DimVector v) {
    return Json::array({v.a, v.b});
}

DimVector dim_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("dimension vector must be a pair");
    return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

}  // namespace

Json rep_to_json(const QRep& m) {
    Json mats = Json::array();
    for (const auto& x : m.mats()) mats.push_back(matrix_to_json(x));
    return {{"r", m.r()}, {"dim", dim_to_json(m.dim())}, {"field", {{"type", "Q"}}}, {"mats", mats}};
}

Json rep_to_json(const KroneckerRep<Fp>& m) {
    Json mats = Json::array();
    for (const auto& x : m.mats()) mats.push_back(matrix_to_json(x));
    return {{"r", m.r()}, {"dim", dim_to_json(m.dim())}, {"field", {{"type", "GF"}, {"p", m.field().p}}}, {"mats", mats}};
}

AnyRep rep_from_json(const Json& j) {
    const int r = j.at("r").get<int>();
    require_arrow_count(r);
    const DimVector dim = dim_from_json(j.at("dim"));
    if (!dim.is_dimension()) throw std::invalid_argument("negative dimension");
    const auto& mats_json = j.at("mats");
    if (!mats_json.is_array() || mats_json.size() != static_cast<std::size_t>(r)) {
        throw std::invalid_argument("expected " + std::to_string(r) + " matrices");
    }
    const std::string type = j.contains("field") ? j.at("field").at("type").get<std::string>() : "Q";
    const auto rows = static_cast<std::size_t>(dim.b), cols = static_cast<std::size_t>(dim.a);
    if (type == "Q") {
        std::vector<Matrix<Rational>> mats;
        for (const auto& m : mats_json) mats.push_back(matrix_from_json<Rational>(m, rows, cols, {}, scalar_from_json));
        return QRep(r, dim, std::move(mats));
    }
    if (type == "GF") {
        const Field<Fp> field(j.at("field").at("p").get<std::uint32_t>());
        std::vector<Matrix<Fp>> mats;
        for (const auto& m : mats_json) {
            mats.push_back(matrix_from_json<Fp>(m, rows, cols, field, [&](const Json& x) { return fp_from_json(x, field.p); }));
        }
        return KroneckerRep<Fp>(r, dim, std::move(mats), field);
    }
    throw std::invalid_argument("unknown field type '" + type + "'");
}

QRep qrep_from_json(const Json& j) {
    auto any = rep_from_json(j);
    if (auto* q = std::get_if<QRep>(&any)) return std::move(*q);
    throw std::invalid_argument("expected a representation over Q");
}

Json tree_to_json(const TreeRep& t) {
    Json vertices = Json::array();
    for (const auto& [x, d] : t.dims()) vertices.push_back({{"addr", x}, {"dim", d}});
    Json edges = Json::array();
    for (const auto& e : t.edges()) {
        edges.push_back({{"src", e.src}, {"dst", e.dst}, {"color", e.color}, {"mat", matrix_to_json(e.mat)}});
    }
    return {{"r", t.r()}, {"vertices", vertices}, {"edges", edges}};
}

TreeRep tree_from_json(const Json& j) {
    const int r = j.at("r").get<int>();
    require_arrow_count(r);
    TreeRep t(r);
    for (const auto& v : j.at("vertices")) {
        const Address x = address_from_json(v.at("addr"));
        if (t.has_vertex(x)) throw std::invalid_argument("duplicate vertex " + address_string(x));
        t.set_dim(x, size_from_json(v.at("dim"), "vertex dimension"));
    }
    for (const auto& e : j.at("edges")) {
        const Address src = address_from_json(e.at("src"));
        const Address dst = address_from_json(e.at("dst"));
        if (!t.has_vertex(src) || !t.has_vertex(dst)) throw std::invalid_argument("edge with an unknown endpoint");
        if (!adjacent(src, dst)) throw std::invalid_argument("edge between non-adjacent vertices");
        if (e.contains("color") && e.at("color").get<int>() != edge_color(src, dst)) {
            throw std::invalid_argument("edge color does not match its endpoints");
        }
        if (t.arrow_tail(src, dst)) throw std::invalid_argument("duplicate edge " + address_string(src) + " - " + address_string(dst));
        t.set_map(src, dst, matrix_from_json<Rational>(e.at("mat"), t.dim(dst), t.dim(src), {}, scalar_from_json));
    }
    return t;
}

Json witness_to_json(const CertifiedWitness& w) {
    Json j = {
        {"r", w.r},
        {"jordan", {w.jordan.c, w.jordan.d}},
        {"property", to_string(w.mode)},
        {"route", to_string(w.route)},
        {"certificate", {{"kind", to_string(w.certificate)}, {"seed", w.seed}, {"samples", w.samples}}},
        {"indecomposability", to_string(w.evidence)},
        {"trace", w.trace},
        {"rep", rep_to_json(w.rep)},
    };
    if (w.cover) j["cover"] = tree_to_json(*w.cover);
    if (w.echelon) j["echelon"] = {{"case", to_string(w.echelon->case_tag)}, {"phi", w.echelon->phi}};
    if (w.plan) {
        j["shift"] = {{"l", w.plan->l}, {"case", to_string(w.plan->window_case)}, {"intermediate", dim_to_json(w.plan->intermediate)}};
    }
    return j;
}

CertifiedWitness witness_from_json(const Json& j) {
    CertifiedWitness w;
    w.r = j.at("r").get<int>();
    const auto& jt = j.at("jordan");
    w.jordan = {jt.at(0).get<std::int64_t>(), jt.at(1).get<std::int64_t>()};
    w.mode = parse_mode(j.at("property").get<std::string>());
    w.route = parse_route(j.at("route").get<std::string>());
    const auto& cert = j.at("certificate");
    w.certificate = parse_certificate_kind(cert.at("kind").get<std::string>());
    w.seed = cert.value("seed", std::uint64_t{1});
    w.samples = cert.value("samples", std::size_t{0});
    w.evidence = parse_evidence(j.at("indecomposability").get<std::string>());
    if (j.contains("trace")) w.trace = j.at("trace").get<std::vector<std::string>>();
    w.rep = qrep_from_json(j.at("rep"));
    if (w.rep.r() != w.r) throw std::invalid_argument("witness arrow count disagrees with its representation");
    if (j.contains("cover")) w.cover = tree_from_json(j.at("cover"));
    if (j.contains("echelon")) {
        const auto& e = j.at("echelon");
        EchelonSpec spec;
        spec.r = w.r;
        spec.a = w.mode == Mode::EKP ? w.rep.dim().a : w.rep.dim().b;
        spec.b = w.mode == Mode::EKP ? w.rep.dim().b : w.rep.dim().a;
        spec.phi = e.at("phi").get<std::vector<std::int64_t>>();
        const auto tag = e.at("case").get<std::string>();
        if (tag == "b-case") spec.case_tag = EchelonCase::B;
        else if (tag == "c-case") spec.case_tag = EchelonCase::C;
        else if (tag == "d-case") spec.case_tag = EchelonCase::D;
        else throw std::invalid_argument("unknown echelon case '" + tag + "'");
        w.echelon = spec;
    }
    if (j.contains("shift")) {
        const auto& s = j.at("shift");
        ReflectionPlan plan;
        plan.l = s.at("l").get<std::int64_t>();
        const auto c = s.at("case").get<std::string>();
        if (c != "thin" && c != "cover") throw std::invalid_argument("unknown shift case '" + c + "'");
        plan.window_case = c == "thin" ? WindowCase::Thin : WindowCase::Cover;
        plan.intermediate = dim_from_json(s.at("intermediate"));
        w.plan = plan;
    }
    return w;
}

Json classification_to_json(const Classification& c) {
    Json j = {
        {"r", c.r},
        {"jordan", {c.jordan.c, c.jordan.d}},
        {"in_ijt", c.in_ijt},
        {"realizable", c.realizable},
    };
    if (!c.failed_clause.empty()) j["failed_clause"] = c.failed_clause;
    if (c.dim) j["dim"] = dim_to_json(*c.dim);
    if (c.route) j["route"] = to_string(*c.route);
    if (c.plan) {
        j["shift"] = {{"l", c.plan->l}, {"case", to_string(c.plan->window_case)}, {"intermediate", dim_to_json(c.plan->intermediate)}};
    }
    return j;
}

Json rejection_to_json(const Rejection& r) {
    return {{"r", r.r}, {"jordan", {r.jordan.c, r.jordan.d}}, {"rejected", true}, {"failed_clause", r.clause}};
}

Json report_to_json(const std::vector<CheckOutcome>& checks, std::uint64_t seed, std::size_t samples) {
    Json arr = Json::array();
    for (const auto& c : checks) {
        Json item = {{"name", c.name}, {"verdict", !c.failed()}, {"detail", c.detail}};
        if (c.verdict == "skipped") item["skipped"] = true;
        arr.push_back(std::move(item));
    }
    return {{"checks", arr}, {"seed", seed}, {"samples", samples}};
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

}  // namespace kronjord
