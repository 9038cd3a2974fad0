// Command line front end: classify, realize, verify, roots, coxeter, pushdown.

#include "kronjord/bgp.hpp"
#include "kronjord/cover.hpp"
#include "kronjord/forms.hpp"
#include "kronjord/io.hpp"
#include "kronjord/pipeline.hpp"
#include "kronjord/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace kronjord;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitRejected = 2;

std::pair<std::int64_t, std::int64_t> parse_pair(const std::string& text, const char* what) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw std::invalid_argument(std::string(what) + " must be given as X,Y");
    try {
        std::size_t used1 = 0, used2 = 0;
        const std::string first = text.substr(0, comma), second = text.substr(comma + 1);
        const auto x = std::stoll(first, &used1);
        const auto y = std::stoll(second, &used2);
        if (used1 != first.size() || used2 != second.size()) throw std::invalid_argument("trailing characters");
        return {x, y};
    } catch (const std::logic_error&) {
        throw std::invalid_argument(std::string("cannot parse ") + what + " '" + text + "'");
    }
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

void emit(const Json& j, const std::string& path) {
    if (path.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        write_json_file(path, j);
    }
}

int run_classify(int r, const std::string& jordan, bool json) {
    const auto [c, d] = parse_pair(jordan, "--jordan");
    const auto cls = classify(r, c, d);
    if (json) {
        std::cout << classification_to_json(cls).dump(2) << '\n';
    } else if (!cls.realizable) {
        std::cout << "rejected: clause " << cls.failed_clause << " fails\n";
    } else {
        std::cout << (cls.in_ijt ? "in IJT" : "realizable (simple)") << ", dim " << *cls.dim << ", route " << to_string(*cls.route);
        if (cls.plan) {
            std::cout << " (l = " << cls.plan->l << ", " << to_string(cls.plan->window_case) << " at " << cls.plan->intermediate << ")";
        }
        std::cout << '\n';
    }
    return cls.realizable ? kExitOk : kExitRejected;
}

int run_realize(int r, const std::string& jordan, const std::string& mode, std::uint64_t seed, const std::string& out) {
    const auto [c, d] = parse_pair(jordan, "--jordan");
    RealizeOptions options;
    options.mode = parse_mode(mode);
    options.seed = seed;
    const auto result = realize(r, c, d, options);
    if (const auto* rej = std::get_if<Rejection>(&result)) {
        std::cout << rejection_to_json(*rej).dump(2) << '\n';
        return kExitRejected;
    }
    emit(witness_to_json(std::get<CertifiedWitness>(result)), out);
    return kExitOk;
}

template <class T>
std::vector<CheckOutcome> generic_checks(const KroneckerRep<T>& m, const std::vector<std::string>& names, std::size_t samples,
                                         std::uint64_t seed, const std::optional<JordanType>& expected) {
    std::vector<CheckOutcome> out;
    for (const auto& name : names) {
        if (name == "ekp" || name == "eip") {
            const auto s = name == "ekp" ? ekp_sample_check(m, samples, seed) : eip_sample_check(m, samples, seed);
            std::string detail = "sampled: " + std::to_string(samples) + " random parameters plus coordinate axes";
            if (s.failing_probe) detail += ", rank drop at probe " + std::to_string(*s.failing_probe);
            out.push_back({name, s.pass ? "pass" : "fail", detail});
        } else if (name == "cjt") {
            const auto v = is_constant_jordan_type(m, std::max<std::size_t>(samples, 2), seed);
            std::ostringstream os;
            os << "type " << v.type << ", " << v.record.ranks_seen.size() << " distinct rank(s)";
            bool pass = v.constant;
            if (expected) {
                os << ", expected " << *expected;
                pass = pass && v.type == *expected;
            }
            out.push_back({name, pass ? "pass" : "fail", os.str()});
        } else if (name == "indec") {
            if constexpr (std::is_same_v<T, Rational>) {
                const auto loc = endomorphism_locality(m);
                out.push_back({name, loc.local ? "pass" : "fail",
                               "dim End = " + std::to_string(loc.end_dim) + ", dim rad = " + std::to_string(loc.radical_dim)});
            } else {
                const auto n = hom_space(m, m).dim();
                if (n == 1) {
                    out.push_back({name, "pass", "brick: dim End = 1"});
                } else {
                    out.push_back({name, "skipped", "dim End = " + std::to_string(n) + "; locality test needs characteristic 0"});
                }
            }
        } else if (name == "restriction") {
            const auto v = restriction_check(m, samples, seed);
            std::string detail = "q(d_M, d_M + c_M) = " + std::to_string(v.form_value);
            if (!v.pass) detail += "; violated: " + v.failed;
            out.push_back({name, v.pass ? "pass" : "fail", detail});
        } else {
            throw std::invalid_argument("unknown check '" + name + "' (known: ekp, eip, cjt, indec, restriction, certificate)");
        }
    }
    return out;
}

int run_verify(const std::string& file, const std::string& checks, std::size_t samples, std::uint64_t seed, bool json) {
    const auto names = split_list(checks);
    const Json doc = read_json_file(file);
    std::vector<CheckOutcome> results;
    if (doc.contains("rep")) {
        const auto w = witness_from_json(doc);
        const auto all = revalidate(w, samples, seed);
        auto find = [&](const std::string& n) {
            for (const auto& c : all)
                if (c.name == n) return c;
            throw std::logic_error("missing revalidation check " + n);
        };
        results.push_back(find("dimension"));
        std::vector<std::string> rest;
        for (const auto& n : names) {
            const bool property = (n == "ekp" && w.mode == Mode::EKP) || (n == "eip" && w.mode == Mode::EIP);
            if (property || n == "certificate") {
                auto c = find("certificate");
                c.name = n;
                results.push_back(c);
            } else if (n == "cjt") {
                auto c = find("jordan-type");
                c.name = n;
                results.push_back(c);
            } else if (n == "indec") {
                auto c = find("indecomposable");
                c.name = n;
                results.push_back(c);
            } else {
                rest.push_back(n);
            }
        }
        const auto more = generic_checks(w.rep, rest, samples, seed, w.jordan);
        results.insert(results.end(), more.begin(), more.end());
    } else {
        const auto rep = rep_from_json(doc);
        results = std::visit([&](const auto& m) { return generic_checks(m, names, samples, seed, std::nullopt); }, rep);
    }
    bool failed = false;
    for (const auto& c : results) failed = failed || c.failed();
    if (json) {
        std::cout << report_to_json(results, seed, samples).dump(2) << '\n';
    } else {
        for (const auto& c : results) std::cout << c.name << ": " << c.verdict << " (" << c.detail << ")\n";
    }
    return failed ? kExitError : kExitOk;
}

int run_roots(int r, std::int64_t max, bool json) {
    require_arrow_count(r);
    if (max < 1) throw std::invalid_argument("--max must be >= 1");
    Json rows = Json::array();
    for (std::int64_t a = 0; a <= max; ++a) {
        for (std::int64_t b = 0; b <= max; ++b) {
            if (a == 0 && b == 0) continue;
            const DimVector v{a, b};
            const auto cls = classify_root(r, v);
            Json row = {{"dim", {a, b}},
                        {"q", tits_form(r, v)},
                        {"kind", to_string(cls.kind)},
                        {"position", to_string(cls.position)}};
            if (b >= a) {
                const auto t = xi_inverse(v);
                row["jordan"] = {t.c, t.d};
                row["in_ijt"] = is_in_ijt(r, t).member;
            }
            rows.push_back(std::move(row));
        }
    }
    if (json) {
        std::cout << Json{{"r", r}, {"roots", rows}}.dump(2) << '\n';
        return kExitOk;
    }
    for (const auto& row : rows) {
        std::cout << '(' << row["dim"][0] << ',' << row["dim"][1] << ")  q=" << row["q"] << "  " << row["kind"].get<std::string>()
                  << "  " << row["position"].get<std::string>();
        if (row.contains("in_ijt")) {
            std::cout << "  jordan=[1]^" << row["jordan"][0] << "[2]^" << row["jordan"][1]
                      << (row["in_ijt"].get<bool>() ? "  IJT" : "");
        }
        std::cout << '\n';
    }
    return kExitOk;
}

int run_coxeter(int r, const std::string& dim, std::int64_t power, bool json) {
    const auto [a, b] = parse_pair(dim, "--dim");
    const auto v = coxeter_apply(r, {a, b}, power);
    if (json) {
        std::cout << Json{{"r", r}, {"dim", {a, b}}, {"power", power}, {"result", {v.a, v.b}}}.dump(2) << '\n';
    } else {
        std::cout << v << '\n';
    }
    return kExitOk;
}

int run_pushdown(const std::string& file, const std::string& out) {
    const auto tree = tree_from_json(read_json_file(file));
    emit(rep_to_json(push_down(tree)), out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Representations of Kronecker quivers with constant Jordan type"};
    app.require_subcommand(1);

    int r = 3;
    std::string jordan, mode = "ekp", out, file, checks = "ekp,cjt,indec,restriction", dim;
    std::uint64_t seed = 1;
    std::size_t samples = 200;
    std::int64_t max = 10, power = 1;
    bool json = false;

    auto* classify_cmd = app.add_subcommand("classify", "Decide realizability of a Jordan type");
    classify_cmd->add_option("--r", r, "Number of arrows")->required();
    classify_cmd->add_option("--jordan", jordan, "Jordan type as C,D for [1]^C [2]^D")->required();
    classify_cmd->add_flag("--json", json, "JSON output");

    auto* realize_cmd = app.add_subcommand("realize", "Build a certified witness");
    realize_cmd->add_option("--r", r, "Number of arrows")->required();
    realize_cmd->add_option("--jordan", jordan, "Jordan type as C,D")->required();
    realize_cmd->add_option("--mode", mode, "ekp or eip")->check(CLI::IsMember({"ekp", "eip"}));
    realize_cmd->add_option("--seed", seed, "Sampling seed");
    realize_cmd->add_option("--out", out, "Output file (default stdout)");
    realize_cmd->add_flag("--json", json, "JSON output (always on)");

    auto* verify_cmd = app.add_subcommand("verify", "Check a representation or witness file");
    verify_cmd->add_option("file", file, "Representation or witness JSON")->required();
    verify_cmd->add_option("--checks", checks, "Comma separated: ekp,eip,cjt,indec,restriction,certificate");
    verify_cmd->add_option("--samples", samples, "Random parameters per sampled check")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", seed, "Sampling seed");
    verify_cmd->add_flag("--json", json, "JSON output");

    auto* roots_cmd = app.add_subcommand("roots", "Root table with IJT membership");
    roots_cmd->add_option("--r", r, "Number of arrows")->required();
    roots_cmd->add_option("--max", max, "Largest dimension entry")->required();
    roots_cmd->add_flag("--json", json, "JSON output");

    auto* coxeter_cmd = app.add_subcommand("coxeter", "Apply a power of the Coxeter transformation");
    coxeter_cmd->add_option("--r", r, "Number of arrows")->required();
    coxeter_cmd->add_option("--dim", dim, "Dimension vector A,B")->required();
    coxeter_cmd->add_option("--power", power, "Exponent, may be negative")->required();
    coxeter_cmd->add_flag("--json", json, "JSON output");

    auto* pushdown_cmd = app.add_subcommand("pushdown", "Push a cover representation down to the Kronecker quiver");
    pushdown_cmd->add_option("file", file, "TreeRep JSON")->required();
    pushdown_cmd->add_option("--out", out, "Output file (default stdout)");
    pushdown_cmd->add_flag("--json", json, "JSON output (always on)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitError;
    }

    try {
        if (*classify_cmd) return run_classify(r, jordan, json);
        if (*realize_cmd) return run_realize(r, jordan, mode, seed, out);
        if (*verify_cmd) return run_verify(file, checks, samples, seed, json);
        if (*roots_cmd) return run_roots(r, max, json);
        if (*coxeter_cmd) return run_coxeter(r, dim, power, json);
        if (*pushdown_cmd) return run_pushdown(file, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
