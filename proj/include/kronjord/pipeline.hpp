#pragma once

#include "kronjord/bgp.hpp"
#include "kronjord/cover.hpp"
#include "kronjord/echelon.hpp"
#include "kronjord/kronecker.hpp"
#include "kronjord/tree.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace kronjord {

enum class Mode { EKP, EIP };
enum class Route { Simple, Preprojective, Echelon, Cover, Shift };
enum class CertificateKind { Vacuous, Sampled, Echelon, InjCover };
enum class Evidence { Simple, Brick, LocalEnd };

std::string to_string(Mode m);
std::string to_string(Route r);
std::string to_string(CertificateKind k);
std::string to_string(Evidence e);
Mode parse_mode(const std::string& s);
Route parse_route(const std::string& s);
CertificateKind parse_certificate_kind(const std::string& s);
Evidence parse_evidence(const std::string& s);

struct Classification {
    int r = 2;
    JordanType jordan;
    bool in_ijt = false;
    bool realizable = false;  // in IJT, or the exceptional (1,0)
    std::string failed_clause;
    std::optional<DimVector> dim;  // EKP dimension vector when realizable
    std::optional<Route> route;
    std::optional<ReflectionPlan> plan;  // for the shift route
};

/// Dispatch decision for Jordan type [1]^c [2]^d, integer arithmetic only.
Classification classify(int r, std::int64_t c, std::int64_t d);

struct RealizeOptions {
    Mode mode = Mode::EKP;
    std::uint64_t seed = 1;
    std::size_t property_samples = 200;
    std::size_t jordan_samples = 100;
    std::size_t restriction_samples = 200;
};

struct CertifiedWitness {
    int r = 2;
    JordanType jordan;
    Mode mode = Mode::EKP;
    Route route = Route::Simple;
    CertificateKind certificate = CertificateKind::Vacuous;
    Evidence evidence = Evidence::Simple;
    std::uint64_t seed = 1;
    std::size_t samples = 0;  // property samples of a sampled certificate
    std::vector<std::string> trace;
    QRep rep;
    std::optional<TreeRep> cover;  // the tree representation pushed down (EKP side)
    std::optional<EchelonSpec> echelon;
    std::optional<ReflectionPlan> plan;
};

struct Rejection {
    int r = 2;
    JordanType jordan;
    std::string clause;
};

using RealizeResult = std::variant<CertifiedWitness, Rejection>;

/// Builds and certifies a representation of constant Jordan type [1]^c [2]^d
/// with the equal kernels (or, in EIP mode, equal images) property. Throws
/// std::logic_error if a freshly built witness fails its own certificate.
RealizeResult realize(int r, std::int64_t c, std::int64_t d, const RealizeOptions& options = {});

struct CheckOutcome {
    std::string name;
    std::string verdict;  // pass, fail or skipped
    std::string detail;
    bool failed() const { return verdict == "fail"; }
};

/// Re-checks a witness from its stored data: dimension vector, the recorded
/// certificate, Jordan type, indecomposability evidence and the restriction
/// inequality.
std::vector<CheckOutcome> revalidate(const CertifiedWitness& w, std::size_t samples, std::uint64_t seed);

}  // namespace kronjord
