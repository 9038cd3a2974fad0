#pragma once

#include "kronjord/kronecker.hpp"
#include "kronjord/pipeline.hpp"
#include "kronjord/tree.hpp"

#include <json.hpp>

#include <string>
#include <variant>
#include <vector>

namespace kronjord {

using Json = nlohmann::json;

/// A Kronecker representation over Q or over a prime field.
using AnyRep = std::variant<QRep, KroneckerRep<Fp>>;

Json rep_to_json(const QRep& m);
Json rep_to_json(const KroneckerRep<Fp>& m);
AnyRep rep_from_json(const Json& j);
/// As rep_from_json, but rejects prime-field representations.
QRep qrep_from_json(const Json& j);

Json tree_to_json(const TreeRep& t);
TreeRep tree_from_json(const Json& j);

Json witness_to_json(const CertifiedWitness& w);
CertifiedWitness witness_from_json(const Json& j);

Json classification_to_json(const Classification& c);
Json rejection_to_json(const Rejection& r);
Json report_to_json(const std::vector<CheckOutcome>& checks, std::uint64_t seed, std::size_t samples);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace kronjord
