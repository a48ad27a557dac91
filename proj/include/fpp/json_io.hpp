#pragma once

// JSON encodings of the library's value types and fixture loaders.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "fpp/cyclic_algebra.hpp"
#include "fpp/dimension_formula.hpp"
#include "fpp/singularities.hpp"
#include "fpp/surface.hpp"

namespace fpp {

using Json = nlohmann::json;

Json to_json(const Rat& q);
Json to_json(const SymbolicReal& x);
Json to_json(const CycElt& a);
Json to_json(const AlgElt& a);
Json to_json(const RootOfUnity& r);
Json to_json(const FixedPointClass& c);
Json to_json(const ClassDataset& d);
Json to_json(const OrbifoldSurface& x);
Json to_json(const SurfaceInvariants& s);

// Decoders throw ConfigError on malformed input.
Rat rat_from_json(const Json& j);
SymbolicReal symbolic_from_json(const Json& j);
CycElt cyc_from_json(const Json& j);
AlgElt alg_from_json(const Json& j);
RootOfUnity root_from_json(const Json& j);
ClassDataset dataset_from_json(const Json& j);
OrbifoldSurface orbifold_from_json(const Json& j);

Json to_json(const EllipticFibration& f);
EllipticFibration fibration_from_json(const Json& j);

/// Either {"ball_quotient": {"c2", "q"}} or explicit {"euler", "signature", "q", "p_g", "plurigenera", "minimal"}.
SurfaceInvariants invariants_from_json(const Json& j);

/// Reads and parses a JSON file; throws ConfigError with the path on failure.
Json read_json_file(const std::filesystem::path& path);

/// Evaluates expressions such as "lambda/lambda_bar", "2", "zeta^3 + 1" in Q(zeta_7).
CycElt parse_cyc_expression(const std::string& text);

}  // namespace fpp
