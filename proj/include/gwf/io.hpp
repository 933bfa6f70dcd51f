#pragma once

#include "gwf/catalog.hpp"
#include "gwf/propagator.hpp"
#include "gwf/symplectic.hpp"
#include "gwf/wavefront.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace gwf {

using Json = nlohmann::ordered_json;

Json to_json(const DirectionSet& dirs);
Json to_json(const WavefrontReport& report);
Json to_json(const ComparisonResult& result);
Json to_json(const VerificationReport& report);
Json to_json(const CatalogEntry& entry);
Json to_json(const CatalogInfo& info);
/// Basis vectors as an array of rows.
Json to_json(const SingularSpace& space);
Json to_json(const QuadraticHamiltonian& q);

/// Parses {dim, re, im}; throws std::invalid_argument on malformed input or
/// a Q that fails make_hamiltonian.
QuadraticHamiltonian hamiltonian_from_json(const Json& j);

/// Two-space indentation and a trailing newline; infinities become null.
std::string dump(const Json& j);

/// Header `dir_index,r,abs_V`, one row per (direction, shell).
void write_profiles_csv(std::ostream& os, const WavefrontReport& report);

/// 32-byte little-endian header: "GWF1", uint32 dim, uint32 n, uint32 0,
/// float64 L, 8 zero bytes; then complex64 samples (float32 re, im) in
/// row-major order.
void write_gwf1(std::ostream& os, const SampledDistribution& u);

/// Inverse of write_gwf1; throws std::runtime_error on a malformed stream.
SampledDistribution read_gwf1(std::istream& is);

}  // namespace gwf
