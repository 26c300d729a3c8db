#pragma once

#include <map>
#include <string>
#include <vector>

#include "ljb/hermitian.hpp"

namespace ljb::io {

// Parsed scenario file: an algebra basis plus optional constraint and
// generator lists, in the "ljb-scenario/1" JSON layout. Complex entries are
// written as [re, im] pairs and doubles carry 17 significant digits, so
// files are diff-able and round-trip exactly. Constraints and generators
// may be given either as coordinate vectors against the file's basis list
// or as explicit matrices; both arrive here resolved to matrices.
struct ScenarioFile {
    double hbar = 1.0;
    int dim = 0;
    std::vector<CMat> basis;
    std::vector<CMat> constraints;
    bool has_constraints = false; // field present, possibly empty
    std::vector<CMat> generators;
    bool has_generators = false;
    std::map<std::string, std::string> metadata;
    std::string digest; // fnv1a-64 of the file bytes, hex
};

// 64-bit FNV-1a of a byte string, lowercase hex. Content identity for
// reports; not cryptographic.
std::string fnv1a_hex(const std::string& bytes);

// Parses and validates a scenario from raw bytes (digest computed here).
// Throws ParseError for malformed JSON (with byte position), ShapeError
// for dimension inconsistencies, ValidationError for non-Hermitian
// matrices (naming the index) and bad field values.
ScenarioFile parse_scenario(const std::string& bytes);

// parse_scenario over the contents of a file; missing or unreadable file
// throws ParseError.
ScenarioFile load_scenario(const std::string& path);

// Deterministic serialization in the documented layout. Matrices are
// emitted from the given elements; metadata keys in sorted order.
std::string serialize_scenario(const ScenarioFile& sc);

void save_scenario(const ScenarioFile& sc, const std::string& path);

} // namespace ljb::io
