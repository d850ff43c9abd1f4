#pragma once

#include <string>

#include "json.hpp"

#include "rcalab/certificate.hpp"

namespace rcalab::io {

using Json = nlohmann::ordered_json;

Json to_json(const Perm& p);
Json to_json(const BlockMap& f);
Json to_json(const CtrlDescriptor& d);
Json to_json(const MutuallyUnborderedFamily& family);
Json to_json(const GateSequence& sequence);
Json to_json(const GenWordCert& cert);

/// Loaders validate structure and raise ParseError naming the offending field.
Perm load_perm(const Json& j);
BlockMap load_block_map(const Json& j);
CtrlDescriptor load_descriptor(const Json& j);
MutuallyUnborderedFamily load_family(const Json& j);
GateSequence load_gate_sequence(const Json& j);
GenWordCert load_certificate(const Json& j);

Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& j);

}  // namespace rcalab::io
