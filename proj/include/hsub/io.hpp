#pragma once

#include <iosfwd>
#include <string>

#include "hsub/spectral.hpp"
#include "hsub/subdivision.hpp"

namespace hsub {

/// JSON file formats. All numeric payloads are rational strings ("p" or
/// "p/q"); unknown keys are rejected; serialization is deterministic so a
/// parse/serialize round trip is byte identical.

std::string mask_to_json(const Mask& m);
Mask mask_from_json(const std::string& text);

std::string vecseq_to_json(const VecSeq& s);
VecSeq vecseq_from_json(const std::string& text);

std::string spectral_system_to_json(const SpectralSystem& s);
SpectralSystem spectral_system_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace hsub
