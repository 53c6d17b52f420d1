#pragma once

#include <string>

#include "torus/field.hpp"

namespace torus {

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// PFLD1 container: magic "PFLD1", little-endian u32 n, u32 ncomp, u8 domain
// flag (0 = spectral complex, 1 = real samples), then 64-bit little-endian
// float payload, row-major per component; spectral payload is interleaved
// (re, im).
void save_spectral(const SpectralField& F, const std::string& path);
void save_real(const RealField& f, const std::string& path);

// Peeks at the domain flag without loading the payload.
int pfld_domain_flag(const std::string& path);

SpectralField load_spectral(const std::string& path);
RealField load_real(const std::string& path);

// Writes the JSON sidecar `<path>.meta.json` with constructor provenance.
void write_meta(const std::string& path, const std::string& json_text);

}  // namespace torus
