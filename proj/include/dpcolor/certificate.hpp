#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dpcolor/product.hpp"

namespace dpc {

// A serialized bad-cover construction carrying everything needed to
// re-verify it independently: parameters, shift-class representatives,
// sampled bijections (random kind), the full cross-matching data, and a
// content hash.
struct CoverCertificate {
    int version = 1;
    std::string kind;  // "star" | "random"
    int k = 0, l = 0, t = 0;
    std::uint64_t seed = 0;  // random kind only
    int c = 0;               // leaves per block (random kind)
    int b = 0;               // shift classes per copy at the cover fold
    // Shift-class representatives of g at palette size k+l-1 (= k for star).
    std::vector<std::vector<int>> class_reps;
    // bijections[block][j][omega][z] = leaf color index of class member z
    // (random kind; empty for star).
    std::vector<std::vector<std::vector<std::vector<int>>>> bijections;
    std::uint64_t blocks_resampled = 0;
    std::uint64_t block_attempts = 0;  // total block sampling attempts
    bool verified = false;
    ProductCover product;
};

std::string certificate_to_json(const CoverCertificate& cert);
CoverCertificate certificate_from_json(const std::string& text);

// FNV-1a 64 over the canonical serialization without the hash field.
std::string certificate_content_hash(const CoverCertificate& cert);

// Rebuilds the product cover from kind + parameters (+ bijections) and
// checks it matches cert.product exactly.
bool replay_matches(const CoverCertificate& cert);

}  // namespace dpc
