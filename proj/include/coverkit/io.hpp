#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "coverkit/cover.hpp"
#include "coverkit/nf_cover.hpp"

namespace coverkit::io {

// Cover file: {"classes":[{"a":int,"n":int>0},...], "weights":[int,...]?}.
// Integers may also be given as decimal strings.
CoverSystem parse_cover(const nlohmann::json& doc);
CoverSystem parse_cover_text(std::string_view text);
CoverSystem parse_cover_file(const std::filesystem::path& path);

struct NFInput {
  NFCoverSystem system;
  std::optional<NFElement> mu;
};

// NF file: {"min_poly":[c0,...,1], "classes":[{"alpha":[...],"beta":[...]},...],
//           "omegas":[[...],...]?, "mu_num":[...]?, "mu_den":int>0?}.
NFInput parse_nf(const nlohmann::json& doc);
NFInput parse_nf_text(std::string_view text);
NFInput parse_nf_file(const std::filesystem::path& path);

// Canonical serializations; both re-parse to equal values.
nlohmann::json cover_to_json(const CoverSystem& sys);
nlohmann::json nf_to_json(const NFInput& input);

}  // namespace coverkit::io
