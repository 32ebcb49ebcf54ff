#pragma once

// Valuation spec and log pair files (YAML documents).
//
// Valuation spec:
//   variables: [t, x]
//   weights: {t: [1], x: [0]}     # absent variables get weight zero
//   basis: [t]                    # optional, together with residue
//   residue: [x]
// or a composition of two spec files, relative to this file:
//   compose: [outer.spec, inner.spec]
//
// Without an explicit partition the spec is adapted when its nonzero weights
// form a basis of Q^d, and a quasi-monomial handle otherwise.
//
// Log pair:
//   variables: [x, y]
//   boundary: [{coeff: "1/2", function: "x"}]

#include <filesystem>
#include <string_view>

#include "valform/logpair.hpp"
#include "valform/valuation.hpp"

namespace valform::cli {

ValuationSpec parse_valuation_spec(std::string_view text, const std::filesystem::path& base_dir = ".");
ValuationSpec load_valuation_spec(const std::filesystem::path& path);

LogPair parse_log_pair(std::string_view text);
LogPair load_log_pair(const std::filesystem::path& path);

}  // namespace valform::cli
