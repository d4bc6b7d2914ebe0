#pragma once

#include <string>

#include "bei/betti.hpp"
#include "bei/conjecture.hpp"
#include "bei/corner.hpp"
#include "bei/groebner.hpp"

namespace bei {

enum class OutputFormat { text, json, csv };

OutputFormat parse_output_format(const std::string& s);

// Paper-style diagram: columns are the homological index i, rows are j-i,
// zeros print as ".". Bounded tables carry their certified region instead of
// projdim/reg/extremal.
std::string render_betti_text(const BettiTable& t);
// Schema: { "subject", "bounded", "region"?, "entries", "projdim", "reg",
// "extremal" }, entries sorted by (i, j); projdim/reg/extremal are null for
// bounded tables.
std::string render_betti_json(const BettiTable& t);
std::string render_betti_csv(const BettiTable& t);
std::string render_betti(const BettiTable& t, OutputFormat f);

// Inverse of render_betti_json, for round-trip checks.
BettiTable parse_betti_json(const std::string& text);

// Two tables in one document (side = both).
std::string render_betti_pair(const BettiTable& initial, const BettiTable& binomial, OutputFormat f);

std::string render_conjecture(const ConjectureReport& rep, OutputFormat f);
std::string render_verify(const VerifyReport& rep, OutputFormat f);
std::string render_corner(const CornerCertificate& cert, OutputFormat f);

}  // namespace bei
