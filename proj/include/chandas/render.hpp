#pragma once

#include <string>
#include <vector>

#include "chandas/binomial.hpp"
#include "chandas/core.hpp"
#include "chandas/counting.hpp"
#include "chandas/pataka.hpp"
#include "chandas/prastara.hpp"

namespace chandas {

// Textual renderings used by the CLI and frozen by golden-file tests. All
// multi-line outputs end each line (including the last) with '\n' and carry
// no trailing spaces.

// One row per line; `numbered` prefixes each line with the right-justified
// 1-based row index and a space.
std::string prastara_text(const Prastara& p, Notation notation = Notation::GL,
                          bool numbered = false);

// The staircase, one grid row per line: cells left-justified to per-column
// widths and joined by two spaces.
std::string lagakriya_text(const LagakriyaTable& table);

// The pyramid centered over its base: cells right-justified to a common
// width and joined by single spaces, each row indented to center it.
std::string meru_text(const MeruPyramid& pyramid);

// Columns side by side, top-aligned: cells left-justified to per-column
// widths and joined by two spaces; exhausted columns leave blank cells.
std::string pataka_text(const PatakaMatrix& matrix);

// The reduction table (value after each step beside the token written) and
// the replay column (token, multiplication, product), then the result.
std::string sankhya_trace_text(const SankhyaTrace& trace);

// Values joined by single spaces on one line.
std::string values_line(const std::vector<Natural>& values);

}  // namespace chandas
