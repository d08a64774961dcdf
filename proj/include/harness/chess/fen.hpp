#pragma once

#include <string>
#include <vector>

#include "harness/chess/board.hpp"

namespace harness::chess {

inline constexpr const char* kInitialFen =
    "rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR w KQkq - 0 1";

// Parses a six-field FEN string and validates position legality.
// Throws ParseError with a field-level description on malformed input or an
// illegal position (two kings, pawn on a back rank, ...).
Board parse_fen(const std::string& text);

// Canonical six-field FEN; parse_fen(to_fen(b)) == b for legal boards.
std::string to_fen(const Board& board);

// One FEN per line; blank lines and lines starting with '#' are skipped.
std::vector<Board> load_fen_file(const std::string& path);

}  // namespace harness::chess
