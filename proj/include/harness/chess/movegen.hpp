#pragma once

#include <cstdint>
#include <vector>

#include "harness/chess/board.hpp"

namespace harness::chess {

// All legal moves for the side to move, including castling, en passant and
// promotions, in a deterministic order (by from-square, then to-square, then
// promotion kind). Empty exactly when the position is checkmate or stalemate.
// Throws ContractError on an illegal board.
std::vector<MoveSpec> legal_moves(const Board& board);

// Applies a legal move and returns the successor position (side to move
// flipped, clocks, castling rights and en-passant square updated).
// Throws ContractError if the move is not legal in `board`.
Board apply_move(const Board& board, const MoveSpec& move);

bool is_capture(const Board& board, const MoveSpec& move);

// Leaf count of the legal move tree at the given depth.
std::uint64_t perft(const Board& board, int depth);

}  // namespace harness::chess
