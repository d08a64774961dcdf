#pragma once

#include <array>
#include <optional>
#include <string>

#include "harness/chess/types.hpp"

namespace harness::chess {

struct CastlingRights {
  bool white_kingside = false;
  bool white_queenside = false;
  bool black_kingside = false;
  bool black_queenside = false;

  bool any() const {
    return white_kingside || white_queenside || black_kingside ||
           black_queenside;
  }
  bool operator==(const CastlingRights&) const = default;
};

// Immutable-by-convention position value: operations return fresh boards.
class Board {
 public:
  Board() = default;

  const std::optional<Piece>& at(Square sq) const {
    return squares_[static_cast<size_t>(sq.index())];
  }
  void set(Square sq, std::optional<Piece> piece) {
    squares_[static_cast<size_t>(sq.index())] = piece;
  }

  Color side_to_move = Color::kWhite;
  CastlingRights castling;
  std::optional<Square> en_passant;
  int halfmove_clock = 0;
  int fullmove_number = 1;

  Square king_square(Color color) const;
  int piece_count() const;
  int piece_count(Color color) const;
  bool has_pawns() const;

  bool operator==(const Board&) const = default;

 private:
  std::array<std::optional<Piece>, 64> squares_{};
};

// True if `sq` is attacked by any piece of color `by` (pawn attacks included,
// en passant excluded).
bool is_attacked(const Board& board, Square sq, Color by);

bool in_check(const Board& board, Color color);

// Structural and positional legality: exactly one king per color, at most 16
// pieces and 8 pawns per color, no pawns on the back ranks, castling rights
// backed by king/rook home squares, a plausible en-passant square, and the
// side not to move not in check. Returns an explanation on failure.
std::optional<std::string> legality_issue(const Board& board);
inline bool is_legal_position(const Board& board) {
  return !legality_issue(board).has_value();
}

Board initial_board();

}  // namespace harness::chess
