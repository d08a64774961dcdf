#pragma once

#include <array>
#include <string>

#include "harness/chess/board.hpp"

namespace harness::chess {

// The 7 non-identity elements of the board's dihedral symmetry group.
// Coordinate convention: Rot90 maps (file f, rank r) to (r, 7-f), i.e.
// clockwise with rank 0 drawn at the bottom.
enum class Symmetry {
  kRot90,
  kRot180,
  kRot270,
  kMirrorX,         // (f, r) -> (f, 7-r)
  kMirrorY,         // (f, r) -> (7-f, r)
  kMirrorDiagMain,  // (f, r) -> (r, f), the a1-h8 diagonal
  kMirrorDiagAnti,  // (f, r) -> (7-r, 7-f)
};

constexpr std::array<Symmetry, 7> all_symmetries() {
  return {Symmetry::kRot90,        Symmetry::kRot180,
          Symmetry::kRot270,       Symmetry::kMirrorX,
          Symmetry::kMirrorY,      Symmetry::kMirrorDiagMain,
          Symmetry::kMirrorDiagAnti};
}

std::string to_string(Symmetry s);

Square map_square(Square sq, Symmetry s);

// Relocates every piece by the symmetry's coordinate map. Requires a board
// with no pawns and no castling rights (the orientation would otherwise be
// meaning-bearing); throws ContractError if violated. Side to move and
// clocks are unchanged; the en-passant square is cleared (vacuous without
// pawns).
Board apply_symmetry(const Board& board, Symmetry s);

// Color-swapping reflection over the horizontal midline: every piece is
// recolored and moved from rank r to 7-r, side to move flips, castling
// rights swap colors, the en-passant square is reflected. An involution.
Board mirror_position(const Board& board);

}  // namespace harness::chess
