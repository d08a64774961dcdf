#include "harness/chess/board.hpp"

#include <array>

#include "harness/util/errors.hpp"

namespace harness::chess {

namespace {

constexpr std::array<std::pair<int, int>, 8> kKingSteps{{{1, 0},
                                                         {1, 1},
                                                         {0, 1},
                                                         {-1, 1},
                                                         {-1, 0},
                                                         {-1, -1},
                                                         {0, -1},
                                                         {1, -1}}};
constexpr std::array<std::pair<int, int>, 8> kKnightSteps{{{1, 2},
                                                           {2, 1},
                                                           {2, -1},
                                                           {1, -2},
                                                           {-1, -2},
                                                           {-2, -1},
                                                           {-2, 1},
                                                           {-1, 2}}};
constexpr std::array<std::pair<int, int>, 4> kRookDirs{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
constexpr std::array<std::pair<int, int>, 4> kBishopDirs{{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};

bool slider_attacks(const Board& board, Square target, Color by,
                    const std::pair<int, int>& dir, PieceKind slider) {
  int f = target.file + dir.first;
  int r = target.rank + dir.second;
  while (f >= 0 && f < 8 && r >= 0 && r < 8) {
    const auto& occ = board.at(Square{f, r});
    if (occ) {
      return occ->color == by &&
             (occ->kind == slider || occ->kind == PieceKind::kQueen);
    }
    f += dir.first;
    r += dir.second;
  }
  return false;
}

}  // namespace

Square Board::king_square(Color color) const {
  for (int idx = 0; idx < 64; ++idx) {
    const auto& piece = at(Square::from_index(idx));
    if (piece && piece->color == color && piece->kind == PieceKind::kKing) {
      return Square::from_index(idx);
    }
  }
  throw ContractError("board has no king of the requested color");
}

int Board::piece_count() const {
  int n = 0;
  for (int idx = 0; idx < 64; ++idx) {
    if (at(Square::from_index(idx))) ++n;
  }
  return n;
}

int Board::piece_count(Color color) const {
  int n = 0;
  for (int idx = 0; idx < 64; ++idx) {
    const auto& piece = at(Square::from_index(idx));
    if (piece && piece->color == color) ++n;
  }
  return n;
}

bool Board::has_pawns() const {
  for (int idx = 0; idx < 64; ++idx) {
    const auto& piece = at(Square::from_index(idx));
    if (piece && piece->kind == PieceKind::kPawn) return true;
  }
  return false;
}

bool is_attacked(const Board& board, Square sq, Color by) {
  // Knights.
  for (const auto& [df, dr] : kKnightSteps) {
    Square s{sq.file + df, sq.rank + dr};
    if (!s.valid()) continue;
    const auto& occ = board.at(s);
    if (occ && occ->color == by && occ->kind == PieceKind::kKnight) return true;
  }
  // King.
  for (const auto& [df, dr] : kKingSteps) {
    Square s{sq.file + df, sq.rank + dr};
    if (!s.valid()) continue;
    const auto& occ = board.at(s);
    if (occ && occ->color == by && occ->kind == PieceKind::kKing) return true;
  }
  // Pawns: a white pawn on (f-1, r-1) or (f+1, r-1) attacks (f, r).
  const int dr = by == Color::kWhite ? -1 : 1;
  for (int df : {-1, 1}) {
    Square s{sq.file + df, sq.rank + dr};
    if (!s.valid()) continue;
    const auto& occ = board.at(s);
    if (occ && occ->color == by && occ->kind == PieceKind::kPawn) return true;
  }
  // Sliders.
  for (const auto& dir : kRookDirs) {
    if (slider_attacks(board, sq, by, dir, PieceKind::kRook)) return true;
  }
  for (const auto& dir : kBishopDirs) {
    if (slider_attacks(board, sq, by, dir, PieceKind::kBishop)) return true;
  }
  return false;
}

bool in_check(const Board& board, Color color) {
  return is_attacked(board, board.king_square(color), opposite(color));
}

std::optional<std::string> legality_issue(const Board& board) {
  int kings[2] = {0, 0};
  int pawns[2] = {0, 0};
  int pieces[2] = {0, 0};
  for (int idx = 0; idx < 64; ++idx) {
    Square sq = Square::from_index(idx);
    const auto& piece = board.at(sq);
    if (!piece) continue;
    const int c = piece->color == Color::kWhite ? 0 : 1;
    ++pieces[c];
    if (piece->kind == PieceKind::kKing) ++kings[c];
    if (piece->kind == PieceKind::kPawn) {
      ++pawns[c];
      if (sq.rank == 0 || sq.rank == 7) return "pawn on a back rank";
    }
  }
  if (kings[0] != 1) return "white must have exactly one king";
  if (kings[1] != 1) return "black must have exactly one king";
  if (pieces[0] > 16 || pieces[1] > 16) return "more than 16 pieces of one color";
  if (pawns[0] > 8 || pawns[1] > 8) return "more than 8 pawns of one color";

  auto holds = [&](Square sq, Color color, PieceKind kind) {
    const auto& piece = board.at(sq);
    return piece && piece->color == color && piece->kind == kind;
  };
  if (board.castling.white_kingside &&
      (!holds({4, 0}, Color::kWhite, PieceKind::kKing) ||
       !holds({7, 0}, Color::kWhite, PieceKind::kRook))) {
    return "white kingside castling right without king/rook on home squares";
  }
  if (board.castling.white_queenside &&
      (!holds({4, 0}, Color::kWhite, PieceKind::kKing) ||
       !holds({0, 0}, Color::kWhite, PieceKind::kRook))) {
    return "white queenside castling right without king/rook on home squares";
  }
  if (board.castling.black_kingside &&
      (!holds({4, 7}, Color::kBlack, PieceKind::kKing) ||
       !holds({7, 7}, Color::kBlack, PieceKind::kRook))) {
    return "black kingside castling right without king/rook on home squares";
  }
  if (board.castling.black_queenside &&
      (!holds({4, 7}, Color::kBlack, PieceKind::kKing) ||
       !holds({0, 7}, Color::kBlack, PieceKind::kRook))) {
    return "black queenside castling right without king/rook on home squares";
  }

  if (board.en_passant) {
    const Square ep = *board.en_passant;
    if (ep.rank != 2 && ep.rank != 5) return "en-passant square off rank 3/6";
    const bool white_pushed = ep.rank == 2;
    if (white_pushed && board.side_to_move != Color::kBlack) {
      return "en-passant square on rank 3 requires black to move";
    }
    if (!white_pushed && board.side_to_move != Color::kWhite) {
      return "en-passant square on rank 6 requires white to move";
    }
    const Color pusher = white_pushed ? Color::kWhite : Color::kBlack;
    const Square pawn_sq{ep.file, white_pushed ? 3 : 4};
    const Square origin{ep.file, white_pushed ? 1 : 6};
    if (!holds(pawn_sq, pusher, PieceKind::kPawn)) {
      return "en-passant square without the double-pushed pawn";
    }
    if (board.at(ep) || board.at(origin)) {
      return "en-passant transit squares are occupied";
    }
  }

  if (board.halfmove_clock < 0) return "negative halfmove clock";
  if (board.fullmove_number < 1) return "fullmove number below 1";

  if (in_check(board, opposite(board.side_to_move))) {
    return "side not to move is in check";
  }
  return std::nullopt;
}

Board initial_board() {
  Board board;
  const PieceKind back[8] = {PieceKind::kRook,  PieceKind::kKnight,
                             PieceKind::kBishop, PieceKind::kQueen,
                             PieceKind::kKing,   PieceKind::kBishop,
                             PieceKind::kKnight, PieceKind::kRook};
  for (int f = 0; f < 8; ++f) {
    board.set({f, 0}, Piece{Color::kWhite, back[f]});
    board.set({f, 1}, Piece{Color::kWhite, PieceKind::kPawn});
    board.set({f, 6}, Piece{Color::kBlack, PieceKind::kPawn});
    board.set({f, 7}, Piece{Color::kBlack, back[f]});
  }
  board.castling = {true, true, true, true};
  return board;
}

}  // namespace harness::chess
