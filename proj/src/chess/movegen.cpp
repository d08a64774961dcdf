#include "harness/chess/movegen.hpp"

#include <algorithm>
#include <array>

#include "harness/chess/fen.hpp"
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

void push_move(std::vector<MoveSpec>& out, Square from, Square to) {
  out.push_back(MoveSpec{from, to, std::nullopt});
}

void pawn_targets(const Board& board, Square from, Color us,
                  std::vector<MoveSpec>& out) {
  const int dir = us == Color::kWhite ? 1 : -1;
  const int start_rank = us == Color::kWhite ? 1 : 6;
  const int promo_rank = us == Color::kWhite ? 7 : 0;

  auto emit = [&](Square to) {
    if (to.rank == promo_rank) {
      for (PieceKind kind : {PieceKind::kQueen, PieceKind::kRook,
                             PieceKind::kBishop, PieceKind::kKnight}) {
        out.push_back(MoveSpec{from, to, kind});
      }
    } else {
      push_move(out, from, to);
    }
  };

  Square one{from.file, from.rank + dir};
  if (one.valid() && !board.at(one)) {
    emit(one);
    Square two{from.file, from.rank + 2 * dir};
    if (from.rank == start_rank && !board.at(two)) {
      push_move(out, from, two);
    }
  }
  for (int df : {-1, 1}) {
    Square to{from.file + df, from.rank + dir};
    if (!to.valid()) continue;
    const auto& occ = board.at(to);
    if (occ && occ->color != us) {
      emit(to);
    } else if (!occ && board.en_passant && to == *board.en_passant) {
      push_move(out, from, to);
    }
  }
}

void slider_targets(const Board& board, Square from, Color us,
                    const std::array<std::pair<int, int>, 4>& dirs,
                    std::vector<MoveSpec>& out) {
  for (const auto& [df, dr] : dirs) {
    int f = from.file + df;
    int r = from.rank + dr;
    while (f >= 0 && f < 8 && r >= 0 && r < 8) {
      const auto& occ = board.at(Square{f, r});
      if (!occ) {
        push_move(out, from, {f, r});
      } else {
        if (occ->color != us) push_move(out, from, {f, r});
        break;
      }
      f += df;
      r += dr;
    }
  }
}

void step_targets(const Board& board, Square from, Color us,
                  const std::array<std::pair<int, int>, 8>& steps,
                  std::vector<MoveSpec>& out) {
  for (const auto& [df, dr] : steps) {
    Square to{from.file + df, from.rank + dr};
    if (!to.valid()) continue;
    const auto& occ = board.at(to);
    if (!occ || occ->color != us) push_move(out, from, to);
  }
}

void castling_targets(const Board& board, Color us, std::vector<MoveSpec>& out) {
  const int rank = us == Color::kWhite ? 0 : 7;
  const Color them = opposite(us);
  const bool kingside = us == Color::kWhite ? board.castling.white_kingside
                                            : board.castling.black_kingside;
  const bool queenside = us == Color::kWhite ? board.castling.white_queenside
                                             : board.castling.black_queenside;
  if (!kingside && !queenside) return;
  const Square king{4, rank};
  if (is_attacked(board, king, them)) return;
  if (kingside && !board.at({5, rank}) && !board.at({6, rank}) &&
      !is_attacked(board, {5, rank}, them) &&
      !is_attacked(board, {6, rank}, them)) {
    push_move(out, king, {6, rank});
  }
  if (queenside && !board.at({3, rank}) && !board.at({2, rank}) &&
      !board.at({1, rank}) && !is_attacked(board, {3, rank}, them) &&
      !is_attacked(board, {2, rank}, them)) {
    push_move(out, king, {2, rank});
  }
}

std::vector<MoveSpec> pseudo_legal_moves(const Board& board) {
  std::vector<MoveSpec> out;
  out.reserve(64);
  const Color us = board.side_to_move;
  for (int idx = 0; idx < 64; ++idx) {
    Square from = Square::from_index(idx);
    const auto& piece = board.at(from);
    if (!piece || piece->color != us) continue;
    switch (piece->kind) {
      case PieceKind::kPawn: pawn_targets(board, from, us, out); break;
      case PieceKind::kKnight: step_targets(board, from, us, kKnightSteps, out); break;
      case PieceKind::kBishop: slider_targets(board, from, us, kBishopDirs, out); break;
      case PieceKind::kRook: slider_targets(board, from, us, kRookDirs, out); break;
      case PieceKind::kQueen:
        slider_targets(board, from, us, kRookDirs, out);
        slider_targets(board, from, us, kBishopDirs, out);
        break;
      case PieceKind::kKing: step_targets(board, from, us, kKingSteps, out); break;
    }
  }
  castling_targets(board, us, out);
  return out;
}

// Applies a pseudo-legal move without the king-safety filter.
Board apply_unchecked(const Board& board, const MoveSpec& move) {
  Board next = board;
  const Color us = board.side_to_move;
  const auto piece = board.at(move.from);
  const bool is_pawn = piece->kind == PieceKind::kPawn;
  const bool en_passant_capture =
      is_pawn && board.en_passant && move.to == *board.en_passant &&
      move.from.file != move.to.file;
  const bool capture = board.at(move.to).has_value() || en_passant_capture;

  next.set(move.from, std::nullopt);
  Piece landed = *piece;
  if (move.promotion) landed.kind = *move.promotion;
  next.set(move.to, landed);

  if (en_passant_capture) {
    next.set(Square{move.to.file, move.from.rank}, std::nullopt);
  }

  // Castling: move the rook as well.
  if (piece->kind == PieceKind::kKing && move.from.file == 4 &&
      (move.to.file == 6 || move.to.file == 2) && move.from.rank == move.to.rank) {
    const int rank = move.from.rank;
    if (move.to.file == 6) {
      next.set({7, rank}, std::nullopt);
      next.set({5, rank}, Piece{us, PieceKind::kRook});
    } else {
      next.set({0, rank}, std::nullopt);
      next.set({3, rank}, Piece{us, PieceKind::kRook});
    }
  }

  // Castling rights: lost when the king or a rook moves, or a rook is taken.
  auto drop_rights_for_square = [&](Square sq) {
    if (sq == Square{4, 0}) {
      next.castling.white_kingside = next.castling.white_queenside = false;
    } else if (sq == Square{4, 7}) {
      next.castling.black_kingside = next.castling.black_queenside = false;
    } else if (sq == Square{7, 0}) {
      next.castling.white_kingside = false;
    } else if (sq == Square{0, 0}) {
      next.castling.white_queenside = false;
    } else if (sq == Square{7, 7}) {
      next.castling.black_kingside = false;
    } else if (sq == Square{0, 7}) {
      next.castling.black_queenside = false;
    }
  };
  drop_rights_for_square(move.from);
  drop_rights_for_square(move.to);

  // En-passant square: set after any double push, else cleared.
  next.en_passant.reset();
  if (is_pawn && std::abs(move.to.rank - move.from.rank) == 2) {
    next.en_passant = Square{move.from.file, (move.from.rank + move.to.rank) / 2};
  }

  next.halfmove_clock = (is_pawn || capture) ? 0 : board.halfmove_clock + 1;
  if (us == Color::kBlack) next.fullmove_number = board.fullmove_number + 1;
  next.side_to_move = opposite(us);
  return next;
}

}  // namespace

std::vector<MoveSpec> legal_moves(const Board& board) {
  if (auto issue = legality_issue(board)) {
    throw ContractError("legal_moves on an illegal board: " + *issue);
  }
  const Color us = board.side_to_move;
  std::vector<MoveSpec> out;
  for (const auto& move : pseudo_legal_moves(board)) {
    Board next = apply_unchecked(board, move);
    if (!in_check(next, us)) out.push_back(move);
  }
  std::sort(out.begin(), out.end(), [](const MoveSpec& a, const MoveSpec& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.to != b.to) return a.to < b.to;
    return a.promotion.value_or(PieceKind::kKing) <
           b.promotion.value_or(PieceKind::kKing);
  });
  return out;
}

Board apply_move(const Board& board, const MoveSpec& move) {
  const auto moves = legal_moves(board);
  if (std::find(moves.begin(), moves.end(), move) == moves.end()) {
    throw ContractError("illegal move " + to_uci(move) + " in " + to_fen(board));
  }
  return apply_unchecked(board, move);
}

bool is_capture(const Board& board, const MoveSpec& move) {
  if (board.at(move.to)) return true;
  const auto& piece = board.at(move.from);
  return piece && piece->kind == PieceKind::kPawn && board.en_passant &&
         move.to == *board.en_passant && move.from.file != move.to.file;
}

std::uint64_t perft(const Board& board, int depth) {
  if (depth <= 0) return 1;
  const Color us = board.side_to_move;
  std::uint64_t nodes = 0;
  for (const auto& move : pseudo_legal_moves(board)) {
    Board next = apply_unchecked(board, move);
    if (in_check(next, us)) continue;
    nodes += depth == 1 ? 1 : perft(next, depth - 1);
  }
  return nodes;
}

}  // namespace harness::chess
