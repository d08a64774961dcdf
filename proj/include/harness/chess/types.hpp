#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace harness::chess {

enum class Color : std::uint8_t { kWhite = 0, kBlack = 1 };

constexpr Color opposite(Color c) {
  return c == Color::kWhite ? Color::kBlack : Color::kWhite;
}

enum class PieceKind : std::uint8_t {
  kKing = 0,
  kQueen,
  kRook,
  kBishop,
  kKnight,
  kPawn,
};

struct Piece {
  Color color = Color::kWhite;
  PieceKind kind = PieceKind::kKing;

  bool operator==(const Piece&) const = default;
};

// file 0 = a, rank 0 = rank 1 (White's home rank).
struct Square {
  int file = 0;
  int rank = 0;

  constexpr int index() const { return rank * 8 + file; }
  static constexpr Square from_index(int idx) { return Square{idx % 8, idx / 8}; }
  constexpr bool valid() const {
    return file >= 0 && file < 8 && rank >= 0 && rank < 8;
  }
  bool operator==(const Square&) const = default;
  auto operator<=>(const Square& other) const {
    return index() <=> other.index();
  }
};

std::string to_string(Square sq);                // "e4"
std::optional<Square> square_from_string(std::string_view text);

struct MoveSpec {
  Square from;
  Square to;
  std::optional<PieceKind> promotion;

  bool operator==(const MoveSpec&) const = default;
};

// Long algebraic form used on the UCI wire: "e2e4", "e7e8q".
std::string to_uci(const MoveSpec& move);
std::optional<MoveSpec> move_from_uci(std::string_view text);

char piece_to_char(Piece p);                      // FEN letter
std::optional<Piece> piece_from_char(char c);

}  // namespace harness::chess
