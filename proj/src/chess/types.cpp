#include "harness/chess/types.hpp"

#include <cctype>

namespace harness::chess {

std::string to_string(Square sq) {
  std::string out;
  out += static_cast<char>('a' + sq.file);
  out += static_cast<char>('1' + sq.rank);
  return out;
}

std::optional<Square> square_from_string(std::string_view text) {
  if (text.size() != 2) return std::nullopt;
  int file = text[0] - 'a';
  int rank = text[1] - '1';
  Square sq{file, rank};
  if (!sq.valid()) return std::nullopt;
  return sq;
}

std::string to_uci(const MoveSpec& move) {
  std::string out = to_string(move.from) + to_string(move.to);
  if (move.promotion) {
    switch (*move.promotion) {
      case PieceKind::kQueen: out += 'q'; break;
      case PieceKind::kRook: out += 'r'; break;
      case PieceKind::kBishop: out += 'b'; break;
      case PieceKind::kKnight: out += 'n'; break;
      default: break;
    }
  }
  return out;
}

std::optional<MoveSpec> move_from_uci(std::string_view text) {
  if (text.size() != 4 && text.size() != 5) return std::nullopt;
  auto from = square_from_string(text.substr(0, 2));
  auto to = square_from_string(text.substr(2, 2));
  if (!from || !to) return std::nullopt;
  MoveSpec move{*from, *to, std::nullopt};
  if (text.size() == 5) {
    switch (std::tolower(static_cast<unsigned char>(text[4]))) {
      case 'q': move.promotion = PieceKind::kQueen; break;
      case 'r': move.promotion = PieceKind::kRook; break;
      case 'b': move.promotion = PieceKind::kBishop; break;
      case 'n': move.promotion = PieceKind::kKnight; break;
      default: return std::nullopt;
    }
  }
  return move;
}

char piece_to_char(Piece p) {
  char c = '?';
  switch (p.kind) {
    case PieceKind::kKing: c = 'k'; break;
    case PieceKind::kQueen: c = 'q'; break;
    case PieceKind::kRook: c = 'r'; break;
    case PieceKind::kBishop: c = 'b'; break;
    case PieceKind::kKnight: c = 'n'; break;
    case PieceKind::kPawn: c = 'p'; break;
  }
  return p.color == Color::kWhite
             ? static_cast<char>(std::toupper(static_cast<unsigned char>(c)))
             : c;
}

std::optional<Piece> piece_from_char(char c) {
  Color color = std::isupper(static_cast<unsigned char>(c)) ? Color::kWhite
                                                            : Color::kBlack;
  switch (std::tolower(static_cast<unsigned char>(c))) {
    case 'k': return Piece{color, PieceKind::kKing};
    case 'q': return Piece{color, PieceKind::kQueen};
    case 'r': return Piece{color, PieceKind::kRook};
    case 'b': return Piece{color, PieceKind::kBishop};
    case 'n': return Piece{color, PieceKind::kKnight};
    case 'p': return Piece{color, PieceKind::kPawn};
    default: return std::nullopt;
  }
}

}  // namespace harness::chess
