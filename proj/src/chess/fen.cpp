#include "harness/chess/fen.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "harness/util/errors.hpp"

namespace harness::chess {

Board parse_fen(const std::string& text) {
  std::istringstream in(text);
  std::string placement, stm, castling, ep, halfmove, fullmove;
  if (!(in >> placement >> stm >> castling >> ep >> halfmove >> fullmove)) {
    throw ParseError("FEN must have six fields: \"" + text + "\"");
  }
  std::string extra;
  if (in >> extra) {
    throw ParseError("FEN has trailing content: \"" + extra + "\"");
  }

  Board board;
  int rank = 7;
  int file = 0;
  for (char c : placement) {
    if (c == '/') {
      if (file != 8) throw ParseError("FEN rank does not span 8 files");
      --rank;
      file = 0;
      if (rank < 0) throw ParseError("FEN has more than 8 ranks");
      continue;
    }
    if (c >= '1' && c <= '8') {
      file += c - '0';
      if (file > 8) throw ParseError("FEN rank overflows 8 files");
      continue;
    }
    auto piece = piece_from_char(c);
    if (!piece) throw ParseError(std::string("FEN has unknown piece '") + c + "'");
    if (file >= 8) throw ParseError("FEN rank overflows 8 files");
    board.set({file, rank}, *piece);
    ++file;
  }
  if (rank != 0 || file != 8) throw ParseError("FEN placement does not cover the board");

  if (stm == "w") {
    board.side_to_move = Color::kWhite;
  } else if (stm == "b") {
    board.side_to_move = Color::kBlack;
  } else {
    throw ParseError("FEN side-to-move must be 'w' or 'b'");
  }

  if (castling != "-") {
    for (char c : castling) {
      switch (c) {
        case 'K': board.castling.white_kingside = true; break;
        case 'Q': board.castling.white_queenside = true; break;
        case 'k': board.castling.black_kingside = true; break;
        case 'q': board.castling.black_queenside = true; break;
        default:
          throw ParseError(std::string("FEN has unknown castling flag '") + c + "'");
      }
    }
  }

  if (ep != "-") {
    auto sq = square_from_string(ep);
    if (!sq) throw ParseError("FEN en-passant square is malformed: " + ep);
    board.en_passant = *sq;
  }

  try {
    board.halfmove_clock = std::stoi(halfmove);
    board.fullmove_number = std::stoi(fullmove);
  } catch (const std::exception&) {
    throw ParseError("FEN move counters must be integers");
  }

  if (auto issue = legality_issue(board)) {
    throw ParseError("illegal position: " + *issue + " in \"" + text + "\"");
  }
  return board;
}

std::string to_fen(const Board& board) {
  std::string out;
  for (int rank = 7; rank >= 0; --rank) {
    int empties = 0;
    for (int file = 0; file < 8; ++file) {
      const auto& piece = board.at({file, rank});
      if (!piece) {
        ++empties;
        continue;
      }
      if (empties > 0) {
        out += static_cast<char>('0' + empties);
        empties = 0;
      }
      out += piece_to_char(*piece);
    }
    if (empties > 0) out += static_cast<char>('0' + empties);
    if (rank > 0) out += '/';
  }

  out += board.side_to_move == Color::kWhite ? " w " : " b ";
  if (board.castling.any()) {
    if (board.castling.white_kingside) out += 'K';
    if (board.castling.white_queenside) out += 'Q';
    if (board.castling.black_kingside) out += 'k';
    if (board.castling.black_queenside) out += 'q';
  } else {
    out += '-';
  }
  out += ' ';
  out += board.en_passant ? to_string(*board.en_passant) : "-";
  out += ' ';
  out += std::to_string(board.halfmove_clock);
  out += ' ';
  out += std::to_string(board.fullmove_number);
  return out;
}

std::vector<Board> load_fen_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open position file: " + path);
  std::vector<Board> boards;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    auto end = line.find_last_not_of(" \t\r");
    try {
      boards.push_back(parse_fen(line.substr(start, end - start + 1)));
    } catch (const ParseError& e) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return boards;
}

}  // namespace harness::chess
