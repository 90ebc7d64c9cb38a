#pragma once

#include "gccp/instance.hpp"

namespace gccp {

/// Single-zero roulette as a multi-goal collection problem: coupons "0".."36"
/// and the twelve simple bets (even, odd, red, black, 1-18, 19-36, the three
/// dozens, the three columns). 0 serves no goal.
Instance build_roulette();

enum class ChessPiece { Queen, Rook, King };
enum class ChessVariant {
  Closed,  ///< a piece covers its own square
  Open,    ///< a square counts only when attacked by a piece elsewhere
};

struct ChessSpec {
  ChessPiece piece = ChessPiece::Queen;
  ChessVariant variant = ChessVariant::Closed;
};

/// 8x8 board domination as a collection problem: coupons are the 64 squares,
/// and the goal of square s is the set of squares from which a piece covers
/// s. Attack sets use empty-board moves; covering a set of placed pieces is
/// the union of their individual coverages.
Instance build_chess(const ChessSpec& spec);

}  // namespace gccp
