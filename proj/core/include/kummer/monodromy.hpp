#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "kummer/permutation.hpp"
#include "kummer/rational.hpp"
#include "kummer/real.hpp"

namespace kummer::monodromy {

enum class Puncture { zero, quarter, infinity };
std::string to_string(Puncture p);

// Base point -> start of circle (straight), one full circle, back along the same segment.
// The circle starts at center + radius * i^start_quarter_turns.
struct LoopSpec {
  Rational base_point = make_rational(-257, 256);
  Rational center_re = 0;
  Rational center_im = 0;
  Rational radius = make_rational(1, 512);
  int start_quarter_turns = 2;
  bool clockwise = false;
};

// Defaults: radius half the distance to the nearest other puncture; the infinity loop is the
// circle |lambda| = 8 traversed clockwise so that it encloses the finite punctures reversed.
LoopSpec loop_around(Puncture p);

struct TrackOptions {
  mpfr_prec_t precision_bits = 128;
  int initial_steps = 256;  // per path piece
  double step_scale = 1.0;  // multiplies the maximum step
  double safety_radius = 1e-6;  // minimum allowed distance between tracked roots
  long max_steps = 1000000;
};

// Roots of G_s(X) = 4X^3 - 3a(l)X - b(l) - s l^(3/2), s = +1 (P-1, labels 1..3) and s = -1 (P+1, 4..6),
// where X = l^(1/2) x. At the base point each triple is sorted by (re, im) of x = X / l0^(1/2).
struct TrackedRoots {
  Complex lambda;
  Complex sqrt_lambda;
  std::array<Complex, 6> roots;

  // normalized root x = X / sqrt(lambda)
  Complex normalized(int label) const;
};

TrackedRoots base_roots(const Rational& base_point, mpfr_prec_t prec);

struct TrackResult {
  Permutation perm{6};  // label i goes to label perm(i)
  int accepted_steps = 0;
  int rejected_steps = 0;
  double min_separation = 0;
  double closure_error = 0;  // relative distance of the returned root set from the base set
  bool sqrt_flipped = false;  // l^(1/2) came back as -l0^(1/2)
};

class CollisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Predictor-corrector continuation around one loop. Throws CollisionError when two roots come within
// the safety radius and ConvergenceError when the step size underflows or the loop fails to close.
TrackResult track_loop(const LoopSpec& spec, const TrackOptions& options = {});

struct PunctureTable {
  TrackResult zero;
  TrackResult quarter;
  TrackResult infinity;
  Permutation infinity_from_product{6};  // sigma_0^-1 o sigma_q^-1
  bool product_is_identity = false;     // sigma_0 o sigma_inf o sigma_q
};

PunctureTable puncture_table(const TrackOptions& options = {});

// Fixed relabeling (4 6) inside the P+1 triple: reverses its order, as x -> -x reverses the sort.
Permutation reference_relabeling();
Permutation to_reference_labels(const Permutation& p);

// Cycle type is [2,2,2] and every cycle pairs a label of 1..3 with one of 4..6.
bool swaps_triples(const Permutation& p);
// Nontrivial and each triple is mapped to itself.
bool within_triples(const Permutation& p);

enum class DeckParity { preserves, swaps, not_in_H };
std::string to_string(DeckParity p);

struct ParityReport {
  DeckParity parity;
  int sign;
  bool fixes_blocks;     // {1,2,3} and {4,5,6} each mapped to themselves
  bool exchanges_blocks; // {1,2,3} <-> {4,5,6}
};

// H is the subgroup fixing each block setwise; inside H even preserves E1, E2 and odd swaps them.
ParityReport deck_parity(const Permutation& tau);

}  // namespace kummer::monodromy
