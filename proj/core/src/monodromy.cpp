#include "kummer/monodromy.hpp"

#include <algorithm>
#include <cmath>

namespace kummer::monodromy {

std::string to_string(Puncture p) {
  switch (p) {
    case Puncture::zero: return "0";
    case Puncture::quarter: return "1/256";
    case Puncture::infinity: return "inf";
  }
  return "?";
}

LoopSpec loop_around(Puncture p) {
  LoopSpec s;
  switch (p) {
    case Puncture::zero:
      s.radius = make_rational(1, 512);
      s.start_quarter_turns = 2;
      break;
    case Puncture::quarter:
      s.center_re = make_rational(1, 256);
      s.radius = make_rational(1, 512);
      s.start_quarter_turns = 1;  // approach from above, passing over 0
      break;
    case Puncture::infinity:
      s.radius = 8;
      s.start_quarter_turns = 2;
      s.clockwise = true;
      break;
  }
  return s;
}

namespace {

constexpr int sign_of_label(int k) { return k < 3 ? 1 : -1; }

struct Params {
  Complex a;
  Complex b;
  Complex lw;  // lambda^(3/2) on the tracked branch
};

Params params_at(const Complex& lambda, const Complex& w) {
  mpfr_prec_t prec = lambda.precision();
  return {lambda + Complex(make_rational(1, 144), prec),
          lambda * Complex(make_rational(3, 8), prec) - Complex(make_rational(1, 1728), prec), lambda * w};
}

// G_s(X) and dG/dX
void g_and_dg(const Params& p, int s, const Complex& x, Complex& g, Complex& dg) {
  mpfr_prec_t prec = x.precision();
  Complex x2 = x * x;
  Complex three_a = p.a * Real(3.0, prec);
  g = x2 * x * Real(4.0, prec) - three_a * x - p.b;
  if (s > 0) {
    g -= p.lw;
  } else {
    g += p.lw;
  }
  dg = x2 * Real(12.0, prec) - three_a;
}

// dG/dlambda
Complex g_lambda(const Complex& w, int s, const Complex& x) {
  mpfr_prec_t prec = x.precision();
  Complex r = -(x * Real(3.0, prec)) - Complex(make_rational(3, 8), prec);
  Complex t = w * Real(1.5, prec);
  return s > 0 ? r - t : r + t;
}

bool newton(const Params& p, int s, Complex& x, const Real& tol) {
  Complex g(x.precision()), dg(x.precision());
  for (int it = 0; it < 16; ++it) {
    g_and_dg(p, s, x, g, dg);
    if (abs(dg).is_zero()) return false;
    Complex delta = g / dg;
    x -= delta;
    Real scale = abs(x);
    Real one(1.0, x.precision());
    if (scale < one) scale = one;
    if (abs(delta) <= tol * scale) return true;
  }
  return false;
}

Real min_separation(const std::array<Complex, 6>& r) {
  Real best = abs(r[0] - r[1]);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < i; ++j) {
      Real d = abs(r[i] - r[j]);
      if (d < best) best = d;
    }
  }
  return best;
}

Complex continue_sqrt(const Complex& lambda, const Complex& prev) {
  Complex w = sqrt(lambda);
  if (abs(w - prev) > abs(w + prev)) w = -w;
  return w;
}

class Path {
 public:
  Path(const LoopSpec& spec, mpfr_prec_t prec) : prec_(prec), base_(spec.base_point, prec) {
    center_ = Complex(spec.center_re, spec.center_im, prec);
    radius_ = Real(spec.radius, prec);
    Real half_pi = Real::pi(prec) / Real(2.0, prec);
    theta0_ = half_pi * Real(static_cast<double>(spec.start_quarter_turns % 4), prec);
    sweep_ = Real::pi(prec) * Real(spec.clockwise ? -2.0 : 2.0, prec);
    start_ = center_ + Complex::polar(radius_, theta0_);
  }

  Complex at(int piece, double t) const {
    Real tr(t, prec_);
    switch (piece) {
      case 0: return base_ + (start_ - base_) * tr;
      case 1: return center_ + Complex::polar(radius_, theta0_ + sweep_ * tr);
      default: return start_ + (base_ - start_) * tr;
    }
  }

 private:
  mpfr_prec_t prec_;
  Complex base_;
  Complex center_{prec_};
  Real radius_{prec_};
  Real theta0_{prec_};
  Real sweep_{prec_};
  Complex start_{prec_};
};

}  // namespace

Complex TrackedRoots::normalized(int label) const {
  if (label < 1 || label > 6) throw std::out_of_range("root label");
  return roots[static_cast<std::size_t>(label - 1)] / sqrt_lambda;
}

TrackedRoots base_roots(const Rational& base_point, mpfr_prec_t prec) {
  if (base_point == 0 || base_point == make_rational(1, 256)) {
    throw std::invalid_argument("base point is a puncture");
  }
  Complex lambda(base_point, prec);
  Complex w = sqrt(lambda);
  Params p = params_at(lambda, w);
  Real tol = pow10(static_cast<long>(-0.30103 * static_cast<double>(prec)) + 4, prec);
  TrackedRoots out{lambda, w, {Complex(prec), Complex(prec), Complex(prec), Complex(prec), Complex(prec), Complex(prec)}};
  for (int s : {1, -1}) {
    Complex c0 = s > 0 ? -(p.b + p.lw) : -(p.b - p.lw);
    std::vector<Complex> coeffs{c0, -(p.a * Real(3.0, prec)), Complex(prec), Complex(Rational(4), prec)};
    auto r = polynomial_roots(coeffs, prec);
    for (auto& x : r) {
      if (!newton(p, s, x, tol)) throw ConvergenceError("base root polish failed");
    }
    std::sort(r.begin(), r.end(), [&](const Complex& u, const Complex& v) {
      Complex xu = u / w, xv = v / w;
      if (!(xu.re == xv.re)) return xu.re < xv.re;
      return xu.im < xv.im;
    });
    std::size_t off = s > 0 ? 0 : 3;
    for (std::size_t k = 0; k < 3; ++k) out.roots[off + k] = r[k];
  }
  Real sep = min_separation(out.roots);
  if (sep < pow10(-10, prec)) throw CollisionError("roots at the base point are not distinct");
  return out;
}

TrackResult track_loop(const LoopSpec& spec, const TrackOptions& options) {
  const mpfr_prec_t prec = options.precision_bits;
  if (prec < 53) throw std::invalid_argument("precision must be at least 53 bits");
  if (options.initial_steps < 1 || !(options.step_scale > 0)) throw std::invalid_argument("bad step options");
  if (spec.radius <= 0) throw std::invalid_argument("loop radius must be positive");

  TrackedRoots base = base_roots(spec.base_point, prec);
  Path path(spec, prec);
  const Real tol = pow10(static_cast<long>(-0.30103 * static_cast<double>(prec)) + 4, prec);
  const Real safety(options.safety_radius, prec);
  const double h_max = options.step_scale / options.initial_steps;
  const double h_min = 1e-14;

  TrackResult result;
  Complex lambda = base.lambda;
  Complex w = base.sqrt_lambda;
  std::array<Complex, 6> x = base.roots;
  Real sep = min_separation(x);
  Real global_min = sep;

  for (int piece = 0; piece < 3; ++piece) {
    double t = 0;
    double h = h_max;
    while (t < 1) {
      if (result.accepted_steps + result.rejected_steps > options.max_steps) {
        throw ConvergenceError("step budget exhausted on loop piece " + std::to_string(piece));
      }
      double t_next = std::min(1.0, t + h);
      Complex lambda_n = path.at(piece, t_next);
      Complex w_n = continue_sqrt(lambda_n, w);
      bool ok = abs(w_n - w) * Real(2.0, prec) < abs(w);
      std::array<Complex, 6> xn = x;
      if (ok) {
        Params pn = params_at(lambda_n, w_n);
        Complex dl = lambda_n - lambda;
        Params pc = params_at(lambda, w);
        Real limit = sep / Real(3.0, prec);
        for (int k = 0; k < 6 && ok; ++k) {
          int s = sign_of_label(k);
          Complex g(prec), dg(prec);
          g_and_dg(pc, s, x[k], g, dg);
          xn[k] = x[k] - g_lambda(w, s, x[k]) / dg * dl;
          ok = newton(pn, s, xn[k], tol) && abs(xn[k] - x[k]) < limit;
        }
      }
      if (!ok) {
        ++result.rejected_steps;
        h /= 2;
        if (h < h_min) throw ConvergenceError("step size underflow on loop piece " + std::to_string(piece));
        continue;
      }
      Real sep_n = min_separation(xn);
      if (sep_n < safety) {
        throw CollisionError("tracked roots collide near lambda = " + lambda_n.to_string(12));
      }
      ++result.accepted_steps;
      t = t_next;
      lambda = lambda_n;
      w = w_n;
      x = xn;
      sep = sep_n;
      if (sep < global_min) global_min = sep;
      h = std::min(h * 2, h_max);
    }
  }

  result.sqrt_flipped = abs(w + base.sqrt_lambda) < abs(w - base.sqrt_lambda);
  std::vector<int> images(6);
  std::vector<bool> used(6, false);
  Real worst(prec);
  for (std::size_t k = 0; k < 6; ++k) {
    std::size_t best = 0;
    Real best_d = abs(x[k] - base.roots[0]);
    for (std::size_t j = 1; j < 6; ++j) {
      Real d = abs(x[k] - base.roots[j]);
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    if (used[best]) throw ConvergenceError("loop does not close up: two roots returned to the same base root");
    used[best] = true;
    images[k] = static_cast<int>(best) + 1;
    Real scale = abs(base.roots[best]);
    Real one(1.0, prec);
    if (scale < one) scale = one;
    Real rel = best_d / scale;
    if (worst < rel) worst = rel;
  }
  if (pow10(-static_cast<long>(prec / 4), prec) < worst) {
    throw ConvergenceError("root set fails to close after the loop (relative error " + worst.to_string(4) + ")");
  }
  result.perm = Permutation::from_images(images);
  result.min_separation = global_min.to_double();
  result.closure_error = worst.to_double();
  return result;
}

PunctureTable puncture_table(const TrackOptions& options) {
  PunctureTable t;
  t.zero = track_loop(loop_around(Puncture::zero), options);
  t.quarter = track_loop(loop_around(Puncture::quarter), options);
  t.infinity = track_loop(loop_around(Puncture::infinity), options);
  t.infinity_from_product = t.zero.perm.inverse() * t.quarter.perm.inverse();
  t.product_is_identity = (t.zero.perm * t.infinity.perm * t.quarter.perm).is_identity();
  return t;
}

Permutation reference_relabeling() { return Permutation::parse("(46)", 6); }

Permutation to_reference_labels(const Permutation& p) { return conjugate(p, reference_relabeling()); }

bool swaps_triples(const Permutation& p) {
  if (p.degree() != 6) return false;
  for (int i = 1; i <= 3; ++i) {
    int j = p(i);
    if (j < 4 || p(j) != i) return false;
  }
  return true;
}

bool within_triples(const Permutation& p) {
  if (p.degree() != 6 || p.is_identity()) return false;
  for (int i = 1; i <= 6; ++i) {
    if ((i <= 3) != (p(i) <= 3)) return false;
  }
  return true;
}

std::string to_string(DeckParity p) {
  switch (p) {
    case DeckParity::preserves: return "preserves";
    case DeckParity::swaps: return "swaps";
    case DeckParity::not_in_H: return "not_in_H";
  }
  return "?";
}

ParityReport deck_parity(const Permutation& tau) {
  if (tau.degree() != 6) throw std::invalid_argument("deck_parity expects a permutation of 6 labels");
  bool fixes = true, exchanges = true;
  for (int i = 1; i <= 6; ++i) {
    bool same = (i <= 3) == (tau(i) <= 3);
    fixes = fixes && same;
    exchanges = exchanges && !same;
  }
  ParityReport r{DeckParity::not_in_H, tau.sign(), fixes, exchanges};
  if (fixes) r.parity = r.sign > 0 ? DeckParity::preserves : DeckParity::swaps;
  return r;
}

}  // namespace kummer::monodromy
