#include "kummer/family.hpp"

#include <stdexcept>

namespace kummer::family {

namespace {

const RationalFunction L = RationalFunction::variable();

Real eval_poly(const Polynomial& p, const Real& x) {
  Real acc(x.precision());
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Real(*it, x.precision());
  return acc;
}

Complex eval_poly(const Polynomial& p, const Complex& x) {
  Complex acc(x.precision());
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Complex(*it, x.precision());
  return acc;
}

Real eval(const RationalFunction& f, const Real& x) {
  Real d = eval_poly(f.den(), x);
  if (abs(d) < pow10(-60, x.precision())) throw std::domain_error("coordinate map has a pole here");
  return eval_poly(f.num(), x) / d;
}

Rational eval(const RationalFunction& f, const Rational& x) {
  if (f.has_pole_at(x)) throw std::domain_error("coordinate map has a pole at nu = " + x.get_str());
  return f.evaluate(x);
}

}  // namespace

const LambdaFamily& lambda_family() {
  static const LambdaFamily fam = [] {
    LambdaFamily f;
    f.a_of_lambda = L + make_rational(1, 144);
    f.b_of_lambda = make_rational(3, 8) * L - make_rational(1, 1728);
    f.d_of_lambda = L * L * L;
    RationalFunction a3 = pow(f.a_of_lambda, 3);
    f.sigma_of_lambda = a3 / f.d_of_lambda - pow(f.b_of_lambda, 2) / f.d_of_lambda + 1;
    f.pi_of_lambda = a3 / f.d_of_lambda;
    return f;
  }();
  return fam;
}

RationalFunction sigma_closed_form() {
  return 2 - make_rational(23, 192) / L + make_rational(1, 1728) / (L * L);
}

RationalFunction pi_closed_form() { return pow(1 + make_rational(1, 144) / L, 3); }

mpolar::ModularParams params_of_lambda(const Rational& lambda) {
  if (lambda == 0) throw std::domain_error("lambda = 0 is a cusp (d = lambda^3 = 0)");
  const auto& f = lambda_family();
  return {f.a_of_lambda.evaluate(lambda), f.b_of_lambda.evaluate(lambda), f.d_of_lambda.evaluate(lambda)};
}

const CoverTower& cover_tower() {
  static const CoverTower tower = [] {
    CoverTower t;
    const RationalFunction x = RationalFunction::variable();
    t.f1 = -(x * x) + make_rational(1, 256);
    t.f2_in_square = -x + make_rational(1, 16);
    t.f3_squared = make_rational(1, 8) * pow((1 - x * x) / (1 + x * x), 2);
    t.mu_of_nu = compose(t.f2_in_square, t.f3_squared);
    t.lambda_of_nu = compose(t.f1, t.mu_of_nu);
    return t;
  }();
  return tower;
}

RationalFunction lambda_of_nu_closed_form() {
  const RationalFunction x = RationalFunction::variable();
  return make_rational(1, 16) * x * x * pow(1 - x * x, 2) / pow(1 + x * x, 4);
}

Rational lambda_of_nu(const Rational& nu) { return cover_tower().lambda_of_nu.evaluate(nu); }

Complex lambda_of_nu(const Complex& nu) {
  const auto& f = cover_tower().lambda_of_nu;
  Complex d = eval_poly(f.den(), nu);
  if (abs(d) < pow10(-60, nu.precision())) throw std::domain_error("nu^2 + 1 = 0 is a pole (lambda = infinity)");
  return eval_poly(f.num(), nu) / d;
}

Permutation alpha_labels() { return Permutation::parse("(1524)(36)", 6); }
Permutation beta_labels() { return Permutation::parse("(14)(25)(36)", 6); }

namespace {

RationalFunction alpha_map() { return moebius(1, -1, 1, 1); }
RationalFunction beta_map() { return moebius(-1, 0, 0, 1); }

int mod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

std::string DeckElement::word() const {
  if (i == 0 && j == 0) return "id";
  std::string s;
  if (i == 1) s += "a";
  if (i > 1) s += "a^" + std::to_string(i);
  if (j == 1) s += "b";
  return s;
}

DeckElement deck_element(int i, int j) {
  DeckElement e;
  e.i = mod(i, 4);
  e.j = mod(j, 2);
  RationalFunction base = RationalFunction::variable();
  Permutation labels(6);
  for (int k = 0; k < e.i; ++k) {
    base = compose(alpha_map(), base);
    labels = alpha_labels() * labels;
  }
  if (e.j) {
    base = compose(base, beta_map());
    labels = labels * beta_labels();
  }
  e.base_map = base;
  e.label_perm = labels;
  return e;
}

std::vector<DeckElement> deck_group() {
  std::vector<DeckElement> out;
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < 4; ++i) out.push_back(deck_element(i, j));
  }
  return out;
}

DeckElement multiply(const DeckElement& g, const DeckElement& h) {
  // a^i b^j a^k b^l = a^(i +- k) b^(j+l), since b a b = a^-1
  int i = g.i + (g.j ? -h.i : h.i);
  return deck_element(i, g.j + h.j);
}

bool identify_base_map(const RationalFunction& map, int& i, int& j) {
  for (const auto& e : deck_group()) {
    if (e.base_map == map) {
      i = e.i;
      j = e.j;
      return true;
    }
  }
  return false;
}

kodaira::WeierstrassFamily e1_model() {
  const RationalFunction x = RationalFunction::variable();
  return {-(1 + x * x), x * x, RationalFunction()};
}

kodaira::WeierstrassFamily e2_model() {
  auto e1 = e1_model();
  RationalFunction inv = moebius(1, 1, 1, -1);
  return {compose(e1.a2, inv), compose(e1.a4, inv), compose(e1.a6, inv)};
}

RationalFunction j_e1() { return kodaira::j_invariant(e1_model()); }
RationalFunction j_e2() { return kodaira::j_invariant(e2_model()); }

RationalFunction j_e1_closed_form() {
  const RationalFunction x = RationalFunction::variable();
  return make_rational(4, 27) * pow(pow(x, 4) - x * x + 1, 3) /
         (pow(x, 4) * pow(x - 1, 2) * pow(x + 1, 2));
}

std::string to_string(Involution which) {
  switch (which) {
    case Involution::beta: return "beta";
    case Involution::iota: return "iota";
    case Involution::iota_prime: return "iota'";
  }
  return "?";
}

namespace {

template <class T>
T rhs(const KummerPoint<T>& p, const T& one) {
  T m = (p.nu + one) / (p.nu - one);
  return p.s * (p.s - one) * (p.s - m * m) * p.t * (p.t - one) * (p.t - p.nu * p.nu);
}

}  // namespace

Rational kummer_residual(const KummerPoint<Rational>& p) {
  if (p.nu == 1) throw std::domain_error("nu = 1 is a pole of the Kummer model");
  return p.u * p.u - rhs(p, Rational(1));
}

Real kummer_residual(const KummerPoint<Real>& p) {
  return p.u * p.u - rhs(p, Real(1.0, p.nu.precision()));
}

bool on_surface(const KummerPoint<Rational>& p) { return kummer_residual(p) == 0; }

bool on_surface(const KummerPoint<Real>& p) {
  mpfr_prec_t prec = p.nu.precision();
  Real scale = abs(p.u * p.u);
  Real one(1.0, prec);
  if (scale < one) scale = one;
  return abs(kummer_residual(p)) / scale < pow10(-20, prec);
}

CoordinateMap coordinate_map(Involution which) {
  const RationalFunction x = RationalFunction::variable();
  const RationalFunction one(1L);
  switch (which) {
    case Involution::beta: {
      RationalFunction w = (x - 1) / (x + 1);
      return {beta_map(), {0, 1, 2}, {w * w, one, w * w * w}};
    }
    case Involution::iota:
      return {moebius(1, 1, 1, -1), {1, 0, 2}, {one, one, one}};
    case Involution::iota_prime:
      return {alpha_map(), {1, 0, 2}, {1 / (x * x), one, 1 / (x * x * x)}};
  }
  throw std::invalid_argument("unknown involution");
}

CoordinateMap compose(const CoordinateMap& outer, const CoordinateMap& inner) {
  CoordinateMap r;
  r.base = kummer::compose(outer.base, inner.base);
  r.target.resize(3);
  r.scale.resize(3);
  for (std::size_t k = 0; k < 3; ++k) {
    std::size_t via = outer.target[k];
    r.target[k] = inner.target[via];
    r.scale[k] = kummer::compose(outer.scale[k], inner.base) * inner.scale[via];
  }
  return r;
}

namespace {

template <class T, class Eval>
KummerPoint<T> apply_map(const CoordinateMap& m, const KummerPoint<T>& p, Eval eval_at) {
  const T* vars[3] = {&p.s, &p.t, &p.u};
  KummerPoint<T> q{eval_at(m.base, p.nu), p.s, p.t, p.u};
  T* out[3] = {&q.s, &q.t, &q.u};
  for (std::size_t k = 0; k < 3; ++k) {
    *out[k] = eval_at(m.scale[k], p.nu) * *vars[m.target[k]];
  }
  return q;
}

}  // namespace

KummerPoint<Rational> apply_involution(Involution which, const KummerPoint<Rational>& p) {
  return apply_map(coordinate_map(which), p,
                   [](const RationalFunction& f, const Rational& x) { return eval(f, x); });
}

KummerPoint<Real> apply_involution(Involution which, const KummerPoint<Real>& p) {
  return apply_map(coordinate_map(which), p,
                   [](const RationalFunction& f, const Real& x) { return eval(f, x); });
}

bool lift_to_surface(const Rational& nu, const Rational& s, const Rational& t, KummerPoint<Rational>& out) {
  KummerPoint<Rational> p{nu, s, t, Rational(0)};
  Rational r = rhs(p, Rational(1));
  Rational root;
  if (r < 0 || !exact_root(r, 2, root)) return false;
  p.u = root;
  out = p;
  return true;
}

KummerPoint<Real> lift_to_surface(const Real& nu, const Real& s, const Real& t) {
  Real one(1.0, nu.precision());
  KummerPoint<Real> p{nu, s, t, Real(nu.precision())};
  Real r = rhs(p, one);
  if (r.sign() < 0) throw std::domain_error("no real point of the Kummer model over (nu, s, t)");
  p.u = sqrt(r);
  return p;
}

KummerPolynomial kummer_polynomial() {
  const RationalFunction x = RationalFunction::variable();
  RationalFunction m = (x + 1) / (x - 1);
  auto v = [](std::size_t i) { return KummerPolynomial::variable(3, i); };
  auto c = [](const RationalFunction& f) { return KummerPolynomial(3, f); };
  KummerPolynomial s = v(0), t = v(1), u = v(2);
  KummerPolynomial one = c(RationalFunction(1L));
  return u * u - s * (s - one) * (s - c(m * m)) * t * (t - one) * (t - c(x * x));
}

bool preserves_kummer_equation(const CoordinateMap& map, RationalFunction* unit) {
  KummerPolynomial F = kummer_polynomial();
  KummerPolynomial G = F.map_coefficients([&](const RationalFunction& f) { return kummer::compose(f, map.base); })
                           .permute_scale(map.target, map.scale);
  KummerPolynomial::Exponents u2{0, 0, 2};
  RationalFunction k = G.coeff(u2) / F.coeff(u2);
  if (!(G == F.scaled(k))) return false;
  if (unit) *unit = k;
  return true;
}

bool preserves_kummer_equation(Involution which, RationalFunction* unit) {
  return preserves_kummer_equation(coordinate_map(which), unit);
}

}  // namespace kummer::family
