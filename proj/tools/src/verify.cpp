#include "kummer_app/verify.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "kummer/factor.hpp"
#include "kummer/family.hpp"
#include "kummer/hodge.hpp"
#include "kummer/hurwitz.hpp"
#include "kummer/kodaira.hpp"
#include "kummer/monodromy.hpp"
#include "kummer/mpolar.hpp"

namespace kummer::app {

bool Criterion::passed() const {
  if (checks.empty()) return false;
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;
using hurwitz::BranchData;
using hurwitz::MarkKind;

const RationalFunction v = RationalFunction::variable();

std::string ints(const std::vector<int>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "]";
}

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f s", s);
  return buf;
}

class Recorder {
 public:
  explicit Recorder(Criterion& c) : c_(c), t0_(Clock::now()) {}

  void check(const std::string& name, bool ok, const std::string& expected, const std::string& actual) {
    c_.checks.push_back({name, ok, expected, actual});
  }
  void same(const std::string& name, const std::string& expected, const std::string& actual) {
    check(name, expected == actual, expected, actual);
  }
  void same(const std::string& name, long long expected, long long actual) {
    check(name, expected == actual, std::to_string(expected), std::to_string(actual));
  }
  void identity(const std::string& name, const RationalFunction& lhs, const RationalFunction& rhs) {
    check(name, lhs == rhs, rhs.to_string("v"), lhs == rhs ? "equal" : lhs.to_string("v"));
  }
  double elapsed() const { return std::chrono::duration<double>(Clock::now() - t0_).count(); }
  void time_limit(double limit) {
    double t = elapsed();
    check("time", t < limit, "< " + secs(limit), secs(t));
  }

 private:
  Criterion& c_;
  Clock::time_point t0_;
};

void tower_identity(Recorder& r) {
  const auto& t = family::cover_tower();
  RationalFunction composed = compose(t.f1, compose(t.f2_in_square, t.f3_squared));
  RationalFunction nu2 = v * v;
  RationalFunction expected = make_rational(1, 16) * nu2 * pow(1 - nu2, 2) / pow(1 + nu2, 4);
  r.identity("f1 o f2 o f3", composed, expected);
  r.identity("library closed form", family::lambda_of_nu_closed_form(), expected);
  r.time_limit(1.0);
}

void e1_fibres(Recorder& r) {
  auto fibres = kodaira::classify(family::e1_model());
  std::map<std::string, std::string> got;
  for (const auto& f : fibres) got[f.place.to_string("v")] = f.name();
  std::map<std::string, std::string> want{{"v - 1", "I2"}, {"v + 1", "I2"}, {"v", "I4"}, {"inf", "I4"}};
  auto show = [](const std::map<std::string, std::string>& m) {
    std::string s;
    for (const auto& [k, t] : m) s += (s.empty() ? "" : ", ") + t + " at " + k;
    return s;
  };
  r.same("singular fibres", show(want), show(got));

  RationalFunction j = family::j_e1();
  for (const auto& f : fibres) {
    r.same("ord j at " + f.place.to_string("v"), -f.n, order_at(j, f.place));
  }
  Place j0 = Place::finite(Polynomial({1, 0, -1, 0, 1}));
  r.same("ord j at v^4 - v^2 + 1", 3, order_at(j, j0));
  int zero_degree = 0;
  for (const auto& [p, k] : divisor(j)) {
    if (k > 0) zero_degree += p.degree();
  }
  r.same("degree of j = 0 places", 4, zero_degree);

  RationalFunction j1 = j - 1;
  int one_degree = 0;
  bool all_double = true;
  for (const auto& [p, k] : divisor(j1)) {
    if (k > 0) {
      one_degree += p.degree();
      all_double = all_double && k == 2;
    }
  }
  r.same("degree of j = 1 places", 6, one_degree);
  r.check("ord (j - 1) at j = 1 places", all_double, "2", all_double ? "2" : "not all 2");
  r.time_limit(1.0);
}

void j_formula(Recorder& r) {
  auto c = kodaira::c_invariants(family::e1_model());
  RationalFunction from_c = pow(c.c4, 3) / (1728 * c.delta);
  RationalFunction w = pow(v, 4) - v * v + 1;
  RationalFunction expected =
      make_rational(4, 27) * pow(w, 3) / (pow(v, 4) * pow(v - 1, 2) * pow(v + 1, 2));
  r.identity("c4^3 / (1728 Delta) of E1", from_c, expected);
  r.identity("library j(E1)", family::j_e1(), expected);
}

void delta_identity(Recorder& r) {
  using B = mpolar::BivariateQ;
  B a = B::variable(2, 0), b = B::variable(2, 1), one(2, Rational(1));
  B a3 = a * a * a;
  B product = (a3 - (b - one) * (b - one)) * (a3 - (b + one) * (b + one));
  B sigma = a3 - b * b + one;
  B pi = a3;
  r.check("sigma(a,b) = a^3 - b^2 + 1", mpolar::sigma_polynomial() == sigma, "equal",
          mpolar::sigma_polynomial() == sigma ? "equal" : "differs");
  r.check("pi(a,b) = a^3", mpolar::pi_polynomial() == pi, "equal", mpolar::pi_polynomial() == pi ? "equal" : "differs");
  B lhs = sigma * sigma - pi.scaled(Rational(4));
  r.check("sigma^2 - 4 pi = (a^3-(b-1)^2)(a^3-(b+1)^2)", lhs == product, "equal", lhs == product ? "equal" : "differs");
}

void cross_family(Recorder& r) {
  const auto& l = family::cover_tower().lambda_of_nu;
  RationalFunction sigma = compose(family::sigma_closed_form(), l);
  RationalFunction pi = compose(family::pi_closed_form(), l);
  r.identity("j(E1) + j(E2) = sigma(lambda(nu))", family::j_e1() + family::j_e2(), sigma);
  r.identity("j(E1) j(E2) = pi(lambda(nu))", family::j_e1() * family::j_e2(), pi);
  const auto& f = family::lambda_family();
  r.identity("family sigma matches closed form", f.sigma_of_lambda, family::sigma_closed_form());
  r.identity("family pi matches closed form", f.pi_of_lambda, family::pi_closed_form());
}

void puncture_monodromy(Recorder& r) {
  using namespace monodromy;
  TrackOptions opt;
  PunctureTable t = puncture_table(opt);
  r.same("cycle type around 0", "[2,2,2]", ints(t.zero.perm.cycle_type()));
  r.check("around 0 swaps the triples", swaps_triples(t.zero.perm), "yes", swaps_triples(t.zero.perm) ? "yes" : "no");
  r.same("cycle type around 1/256", "[2,1,1,1,1]", ints(t.quarter.perm.cycle_type()));
  r.check("around 1/256 stays within a triple", within_triples(t.quarter.perm), "yes",
          within_triples(t.quarter.perm) ? "yes" : "no");
  r.same("cycle type around inf", "[4,2]", ints(t.infinity.perm.cycle_type()));
  r.check("ordered product is the identity", t.product_is_identity, "yes", t.product_is_identity ? "yes" : "no");
  r.same("around 0, relabeled", "(14)(25)(36)", to_reference_labels(t.zero.perm).to_string());
  r.same("around 1/256, relabeled", "(12)", to_reference_labels(t.quarter.perm).to_string());
  r.same("around inf, relabeled", "(1524)(36)", to_reference_labels(t.infinity.perm).to_string());

  TrackOptions half = opt;
  half.step_scale = opt.step_scale / 2;
  PunctureTable h = puncture_table(half);
  bool stable = h.zero.perm == t.zero.perm && h.quarter.perm == t.quarter.perm && h.infinity.perm == t.infinity.perm;
  r.check("stable under halved steps", stable, "same permutations",
          h.zero.perm.to_string() + " " + h.quarter.perm.to_string() + " " + h.infinity.perm.to_string());
  r.time_limit(30.0);
}

void deck_group(Recorder& r) {
  auto g = family::deck_group();
  r.same("deck group size", 8, static_cast<long long>(g.size()));
  int bad = 0;
  for (const auto& x : g) {
    for (const auto& y : g) {
      auto xy = family::multiply(x, y);
      int i = -1, j = -1;
      bool ok = xy.base_map == compose(x.base_map, y.base_map) && xy.label_perm == x.label_perm * y.label_perm &&
                family::identify_base_map(compose(x.base_map, y.base_map), i, j) && i == xy.i && j == xy.j;
      if (!ok) ++bad;
    }
  }
  r.same("multiplication table mismatches", 0, bad);
  std::set<std::string> maps;
  for (const auto& x : g) maps.insert(x.base_map.to_string("v"));
  r.same("distinct base maps", 8, static_cast<long long>(maps.size()));
  const auto& l = family::cover_tower().lambda_of_nu;
  int moved = 0;
  for (const auto& x : g) {
    if (!(compose(l, x.base_map) == l)) ++moved;
  }
  r.same("elements not preserving lambda", 0, moved);
  auto a = family::deck_element(1, 0), b = family::deck_element(0, 1);
  r.same("alpha labels", "(1524)(36)", a.label_perm.to_string());
  r.same("beta labels", "(14)(25)(36)", b.label_perm.to_string());
  r.identity("alpha base map", a.base_map, (v - 1) / (v + 1));
  r.identity("beta base map", b.base_map, -v);
}

void kummer_involutions(Recorder& r) {
  using family::Involution;
  for (auto which : {Involution::beta, Involution::iota, Involution::iota_prime}) {
    RationalFunction unit;
    bool ok = family::preserves_kummer_equation(which, &unit);
    r.check(family::to_string(which) + " preserves the Kummer equation", ok, "F o map = unit * F",
            ok ? "unit " + unit.to_string("v") : "not a multiple of F");
  }
  for (auto which : {Involution::beta, Involution::iota}) {
    auto m = family::coordinate_map(which);
    auto mm = family::compose(m, m);
    bool id = mm.base == v;
    for (std::size_t k = 0; k < mm.target.size(); ++k) id = id && mm.target[k] == k && mm.scale[k] == RationalFunction(1L);
    r.check(family::to_string(which) + " squared", id, "identity", id ? "identity" : "not the identity");
  }
}

void c2_data(Recorder& r) {
  auto c = hurwitz::c2_components();
  std::vector<int> degrees, genera;
  for (const auto& x : c) {
    degrees.push_back(static_cast<int>(x.degree));
    genera.push_back(hurwitz::genus(x));
  }
  r.same("component degrees", "[2,2,4]", ints(degrees));
  r.same("component genera", "[0,0,0]", ints(genera));
  for (int i = 0; i < 2; ++i) {
    std::string got = ints(c[i].at(MarkKind::quarter256).cycle_type()) + " " +
                      ints(c[i].at(MarkKind::infinity).cycle_type()) + " " + ints(c[i].at(MarkKind::zero).cycle_type());
    r.same("profiles of degree 2 component " + std::to_string(i + 1) + " (1/256, inf, 0)", "[1,1] [2] [2]", got);
  }
  std::string got = ints(c[2].at(MarkKind::quarter256).cycle_type()) + " " +
                    ints(c[2].at(MarkKind::infinity).cycle_type()) + " " + ints(c[2].at(MarkKind::zero).cycle_type());
  r.same("profiles of degree 4 component (1/256, inf, 0)", "[2,1,1] [4] [2,2]", got);
  auto found = hurwitz::search_tuples({4, {2, 2}, {4}, {2, 1, 1}, 0}, 100);
  r.check("S4 search complete", !found.truncated, "complete", found.truncated ? "truncated" : "complete");
  r.same("degree 4 tuples up to conjugation", 1, static_cast<long long>(found.covers.size()));
  if (found.covers.size() == 1) {
    bool eq = hurwitz::equivalent(found.covers[0], c[2]);
    r.check("found tuple matches the component", eq, "equivalent", eq ? "equivalent" : "different");
  }
  r.time_limit(5.0);
}

void outcome_checks(Recorder& r, const hodge::CYReport& rep, int s, const std::vector<int>& genera, int h11, int h21,
                    int euler) {
  r.check("calabi-yau", rep.cy, "yes", rep.cy ? "yes" : "no");
  r.same("outcomes", 1, static_cast<long long>(rep.outcomes.size()));
  if (rep.outcomes.empty()) return;
  const auto& o = rep.outcomes.front();
  r.same("s", s, o.s);
  r.same("genera of C_g", ints(genera), ints(o.genera));
  r.same("h11", h11, o.h11.value_or(-1));
  r.same("h21", h21, o.h21.value_or(-1));
  r.same("e", euler, o.euler.value_or(-1));
}

void quintic(Recorder& r) {
  BranchData b{5, {5}, {4, 1}, {1, 1, 1, 1, 1}, 1};
  auto rep = hodge::analyze(b);
  r.check("search complete", !rep.search_truncated, "complete", rep.search_truncated ? "truncated" : "complete");
  outcome_checks(r, rep, 3, {0, 0, 2}, 59, 3, 112);
  r.time_limit(60.0);
}

void y2prime(Recorder& r) {
  auto g = hurwitz::regular_d8_cover();
  auto rep = hodge::analyze(g);
  r.same("branch data", "(4,2,4,8,0) x=[2,2,2,2] y=[4,4] z=[2,2,2,2]", rep.data.to_string());
  auto k = hodge::reference_constants();
  outcome_checks(r, rep, 8, std::vector<int>(8, 0), k.h11_y2prime, k.h21_y2prime, k.euler_y2prime);
  if (!rep.outcomes.empty() && rep.outcomes[0].euler) {
    const auto& o = rep.outcomes[0];
    r.same("e = 2 (h11 - h21)", 2 * (*o.h11 - *o.h21), *o.euler);
  }
  r.time_limit(60.0);
}

void constants(Recorder& r) {
  auto k = hodge::reference_constants();
  r.same("e(A2)", 64, k.euler_a2);
  r.same("h11(A2)", 32, k.h11_a2);
  r.same("h21(A2)", 0, k.h21_a2);
  r.same("e(Y2')", 80, k.euler_y2prime);
  r.same("e(A2) = 2 (h11 - h21)", 2 * (k.h11_a2 - k.h21_a2), k.euler_a2);
  r.same("e(Y2') = 2 (h11 - h21)", 2 * (k.h11_y2prime - k.h21_y2prime), k.euler_y2prime);
}

Permutation random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_images(img);
}

void properties(Recorder& r) {
  long cases = 0, mismatches = 0;
  for (int n = 1; n <= 8; ++n) {
    auto parts = hodge::partitions(n);
    for (const auto& x : parts) {
      for (const auto& y : parts) {
        for (const auto& z : parts) {
          for (int rr = 0; rr <= 2 * n; ++rr) {
            BranchData b{n, x, y, z, rr};
            if (hodge::degree_condition(b) != (2 * n - 2 == b.ramification())) ++mismatches;
            bool cy = hodge::cy_condition(b);
            bool admissible_y = (y.size() == 2 && y[0] <= 4 && y[0] != 3 && y[1] != 3) || (y.size() == 1 && y[0] == 8);
            if (cy != (admissible_y && 2 * n - 2 == b.ramification())) ++mismatches;
            ++cases;
          }
        }
      }
    }
  }
  r.same("CY condition vs Riemann-Hurwitz over n <= 8 (" + std::to_string(cases) + " data)", 0, mismatches);

  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> deg(1, 6);
  int bad = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto d = static_cast<std::size_t>(deg(rng)), n = static_cast<std::size_t>(deg(rng));
    auto cover_of = [&](std::size_t k) {
      Permutation q = random_perm(k, rng), inf = random_perm(k, rng);
      return hurwitz::make_cover(k, q, inf, (inf * q).inverse());
    };
    auto a = cover_of(d), g = cover_of(n);
    auto reps = hurwitz::pullback(a, g);
    std::size_t total = 0;
    bool ok = true;
    for (const auto& c : reps) {
      total += c.degree;
      ok = ok && c.genus >= 0;
    }
    ok = ok && total == d * n;
    for (MarkKind k : {MarkKind::quarter256, MarkKind::infinity, MarkKind::zero}) {
      std::map<int, int> want, got;
      for (int la : a.at(k).cycle_type()) {
        for (int lb : g.at(k).cycle_type()) want[std::lcm(la, lb)] += std::gcd(la, lb);
      }
      for (const auto& c : reps) {
        for (const auto& mp : c.profiles) {
          if (mp.mark.kind == k) {
            for (int len : mp.profile) ++got[len];
          }
        }
      }
      ok = ok && want == got;
    }
    if (!ok) ++bad;
  }
  r.same("pullback accounting failures on 100 random covers", 0, bad);

  std::uniform_int_distribution<long> dist(-200, 200);
  int vieta_bad = 0;
  for (int i = 0; i < 100; ++i) {
    mpolar::SigmaPi sp{make_rational(dist(rng), 1 + (dist(rng) + 200) % 9),
                       make_rational(dist(rng), 1 + (dist(rng) + 200) % 11)};
    auto [j1, j2] = mpolar::j_pair(sp);
    if (!(j1 + j2 == mpolar::QuadraticSurd(sp.sigma)) || !(j1 * j2 == mpolar::QuadraticSurd(sp.pi))) ++vieta_bad;
  }
  r.same("Vieta failures on 100 random (sigma, pi)", 0, vieta_bad);

  monodromy::TrackOptions base, quarter;
  quarter.step_scale = 0.25;
  auto t1 = monodromy::puncture_table(base);
  auto t2 = monodromy::puncture_table(quarter);
  bool stable = t1.zero.perm == t2.zero.perm && t1.quarter.perm == t2.quarter.perm &&
                t1.infinity.perm == t2.infinity.perm;
  r.check("monodromy stable at a quarter of the step", stable, "same permutations", stable ? "same permutations" : "differ");
}

struct Entry {
  const char* title;
  void (*run)(Recorder&);
};

const Entry entries[criterion_count] = {
    {"tower identity", tower_identity},
    {"elliptic fibres of E1", e1_fibres},
    {"j-invariant formula", j_formula},
    {"sigma^2 - 4 pi factorization", delta_identity},
    {"cross-family Vieta identities", cross_family},
    {"puncture monodromy", puncture_monodromy},
    {"deck group D8", deck_group},
    {"Kummer involutions", kummer_involutions},
    {"C2 components", c2_data},
    {"quintic mirror example", quintic},
    {"Y2' example", y2prime},
    {"Hodge constants", constants},
    {"property suites", properties},
};

}  // namespace

Criterion run_criterion(int id) {
  if (id < 1 || id > criterion_count) throw std::out_of_range("criterion id " + std::to_string(id));
  const Entry& e = entries[id - 1];
  Criterion c;
  c.id = id;
  c.title = e.title;
  Recorder r(c);
  try {
    e.run(r);
  } catch (const std::exception& ex) {
    r.check("exception", false, "none", ex.what());
  }
  c.seconds = r.elapsed();
  return c;
}

std::vector<Criterion> run_all(const std::function<void(const Criterion&)>& on_done) {
  std::vector<Criterion> out;
  for (int id = 1; id <= criterion_count; ++id) {
    out.push_back(run_criterion(id));
    if (on_done) on_done(out.back());
  }
  return out;
}

}  // namespace kummer::app
