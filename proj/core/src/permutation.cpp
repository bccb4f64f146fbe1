#include "kummer/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace kummer {

Permutation::Permutation(std::size_t n) : image_(n) { std::iota(image_.begin(), image_.end(), 0); }

Permutation Permutation::from_images(const std::vector<int>& images) {
  Permutation p(images.size());
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    int v = images[i] - 1;
    if (v < 0 || v >= static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("image list is not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
    p.image_[i] = v;
  }
  return p;
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles) {
  Permutation p(n);
  std::vector<bool> used(n, false);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      int a = c[k];
      if (a < 1 || a > static_cast<int>(n)) {
        throw std::invalid_argument("cycle entry " + std::to_string(a) + " outside 1.." + std::to_string(n));
      }
      if (used[static_cast<std::size_t>(a - 1)]) {
        throw std::invalid_argument("point " + std::to_string(a) + " repeated in cycles");
      }
      used[static_cast<std::size_t>(a - 1)] = true;
      int b = c[(k + 1) % c.size()];
      p.image_[static_cast<std::size_t>(a - 1)] = b - 1;
    }
  }
  return p;
}

Permutation Permutation::parse(std::string_view text, std::size_t n) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i < text.size() && (text.substr(i) == "id" || text.substr(i) == "e")) return Permutation(n);
  while (i < text.size()) {
    if (text[i] != '(') {
      throw std::invalid_argument("expected '(' in cycle notation \"" + std::string(text) + "\"");
    }
    ++i;
    std::vector<std::string> tokens;
    std::string cur;
    bool separated = false;
    while (i < text.size() && text[i] != ')') {
      char ch = text[i];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        cur += ch;
      } else if (ch == ' ' || ch == ',' || ch == '\t') {
        separated = true;
        if (!cur.empty()) tokens.push_back(cur);
        cur.clear();
      } else {
        throw std::invalid_argument("unexpected character '" + std::string(1, ch) + "' in cycle notation");
      }
      ++i;
    }
    if (i == text.size()) throw std::invalid_argument("unterminated cycle in \"" + std::string(text) + "\"");
    ++i;
    if (!cur.empty()) tokens.push_back(cur);
    std::vector<int> cycle;
    if (!separated && tokens.size() == 1) {
      for (char ch : tokens[0]) cycle.push_back(ch - '0');
    } else {
      for (auto& t : tokens) cycle.push_back(std::stoi(t));
    }
    if (!cycle.empty()) cycles.push_back(cycle);
    skip_ws();
  }
  return from_cycles(n, cycles);
}

int Permutation::operator()(int i) const {
  if (i < 1 || i > static_cast<int>(image_.size())) throw std::out_of_range("permutation point");
  return image_[static_cast<std::size_t>(i - 1)] + 1;
}

Permutation Permutation::inverse() const {
  Permutation r(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) r.image_[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      c.push_back(static_cast<int>(j) + 1);
      j = static_cast<std::size_t>(image_[j]);
    }
    if (c.size() > 1) out.push_back(c);
  }
  return out;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> out;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(image_[j])) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

int Permutation::sign() const {
  int s = 1;
  for (int len : cycle_type()) {
    if (len % 2 == 0) s = -s;
  }
  return s;
}

std::size_t Permutation::order() const {
  std::size_t o = 1;
  for (int len : cycle_type()) o = std::lcm(o, static_cast<std::size_t>(len));
  return o;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  bool compact = image_.size() <= 9;
  std::string s;
  for (const auto& c : cs) {
    s += "(";
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k && !compact) s += " ";
      s += std::to_string(c[k]);
    }
    s += ")";
  }
  return s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("composing permutations of different degree");
  Permutation r(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) {
    r.image_[i] = a.image_[static_cast<std::size_t>(b.image_[i])];
  }
  return r;
}

Permutation conjugate(const Permutation& p, const Permutation& r) { return r * p * r.inverse(); }

std::vector<std::vector<int>> orbits(const std::vector<Permutation>& gens, std::size_t n) {
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    std::vector<int> orbit;
    std::vector<std::size_t> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      orbit.push_back(static_cast<int>(x) + 1);
      for (const auto& g : gens) {
        std::size_t y = static_cast<std::size_t>(g.images0()[x]);
        if (comp[y] < 0) {
          comp[y] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(orbit);
  }
  return out;
}

bool is_transitive(const std::vector<Permutation>& gens, std::size_t n) {
  return n == 0 || orbits(gens, n).size() == 1;
}

std::size_t group_order(const std::vector<Permutation>& gens, std::size_t n, std::size_t max_elements) {
  std::set<Permutation> seen{Permutation(n)};
  std::vector<Permutation> frontier{Permutation(n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier) {
      for (const auto& g : gens) {
        Permutation q = g * p;
        if (seen.insert(q).second) {
          if (seen.size() > max_elements) throw std::length_error("group closure exceeded element budget");
          next.push_back(q);
        }
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

std::string partition_to_string(const std::vector<int>& parts) {
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + "]";
}

}  // namespace kummer
