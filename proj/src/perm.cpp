#include "rcalab/perm.hpp"

#include <numeric>
#include <sstream>

#include "rcalab/error.hpp"

namespace rcalab {

Perm::Perm(std::vector<Point> table) : table_(std::move(table)) {
  std::vector<bool> hit(table_.size(), false);
  for (Point y : table_) {
    if (y >= table_.size() || hit[y]) throw ParameterOutOfRange("permutation table is not a bijection");
    hit[y] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<Point> t(degree);
  std::iota(t.begin(), t.end(), Point{0});
  Perm p;
  p.table_ = std::move(t);
  return p;
}

Perm Perm::from_cycles(std::size_t degree, std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<std::vector<Point>> cs;
  for (auto c : cycles) cs.emplace_back(c);
  return from_cycles(degree, cs);
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> t(degree);
  std::iota(t.begin(), t.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] >= degree || used[c[k]]) throw ParameterOutOfRange("cycles must be disjoint and in range");
      used[c[k]] = true;
      t[c[k]] = c[(k + 1) % c.size()];
    }
  }
  return Perm(std::move(t));
}

int Perm::width() const {
  if (!is_bit_perm()) throw WidthMismatch("permutation degree " + std::to_string(degree()) + " is not a power of two");
  int k = 0;
  while ((std::size_t{1} << k) < degree()) ++k;
  return k;
}

bool Perm::is_bit_perm() const { return degree() > 0 && (degree() & (degree() - 1)) == 0; }

Perm Perm::inverse() const {
  std::vector<Point> t(table_.size());
  for (Point x = 0; x < table_.size(); ++x) t[table_[x]] = x;
  Perm p;
  p.table_ = std::move(t);
  return p;
}

bool Perm::is_identity() const {
  for (Point x = 0; x < table_.size(); ++x) {
    if (table_[x] != x) return false;
  }
  return true;
}

bool Perm::is_involution() const {
  for (Point x = 0; x < table_.size(); ++x) {
    if (table_[table_[x]] != x) return false;
  }
  return true;
}

bool Perm::is_even() const {
  std::size_t transpositions = 0;
  for (const auto& c : cycles()) transpositions += c.size() - 1;
  return transpositions % 2 == 0;
}

std::vector<Point> Perm::support() const {
  std::vector<Point> out;
  for (Point x = 0; x < table_.size(); ++x) {
    if (table_[x] != x) out.push_back(x);
  }
  return out;
}

std::vector<std::vector<Point>> Perm::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(table_.size(), false);
  for (Point x = 0; x < table_.size(); ++x) {
    if (seen[x] || table_[x] == x) continue;
    std::vector<Point> c;
    for (Point y = x; !seen[y]; y = table_[y]) {
      seen[y] = true;
      c.push_back(y);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::uint64_t Perm::order() const {
  std::uint64_t acc = 1;
  for (const auto& c : cycles()) {
    std::uint64_t len = c.size();
    std::uint64_t g = std::gcd(acc, len);
    if (acc / g > UINT64_MAX / len) return UINT64_MAX;
    acc = acc / g * len;
  }
  return acc;
}

Perm Perm::power(long long exponent) const {
  Perm base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-exponent) : static_cast<unsigned long long>(exponent);
  Perm acc = identity(degree());
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::string Perm::to_string() const {
  std::ostringstream os;
  auto cs = cycles();
  if (cs.empty()) return "()";
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
    os << ')';
  }
  return os.str();
}

Perm operator*(const Perm& first, const Perm& second) {
  if (first.degree() != second.degree()) throw WidthMismatch("product of permutations of different degree");
  std::vector<Point> t(first.degree());
  for (Point x = 0; x < t.size(); ++x) t[x] = second.table_[first.table_[x]];
  Perm p;
  p.table_ = std::move(t);
  return p;
}

Perm commutator(const Perm& a, const Perm& b) { return a.inverse() * b.inverse() * a * b; }

Perm conjugate(const Perm& a, const Perm& by) { return by.inverse() * a * by; }

Perm embed(const Perm& gate, int outer_width, int offset) {
  const int k = gate.width();
  if (offset < 0 || offset + k > outer_width) throw WidthMismatch("gate does not fit in the outer window");
  const int low = outer_width - offset - k;  // bits to the right of the gate
  const Point mask = ((Point{1} << k) - 1) << low;
  std::vector<Point> t(std::size_t{1} << outer_width);
  for (Point x = 0; x < t.size(); ++x) {
    const Point inner = (x & mask) >> low;
    t[x] = (x & ~mask) | (gate[inner] << low);
  }
  return Perm(std::move(t));
}

Perm mirrored(const Perm& gate) {
  const int k = gate.width();
  auto rev = [k](Point x) {
    Point r = 0;
    for (int b = 0; b < k; ++b) r |= ((x >> b) & 1u) << (k - 1 - b);
    return r;
  };
  std::vector<Point> t(gate.degree());
  for (Point x = 0; x < t.size(); ++x) t[x] = rev(gate[rev(x)]);
  return Perm(std::move(t));
}

namespace gates {
Perm bit_not() { return Perm({1, 0}); }
Perm cnot() { return Perm({0, 1, 3, 2}); }
Perm toffoli() { return Perm({0, 1, 2, 3, 4, 5, 7, 6}); }
Perm bit_swap() { return Perm({0, 2, 1, 3}); }
}  // namespace gates

}  // namespace rcalab
