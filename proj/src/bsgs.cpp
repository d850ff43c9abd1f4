#include "rcalab/bsgs.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

#include "rcalab/error.hpp"

namespace rcalab {

BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned k = 2; k <= n; ++k) out *= k;
  return out;
}

namespace {

std::size_t infer_degree(const std::vector<Perm>& gens) {
  if (gens.empty()) throw PreconditionViolation("degree cannot be inferred from an empty generator list");
  return gens.front().degree();
}

// Product replacement random element generator.
class RandomElements {
 public:
  RandomElements(const std::vector<Perm>& gens, std::size_t degree, std::uint64_t seed) : rng_(seed) {
    slots_ = gens;
    while (slots_.size() < 10) slots_.push_back(gens[slots_.size() % gens.size()]);
    acc_ = Perm::identity(degree);
    for (int k = 0; k < 60; ++k) next();
  }

  Perm next() {
    std::uniform_int_distribution<std::size_t> pick(0, slots_.size() - 1);
    std::size_t s = pick(rng_);
    std::size_t t = pick(rng_);
    while (t == s) t = pick(rng_);
    const bool inv = rng_() & 1u;
    const bool left = rng_() & 1u;
    const Perm& other = inv ? slots_[t].inverse() : slots_[t];
    slots_[s] = left ? other * slots_[s] : slots_[s] * other;
    acc_ = acc_ * slots_[s];
    return acc_;
  }

 private:
  std::mt19937_64 rng_;
  std::vector<Perm> slots_;
  Perm acc_;
};

}  // namespace

Bsgs Bsgs::build(std::vector<Perm> generators, const BsgsOptions& options) {
  const std::size_t degree = infer_degree(generators);
  return build(std::move(generators), degree, options);
}

Bsgs Bsgs::build(std::vector<Perm> generators, std::size_t degree, const BsgsOptions& options) {
  for (const auto& g : generators) {
    if (g.degree() != degree) throw WidthMismatch("generators of different degrees");
  }
  Bsgs out;
  out.degree_ = degree;
  out.generators_ = std::move(generators);
  out.base_prefix_ = options.base_prefix;
  for (Point b : out.base_prefix_) {
    if (b >= degree) throw ParameterOutOfRange("base point outside the permutation domain");
  }

  std::vector<Perm> nontrivial;
  for (const auto& g : out.generators_) {
    if (!g.is_identity()) nontrivial.push_back(g);
  }
  if (nontrivial.empty()) {
    out.exact_ = true;
    return out;
  }

  for (const auto& g : nontrivial) {
    auto [residue, level] = out.sift(g);
    if (!residue.is_identity()) out.add_generator(residue, level);
  }

  RandomElements random(nontrivial, degree, options.seed);
  int quiet = 0;
  const BigInt bound = out.upper_bound();
  while (quiet < options.random_rounds) {
    if (out.order() == bound) break;
    auto [residue, level] = out.sift(random.next());
    if (residue.is_identity()) {
      ++quiet;
    } else {
      out.add_generator(residue, level);
      quiet = 0;
    }
  }
  if (out.order() == bound) {
    out.exact_ = true;
  } else if (options.deterministic) {
    out.exact_ = out.complete_deterministically();
  }
  return out;
}

std::pair<Perm, std::size_t> Bsgs::sift(Perm g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Point x = g[levels_[i].base_point];
    if (levels_[i].label[x] == kOutside) return {std::move(g), i};
    g = strip(std::move(g), i, x);
  }
  return {std::move(g), levels_.size()};
}

Perm Bsgs::strip(Perm g, std::size_t level, Point x) const {
  // u_y = u_parent * s, so g * u_y^-1 = (g * s^-1) * u_parent^-1.
  const Level& l = levels_[level];
  if (l.label[x] == kRoot) return g;
  std::vector<Point> cur = g.table();
  while (l.label[x] != kRoot) {
    const Perm& inv = l.inverses[static_cast<std::size_t>(l.label[x])];
    for (auto& y : cur) y = inv[y];
    x = inv[x];
  }
  return Perm(std::move(cur));
}

Point Bsgs::pick_base_point(const Perm& h) const {
  for (Point b : base_prefix_) {
    if (std::find(base_.begin(), base_.end(), b) == base_.end() && h[b] != b) return b;
  }
  for (Point x = 0; x < degree_; ++x) {
    if (h[x] != x) return x;
  }
  throw PreconditionViolation("identity has no moved point");
}

void Bsgs::new_level(Point base_point) {
  Level level;
  level.base_point = base_point;
  level.label.assign(degree_, kOutside);
  level.label[base_point] = kRoot;
  level.depth.assign(degree_, 0);
  level.orbit.push_back(base_point);
  levels_.push_back(std::move(level));
  base_.push_back(base_point);
}

void Bsgs::extend_orbit(Level& level, std::size_t first_new) {
  // Known points only need the new generators; new points need all of them.
  const std::size_t known = level.orbit.size();
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    const Point x = level.orbit[k];
    for (std::size_t s = k < known ? first_new : 0; s < level.gens.size(); ++s) {
      const Point y = level.gens[s][x];
      if (level.label[y] != kOutside) continue;
      level.label[y] = static_cast<int>(s);
      level.depth[y] = level.depth[x] + 1;
      level.max_depth = std::max(level.max_depth, level.depth[y]);
      level.orbit.push_back(y);
    }
  }
  int log_size = 1;
  while ((std::size_t{1} << log_size) < level.orbit.size()) ++log_size;
  if (level.max_depth > 2 * log_size + 2) rebuild_orbit(level);
}

void Bsgs::rebuild_orbit(Level& level) {
  // Breadth-first tree over all generators keeps sifting paths short.
  std::fill(level.label.begin(), level.label.end(), kOutside);
  level.label[level.base_point] = kRoot;
  level.depth[level.base_point] = 0;
  level.max_depth = 0;
  level.orbit.assign(1, level.base_point);
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    const Point x = level.orbit[k];
    for (std::size_t s = 0; s < level.gens.size(); ++s) {
      const Point y = level.gens[s][x];
      if (level.label[y] != kOutside) continue;
      level.label[y] = static_cast<int>(s);
      level.depth[y] = level.depth[x] + 1;
      level.max_depth = std::max(level.max_depth, level.depth[y]);
      level.orbit.push_back(y);
    }
  }
}

void Bsgs::add_generator(const Perm& h, std::size_t level) {
  if (level == levels_.size()) new_level(pick_base_point(h));
  const Perm inv = h.inverse();
  for (std::size_t i = 0; i <= level; ++i) {
    levels_[i].gens.push_back(h);
    levels_[i].inverses.push_back(inv);
    extend_orbit(levels_[i], levels_[i].gens.size() - 1);
  }
}

BigInt Bsgs::order() const {
  BigInt out = 1;
  for (const auto& level : levels_) out *= level.orbit.size();
  return out;
}

BigInt Bsgs::upper_bound() const {
  std::vector<int> seen(degree_, 0);
  BigInt bound = 1;
  bool any_orbit = false;
  for (Point start = 0; start < degree_; ++start) {
    if (seen[start]) continue;
    std::vector<Point> stack{start};
    seen[start] = 1;
    unsigned size = 0;
    while (!stack.empty()) {
      const Point x = stack.back();
      stack.pop_back();
      ++size;
      for (const auto& g : generators_) {
        const Point y = g[x];
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    if (size >= 2) any_orbit = true;
    bound *= factorial(size);
  }
  const bool all_even = std::all_of(generators_.begin(), generators_.end(), [](const Perm& g) { return g.is_even(); });
  if (all_even && any_orbit) bound /= 2;
  return bound;
}

bool Bsgs::complete_deterministically() {
  // Classical Schreier-Sims check from the deepest level upward.
  std::size_t i = levels_.size();
  while (i-- > 0) {
    bool restart = false;
    for (std::size_t oi = 0; oi < levels_[i].orbit.size() && !restart; ++oi) {
      const Point x = levels_[i].orbit[oi];
      const Perm ux = transversal(i, x);
      for (std::size_t si = 0; si < levels_[i].gens.size() && !restart; ++si) {
        const Perm& s = levels_[i].gens[si];
        const Point y = s[x];
        const Perm schreier = strip(ux * s, i, y);
        if (schreier.is_identity()) continue;
        auto [residue, level] = sift(schreier, i + 1);
        if (residue.is_identity()) continue;
        add_generator(residue, level);
        i = level + 1;
        restart = true;
      }
    }
  }
  return true;
}

std::vector<Perm> Bsgs::strong_generators() const {
  std::vector<Perm> out;
  if (!levels_.empty()) out = levels_.front().gens;
  return out;
}

bool Bsgs::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  return sift(g).first.is_identity();
}

Perm Bsgs::transversal(std::size_t level, Point x) const {
  if (levels_.at(level).label.at(x) == kOutside) throw NotInGeneratedGroup("point outside the level orbit");
  return strip(Perm::identity(degree_), level, x).inverse();
}

Perm evaluate(const LetterWord& word, std::span<const Perm> generators, std::size_t degree) {
  Perm out = Perm::identity(degree);
  for (const auto& l : word) {
    const Perm& g = generators[static_cast<std::size_t>(l.generator)];
    out = out * (l.inverse ? g.inverse() : g);
  }
  return out;
}

LetterWord inverse(const LetterWord& word) {
  LetterWord out(word.rbegin(), word.rend());
  for (auto& l : out) l.inverse = !l.inverse;
  return out;
}

namespace {

void append_free(LetterWord& into, const LetterWord& tail) {
  for (const auto& l : tail) {
    if (!into.empty() && into.back().generator == l.generator && into.back().inverse != l.inverse) {
      into.pop_back();
    } else {
      into.push_back(l);
    }
  }
}

}  // namespace

Factorizer::Factorizer(const Bsgs& bsgs, const FactorizerOptions& options)
    : bsgs_(bsgs), length_cap_(options.length_cap) {
  const std::size_t depth = bsgs.depth();
  table_.assign(depth, std::vector<std::optional<Entry>>(bsgs.degree()));
  filled_.assign(depth, 0);
  for (std::size_t i = 0; i < depth; ++i) {
    table_[i][bsgs.base()[i]] = Entry{{}, Perm::identity(bsgs.degree())};
    filled_[i] = 1;
  }
  auto done = [&] {
    for (std::size_t i = 0; i < depth; ++i) {
      if (filled_[i] != bsgs.orbit(i).size()) return false;
    }
    return true;
  };
  if (done()) {
    complete_ = true;
    return;
  }

  const auto& gens = bsgs.generators();
  std::vector<Letter> letters;
  for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
    letters.push_back({g, false});
    if (!gens[static_cast<std::size_t>(g)].is_involution()) letters.push_back({g, true});
  }
  std::vector<Perm> letter_perm;
  for (const auto& l : letters) {
    const Perm& g = gens[static_cast<std::size_t>(l.generator)];
    letter_perm.push_back(l.inverse ? g.inverse() : g);
  }

  // Short words first, breadth-first over freely reduced words.
  std::deque<Entry> frontier{Entry{{}, Perm::identity(bsgs.degree())}};
  std::set<std::vector<Point>> seen{Perm::identity(bsgs.degree()).table()};
  std::uint64_t rounds = 0;
  const std::uint64_t bfs_limit = std::min<std::uint64_t>(options.max_rounds / 4, 200'000);
  while (!frontier.empty() && rounds < bfs_limit && !done()) {
    Entry e = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t k = 0; k < letters.size(); ++k) {
      const Letter l = letters[k];
      if (!e.word.empty() && e.word.back().generator == l.generator && e.word.back().inverse != l.inverse) continue;
      Perm p = e.perm * letter_perm[k];
      if (!seen.insert(p.table()).second) continue;
      LetterWord w = e.word;
      w.push_back(l);
      ++rounds;
      insert(w, p);
      frontier.push_back(Entry{std::move(w), std::move(p)});
    }
  }
  frontier.clear();
  seen.clear();

  // Random words of moderate length, then products of table entries.
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  while (rounds < options.max_rounds && !done()) {
    LetterWord w;
    Perm p = Perm::identity(bsgs.degree());
    const std::size_t len = 8 + rng() % 24;
    for (std::size_t k = 0; k < len; ++k) {
      const std::size_t j = pick(rng);
      w.push_back(letters[j]);
      p = p * letter_perm[j];
    }
    ++rounds;
    insert(std::move(w), std::move(p));
    if (rounds % 64 == 0) {
      // Products of existing entries reach deep stabilizer levels faster.
      std::vector<const Entry*> all;
      for (const auto& level : table_) {
        for (const auto& slot : level) {
          if (slot && !slot->word.empty()) all.push_back(&*slot);
        }
      }
      if (all.size() >= 2) {
        for (int t = 0; t < 16; ++t) {
          const Entry& a = *all[rng() % all.size()];
          const Entry& b = *all[rng() % all.size()];
          LetterWord ab = a.word;
          append_free(ab, b.word);
          insert(std::move(ab), a.perm * b.perm);
        }
      }
    }
  }
  complete_ = done();
}

bool Factorizer::insert(LetterWord word, Perm perm) {
  const auto& base = bsgs_.base();
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (word.size() > length_cap_) return false;
    const Point x = perm[base[i]];
    if (!bsgs_.in_orbit(i, x)) return false;
    auto& slot = table_[i][x];
    if (!slot) {
      slot = Entry{std::move(word), std::move(perm)};
      ++filled_[i];
      return true;
    }
    if (word.size() < slot->word.size()) {
      std::swap(slot->word, word);
      std::swap(slot->perm, perm);
    }
    append_free(word, inverse(slot->word));
    perm = perm * slot->perm.inverse();
    if (perm.is_identity()) return false;
  }
  return false;
}

std::size_t Factorizer::longest_entry() const {
  std::size_t out = 0;
  for (const auto& level : table_) {
    for (const auto& slot : level) {
      if (slot) out = std::max(out, slot->word.size());
    }
  }
  return out;
}

std::size_t Factorizer::length_bound() const {
  std::size_t out = 0;
  for (const auto& level : table_) {
    std::size_t longest = 0;
    for (const auto& slot : level) {
      if (slot) longest = std::max(longest, slot->word.size());
    }
    out += longest;
  }
  return out;
}

std::optional<LetterWord> Factorizer::factorize(const Perm& g) const {
  if (!complete_) throw BudgetExceeded("factorization table is incomplete");
  if (g.degree() != bsgs_.degree()) return std::nullopt;
  const auto& base = bsgs_.base();
  Perm rest = g;
  std::vector<const LetterWord*> pieces;
  for (std::size_t i = 0; i < table_.size(); ++i) {
    const Point x = rest[base[i]];
    const auto& slot = table_[i][x];
    if (!slot) return std::nullopt;
    pieces.push_back(&slot->word);
    rest = rest * slot->perm.inverse();
  }
  if (!rest.is_identity()) return std::nullopt;
  // g = T_k ... T_1 in left-first order.
  LetterWord out;
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) append_free(out, **it);
  return out;
}

std::optional<std::uint64_t> closure_order(std::span<const Perm> generators, std::uint64_t limit) {
  if (generators.empty()) return 1;
  const std::size_t degree = generators.front().degree();
  std::set<std::vector<Point>> seen{Perm::identity(degree).table()};
  std::deque<Perm> queue{Perm::identity(degree)};
  while (!queue.empty()) {
    Perm p = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      Perm q = p * g;
      if (seen.insert(q.table()).second) {
        if (seen.size() > limit) return std::nullopt;
        queue.push_back(std::move(q));
      }
    }
  }
  return seen.size();
}

}  // namespace rcalab
