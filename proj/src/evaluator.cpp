#include "rcalab/evaluator.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <unordered_set>

namespace rcalab {

namespace {

constexpr int kMaxBlockBits = 16;

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct NormalizedCtrl {
  bool doubled;
  long long window_shift;  // after moving all shifts to the end
  const Perm* perm;
};

struct Normalized {
  std::vector<NormalizedCtrl> ctrls;
  long long shift = 0;
};

Normalized normalize(std::span<const Factor> product, const Word& w) {
  const Word ww = w.doubled();
  Normalized out;
  for (const auto& f : product) {
    if (const auto* s = std::get_if<ShiftPower>(&f)) {
      out.shift += s->power;
      continue;
    }
    const auto& d = std::get<CtrlDescriptor>(f);
    bool doubled;
    if (d.control == w) {
      doubled = false;
    } else if (d.control == ww) {
      doubled = true;
    } else {
      throw UnsupportedFactor("control '" + d.control.to_string() + "' is neither w nor ww for w = " + w.to_string());
    }
    if (d.width() > w.length()) throw UnsupportedFactor("window wider than l");
    out.ctrls.push_back({doubled, d.window_shift() - out.shift, &d.perm});
  }
  return out;
}

std::vector<bool> valid_bases(const Normalized& n, int ell) {
  std::vector<bool> ok(static_cast<std::size_t>(ell), true);
  for (int base = 0; base < ell; ++base) {
    for (const auto& c : n.ctrls) {
      const long long rel = c.window_shift - base;
      const long long r = rel - floor_div(rel, ell) * ell;
      if (r + c.perm->width() > ell) {
        ok[static_cast<std::size_t>(base)] = false;
        break;
      }
    }
  }
  return ok;
}

void apply_gate(std::vector<Point>& table, const Perm& gate, int ell, int r) {
  const int k = gate.width();
  const int low = ell - r - k;
  const Point mask = ((Point{1} << k) - 1) << low;
  for (auto& y : table) y = (y & ~mask) | (gate[(y & mask) >> low] << low);
}

// All subsets of `positions` that contain 0.
std::vector<std::set<long long>> patterns(const std::set<long long>& positions) {
  std::vector<long long> free;
  for (auto p : positions) {
    if (p != 0) free.push_back(p);
  }
  std::vector<std::set<long long>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    std::set<long long> s{0};
    for (std::size_t k = 0; k < free.size(); ++k) {
      if (mask >> k & 1) s.insert(free[k]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

PeriodicConfig shift_track(const PeriodicConfig& x, int track, long long power) {
  const Alphabet& a = x.alphabet();
  std::vector<Symbol> cells = x.cells();
  for (int j = 0; j < x.period(); ++j) {
    cells[static_cast<std::size_t>(j)] =
        a.with_component(cells[static_cast<std::size_t>(j)], track, a.component(x.at(j + power), track));
  }
  return PeriodicConfig(a, std::move(cells));
}

// B row of length `period` with occurrences of w exactly at `positions`.
std::optional<std::vector<int>> realize_occurrences(const Word& w, const std::set<long long>& positions, int period,
                                                    std::mt19937_64& rng, int attempts) {
  const int ell = w.length();
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<int> row(static_cast<std::size_t>(period));
    for (auto& c : row) c = attempt == 0 ? 0 : attempt == 1 ? 1 : static_cast<int>(rng() & 1u);
    for (auto p : positions) {
      for (int k = 0; k < ell; ++k) row[static_cast<std::size_t>((p + k) % period)] = w[k];
    }
    auto hits = cyclic_occurrences(w, row);
    if (std::set<long long>(hits.begin(), hits.end()) == positions) return row;
  }
  return std::nullopt;
}

bool differs(std::span<const Factor> lhs, std::span<const Factor> rhs, const PeriodicConfig& x) {
  try {
    return !(simulate(lhs, x) == simulate(rhs, x));
  } catch (const OverlappingWindows&) {
    return false;
  }
}

// Random periodic points with planted occurrences of w, including ww runs.
std::optional<PeriodicConfig> random_witness(std::span<const Factor> lhs, std::span<const Factor> rhs, const Word& w,
                                             int span_hint, const EvaluatorOptions& options, std::mt19937_64& rng) {
  const int ell = w.length();
  const Alphabet alphabet = Alphabet::binary_tracks(2);
  for (int attempt = 0; attempt < options.witness_attempts; ++attempt) {
    const int period = std::max(span_hint, 6 * ell) + static_cast<int>(rng() % static_cast<unsigned>(2 * ell + 1));
    std::set<long long> occ;
    long long pos = static_cast<long long>(rng() % static_cast<unsigned>(ell));
    while (pos + ell <= period - ell) {
      occ.insert(pos);
      pos += ell + ((rng() & 1u) ? 0 : static_cast<long long>(rng() % static_cast<unsigned>(ell + 1)));
    }
    auto row = realize_occurrences(w, occ, period, rng, 20);
    if (!row) continue;
    std::vector<int> target(static_cast<std::size_t>(period));
    for (auto& c : target) c = static_cast<int>(rng() & 1u);
    auto x = PeriodicConfig::from_tracks(alphabet, {*row, target});
    if (differs(lhs, rhs, x)) return x;
  }
  return std::nullopt;
}

}  // namespace

Factor inverse(const Factor& f) {
  if (const auto* s = std::get_if<ShiftPower>(&f)) return ShiftPower{-s->power};
  return std::get<CtrlDescriptor>(f).inverse();
}

std::vector<Factor> inverse(std::span<const Factor> product) {
  std::vector<Factor> out;
  for (auto it = product.rbegin(); it != product.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

std::optional<int> block_base(std::span<const Factor> product, const Word& w) {
  auto ok = valid_bases(normalize(product, w), w.length());
  for (int b = 0; b < w.length(); ++b) {
    if (ok[static_cast<std::size_t>(b)]) return b;
  }
  return std::nullopt;
}

Perm AlignedNormalForm::net(int block, const std::set<long long>& occurrences) const {
  const long long ell = word_.length();
  Perm acc = Perm::identity(std::size_t{1} << ell);
  for (const auto& f : factors_) {
    const long long p = (block - f.block) * ell;
    if (!occurrences.count(p)) continue;
    if (f.doubled && !occurrences.count(p + ell)) continue;
    acc = acc * f.perm;
  }
  return acc;
}

std::set<long long> AlignedNormalForm::relevant_positions(int block) const {
  const long long ell = word_.length();
  std::set<long long> out{0};
  for (const auto& f : factors_) {
    const long long p = (block - f.block) * ell;
    out.insert(p);
    if (f.doubled) out.insert(p + ell);
  }
  return out;
}

std::vector<int> AlignedNormalForm::blocks() const {
  std::set<int> s;
  for (const auto& f : factors_) s.insert(f.block);
  return {s.begin(), s.end()};
}

AlignedNormalForm symbolic_product(std::span<const Factor> product, const Word& w, std::optional<int> base) {
  if (!is_unbordered(w)) throw PreconditionViolation("symbolic_product needs an unbordered w");
  const int ell = w.length();
  if (ell > kMaxBlockBits) throw BudgetExceeded("block permutations on 2^l points with l > 16");
  Normalized n = normalize(product, w);
  if (!base) {
    auto ok = valid_bases(n, ell);
    for (int b = 0; b < ell && !base; ++b) {
      if (ok[static_cast<std::size_t>(b)]) base = b;
    }
    if (!base) throw BudgetExceeded("product is not block-aligned; use the exhaustive fallback");
  }

  AlignedNormalForm nf;
  nf.shift_ = n.shift;
  nf.base_ = *base;
  nf.word_ = w;

  const std::size_t points = std::size_t{1} << ell;
  std::optional<AlignedNormalForm::BlockFactor> run;
  std::vector<Point> table;
  auto flush = [&] {
    if (!run) return;
    run->perm = Perm(table);
    if (!run->perm.is_identity()) nf.factors_.push_back(std::move(*run));
    run.reset();
  };
  for (const auto& c : n.ctrls) {
    const long long rel = c.window_shift - *base;
    const int m = static_cast<int>(floor_div(rel, ell));
    const int r = static_cast<int>(rel - static_cast<long long>(m) * ell);
    if (r + c.perm->width() > ell) throw BudgetExceeded("factor window crosses a block boundary for this base");
    if (!run || run->doubled != c.doubled || run->block != m) {
      flush();
      run = AlignedNormalForm::BlockFactor{c.doubled, m, Perm{}};
      table.resize(points);
      for (Point x = 0; x < points; ++x) table[x] = x;
    }
    apply_gate(table, *c.perm, ell, r);
  }
  flush();

  // Partially overlapping blocks come from occurrences at least l apart whose
  // block indices differ; both may be active only if some pair of support
  // points agrees on the overlap.
  for (std::size_t i = 0; i < nf.factors_.size() && nf.separated_; ++i) {
    for (std::size_t j = 0; j < nf.factors_.size() && nf.separated_; ++j) {
      const auto& a = nf.factors_[i];
      const auto& b = nf.factors_[j];
      auto sa = a.perm.support();
      auto sb = b.perm.support();
      // block b sits d cells to the right of block a, with occurrence gap delta = d - (b.block - a.block) * l
      for (int d = 1; d < ell && nf.separated_; ++d) {
        const long long delta = d - static_cast<long long>(b.block - a.block) * ell;
        if (delta > -ell && delta < ell) continue;  // occurrences closer than l are impossible
        const int overlap = ell - d;
        std::unordered_set<Point> prefixes;
        for (Point t : sb) prefixes.insert(t >> (ell - overlap));
        for (Point s : sa) {
          if (prefixes.count(s & ((Point{1} << overlap) - 1))) {
            nf.separated_ = false;
            nf.separation_detail_ = "blocks " + std::to_string(a.block) + " and " + std::to_string(b.block) +
                                    " overlap by " + std::to_string(overlap) + " cells with compatible supports";
            break;
          }
        }
      }
    }
  }
  return nf;
}

std::string to_string(ProductStatus s) {
  switch (s) {
    case ProductStatus::Equal:
      return "Equal";
    case ProductStatus::NotEqual:
      return "NotEqual";
    case ProductStatus::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

PeriodicConfig simulate(std::span<const Factor> product, const PeriodicConfig& x) {
  PeriodicConfig y = x;
  for (const auto& f : product) {
    if (const auto* s = std::get_if<ShiftPower>(&f)) {
      y = shift_track(y, 0, s->power);
    } else {
      y = apply(std::get<CtrlDescriptor>(f), y);
    }
  }
  return y;
}

BlockMap compile_product(std::span<const Factor> product, std::uint64_t budget) {
  const Alphabet alphabet = Alphabet::binary_tracks(2);
  BlockMap acc = BlockMap::identity(alphabet);
  for (const auto& f : product) {
    BlockMap next = std::holds_alternative<ShiftPower>(f)
                        ? shift(alphabet, 0, static_cast<int>(std::get<ShiftPower>(f).power))
                        : compile(std::get<CtrlDescriptor>(f), alphabet, {}, budget);
    acc = compose(next, acc, budget);
  }
  return acc;
}

ProductVerdict compare_products(std::span<const Factor> lhs, std::span<const Factor> rhs, const Word& w,
                                const EvaluatorOptions& options) {
  if (!is_unbordered(w)) throw PreconditionViolation("compare_products needs an unbordered w");
  const int ell = w.length();
  std::mt19937_64 rng(options.seed);
  ProductVerdict v;

  const Normalized nl = normalize(lhs, w);
  const Normalized nr = normalize(rhs, w);
  std::optional<int> base;
  {
    auto a = valid_bases(nl, ell);
    auto b = valid_bases(nr, ell);
    for (int k = 0; k < ell && !base; ++k) {
      if (a[static_cast<std::size_t>(k)] && b[static_cast<std::size_t>(k)]) base = k;
    }
  }

  std::string fallback_reason = "no common block base";
  if (base && ell <= kMaxBlockBits) {
    auto fl = symbolic_product(lhs, w, base);
    auto fr = symbolic_product(rhs, w, base);
    if (fl.separated() && fr.separated()) {
      v.method = "aligned";
      if (fl.shift() != fr.shift()) {
        v.status = ProductStatus::NotEqual;
        v.detail = "net shifts differ";
        auto x = random_witness(lhs, rhs, w, 0, options, rng);
        v.proof = x.has_value();
        v.witness = x;
        return v;
      }
      std::set<int> anchors;
      for (int m : fl.blocks()) anchors.insert(m);
      for (int m : fr.blocks()) anchors.insert(m);
      for (int m : anchors) {
        auto positions = fl.relevant_positions(m);
        for (auto p : fr.relevant_positions(m)) positions.insert(p);
        for (const auto& occ : patterns(positions)) {
          Perm a = fl.net(m, occ);
          Perm b = fr.net(m, occ);
          if (a == b) continue;
          v.status = ProductStatus::NotEqual;
          Point s = 0;
          while (a[s] == b[s]) ++s;
          v.detail = "block " + std::to_string(m) + " differs on content " + std::to_string(s);
          // Plant the pattern and the distinguishing content on a periodic point.
          const long long lo = *occ.begin();
          const long long hi = *occ.rbegin();
          const int period = static_cast<int>(hi - lo) + 6 * ell + 2 * ell * static_cast<int>(std::abs(m) + 1);
          const long long origin = -lo + 2 * ell + static_cast<long long>(ell) * (std::abs(m) + 1);
          std::set<long long> planted;
          for (auto p : occ) planted.insert(((origin + p) % period + period) % period);
          if (auto row = realize_occurrences(w, planted, period, rng, options.witness_attempts)) {
            for (int attempt = 0; attempt < options.witness_attempts; ++attempt) {
              std::vector<int> target(static_cast<std::size_t>(period), 0);
              if (attempt > 0) {
                for (auto& c : target) c = static_cast<int>(rng() & 1u);
              }
              const long long start = origin + fl.base() + static_cast<long long>(m) * ell;
              for (int k = 0; k < ell; ++k) {
                target[static_cast<std::size_t>(((start + k) % period + period) % period)] =
                    static_cast<int>((s >> (ell - 1 - k)) & 1u);
              }
              auto x = PeriodicConfig::from_tracks(Alphabet::binary_tracks(2), {*row, target});
              if (differs(lhs, rhs, x)) {
                v.proof = true;
                v.witness = x;
                return v;
              }
            }
          }
          v.status = ProductStatus::Inconclusive;
          v.detail += "; no periodic witness found";
          return v;
        }
      }
      v.status = ProductStatus::Equal;
      v.proof = true;
      return v;
    }
    fallback_reason = fl.separated() ? fr.separation_detail() : fl.separation_detail();
  }

  try {
    auto verdict = equal(compile_product(lhs, options.budget), compile_product(rhs, options.budget),
                         EqualityPolicy::exhaustive(options.budget));
    v.method = "exhaustive";
    v.proof = true;
    v.status = verdict.equal ? ProductStatus::Equal : ProductStatus::NotEqual;
    v.detail = fallback_reason;
    if (!verdict.equal) {
      if (auto x = random_witness(lhs, rhs, w, 0, options, rng)) v.witness = x;
    }
    return v;
  } catch (const BudgetExceeded& e) {
    v.method = "witness-search";
    if (auto x = random_witness(lhs, rhs, w, 0, options, rng)) {
      v.status = ProductStatus::NotEqual;
      v.proof = true;
      v.witness = x;
      v.detail = fallback_reason;
      return v;
    }
    v.status = ProductStatus::Inconclusive;
    v.detail = fallback_reason + "; " + e.what();
    return v;
  }
}

}  // namespace rcalab
