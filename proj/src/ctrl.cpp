#include "rcalab/ctrl.hpp"

#include <algorithm>

namespace rcalab {

std::string to_string(OffsetConvention c) {
  return c == OffsetConvention::OccurrenceAtOffset ? "occurrence-at-offset" : "window-at-offset";
}

CtrlDescriptor CtrlDescriptor::inverse() const {
  CtrlDescriptor d = *this;
  d.perm = perm.inverse();
  return d;
}

CtrlDescriptor make_descriptor(Perm perm, Word control, int offset, OffsetConvention convention) {
  const int width = perm.width();
  const int gap = min_occurrence_gap(control);
  if (width > gap) {
    throw OverlappingWindows("control '" + control.to_string() + "' admits occurrences " + std::to_string(gap) +
                             " apart, closer than the window width " + std::to_string(width));
  }
  return CtrlDescriptor{std::move(control), offset, std::move(perm), convention};
}

BlockMap compile(const CtrlDescriptor& d, const Alphabet& alphabet, CtrlTracks tracks, std::uint64_t budget) {
  if (alphabet.track_size(tracks.control) != d.control.alphabet_size() || alphabet.track_size(tracks.target) != 2) {
    throw AlphabetMismatch("ctrl map needs a control track matching the control word and a binary target track");
  }
  const int width = d.width();
  const int shift = d.window_shift();
  const int len = d.control.length();
  const int lo = std::min(-shift - width + 1, -width + 1);
  const int hi = std::max(-shift + len - 1, width - 1);
  const int memory = -lo;
  return BlockMap::tabulate(
      alphabet, memory, hi,
      [&](std::span<const Symbol> nb) {
        auto cell = [&](int c) { return nb[static_cast<std::size_t>(c + memory)]; };
        const Symbol centre = cell(0);
        for (int p = -shift - width + 1; p <= -shift; ++p) {
          bool match = true;
          for (int k = 0; k < len && match; ++k) match = alphabet.component(cell(p + k), tracks.control) == d.control[k];
          if (!match) continue;
          const int start = p + shift;
          Point in = 0;
          for (int k = 0; k < width; ++k) {
            in = (in << 1) | static_cast<Point>(alphabet.component(cell(start + k), tracks.target));
          }
          const Point out = d.perm[in];
          const int bit = (out >> (width - 1 - (0 - start))) & 1u;
          return alphabet.with_component(centre, tracks.target, bit);
        }
        return centre;
      },
      budget);
}

CompiledCtrl make_ctrl(const Perm& perm, const Word& control, int offset, OffsetConvention convention,
                       const Alphabet& alphabet, CtrlTracks tracks, std::uint64_t budget) {
  auto d = make_descriptor(perm, control, offset, convention);
  auto map = compile(d, alphabet, tracks, budget);
  return {std::move(map), std::move(d)};
}

CompiledCtrl ww_control(const Perm& perm, const Word& w, int offset, OffsetConvention convention,
                        std::uint64_t budget) {
  if (!is_unbordered(w)) throw PreconditionViolation("ww_control needs an unbordered w");
  if (perm.width() != w.length()) throw WidthMismatch("ww_control needs an l-bit window permutation");
  return make_ctrl(perm, w.doubled(), offset, convention, Alphabet::binary_tracks(2), {}, budget);
}

CtrlDescriptor conjugate_offset(const CtrlDescriptor& d, int j) {
  CtrlDescriptor out = d;
  out.offset = d.convention == OffsetConvention::OccurrenceAtOffset ? d.offset + j : d.offset - j;
  return out;
}

PeriodicConfig apply(const CtrlDescriptor& d, const PeriodicConfig& x, CtrlTracks tracks) {
  const Alphabet& alphabet = x.alphabet();
  const int period = x.period();
  const int width = d.width();
  if (width > period) throw OverlappingWindows("period shorter than the window");
  auto control_row = x.track(tracks.control);
  auto target_row = x.track(tracks.target);
  auto hits = cyclic_occurrences(d.control, control_row);

  std::vector<int> owner(static_cast<std::size_t>(period), -1);
  for (int p : hits) {
    for (int k = 0; k < width; ++k) {
      long long c = (static_cast<long long>(p) + d.window_shift() + k) % period;
      if (c < 0) c += period;
      auto& o = owner[static_cast<std::size_t>(c)];
      if (o != -1) throw OverlappingWindows("windows intersect on this periodic point");
      o = p;
    }
  }
  auto next = target_row;
  for (int p : hits) {
    auto cell = [&](int k) {
      long long c = (static_cast<long long>(p) + d.window_shift() + k) % period;
      return static_cast<std::size_t>(c < 0 ? c + period : c);
    };
    Point in = 0;
    for (int k = 0; k < width; ++k) in = (in << 1) | static_cast<Point>(target_row[cell(k)]);
    const Point out = d.perm[in];
    for (int k = 0; k < width; ++k) next[cell(k)] = static_cast<int>((out >> (width - 1 - k)) & 1u);
  }
  std::vector<Symbol> cells = x.cells();
  for (int j = 0; j < period; ++j) {
    auto& s = cells[static_cast<std::size_t>(j)];
    s = alphabet.with_component(s, tracks.target, next[static_cast<std::size_t>(j)]);
  }
  return PeriodicConfig(alphabet, std::move(cells));
}

}  // namespace rcalab
