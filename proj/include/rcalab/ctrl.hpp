#pragma once

#include <cstdint>
#include <string>

#include "rcalab/core/block_map.hpp"
#include "rcalab/perm.hpp"
#include "rcalab/words.hpp"

namespace rcalab {

/// How the offset i of ctrl(pi)[u]_i relates an occurrence of u at p to the window.
enum class OffsetConvention {
  /// u occurs i cells to the right of the window start: window [p - i, p - i + width).
  /// Consistent with f_i = ctrl F [w]_{-i} = f_0^{sigma_1^i} and the commutator identity.
  OccurrenceAtOffset,
  /// Window [p + i, p + i + width).
  WindowAtOffset,
};

std::string to_string(OffsetConvention c);

/// Symbolic ctrl(pi)[u]_i: apply `perm` to the target-track window attached to
/// every occurrence of `control` on the control track.
struct CtrlDescriptor {
  Word control;
  int offset = 0;
  Perm perm;
  OffsetConvention convention = OffsetConvention::OccurrenceAtOffset;

  int width() const { return perm.width(); }
  /// Window start minus occurrence position.
  int window_shift() const { return convention == OffsetConvention::OccurrenceAtOffset ? -offset : offset; }
  CtrlDescriptor inverse() const;

  friend bool operator==(const CtrlDescriptor&, const CtrlDescriptor&) = default;
};

/// Validates that windows of distinct occurrences can never intersect.
CtrlDescriptor make_descriptor(Perm perm, Word control, int offset,
                               OffsetConvention convention = OffsetConvention::OccurrenceAtOffset);

/// Tracks a ctrl map reads and writes; f_0 on B' x B x C ignores B'.
struct CtrlTracks {
  int control = 0;
  int target = 1;
};

BlockMap compile(const CtrlDescriptor& d, const Alphabet& alphabet = Alphabet::binary_tracks(2), CtrlTracks tracks = {},
                 std::uint64_t budget = default_budget());

struct CompiledCtrl {
  BlockMap map;
  CtrlDescriptor descriptor;
};

CompiledCtrl make_ctrl(const Perm& perm, const Word& control, int offset,
                       OffsetConvention convention = OffsetConvention::OccurrenceAtOffset,
                       const Alphabet& alphabet = Alphabet::binary_tracks(2), CtrlTracks tracks = {},
                       std::uint64_t budget = default_budget());

/// ctrl(pi)[ww]_i with an l-bit window.
CompiledCtrl ww_control(const Perm& perm, const Word& w, int offset,
                        OffsetConvention convention = OffsetConvention::OccurrenceAtOffset,
                        std::uint64_t budget = default_budget());

/// Descriptor of sigma_1^-j o d o sigma_1^j (sigma_1^j applied first).
CtrlDescriptor conjugate_offset(const CtrlDescriptor& d, int j);

/// Applies a ctrl map directly to a periodic point, without a rule table.
PeriodicConfig apply(const CtrlDescriptor& d, const PeriodicConfig& x, CtrlTracks tracks = {});

}  // namespace rcalab
