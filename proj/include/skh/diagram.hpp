#pragma once

// Morse (slice) presentations of tangles in D x I and of their annular closures.
//
// A diagram is read bottom to top. Between slices the diagram is a row of
// parallel strands numbered 1..width from left to right; each slice acts on
// the strands at positions (pos, pos+1):
//
//   X+ p   crossing, the strand entering from the lower left passes over
//   X- p   crossing, the strand entering from the lower right passes over
//   CUP p  a local minimum; two new strands appear at positions p, p+1
//   CAP p  a local maximum; strands p and p+1 are joined and disappear

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace skh {

enum class SliceKind : std::uint8_t { CrossLOver, CrossROver, Cup, Cap };

/// Direction in which a cup is traversed by the oriented component through it.
enum class CupDir : std::uint8_t { Unset, LeftToRight, RightToLeft };

struct MorseSlice {
  SliceKind kind = SliceKind::CrossLOver;
  int pos = 1;
  CupDir cup_dir = CupDir::Unset;

  bool is_crossing() const noexcept {
    return kind == SliceKind::CrossLOver || kind == SliceKind::CrossROver;
  }
  bool operator==(const MorseSlice&) const = default;
};

/// One crossing of the diagram together with its four incident strand
/// segments. Segment `bl` continues as `tr` and `br` continues as `tl`.
struct Crossing {
  std::size_t slice = 0;
  SliceKind kind = SliceKind::CrossLOver;
  int bl = -1, br = -1, tl = -1, tr = -1;
  int sign = 0;
};

/// Strand segments ("edges") between events, and the events joining them.
/// Edge ids are assigned bottom to top, left to right within a slice.
struct Skeleton {
  int edge_count = 0;
  std::vector<int> bottom_edges;  // by bottom position, 0-based
  std::vector<int> top_edges;     // by top position, 0-based
  std::vector<Crossing> crossings;
  std::vector<std::pair<int, int>> cups;  // (left leg, right leg)
  std::vector<std::pair<int, int>> caps;
  std::vector<std::size_t> cup_slices;
  std::vector<int> widths;        // width below slice s is widths[s]; widths.back() = top
  std::vector<bool> edge_up;      // orientation of each segment
};

/// A component of the unresolved tangle.
struct TangleComponent {
  int rep_edge = -1;
  int bottom_ends = 0;
  int top_ends = 0;
  bool closed() const noexcept { return bottom_ends + top_ends == 0; }
};

enum class OrientationScope : std::uint8_t { Tangle, AnnularClosure };

class TangleDiagram {
public:
  TangleDiagram() = default;

  /// Builds and validates a diagram. When `orient` is given it holds one
  /// flag per bottom endpoint (true: the strand leaves the bottom upward);
  /// otherwise orientations are chosen by the default rules. Throws
  /// DiagramError on out-of-range positions or inconsistent orientations.
  static TangleDiagram make(int n_bottom, std::vector<MorseSlice> slices,
                            std::optional<std::vector<bool>> orient = std::nullopt,
                            OrientationScope scope = OrientationScope::Tangle);

  int n_bottom() const noexcept { return n_bottom_; }
  int n_top() const noexcept { return skeleton_.widths.back(); }
  bool balanced() const noexcept { return n_bottom() == n_top(); }

  const std::vector<MorseSlice>& slices() const noexcept { return slices_; }
  const Skeleton& skeleton() const noexcept { return skeleton_; }

  /// Resolved orientation of each bottom endpoint.
  const std::vector<bool>& bottom_up() const noexcept { return bottom_up_; }
  bool orientation_declared() const noexcept { return orientation_declared_; }
  OrientationScope orientation_scope() const noexcept { return scope_; }

  int crossing_count() const noexcept { return static_cast<int>(skeleton_.crossings.size()); }
  int n_plus() const noexcept { return n_plus_; }
  int n_minus() const noexcept { return n_minus_; }

  /// Direction of each top endpoint (true: the strand leaves through the top).
  std::vector<bool> top_up() const;

  /// Components of the diagram itself, ordered by smallest segment id.
  std::vector<TangleComponent> components() const;

  bool operator==(const TangleDiagram& o) const {
    return n_bottom_ == o.n_bottom_ && slices_ == o.slices_ && bottom_up_ == o.bottom_up_;
  }

private:
  int n_bottom_ = 0;
  std::vector<MorseSlice> slices_;
  std::vector<bool> bottom_up_;
  bool orientation_declared_ = false;
  OrientationScope scope_ = OrientationScope::Tangle;
  Skeleton skeleton_{};
  int n_plus_ = 0;
  int n_minus_ = 0;
};

/// A link in A x I given as the closure of a balanced tangle: top endpoint q
/// is joined to bottom endpoint q around the core of the annulus. The joining
/// locus is the cut (the X-to-O arc); cutting along it recovers `core()`.
class AnnularDiagram {
public:
  AnnularDiagram() = default;
  explicit AnnularDiagram(TangleDiagram core) : core_(std::move(core)) {}

  /// Tangle obtained by cutting along the closure locus, oriented
  /// consistently with the closed-up link.
  const TangleDiagram& core() const noexcept { return core_; }
  /// Geometric intersection number with the cut.
  int cut_points() const noexcept { return core_.n_bottom(); }

private:
  TangleDiagram core_;
};

struct ValidationError {
  std::string code;
  std::string message;
};

struct ValidationReport {
  bool balanced = false;
  bool has_closed_components = false;
  bool is_string_link_shape = false;
  std::vector<ValidationError> errors;
  bool ok() const noexcept { return errors.empty(); }
};

/// Parse result: the diagram plus whether it carries the annular closure directive.
struct ParsedInput {
  TangleDiagram diagram;
  bool annular = false;
};

ParsedInput parse_input(std::string_view text);
TangleDiagram parse_tangle(std::string_view text);
AnnularDiagram parse_annular(std::string_view text);

std::string to_text(const TangleDiagram& d, bool annular = false);
inline std::string to_text(const AnnularDiagram& d) { return to_text(d.core(), true); }

ValidationReport validate(const TangleDiagram& d);

/// Stacks t2 on top of t1. Orientation of t2's strands is taken from t1.
TangleDiagram compose(const TangleDiagram& t1, const TangleDiagram& t2);

/// Closes a balanced tangle around the annulus. Throws DiagramError when unbalanced
/// or when declared orientations cannot be extended over the closure.
AnnularDiagram annular_closure(const TangleDiagram& d);

/// True when the diagram has no closed components and every component joins
/// the bottom to the top.
bool is_string_link(const TangleDiagram& d);

}  // namespace skh
