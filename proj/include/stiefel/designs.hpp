#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stiefel {

/// A (v, b, rep, k, lambda) balanced incomplete block design. Points are
/// 1..v; each block is a sorted list of k points.
struct BIBD {
  int v = 0;
  int b = 0;
  int rep = 0;
  int k = 0;
  int lambda = 0;
  std::vector<std::vector<int>> blocks;
};

/// A partition of the block indices (0-based) into parallel classes.
struct Resolution {
  std::vector<std::vector<int>> classes;
};

struct Verification {
  bool ok = true;
  std::string diagnostic;

  explicit operator bool() const noexcept { return ok; }
  static Verification failure(std::string why) { return {false, std::move(why)}; }
};

/// Sorts blocks and reads (b, rep, k, lambda) off the incidence data:
/// k from block 0, rep from point 1, lambda from the pair {1, 2}.
BIBD make_bibd(int v, std::vector<std::vector<int>> blocks);

/// Checks every count a BIBD must satisfy; the diagnostic names the first
/// violated one.
Verification verify_bibd(const BIBD& design);

/// Checks that the classes partition the block set and each class
/// partitions the point set.
Verification verify_resolution(const BIBD& design, const Resolution& res);

/// Backtracking search for a resolution (v <= 64). nullopt means no
/// resolution exists; BudgetExceeded means the search was cut short.
std::optional<Resolution> find_resolution(const BIBD& design,
                                          std::int64_t node_budget = 10'000'000);

struct ResolvableDesign {
  BIBD design;
  Resolution resolution;
};

/// "k4-edges", "ag-2-2" or "ag-2-3".
ResolvableDesign builtin_design(std::string_view name);
std::vector<std::string> builtin_design_names();

/// Lines of the affine plane over GF(q), q prime, grouped by direction.
ResolvableDesign affine_plane(int q);

}  // namespace stiefel
