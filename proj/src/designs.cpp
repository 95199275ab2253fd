#include "stiefel/designs.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "stiefel/errors.hpp"

namespace stiefel {

namespace {

std::string pair_name(int p, int q) {
  return "{" + std::to_string(p) + "," + std::to_string(q) + "}";
}

std::uint64_t block_mask(const std::vector<int>& block) {
  std::uint64_t m = 0;
  for (int p : block) m |= std::uint64_t{1} << (p - 1);
  return m;
}

class ResolutionSearch {
 public:
  ResolutionSearch(const BIBD& d, std::int64_t budget) : design_(d), budget_(budget) {
    for (const auto& blk : d.blocks) masks_.push_back(block_mask(blk));
    full_ = d.v == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d.v) - 1;
    used_.assign(masks_.size(), false);
  }

  std::optional<Resolution> run() {
    if (!extend(0)) return std::nullopt;
    return Resolution{classes_};
  }

 private:
  // Start a new class with the lowest unused block, then cover the lowest
  // uncovered point with each compatible unused block in turn.
  bool extend(std::uint64_t covered) {
    if (++nodes_ > budget_) throw BudgetExceeded("resolution search exceeded its budget");
    if (covered == full_) {
      covered = 0;
      if (std::find(used_.begin(), used_.end(), false) == used_.end()) return true;
    }
    if (covered == 0) {
      const auto first = static_cast<int>(std::find(used_.begin(), used_.end(), false) - used_.begin());
      classes_.push_back({first});
      used_[static_cast<std::size_t>(first)] = true;
      if (extend(masks_[static_cast<std::size_t>(first)])) return true;
      used_[static_cast<std::size_t>(first)] = false;
      classes_.pop_back();
      return false;
    }
    const std::uint64_t missing = full_ & ~covered;
    const std::uint64_t point_bit = missing & (~missing + 1);
    for (std::size_t i = 0; i < masks_.size(); ++i) {
      if (used_[i] || !(masks_[i] & point_bit) || (masks_[i] & covered)) continue;
      used_[i] = true;
      classes_.back().push_back(static_cast<int>(i));
      if (extend(covered | masks_[i])) return true;
      classes_.back().pop_back();
      used_[i] = false;
    }
    return false;
  }

  const BIBD& design_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  std::vector<std::uint64_t> masks_;
  std::uint64_t full_ = 0;
  std::vector<bool> used_;
  std::vector<std::vector<int>> classes_;
};

}  // namespace

BIBD make_bibd(int v, std::vector<std::vector<int>> blocks) {
  if (v < 2) throw InvalidParameter("a design needs v >= 2");
  if (blocks.empty()) throw InvalidParameter("a design needs at least one block");
  for (auto& blk : blocks) std::sort(blk.begin(), blk.end());
  BIBD d;
  d.v = v;
  d.b = static_cast<int>(blocks.size());
  d.k = static_cast<int>(blocks.front().size());
  for (const auto& blk : blocks) {
    const bool has1 = std::binary_search(blk.begin(), blk.end(), 1);
    d.rep += has1;
    d.lambda += has1 && std::binary_search(blk.begin(), blk.end(), 2);
  }
  d.blocks = std::move(blocks);
  return d;
}

Verification verify_bibd(const BIBD& d) {
  if (d.v < 2 || d.k < 2 || d.k > d.v) return Verification::failure("need 2 <= k <= v");
  if (static_cast<int>(d.blocks.size()) != d.b) {
    return Verification::failure("block count " + std::to_string(d.blocks.size()) +
                                 " differs from b=" + std::to_string(d.b));
  }
  std::vector<int> replication(static_cast<std::size_t>(d.v) + 1, 0);
  std::map<std::pair<int, int>, int> pairs;
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    const auto& blk = d.blocks[i];
    if (static_cast<int>(blk.size()) != d.k) {
      return Verification::failure("block " + std::to_string(i) + " has size " +
                                   std::to_string(blk.size()) + ", expected k=" +
                                   std::to_string(d.k));
    }
    for (std::size_t a = 0; a < blk.size(); ++a) {
      if (blk[a] < 1 || blk[a] > d.v) {
        return Verification::failure("block " + std::to_string(i) + " names point " +
                                     std::to_string(blk[a]) + " outside 1..v");
      }
      if (a > 0 && blk[a] <= blk[a - 1]) {
        return Verification::failure("block " + std::to_string(i) +
                                     " is not a sorted set of distinct points");
      }
      ++replication[static_cast<std::size_t>(blk[a])];
      for (std::size_t c = a + 1; c < blk.size(); ++c) ++pairs[{blk[a], blk[c]}];
    }
  }
  for (int p = 1; p <= d.v; ++p) {
    if (replication[static_cast<std::size_t>(p)] != d.rep) {
      return Verification::failure("point " + std::to_string(p) + " lies in " +
                                   std::to_string(replication[static_cast<std::size_t>(p)]) +
                                   " blocks, expected rep=" + std::to_string(d.rep));
    }
  }
  for (int p = 1; p <= d.v; ++p) {
    for (int q = p + 1; q <= d.v; ++q) {
      const auto it = pairs.find({p, q});
      const int count = it == pairs.end() ? 0 : it->second;
      if (count != d.lambda) {
        return Verification::failure("pair " + pair_name(p, q) + " lies in " +
                                     std::to_string(count) + " blocks, expected lambda=" +
                                     std::to_string(d.lambda));
      }
    }
  }
  if (d.b * d.k != d.v * d.rep) return Verification::failure("b*k != v*rep");
  if (d.lambda * (d.v - 1) != d.rep * (d.k - 1)) {
    return Verification::failure("lambda*(v-1) != rep*(k-1)");
  }
  return {};
}

Verification verify_resolution(const BIBD& d, const Resolution& res) {
  std::vector<int> seen(d.blocks.size(), 0);
  for (std::size_t c = 0; c < res.classes.size(); ++c) {
    std::vector<int> cover(static_cast<std::size_t>(d.v) + 1, 0);
    for (int bi : res.classes[c]) {
      if (bi < 0 || bi >= static_cast<int>(d.blocks.size())) {
        return Verification::failure("class " + std::to_string(c) + " names block " +
                                     std::to_string(bi) + " out of range");
      }
      if (seen[static_cast<std::size_t>(bi)]++) {
        return Verification::failure("block " + std::to_string(bi) + " appears in two classes");
      }
      for (int p : d.blocks[static_cast<std::size_t>(bi)]) {
        if (p < 1 || p > d.v) return Verification::failure("point out of range");
        if (cover[static_cast<std::size_t>(p)]++) {
          return Verification::failure("class " + std::to_string(c) + " covers point " +
                                       std::to_string(p) + " twice");
        }
      }
    }
    for (int p = 1; p <= d.v; ++p) {
      if (!cover[static_cast<std::size_t>(p)]) {
        return Verification::failure("class " + std::to_string(c) + " misses point " +
                                     std::to_string(p));
      }
    }
  }
  for (std::size_t bi = 0; bi < seen.size(); ++bi) {
    if (!seen[bi]) return Verification::failure("block " + std::to_string(bi) + " is in no class");
  }
  return {};
}

std::optional<Resolution> find_resolution(const BIBD& design, std::int64_t node_budget) {
  if (auto ok = verify_bibd(design); !ok) {
    throw InvalidParameter("not a BIBD: " + ok.diagnostic);
  }
  if (design.v > 64) throw InvalidParameter("resolution search supports v <= 64");
  return ResolutionSearch(design, node_budget).run();
}

ResolvableDesign affine_plane(int q) {
  if (q < 2) throw InvalidParameter("affine plane order must be >= 2");
  for (int p = 2; p * p <= q; ++p) {
    if (q % p == 0) throw InvalidParameter("affine planes are built for prime orders only");
  }
  auto point = [q](int x, int y) { return 1 + x + q * y; };
  std::vector<std::vector<int>> blocks;
  Resolution res;
  for (int slope = 0; slope <= q; ++slope) {
    std::vector<int> cls;
    for (int c = 0; c < q; ++c) {
      std::vector<int> line;
      for (int t = 0; t < q; ++t) {
        line.push_back(slope == q ? point(c, t) : point(t, (slope * t + c) % q));
      }
      cls.push_back(static_cast<int>(blocks.size()));
      blocks.push_back(std::move(line));
    }
    res.classes.push_back(std::move(cls));
  }
  return {make_bibd(q * q, std::move(blocks)), std::move(res)};
}

ResolvableDesign builtin_design(std::string_view name) {
  if (name == "k4-edges") {
    // The 1-factorisation {12|34}, {13|24}, {14|23} of K4.
    auto d = make_bibd(4, {{1, 2}, {3, 4}, {1, 3}, {2, 4}, {1, 4}, {2, 3}});
    return {std::move(d), Resolution{{{0, 1}, {2, 3}, {4, 5}}}};
  }
  if (name == "ag-2-2") return affine_plane(2);
  if (name == "ag-2-3") return affine_plane(3);
  throw UnknownDesign("unknown built-in design \"" + std::string(name) + "\"");
}

std::vector<std::string> builtin_design_names() { return {"k4-edges", "ag-2-2", "ag-2-3"}; }

}  // namespace stiefel
