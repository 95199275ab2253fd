#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <vector>

namespace stiefel {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// A +-1 matrix with H H^T = order * I, first row and column all +1.
struct HadamardMatrix {
  int order = 0;
  IntMatrix entries;
};

/// Which construction produced a Hadamard matrix.
enum class HadamardStrategy { Trivial, Sylvester, Paley, Kronecker };

/// Builds a normalized Hadamard matrix from Sylvester doubling, Paley type I
/// (order q+1, q = 3 mod 4 prime) and Kronecker products of those. Throws
/// NoKnownConstruction when none of them reaches `order`.
HadamardMatrix hadamard(int order);

/// True when `hadamard(order)` succeeds.
bool hadamard_available(int order);

bool is_hadamard(const IntMatrix& h);

using BinaryWord = std::vector<std::uint8_t>;

class BinaryCode {
 public:
  /// Validates that the words are distinct {0,1} vectors of equal length.
  BinaryCode(int length, std::vector<BinaryWord> words);

  int length() const noexcept { return length_; }
  int size() const noexcept { return static_cast<int>(words_.size()); }
  const std::vector<BinaryWord>& words() const noexcept { return words_; }
  int min_distance() const noexcept { return min_distance_; }

 private:
  int length_;
  std::vector<BinaryWord> words_;
  int min_distance_;
};

int hamming_distance(const BinaryWord& a, const BinaryWord& b);

/// Exact minimum over all pairs. Throws InvalidParameter below 2 words.
int min_hamming_distance(const std::vector<BinaryWord>& words);
inline int min_hamming_distance(const BinaryCode& code) { return code.min_distance(); }

/// Hadamard entry +1 -> bit 0, -1 -> bit 1.
BinaryWord to_bits(const Eigen::Ref<const IntMatrix>& signs);

/// Levenshtein's Plotkin-optimal code of length n and even distance d with
/// n < 2d: 2*floor(d/(2d-n)) words, built by juxtaposing Hadamard codes.
BinaryCode levenshtein_code(int n, int d);

/// Binary code of length r, distance >= r/2 and plotkin_cap(r) words.
/// r = 0 mod 4: rows of +-H_r. r = 3 mod 4: normalized H_{r+1} without its
/// first column. r = 2 mod 4: Levenshtein code of length r+1 and distance
/// r/2+1 with one coordinate deleted. Falls back to exhaustive search for
/// r <= 10 when a Hadamard ingredient is missing.
BinaryCode plotkin_optimal_code(int r);

/// Searches for `size` words of length `length` (<= 16) with pairwise
/// distance >= min_distance. Returns nullopt only after the search space
/// is exhausted; throws BudgetExceeded once `node_budget` branch nodes have
/// been expanded.
std::optional<BinaryCode> exhaustive_code_search(int length, int min_distance, int size,
                                                 std::int64_t node_budget = 2'000'000'000);

}  // namespace stiefel
