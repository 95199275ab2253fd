#include "stiefel/binary_codes.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "stiefel/bounds.hpp"
#include "stiefel/errors.hpp"

namespace stiefel {

namespace {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int p = 2; p * p <= q; ++p) {
    if (q % p == 0) return false;
  }
  return true;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

int quadratic_character(int x, int q) {
  x = ((x % q) + q) % q;
  if (x == 0) return 0;
  for (int y = 1; y < q; ++y) {
    if ((y * y) % q == x) return 1;
  }
  return -1;
}

// Paley type I: H = I + [[0, 1^T], [-1, Q]] with Q the Jacobsthal matrix.
IntMatrix paley_one(int q) {
  const int order = q + 1;
  IntMatrix h = IntMatrix::Identity(order, order);
  for (int j = 1; j < order; ++j) {
    h(0, j) += 1;
    h(j, 0) -= 1;
  }
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) h(i + 1, j + 1) += quadratic_character(j - i, q);
  }
  return h;
}

void normalize(IntMatrix& h) {
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    if (h(i, 0) < 0) h.row(i) *= -1;
  }
  for (Eigen::Index j = 0; j < h.cols(); ++j) {
    if (h(0, j) < 0) h.col(j) *= -1;
  }
}

std::optional<IntMatrix> build_hadamard(int order, std::map<int, std::optional<IntMatrix>>& memo) {
  if (auto it = memo.find(order); it != memo.end()) return it->second;
  std::optional<IntMatrix> out;
  if (order == 1) {
    out = IntMatrix::Constant(1, 1, 1);
  } else if (order == 2) {
    out = IntMatrix(2, 2);
    *out << 1, 1, 1, -1;
  } else if (order % 4 == 0) {
    if (std::has_single_bit(static_cast<unsigned>(order))) {
      out = kronecker(*build_hadamard(2, memo), *build_hadamard(order / 2, memo));
    } else if (is_prime(order - 1) && (order - 1) % 4 == 3) {
      out = paley_one(order - 1);
    } else {
      for (int a = 2; a * a <= order && !out; ++a) {
        if (order % a != 0) continue;
        auto left = build_hadamard(a, memo);
        if (!left) continue;
        auto right = build_hadamard(order / a, memo);
        if (right) out = kronecker(*left, *right);
      }
    }
  }
  if (out) normalize(*out);
  memo[order] = out;
  return out;
}

std::optional<IntMatrix> try_hadamard(int order) {
  if (order < 1) return std::nullopt;
  std::map<int, std::optional<IntMatrix>> memo;
  return build_hadamard(order, memo);
}

// Words of a normalized Hadamard matrix with the first column deleted:
// m words, length m-1, pairwise distance m/2.
std::vector<BinaryWord> punctured_rows(const IntMatrix& h) {
  std::vector<BinaryWord> words;
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    words.push_back(to_bits(h.block(i, 1, 1, h.cols() - 1)));
  }
  return words;
}

// A'_m: the words of A_m starting with 0, that coordinate removed:
// m/2 words, length m-2, distance m/2.
std::vector<BinaryWord> shortened_rows(const IntMatrix& h) {
  std::vector<BinaryWord> words;
  for (auto& w : punctured_rows(h)) {
    if (w.front() == 0) words.emplace_back(w.begin() + 1, w.end());
  }
  return words;
}

IntMatrix require_hadamard(int order) {
  auto h = try_hadamard(order);
  if (!h) throw NoKnownConstruction("no Hadamard matrix of order " + std::to_string(order));
  return *h;
}

void append_copies(std::vector<BinaryWord>& code, const std::vector<BinaryWord>& part,
                   int copies) {
  for (int c = 0; c < copies; ++c) {
    for (std::size_t i = 0; i < code.size(); ++i) {
      code[i].insert(code[i].end(), part[i].begin(), part[i].end());
    }
  }
}

// Dense bitset over a fixed vertex count.
class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
  }
  std::size_t first() const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    }
    return words_.size() * 64;
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  void and_not(const Bits& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Branch and bound for a clique of `target` vertices, greedy colouring as
// the bound.
class CliqueSearch {
 public:
  CliqueSearch(std::vector<Bits> adjacency, std::int64_t budget)
      : adj_(std::move(adjacency)), budget_(budget) {}

  bool find(Bits candidates, int target) {
    target_ = target;
    clique_.clear();
    return expand(std::move(candidates));
  }

  const std::vector<std::size_t>& clique() const { return clique_; }
  std::int64_t nodes() const { return nodes_; }

 private:
  bool expand(Bits p) {
    if (static_cast<int>(clique_.size()) == target_) return true;
    if (++nodes_ > budget_) throw BudgetExceeded("exhaustive code search exceeded its budget");

    std::vector<std::size_t> order;
    std::vector<int> colour;
    Bits uncoloured = p;
    int c = 0;
    while (uncoloured.any()) {
      ++c;
      Bits q = uncoloured;
      while (q.any()) {
        const std::size_t v = q.first();
        q.reset(v);
        uncoloured.reset(v);
        q.and_not(adj_[v]);
        order.push_back(v);
        colour.push_back(c);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (static_cast<int>(clique_.size()) + colour[i] < target_) return false;
      const std::size_t v = order[i];
      clique_.push_back(v);
      Bits next = p;
      next &= adj_[v];
      if (expand(std::move(next))) return true;
      clique_.pop_back();
      p.reset(v);
    }
    return false;
  }

  std::vector<Bits> adj_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  int target_ = 0;
  std::vector<std::size_t> clique_;
};

BinaryWord word_from_mask(unsigned mask, int length) {
  BinaryWord w(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) w[static_cast<std::size_t>(i)] = (mask >> i) & 1U;
  return w;
}

}  // namespace

bool is_hadamard(const IntMatrix& h) {
  if (h.rows() != h.cols() || h.rows() == 0) return false;
  if ((h.array().abs() != 1).any()) return false;
  const IntMatrix gram = h * h.transpose();
  return gram == IntMatrix::Identity(h.rows(), h.rows()) * h.rows();
}

HadamardMatrix hadamard(int order) { return {order, require_hadamard(order)}; }

bool hadamard_available(int order) { return try_hadamard(order).has_value(); }

int hamming_distance(const BinaryWord& a, const BinaryWord& b) {
  int dist = 0;
  for (std::size_t i = 0; i < a.size(); ++i) dist += a[i] != b[i];
  return dist;
}

int min_hamming_distance(const std::vector<BinaryWord>& words) {
  if (words.size() < 2) throw InvalidParameter("minimum distance needs at least 2 words");
  int best = static_cast<int>(words.front().size()) + 1;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      best = std::min(best, hamming_distance(words[i], words[j]));
    }
  }
  return best;
}

BinaryCode::BinaryCode(int length, std::vector<BinaryWord> words)
    : length_(length), words_(std::move(words)), min_distance_(0) {
  if (length_ < 1) throw InvalidParameter("code length must be >= 1");
  for (const auto& w : words_) {
    if (static_cast<int>(w.size()) != length_) throw DimensionMismatch("word length mismatch");
    if (std::any_of(w.begin(), w.end(), [](std::uint8_t b) { return b > 1; })) {
      throw InvalidParameter("binary words hold only 0 and 1");
    }
  }
  if (std::set<BinaryWord>(words_.begin(), words_.end()).size() != words_.size()) {
    throw InvalidParameter("code words must be distinct");
  }
  min_distance_ = min_hamming_distance(words_);
}

BinaryWord to_bits(const Eigen::Ref<const IntMatrix>& signs) {
  BinaryWord w;
  w.reserve(static_cast<std::size_t>(signs.size()));
  for (Eigen::Index j = 0; j < signs.cols(); ++j) {
    for (Eigen::Index i = 0; i < signs.rows(); ++i) w.push_back(signs(i, j) < 0 ? 1 : 0);
  }
  return w;
}

BinaryCode levenshtein_code(int n, int d) {
  if (d < 2 || d % 2 != 0 || n >= 2 * d || n < d) {
    throw InvalidParameter("Levenshtein construction needs even d and d <= n < 2d");
  }
  const int k = d / (2 * d - n);
  const int size = 2 * k;
  std::vector<BinaryWord> code(static_cast<std::size_t>(size));
  auto take = [size](std::vector<BinaryWord> words) {
    words.resize(static_cast<std::size_t>(size));
    return words;
  };
  if (n % 2 == 0) {
    // n = (4k-2)a + (4k+2)b, d = 2k a + (2k+2) b.
    const int a = (d * (2 * k + 1) - n * (k + 1)) / 2;
    const int b = (k * n - d * (2 * k - 1)) / 2;
    if (a > 0) append_copies(code, take(shortened_rows(require_hadamard(4 * k))), a);
    if (b > 0) append_copies(code, take(shortened_rows(require_hadamard(4 * k + 4))), b);
  } else {
    // n = (2k-1)a + (2k+1)b, d = k a + (k+1) b; the half-length family
    // that is not a multiple of 4 appears an even number of times and is
    // replaced pairwise by A'.
    const int a = (2 * k + 1) * d - (k + 1) * n;
    const int b = k * n - (2 * k - 1) * d;
    if (k % 2 == 0) {
      if (a > 0) append_copies(code, take(punctured_rows(require_hadamard(2 * k))), a);
      if (b > 0) append_copies(code, take(shortened_rows(require_hadamard(4 * k + 4))), b / 2);
    } else {
      if (a > 0) append_copies(code, take(shortened_rows(require_hadamard(4 * k))), a / 2);
      if (b > 0) append_copies(code, take(punctured_rows(require_hadamard(2 * k + 2))), b);
    }
  }
  return BinaryCode(n, std::move(code));
}

BinaryCode plotkin_optimal_code(int r) {
  const auto cap = static_cast<int>(plotkin_cap(r));
  try {
    switch (r % 4) {
      case 0: {
        const IntMatrix h = require_hadamard(r);
        std::vector<BinaryWord> words;
        for (Eigen::Index i = 0; i < h.rows(); ++i) words.push_back(to_bits(h.row(i)));
        for (Eigen::Index i = 0; i < h.rows(); ++i) words.push_back(to_bits(-h.row(i)));
        return BinaryCode(r, std::move(words));
      }
      case 3:
        return BinaryCode(r, punctured_rows(require_hadamard(r + 1)));
      default: {
        auto longer = levenshtein_code(r + 1, r / 2 + 1).words();
        for (auto& w : longer) w.pop_back();
        return BinaryCode(r, std::move(longer));
      }
    }
  } catch (const NoKnownConstruction&) {
    if (r > 10) throw;
  }
  auto found = exhaustive_code_search(r, (r + 1) / 2, cap);
  if (!found) throw NoKnownConstruction("no Plotkin-optimal code found for r=" + std::to_string(r));
  return *found;
}

std::optional<BinaryCode> exhaustive_code_search(int length, int min_distance, int size,
                                                 std::int64_t node_budget) {
  if (length < 1 || length > 16) throw InvalidParameter("exhaustive search supports length 1..16");
  if (size < 1) throw InvalidParameter("size must be >= 1");
  const unsigned total = 1U << length;
  if (size == 1) return BinaryCode(length, {word_from_mask(0, length)});

  // Translate so the code contains 0, then permute coordinates so that a
  // minimum-weight nonzero word u is 1^w 0^(length-w). Every other word then
  // has weight >= w.
  std::int64_t spent = 0;
  for (int w = std::max(min_distance, 1); w <= length; ++w) {
    const unsigned u = (1U << w) - 1U;
    if (size == 2) return BinaryCode(length, {word_from_mask(0, length), word_from_mask(u, length)});
    std::vector<unsigned> cands;
    for (unsigned x = 1; x < total; ++x) {
      if (x == u) continue;
      if (std::popcount(x) < w) continue;
      if (std::popcount(x ^ u) < min_distance) continue;
      cands.push_back(x);
    }
    std::vector<Bits> adj(cands.size(), Bits(cands.size()));
    for (std::size_t i = 0; i < cands.size(); ++i) {
      for (std::size_t j = i + 1; j < cands.size(); ++j) {
        if (std::popcount(cands[i] ^ cands[j]) >= min_distance) {
          adj[i].set(j);
          adj[j].set(i);
        }
      }
    }
    Bits all(cands.size());
    for (std::size_t i = 0; i < cands.size(); ++i) all.set(i);
    CliqueSearch search(std::move(adj), node_budget - spent);
    const bool hit = search.find(all, size - 2);
    spent += search.nodes();
    if (hit) {
      std::vector<BinaryWord> words{word_from_mask(0, length), word_from_mask(u, length)};
      for (std::size_t v : search.clique()) words.push_back(word_from_mask(cands[v], length));
      return BinaryCode(length, std::move(words));
    }
  }
  return std::nullopt;
}

}  // namespace stiefel
