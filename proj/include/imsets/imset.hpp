#ifndef IMSETS_IMSET_HPP
#define IMSETS_IMSET_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "imsets/graph.hpp"
#include "imsets/vertex_set.hpp"

namespace imsets {

/// Integer-valued function on the subsets of the universe, stored sparsely.
/// Zero coefficients are never stored; arithmetic is checked for overflow.
class Imset {
 public:
  using Coefficient = std::int64_t;

  Imset() = default;

  Coefficient operator[](VertexSet s) const;
  const std::map<VertexSet, Coefficient>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Union of every set with a nonzero coefficient.
  VertexSet support_union() const;

  /// Adds k at s; throws Overflow instead of wrapping.
  Imset& add_at(VertexSet s, Coefficient k);
  Imset& operator+=(const Imset& o);
  Imset& operator-=(const Imset& o);

  friend Imset operator+(Imset a, const Imset& b) { return a += b; }
  friend Imset operator-(Imset a, const Imset& b) { return a -= b; }
  friend Imset operator*(Coefficient k, const Imset& u);

  bool operator==(const Imset&) const = default;

 private:
  std::map<VertexSet, Coefficient> terms_;
};

/// Identifier of a set: 1 at `a`, 0 elsewhere.
Imset delta(VertexSet a);

/// u<A,B|C> = d(ABC) + d(C) - d(AC) - d(BC).
Imset semi_elementary(const Triplet& t);

/// Every elementary imset u<a,b|C> over `n` (a < b, C within n minus ab), in
/// lexicographic (a, b, C) order. Requires |n| >= 2.
std::vector<Triplet> elementary_triplets(VertexSet n);
std::vector<Imset> elementary_imsets(VertexSet n);

/// Sum of u(A) and sum of u(A)|A|; both vanish on every combinatorial imset.
Imset::Coefficient coefficient_sum(const Imset& u);
Imset::Coefficient weighted_size_sum(const Imset& u);
/// Sum of u(A)*C(|A|,2). Equals 1 on every elementary imset, so on a
/// combinatorial imset it is the number of summands of any decomposition.
Imset::Coefficient degree_functional(const Imset& u);

/// One decomposition of u into elementary imsets.
struct Decomposition {
  /// Elementary triplets (canonical, a < b), sorted; repeats allowed.
  std::vector<Triplet> terms;
  std::size_t degree() const { return terms.size(); }
};

inline constexpr int kMaxDecomposeVertices = 6;

/// Writes u as a non-negative integer combination of elementary imsets, or
/// returns nullopt if u is not combinatorial. The universe searched is the
/// union of u's support, guarded to 6 vertices.
std::optional<Decomposition> combinatorial_decompose(const Imset& u);
bool is_combinatorial(const Imset& u);
/// Degree of a combinatorial imset; nullopt when u is not combinatorial.
std::optional<std::size_t> degree(const Imset& u);

/// Sum of the semi-elementary imsets of `terms`.
Imset sum_of(const std::vector<Triplet>& terms);

/// Text form: one line per nonzero coefficient, `coef {labels}`, sorted by set
/// encoding; `{}` is the empty set.
std::string format_imset(const Imset& u, const Labels& labels);
/// Reads the text form. '#' starts a comment. Labels must exist in `labels`.
Imset parse_imset(std::string_view text, const Labels& labels);
/// Reads the text form, building the label table from the labels that occur.
std::pair<Imset, LabelsPtr> parse_imset(std::string_view text);

}  // namespace imsets

#endif  // IMSETS_IMSET_HPP
