#include "imsets/imset.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>
#include <unordered_set>

#include "imsets/error.hpp"

namespace imsets {

namespace {

Imset::Coefficient checked_add(Imset::Coefficient a, Imset::Coefficient b) {
  Imset::Coefficient r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow("imset coefficient overflow");
  return r;
}

Imset::Coefficient checked_mul(Imset::Coefficient a, Imset::Coefficient b) {
  Imset::Coefficient r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("imset coefficient overflow");
  return r;
}

Imset::Coefficient choose2(int n) { return static_cast<Imset::Coefficient>(n) * (n - 1) / 2; }

}  // namespace

Imset::Coefficient Imset::operator[](VertexSet s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? 0 : it->second;
}

VertexSet Imset::support_union() const {
  VertexSet out;
  for (const auto& [s, k] : terms_) out |= s;
  return out;
}

Imset& Imset::add_at(VertexSet s, Coefficient k) {
  if (k == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(s, k);
  if (!inserted) {
    it->second = checked_add(it->second, k);
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

Imset& Imset::operator+=(const Imset& o) {
  for (const auto& [s, k] : o.terms_) add_at(s, k);
  return *this;
}

Imset& Imset::operator-=(const Imset& o) {
  for (const auto& [s, k] : o.terms_) add_at(s, checked_mul(k, -1));
  return *this;
}

Imset operator*(Imset::Coefficient k, const Imset& u) {
  Imset out;
  if (k == 0) return out;
  for (const auto& [s, c] : u.terms_) out.terms_.emplace(s, checked_mul(k, c));
  return out;
}

Imset delta(VertexSet a) {
  Imset u;
  u.add_at(a, 1);
  return u;
}

Imset semi_elementary(const Triplet& t) {
  Triplet::make(t.a, t.b, t.c);
  Imset u;
  u.add_at(t.a | t.b | t.c, 1).add_at(t.c, 1).add_at(t.a | t.c, -1).add_at(t.b | t.c, -1);
  return u;
}

std::vector<Triplet> elementary_triplets(VertexSet n) {
  if (n.size() < 2) throw InvalidArgument("elementary_imsets: the universe needs at least two vertices");
  std::vector<Triplet> out;
  for (int a : n) {
    for (int b : n) {
      if (a >= b) continue;
      const VertexSet ab = VertexSet::singleton(a).with(b);
      for_each_subset(n - ab, [&](VertexSet c) {
        out.push_back(Triplet{VertexSet::singleton(a), VertexSet::singleton(b), c});
      });
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Imset> elementary_imsets(VertexSet n) {
  std::vector<Imset> out;
  for (const Triplet& t : elementary_triplets(n)) out.push_back(semi_elementary(t));
  return out;
}

Imset::Coefficient coefficient_sum(const Imset& u) {
  Imset::Coefficient s = 0;
  for (const auto& [set, k] : u.terms()) s = checked_add(s, k);
  return s;
}

Imset::Coefficient weighted_size_sum(const Imset& u) {
  Imset::Coefficient s = 0;
  for (const auto& [set, k] : u.terms()) s = checked_add(s, checked_mul(k, set.size()));
  return s;
}

Imset::Coefficient degree_functional(const Imset& u) {
  Imset::Coefficient s = 0;
  for (const auto& [set, k] : u.terms()) s = checked_add(s, checked_mul(k, choose2(set.size())));
  return s;
}

Imset sum_of(const std::vector<Triplet>& terms) {
  Imset u;
  for (const Triplet& t : terms) u += semi_elementary(t);
  return u;
}

// ---- combinatorial decomposition ----------------------------------------

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::int64_t x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Depth-first search over dense residuals. Every combinatorial residual has
// positive entries at its largest nonzero level, and each of them is the top
// set a∪b∪C of some summand, so branching over the summands with that top is
// complete. Branches are pruned by the up-set and down-set inequalities
// (sum over supersets / subsets of any K is non-negative on the cone), and
// failed residuals are memoized for the duration of one call.
class Decomposer {
 public:
  explicit Decomposer(int k) : k_(k), size_(std::size_t{1} << k), residual_(size_, 0), scratch_(size_, 0) {
    for (std::uint32_t t = 0; t < size_; ++t) {
      level_of_.push_back(std::popcount(t));
    }
  }

  std::vector<std::int64_t>& residual() { return residual_; }

  bool run(std::int64_t depth) {
    if (depth < 0) return false;
    return search(depth);
  }

  // Local (a, b, C) of the chosen summands.
  const std::vector<std::array<std::uint32_t, 3>>& chosen() const { return chosen_; }

 private:
  bool screens_pass() {
    // Superset sums.
    scratch_ = residual_;
    for (int i = 0; i < k_; ++i) {
      const std::uint32_t bit = std::uint32_t{1} << i;
      for (std::uint32_t s = 0; s < size_; ++s) {
        if (!(s & bit)) scratch_[s] += scratch_[s | bit];
      }
    }
    for (std::int64_t x : scratch_) {
      if (x < 0) return false;
    }
    // Subset sums.
    scratch_ = residual_;
    for (int i = 0; i < k_; ++i) {
      const std::uint32_t bit = std::uint32_t{1} << i;
      for (std::uint32_t s = 0; s < size_; ++s) {
        if (s & bit) scratch_[s] += scratch_[s ^ bit];
      }
    }
    for (std::int64_t x : scratch_) {
      if (x < 0) return false;
    }
    return true;
  }

  void apply(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::int64_t sign) {
    residual_[a | b | c] -= sign;
    residual_[c] -= sign;
    residual_[a | c] += sign;
    residual_[b | c] += sign;
  }

  bool search(std::int64_t depth) {
    if (depth == 0) {
      return std::all_of(residual_.begin(), residual_.end(), [](std::int64_t x) { return x == 0; });
    }
    if (failed_.count(residual_)) return false;
    if (!screens_pass()) {
      failed_.insert(residual_);
      return false;
    }
    std::uint32_t top = 0;
    int top_level = -1;
    for (std::uint32_t s = 0; s < size_; ++s) {
      if (residual_[s] != 0 && level_of_[s] > top_level) {
        top_level = level_of_[s];
        top = s;
      }
    }
    if (top_level < 2) {
      failed_.insert(residual_);
      return false;
    }
    for (std::uint32_t x = top; x; x &= x - 1) {
      const std::uint32_t a = x & (~x + 1);
      for (std::uint32_t y = x & (x - 1); y; y &= y - 1) {
        const std::uint32_t b = y & (~y + 1);
        const std::uint32_t c = top & ~a & ~b;
        apply(a, b, c, 1);
        chosen_.push_back({a, b, c});
        if (search(depth - 1)) return true;
        chosen_.pop_back();
        apply(a, b, c, -1);
      }
    }
    failed_.insert(residual_);
    return false;
  }

  int k_;
  std::size_t size_;
  std::vector<std::int64_t> residual_;
  std::vector<std::int64_t> scratch_;
  std::vector<int> level_of_;
  std::vector<std::array<std::uint32_t, 3>> chosen_;
  std::unordered_set<std::vector<std::int64_t>, VectorHash> failed_;
};

}  // namespace

std::optional<Decomposition> combinatorial_decompose(const Imset& u) {
  const VertexSet universe = u.support_union();
  if (universe.size() > kMaxDecomposeVertices) {
    throw GuardExceeded("combinatorial_decompose: imset spans " + std::to_string(universe.size()) +
                        " vertices; the limit is " + std::to_string(kMaxDecomposeVertices));
  }
  if (u.is_zero()) return Decomposition{};
  if (coefficient_sum(u) != 0 || weighted_size_sum(u) != 0) return std::nullopt;
  const Imset::Coefficient depth = degree_functional(u);
  if (depth <= 0) return std::nullopt;

  const std::vector<int> members = universe.members();
  const int k = static_cast<int>(members.size());
  auto to_local = [&](VertexSet s) {
    std::uint32_t out = 0;
    for (int i = 0; i < k; ++i) {
      if (s.contains(members[static_cast<std::size_t>(i)])) out |= std::uint32_t{1} << i;
    }
    return out;
  };
  auto to_global = [&](std::uint32_t local) {
    VertexSet out;
    for (int i = 0; i < k; ++i) {
      if ((local >> i) & 1u) out = out.with(members[static_cast<std::size_t>(i)]);
    }
    return out;
  };

  Decomposer search(k);
  for (const auto& [s, coef] : u.terms()) search.residual()[to_local(s)] = coef;
  if (!search.run(depth)) return std::nullopt;
  Decomposition d;
  for (const auto& [a, b, c] : search.chosen()) {
    d.terms.push_back(Triplet{to_global(a), to_global(b), to_global(c)}.canonical());
  }
  std::sort(d.terms.begin(), d.terms.end());
  if (sum_of(d.terms) != u) throw InvariantViolation("combinatorial_decompose: witness does not re-sum to input");
  return d;
}

bool is_combinatorial(const Imset& u) { return combinatorial_decompose(u).has_value(); }

std::optional<std::size_t> degree(const Imset& u) {
  auto d = combinatorial_decompose(u);
  if (!d) return std::nullopt;
  return d->degree();
}

// ---- text form ----------------------------------------------------------

std::string format_imset(const Imset& u, const Labels& labels) {
  std::string out;
  for (const auto& [s, k] : u.terms()) out += std::to_string(k) + " " + labels.format(s) + "\n";
  return out;
}

namespace {

template <typename SetParser>
Imset parse_lines(std::string_view text, SetParser&& parse_set) {
  Imset u;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  std::map<VertexSet, int> seen_at;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    auto brace = line.find('{');
    if (brace == std::string::npos || line.find('}', brace) == std::string::npos) {
      throw InvalidArgument("imset line " + std::to_string(lineno) + ": expected 'coef {labels}'");
    }
    std::string coef_text = line.substr(first, brace - first);
    while (!coef_text.empty() && (coef_text.back() == ' ' || coef_text.back() == '\t')) coef_text.pop_back();
    Imset::Coefficient coef = 0;
    try {
      std::size_t used = 0;
      coef = std::stoll(coef_text, &used);
      if (used != coef_text.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw InvalidArgument("imset line " + std::to_string(lineno) + ": bad coefficient '" + coef_text + "'");
    }
    auto close = line.find('}', brace);
    if (line.find_first_not_of(" \t", close + 1) != std::string::npos) {
      throw InvalidArgument("imset line " + std::to_string(lineno) + ": trailing text after set");
    }
    VertexSet s;
    try {
      s = parse_set(std::string_view(line).substr(brace, close - brace + 1));
    } catch (const InvalidArgument& e) {
      throw InvalidArgument("imset line " + std::to_string(lineno) + ": " + e.what());
    }
    if (auto [it, fresh] = seen_at.emplace(s, lineno); !fresh) {
      throw InvalidArgument("imset line " + std::to_string(lineno) + ": set repeated (first at line " +
                            std::to_string(it->second) + ")");
    }
    u.add_at(s, coef);
  }
  return u;
}

}  // namespace

Imset parse_imset(std::string_view text, const Labels& labels) {
  return parse_lines(text, [&](std::string_view s) { return labels.parse_set(s); });
}

std::pair<Imset, LabelsPtr> parse_imset(std::string_view text) {
  // First pass collects labels so the table is sorted before sets are encoded.
  std::vector<std::string> names;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto open = line.find('{');
    auto close = line.find('}');
    if (open == std::string::npos || close == std::string::npos || close < open) continue;
    std::string inner = line.substr(open + 1, close - open - 1);
    std::istringstream items(inner);
    std::string item;
    while (std::getline(items, item, ',')) {
      auto b = item.find_first_not_of(" \t");
      auto e = item.find_last_not_of(" \t");
      if (b != std::string::npos) names.push_back(item.substr(b, e - b + 1));
    }
  }
  LabelsPtr labels = make_labels(std::move(names));
  return {parse_imset(text, *labels), labels};
}

}  // namespace imsets
