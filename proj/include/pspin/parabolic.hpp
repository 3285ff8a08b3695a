#pragma once

#include "errors.hpp"
#include "rootdata.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace pspin {

/**
 * Standard parabolic of GL(2n), stored by its set of simple roots
 * Delta_P (indices i with a_i in Delta_P).
 */
class Parabolic {
 public:
  Parabolic(int n, std::set<int> delta) : n_(n), delta_(std::move(delta)) {
    detail::require_rank(n);
    for (int i : delta_)
      if (i < 1 || i > 2 * n - 1) throw std::invalid_argument("simple root index out of range");
  }

  static Parabolic borel(int n) { return Parabolic(n, {}); }
  static Parabolic whole(int n) {
    std::set<int> all;
    for (int i = 1; i < 2 * n; ++i) all.insert(i);
    return Parabolic(n, std::move(all));
  }
  /// Levi of block sizes parts; cut points are the partial sums.
  static Parabolic from_composition(const std::vector<int>& parts) {
    int total = 0;
    for (int m : parts) {
      if (m <= 0) throw std::invalid_argument("composition parts must be positive");
      total += m;
    }
    if (total == 0 || total % 2 != 0) throw std::invalid_argument("composition must sum to an even 2n");
    std::set<int> delta;
    for (int i = 1; i < total; ++i) delta.insert(i);
    int cut = 0;
    for (std::size_t b = 0; b + 1 < parts.size(); ++b) {
      cut += parts[b];
      delta.erase(cut);
    }
    return Parabolic(total / 2, std::move(delta));
  }

  int rank() const { return n_; }
  int size() const { return 2 * n_; }
  const std::set<int>& delta() const { return delta_; }
  bool contains_root(int i) const { return delta_.count(i) != 0; }

  std::vector<int> composition() const {
    std::vector<int> parts;
    int len = 1;
    for (int i = 1; i < size(); ++i) {
      if (contains_root(i)) {
        ++len;
      } else {
        parts.push_back(len);
        len = 1;
      }
    }
    parts.push_back(len);
    return parts;
  }
  int block_count() const { return static_cast<int>(size() - 1 - delta_.size()) + 1; }

  /// Block index (0-based) of each position 1..2n.
  std::vector<int> block_of_position() const {
    std::vector<int> b(static_cast<std::size_t>(size()));
    int cur = 0;
    for (int i = 1; i <= size(); ++i) {
      b[i - 1] = cur;
      if (i < size() && !contains_root(i)) ++cur;
    }
    return b;
  }

  bool is_spin() const {
    for (int i : delta_)
      if (!contains_root(size() - i)) return false;
    return true;
  }
  /// P is contained in other.
  bool subset_of(const Parabolic& other) const {
    return std::includes(other.delta_.begin(), other.delta_.end(), delta_.begin(), delta_.end());
  }
  bool is_borel() const { return delta_.empty(); }
  bool is_whole() const { return static_cast<int>(delta_.size()) == size() - 1; }

  /// "B", "G", or the composition "m1,...,mr".
  std::string label() const {
    if (is_borel()) return "B";
    if (is_whole()) return "G";
    std::ostringstream os;
    auto parts = composition();
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    return os.str();
  }

  friend bool operator==(const Parabolic&, const Parabolic&) = default;
  friend auto operator<=>(const Parabolic&, const Parabolic&) = default;

 private:
  int n_;
  std::set<int> delta_;
};

/// "m1,...,mr"; also "B", "G" given n, and "Q" for (n,n).
inline Parabolic parse_parabolic(const std::string& text, int n) {
  if (text == "B") return Parabolic::borel(n);
  if (text == "G") return Parabolic::whole(n);
  if (text == "Q") return Parabolic::from_composition({n, n});
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    auto field = text.substr(pos, next - pos);
    if (field.empty() || !std::all_of(field.begin(), field.end(), ::isdigit))
      throw ParseError(pos, "expected a positive block size");
    parts.push_back(std::stoi(field));
    pos = next + 1;
  }
  return Parabolic::from_composition(parts);
}

/** GSpin parabolic, by the indices i with b_i in its simple roots. */
struct GSpinParabolic {
  int n;
  std::set<int> delta;
  friend bool operator==(const GSpinParabolic&, const GSpinParabolic&) = default;
};

/** Parabolic whose simple roots are symmetric under a_i <-> a_{2n-i}. */
class SpinParabolic : public Parabolic {
 public:
  explicit SpinParabolic(Parabolic p) : Parabolic(std::move(p)) {
    if (!is_spin()) throw NonSpinParabolic("parabolic " + label() + " is not spin");
  }

  static SpinParabolic from_composition(const std::vector<int>& parts) {
    return SpinParabolic(Parabolic::from_composition(parts));
  }
  static SpinParabolic borel(int n) { return SpinParabolic(Parabolic::borel(n)); }
  static SpinParabolic whole(int n) { return SpinParabolic(Parabolic::whole(n)); }

  /// Spin parabolic with X_P = x.
  static SpinParabolic from_xp(const std::set<int>& x, int n) {
    std::set<int> delta;
    for (int i = 1; i < 2 * n; ++i) {
      const int folded = std::min(i, 2 * n - i);
      if (!x.count(folded)) delta.insert(i);
    }
    for (int i : x)
      if (i < 1 || i > n) throw std::invalid_argument("X_P element out of range");
    return SpinParabolic(Parabolic(n, std::move(delta)));
  }

  /// {i <= n : a_i not in Delta_P}
  std::set<int> xp() const {
    std::set<int> x;
    for (int i = 1; i <= rank(); ++i)
      if (!contains_root(i)) x.insert(i);
    return x;
  }

  GSpinParabolic gspin_partner() const {
    GSpinParabolic g{rank(), {}};
    for (int i = 1; i <= rank(); ++i)
      if (contains_root(i)) g.delta.insert(i);
    return g;
  }
};

inline SpinParabolic parse_spin_parabolic(const std::string& text, int n) {
  return SpinParabolic(parse_parabolic(text, n));
}

inline std::string format_set(const std::set<int>& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i : s) {
    os << (first ? "" : ",") << i;
    first = false;
  }
  os << '}';
  return os.str();
}

inline SpinParabolic intersect(const SpinParabolic& p, const SpinParabolic& q) {
  if (p.rank() != q.rank()) throw RankMismatch("intersecting parabolics of different rank");
  std::set<int> delta;
  std::set_intersection(p.delta().begin(), p.delta().end(), q.delta().begin(), q.delta().end(),
                        std::inserter(delta, delta.begin()));
  return SpinParabolic(Parabolic(p.rank(), std::move(delta)));
}

/**
 * All spin parabolics of rank n, ordered by #X_P descending then X_P
 * lexicographically: B first, G last.
 */
inline std::vector<SpinParabolic> all_spin_parabolics(int n) {
  std::vector<std::set<int>> xs;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::set<int> x;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) x.insert(i + 1);
    xs.push_back(std::move(x));
  }
  std::sort(xs.begin(), xs.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  std::vector<SpinParabolic> out;
  for (const auto& x : xs) out.push_back(SpinParabolic::from_xp(x, n));
  return out;
}

/// Exponents of diag(p^{r-1} I_{m1}, ..., p^0 I_{mr}).
inline GLCocharacter t_P(const Parabolic& p) {
  auto out = GLCocharacter::zero(static_cast<std::size_t>(p.size()));
  const auto blocks = p.block_of_position();
  const int r = p.block_count();
  for (int i = 0; i < p.size(); ++i) out[i] = r - 1 - blocks[i];
  return out;
}

/// Gaps lambda_i - lambda_{i+1} agree with base for every a_i in Delta_P.
inline bool weight_in_parabolic_coset(const PureWeight& lambda, const PureWeight& base, const Parabolic& p) {
  if (lambda.rank() != base.rank() || lambda.rank() != p.rank()) throw RankMismatch("weight/parabolic rank");
  for (int i : p.delta())
    if (lambda.at(i) - lambda.at(i + 1) != base.at(i) - base.at(i + 1)) return false;
  return true;
}

inline int pure_parabolic_dim(const SpinParabolic& p) { return static_cast<int>(p.xp().size()) + 1; }

/// The pure basis alpha_0, alpha_1..alpha_n.
inline std::vector<GLCharacter> alpha_basis(int n) {
  std::vector<GLCharacter> out;
  out.push_back(GLCharacter(std::vector<std::int64_t>(2 * static_cast<std::size_t>(n), 1)));
  for (int i = 1; i < n; ++i) {
    auto a = GLCharacter::zero(2 * n);
    for (int j = 0; j < i; ++j) {
      a[j] = 1;
      a[2 * n - 1 - j] = -1;
    }
    out.push_back(a);
  }
  auto last = GLCharacter::zero(2 * n);
  for (int j = 0; j < n; ++j) last[j] = 1;
  out.push_back(last);
  return out;
}

struct AlphaDecomposition {
  std::vector<std::int64_t> mu;  ///< mu_0..mu_n
  bool nonnegative;
};

/// lambda = base + sum mu_i alpha_i.
inline AlphaDecomposition alpha_basis_decompose(const PureWeight& lambda, const PureWeight& base) {
  if (lambda.rank() != base.rank()) throw RankMismatch("alpha_basis_decompose");
  const int n = lambda.rank();
  const auto d = lambda.character() - base.character();
  AlphaDecomposition out{std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1), true};
  out.mu[0] = d[n];
  for (int i = 1; i < n; ++i) out.mu[i] = d[i - 1] - d[i];
  out.mu[n] = d[n - 1] - d[n];
  for (auto m : out.mu)
    if (m < 0) out.nonnegative = false;
  return out;
}

struct IntInterval {
  std::int64_t lo;
  std::int64_t hi;
  bool contains(std::int64_t j) const { return lo <= j && j <= hi; }
  std::vector<std::int64_t> values() const {
    std::vector<std::int64_t> v;
    for (auto j = lo; j <= hi; ++j) v.push_back(j);
    return v;
  }
};

/// -lambda_{n+1} >= j >= -lambda_n.
inline IntInterval crit_range(const PureWeight& lambda) {
  if (!lambda.dominant()) throw std::invalid_argument("crit_range needs a dominant weight");
  const int n = lambda.rank();
  return {-lambda.at(n), -lambda.at(n + 1)};
}

/// j - sw(lambda - base)/2; the purity gap must be even.
inline std::int64_t j_lambda(std::int64_t j, const PureWeight& lambda, const PureWeight& base) {
  const auto gap = lambda.sw() - base.sw();
  if (gap % 2 != 0) throw std::invalid_argument("odd purity gap between weights");
  return j - gap / 2;
}

}  // namespace pspin
