#include "korn/laminates.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "korn/rng.hpp"

namespace korn {

namespace {

constexpr double kWeightTol = 1e-12;
constexpr double kBaryTol = 1e-10;
constexpr double kRankTol = 1e-9;

}  // namespace

Laminate::Laminate(Matrix root)
    : shape_{static_cast<int>(root.rows()), static_cast<int>(root.cols())},
      trace_root_(root) {
  atoms_.emplace_back(std::move(root), 1.0);
}

Laminate::Laminate(std::vector<std::pair<Matrix, double>> atoms)
    : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw std::invalid_argument("Laminate: no atoms");
  shape_ = {static_cast<int>(atoms_[0].first.rows()),
            static_cast<int>(atoms_[0].first.cols())};
  double total = 0.0;
  for (const auto& [a, w] : atoms_) {
    if (a.rows() != shape_.rows || a.cols() != shape_.cols)
      throw std::invalid_argument("Laminate: atom shape mismatch");
    if (w <= 0.0) throw std::invalid_argument("Laminate: weight <= 0");
    total += w;
  }
  if (std::abs(total - 1.0) > kWeightTol)
    throw std::invalid_argument("Laminate: weights must sum to 1");
}

const Matrix& Laminate::trace_root() const {
  if (!trace_root_)
    throw std::logic_error("Laminate: no construction trace");
  return *trace_root_;
}

Laminate split(const Laminate& lam, int atom_index, const Matrix& b,
               const Matrix& c, double t) {
  if (atom_index < 0 ||
      atom_index >= static_cast<int>(lam.atoms_.size()))
    throw std::invalid_argument("split: atom index out of range");
  if (!(t > 0.0 && t < 1.0))
    throw std::invalid_argument("split: t must be in (0,1)");
  const auto& [a, w] = lam.atoms_[atom_index];
  if (b.rows() != a.rows() || b.cols() != a.cols() || c.rows() != a.rows() ||
      c.cols() != a.cols())
    throw std::invalid_argument("split: shape mismatch");
  const Matrix recomposed = t * b + (1.0 - t) * c;
  if ((a - recomposed).norm() > kBaryTol * std::max(1.0, a.norm()))
    throw std::invalid_argument("split: barycenter violation");
  if (numerical_rank(b - c, kRankTol) > 1)
    throw std::invalid_argument("split: rank violation");

  Laminate out = lam;
  out.atoms_[atom_index] = {b, t * w};
  out.atoms_.insert(out.atoms_.begin() + atom_index + 1, {c, (1.0 - t) * w});
  out.order_ += 1;
  if (out.trace_root_) out.trace_.push_back({atom_index, b, c, t});
  return out;
}

Matrix barycenter(const Laminate& lam) {
  Matrix out = Matrix::Zero(lam.shape().rows, lam.shape().cols);
  for (const auto& [a, w] : lam.atoms()) out += w * a;
  return out;
}

DyadicMartingale::DyadicMartingale(
    std::vector<std::vector<Matrix>> levels,
    std::vector<std::vector<double>> split_probs)
    : levels_(std::move(levels)), probs_(std::move(split_probs)) {
  if (levels_.empty())
    throw std::invalid_argument("DyadicMartingale: empty");
  const int n = static_cast<int>(levels_.size()) - 1;
  if (static_cast<int>(probs_.size()) != n)
    throw std::invalid_argument("DyadicMartingale: probs/levels mismatch");
  for (int l = 0; l <= n; ++l)
    if (levels_[l].size() != (1ull << l))
      throw std::invalid_argument("DyadicMartingale: bad level size");
  for (int l = 0; l < n; ++l) {
    if (probs_[l].size() != (1ull << l))
      throw std::invalid_argument("DyadicMartingale: bad prob level size");
    for (size_t i = 0; i < levels_[l].size(); ++i) {
      const double t = probs_[l][i];
      if (!(t > 0.0 && t < 1.0))
        throw std::invalid_argument("DyadicMartingale: t outside (0,1)");
      const Matrix& parent = levels_[l][i];
      const Matrix& child0 = levels_[l + 1][2 * i];
      const Matrix& child1 = levels_[l + 1][2 * i + 1];
      if ((t * child0 + (1.0 - t) * child1 - parent).norm() >
          1e-12 * std::max(1.0, parent.norm() + child0.norm() +
                                    child1.norm()))
        throw std::invalid_argument(
            "DyadicMartingale: barycenter recursion violated");
      if (numerical_rank(child0 - child1, kRankTol) > 1)
        throw std::invalid_argument(
            "DyadicMartingale: increment rank exceeds 1");
    }
  }
}

double DyadicMartingale::leaf_probability(std::uint64_t index) const {
  const int n = depth();
  double p = 1.0;
  for (int l = 0; l < n; ++l) {
    const std::uint64_t node = index >> (n - l);
    const int bit = static_cast<int>((index >> (n - l - 1)) & 1ull);
    p *= bit == 0 ? probs_[l][node] : 1.0 - probs_[l][node];
  }
  return p;
}

DyadicMartingale to_martingale(const Laminate& lam) {
  if (!lam.has_trace())
    throw std::logic_error("to_martingale: laminate has no trace");
  std::vector<std::vector<Matrix>> levels{{lam.trace_root()}};
  std::vector<std::vector<double>> probs;
  std::vector<int> node_atom{0};  // atom index per node of the last level

  for (const SplitRecord& rec : lam.trace()) {
    const auto& prev = levels.back();
    std::vector<Matrix> next;
    std::vector<double> t_level;
    std::vector<int> next_atom;
    next.reserve(prev.size() * 2);
    for (size_t i = 0; i < prev.size(); ++i) {
      const int a = node_atom[i];
      if (a == rec.atom_index) {
        next.push_back(rec.b);
        next.push_back(rec.c);
        next_atom.push_back(a);
        next_atom.push_back(a + 1);
        t_level.push_back(rec.t);
      } else {
        next.push_back(prev[i]);
        next.push_back(prev[i]);
        const int shifted = a < rec.atom_index ? a : a + 1;
        next_atom.push_back(shifted);
        next_atom.push_back(shifted);
        t_level.push_back(0.5);
      }
    }
    levels.push_back(std::move(next));
    probs.push_back(std::move(t_level));
    node_atom = std::move(next_atom);
  }
  return DyadicMartingale(std::move(levels), std::move(probs));
}

Laminate from_martingale(const DyadicMartingale& mart) {
  const int n = mart.depth();
  const auto& leaves = mart.levels().back();
  std::vector<std::pair<Matrix, double>> atoms;
  for (std::uint64_t i = 0; i < leaves.size(); ++i) {
    const double p = mart.leaf_probability(i);
    bool merged = false;
    for (auto& [a, w] : atoms) {
      if ((a - leaves[i]).norm() <=
          1e-12 * std::max(1.0, leaves[i].norm())) {
        w += p;
        merged = true;
        break;
      }
    }
    if (!merged) atoms.emplace_back(leaves[i], p);
  }
  (void)n;
  return Laminate(std::move(atoms));
}

double evaluate_f(const MatrixSubspace& x, double p, double c,
                  const Laminate& lam) {
  if (!(lam.shape() == x.shape()))
    throw std::invalid_argument("evaluate_f: shape mismatch");
  if (p <= 1.0 || !std::isfinite(p))
    throw std::invalid_argument("evaluate_f: p must be in (1, inf)");
  if (c < 0.0) throw std::invalid_argument("evaluate_f: C must be >= 0");
  double total = 0.0;
  for (const auto& [a, w] : lam.atoms()) {
    const double pn = x.project(a).norm();
    const double qn = x.complement(a).norm();
    total += w * (std::pow(c, p) * std::pow(pn, p) - std::pow(qn, p));
  }
  return total;
}

ScalarTransformPair::ScalarTransformPair(
    std::vector<std::vector<double>> f_levels,
    std::vector<std::vector<int>> signs)
    : f_levels_(std::move(f_levels)), signs_(std::move(signs)) {
  if (f_levels_.empty())
    throw std::invalid_argument("ScalarTransformPair: empty");
  const int n = static_cast<int>(f_levels_.size()) - 1;
  if (static_cast<int>(signs_.size()) != n)
    throw std::invalid_argument("ScalarTransformPair: signs/levels mismatch");
  if (f_levels_[0].size() != 1 || f_levels_[0][0] != 0.0)
    throw std::invalid_argument("ScalarTransformPair: f(root) must be 0");
  g_levels_.assign(f_levels_.size(), {});
  g_levels_[0] = {0.0};
  for (int l = 0; l < n; ++l) {
    if (f_levels_[l].size() != (1ull << l) ||
        f_levels_[l + 1].size() != (2ull << l) ||
        signs_[l].size() != (1ull << l))
      throw std::invalid_argument("ScalarTransformPair: bad level size");
    g_levels_[l + 1].resize(2ull << l);
    for (size_t i = 0; i < f_levels_[l].size(); ++i) {
      if (signs_[l][i] != 1 && signs_[l][i] != -1)
        throw std::invalid_argument("ScalarTransformPair: sign not +-1");
      const double f = f_levels_[l][i];
      const double f0 = f_levels_[l + 1][2 * i];
      const double f1 = f_levels_[l + 1][2 * i + 1];
      if (std::abs(0.5 * (f0 + f1) - f) >
          1e-12 * std::max({1.0, std::abs(f0), std::abs(f1)}))
        throw std::invalid_argument(
            "ScalarTransformPair: martingale recursion violated");
      const double g = g_levels_[l][i];
      g_levels_[l + 1][2 * i] = g + signs_[l][i] * (f0 - f);
      g_levels_[l + 1][2 * i + 1] = g + signs_[l][i] * (f1 - f);
    }
  }
}

DyadicMartingale transform_embed(const Matrix& a, const Matrix& b,
                                 const ScalarTransformPair& pair) {
  if (numerical_rank(a + b, kRankTol) > 1 ||
      numerical_rank(a - b, kRankTol) > 1)
    throw std::invalid_argument(
        "transform_embed: A +- B must have rank <= 1");
  std::vector<std::vector<Matrix>> levels;
  std::vector<std::vector<double>> probs;
  const auto& f = pair.f_levels();
  const auto& g = pair.g_levels();
  for (size_t l = 0; l < f.size(); ++l) {
    std::vector<Matrix> level;
    level.reserve(f[l].size());
    for (size_t i = 0; i < f[l].size(); ++i)
      level.push_back(a * f[l][i] + b * g[l][i]);
    levels.push_back(std::move(level));
    if (l + 1 < f.size()) probs.emplace_back(f[l].size(), 0.5);
  }
  return DyadicMartingale(std::move(levels), std::move(probs));
}

BurkholderCheck burkholder_check(const ScalarTransformPair& pair, double p) {
  if (p <= 1.0 || !std::isfinite(p))
    throw std::invalid_argument("burkholder_check: p must be in (1, inf)");
  const auto& f = pair.f_levels().back();
  const auto& g = pair.g_levels().back();
  double fp = 0.0, gp = 0.0;
  for (size_t i = 0; i < f.size(); ++i) {
    fp += std::pow(std::abs(f[i]), p);
    gp += std::pow(std::abs(g[i]), p);
  }
  const double inv = 1.0 / static_cast<double>(f.size());
  BurkholderCheck out;
  out.f_norm = std::pow(fp * inv, 1.0 / p);
  out.g_norm = std::pow(gp * inv, 1.0 / p);
  out.ratio = out.f_norm > 0.0
                  ? out.g_norm / out.f_norm
                  : (out.g_norm > 0.0
                         ? std::numeric_limits<double>::infinity()
                         : 0.0);
  return out;
}

ScalarTransformPair random_pair(int depth, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<std::vector<double>> f{{0.0}};
  std::vector<std::vector<int>> signs;
  for (int l = 0; l < depth; ++l) {
    const auto& prev = f.back();
    std::vector<double> next(prev.size() * 2);
    std::vector<int> slevel(prev.size());
    for (size_t i = 0; i < prev.size(); ++i) {
      const double step = normal(rng);
      next[2 * i] = prev[i] + step;
      next[2 * i + 1] = prev[i] - step;
      slevel[i] = (rng() & 1ull) ? 1 : -1;
    }
    f.push_back(std::move(next));
    signs.push_back(std::move(slevel));
  }
  return ScalarTransformPair(std::move(f), std::move(signs));
}

ScalarTransformPair spine_pair(int depth, double ratio, bool alternate) {
  if (depth < 1 || ratio <= 0.0)
    throw std::invalid_argument("spine_pair: bad parameters");
  std::vector<std::vector<double>> f{{0.0}};
  std::vector<std::vector<int>> signs;
  double magnitude = 1.0;
  for (int l = 0; l < depth; ++l) {
    const auto& prev = f.back();
    std::vector<double> next(prev.size() * 2);
    for (size_t i = 0; i < prev.size(); ++i) {
      next[2 * i] = prev[i];
      next[2 * i + 1] = prev[i];
    }
    const double step = (alternate && l % 2 == 1) ? -magnitude : magnitude;
    next[0] = prev[0] + step;  // the all-zeros spine node splits
    next[1] = prev[0] - step;
    f.push_back(std::move(next));
    signs.emplace_back(prev.size(), l % 2 == 0 ? 1 : -1);
    magnitude *= ratio;
  }
  return ScalarTransformPair(std::move(f), std::move(signs));
}

ScalarTransformPair ornstein_transform_pair(int depth) {
  return spine_pair(depth, 2.0, false);
}

ScalarTransformPair greedy_pair(int depth, double p) {
  if (depth < 1) throw std::invalid_argument("greedy_pair: bad depth");
  // doubling spine for f; pick each level's sign to maximize ||g||_p
  std::vector<std::vector<double>> f{{0.0}};
  std::vector<std::vector<int>> signs;
  std::vector<double> g{0.0};
  double magnitude = 1.0;
  for (int l = 0; l < depth; ++l) {
    const auto& prev = f.back();
    std::vector<double> next(prev.size() * 2);
    for (size_t i = 0; i < prev.size(); ++i) {
      next[2 * i] = prev[i];
      next[2 * i + 1] = prev[i];
    }
    next[0] = prev[0] + magnitude;
    next[1] = prev[0] - magnitude;
    double best_norm = -1.0;
    int best_sign = 1;
    std::vector<double> best_g;
    for (const int sign : {1, -1}) {
      std::vector<double> cand(next.size());
      double norm = 0.0;
      for (size_t i = 0; i < prev.size(); ++i) {
        const double df0 = next[2 * i] - prev[i];
        const double df1 = next[2 * i + 1] - prev[i];
        cand[2 * i] = g[i] + sign * df0;
        cand[2 * i + 1] = g[i] + sign * df1;
        norm += std::pow(std::abs(cand[2 * i]), p) +
                std::pow(std::abs(cand[2 * i + 1]), p);
      }
      if (norm > best_norm) {
        best_norm = norm;
        best_sign = sign;
        best_g = std::move(cand);
      }
    }
    signs.emplace_back(prev.size(), best_sign);
    g = std::move(best_g);
    f.push_back(std::move(next));
    magnitude *= 2.0;
  }
  return ScalarTransformPair(std::move(f), std::move(signs));
}

RcLowerBound rc_lower_search(const MatrixSubspace& x, double p, int depth,
                             std::uint64_t seed) {
  if (p <= 1.0 || !std::isfinite(p))
    throw std::invalid_argument("rc_lower_search: p must be in (1, inf)");
  const MatrixShape shape = x.shape();
  if (shape.rows < 2 || shape.cols < 2)
    throw std::invalid_argument("rc_lower_search: ambient too small");
  // built-in embedding: symmetric/antisymmetric corner pair, A +- B rank one
  Matrix a = Matrix::Zero(shape.rows, shape.cols);
  Matrix b = Matrix::Zero(shape.rows, shape.cols);
  const double r = 1.0 / std::sqrt(2.0);
  a(0, 1) = r;
  a(1, 0) = r;
  b(0, 1) = r;
  b(1, 0) = -r;
  if ((a - x.project(a)).norm() > 1e-10 || x.project(b).norm() > 1e-10)
    throw std::invalid_argument(
        "rc_lower_search: no valid (A,B) pair known for this subspace");

  RcLowerBound best;
  auto consider = [&](const std::string& name,
                      const ScalarTransformPair& pair) {
    const BurkholderCheck check = burkholder_check(pair, p);
    if (check.ratio > best.bound) {
      best.bound = check.ratio;
      best.strategy = name;
      best.check = check;
    }
  };
  for (int i = 0; i < 8; ++i)
    consider("random", random_pair(depth, mix_seed(seed, i)));
  consider("greedy", greedy_pair(depth, p));
  for (const double ratio : {1.2, 1.5, 1.8, 2.0}) {
    consider("alternating", spine_pair(depth, ratio, false));
    consider("alternating", spine_pair(depth, ratio, true));
  }
  consider("ornstein", ornstein_transform_pair(depth));
  return best;
}

}  // namespace korn
