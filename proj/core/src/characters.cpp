#include "qmaps/characters.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "qmaps/errors.hpp"

namespace qmaps {

namespace {

using cd = std::complex<double>;

double distance(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

unsigned thread_count(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs fn(begin, end, chunk) over [0, n) split into contiguous chunks.
template <typename Fn>
void parallel_chunks(std::size_t n, unsigned threads, Fn fn) {
  const std::size_t t = std::max<std::size_t>(1, std::min<std::size_t>(threads, n));
  const std::size_t chunk = (n + t - 1) / std::max<std::size_t>(t, 1);
  std::vector<std::thread> pool;
  for (std::size_t c = 0; c < t; ++c) {
    const std::size_t begin = c * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(fn, begin, end, c);
  }
  for (auto& th : pool) th.join();
}

}  // namespace

double residual(const Presentation& pres, const CharacterAssignment& a) {
  for (const auto& g : pres.generators) {
    if (!a.count(g.name)) throw UnknownGenerator(g.name);
  }
  double worst = 0.0;
  for (const auto& rel : pres.all_relations()) {
    cd value = 0.0;
    for (const auto& [word, coeff] : rel.terms()) {
      cd term = coeff.to_complex();
      for (const auto& letter : word) {
        auto it = a.find(letter.name);
        if (it == a.end()) throw UnknownGenerator(letter.name);
        term *= letter.starred ? std::conj(it->second) : it->second;
      }
      value += term;
    }
    worst = std::max(worst, std::abs(value));
  }
  return worst;
}

CharacterSystem::CharacterSystem(const Presentation& pres) {
  pres.validate();
  std::map<std::string, std::size_t> index;
  for (const auto& g : pres.generators) {
    index.emplace(g.name, generator_names_.size());
    generator_names_.push_back(g.name);
    self_adjoint_.push_back(g.self_adjoint);
    first_coordinate_.push_back(coordinate_names_.size());
    if (g.self_adjoint) {
      coordinate_names_.push_back(g.name);
    } else {
      coordinate_names_.push_back(g.name + ".re");
      coordinate_names_.push_back(g.name + ".im");
    }
  }
  if (coordinate_names_.size() > kMaxUnknowns) {
    throw InvalidArgument("character solver supports at most " + std::to_string(kMaxUnknowns) +
                          " real unknowns, got " + std::to_string(coordinate_names_.size()));
  }
  for (const auto& rel : pres.all_relations()) {
    std::vector<Term> terms;
    for (const auto& [word, coeff] : rel.terms()) {
      Term t{coeff.to_complex(), {}};
      for (const auto& letter : word) t.factors.push_back({index.at(letter.name), letter.starred});
      terms.push_back(std::move(t));
    }
    relations_.push_back(std::move(terms));
  }
}

std::complex<double> CharacterSystem::generator_value(std::size_t g, const std::vector<double>& x) const {
  const std::size_t c = first_coordinate_[g];
  return self_adjoint_[g] ? cd(x[c], 0.0) : cd(x[c], x[c + 1]);
}

std::vector<std::complex<double>> CharacterSystem::values(const std::vector<double>& x) const {
  std::vector<cd> out;
  out.reserve(relations_.size());
  for (const auto& rel : relations_) {
    cd v = 0.0;
    for (const auto& t : rel) {
      cd term = t.coeff;
      for (const auto& f : t.factors) {
        const cd g = generator_value(f.generator, x);
        term *= f.starred ? std::conj(g) : g;
      }
      v += term;
    }
    out.push_back(v);
  }
  return out;
}

double CharacterSystem::residual(const std::vector<double>& x) const {
  double worst = 0.0;
  for (const auto& v : values(x)) worst = std::max(worst, std::abs(v));
  return worst;
}

std::vector<double> CharacterSystem::jacobian(const std::vector<double>& x) const {
  const std::size_t d = unknowns();
  std::vector<double> jac(2 * relations_.size() * d, 0.0);
  for (std::size_t r = 0; r < relations_.size(); ++r) {
    std::vector<cd> row(d, 0.0);
    for (const auto& t : relations_[r]) {
      std::vector<cd> vals;
      for (const auto& f : t.factors) {
        const cd g = generator_value(f.generator, x);
        vals.push_back(f.starred ? std::conj(g) : g);
      }
      for (std::size_t i = 0; i < t.factors.size(); ++i) {
        cd rest = t.coeff;
        for (std::size_t j = 0; j < vals.size(); ++j) {
          if (j != i) rest *= vals[j];
        }
        const Factor& f = t.factors[i];
        const std::size_t c = first_coordinate_[f.generator];
        row[c] += rest;
        if (!self_adjoint_[f.generator]) row[c + 1] += rest * cd(0.0, f.starred ? -1.0 : 1.0);
      }
    }
    for (std::size_t k = 0; k < d; ++k) {
      jac[(2 * r) * d + k] = row[k].real();
      jac[(2 * r + 1) * d + k] = row[k].imag();
    }
  }
  return jac;
}

CharacterAssignment CharacterSystem::assignment(const std::vector<double>& x) const {
  CharacterAssignment a;
  for (std::size_t g = 0; g < generator_names_.size(); ++g) a[generator_names_[g]] = generator_value(g, x);
  return a;
}

std::vector<double> CharacterSystem::coordinates(const CharacterAssignment& a) const {
  std::vector<double> x(unknowns());
  for (std::size_t g = 0; g < generator_names_.size(); ++g) {
    auto it = a.find(generator_names_[g]);
    if (it == a.end()) throw UnknownGenerator(generator_names_[g]);
    x[first_coordinate_[g]] = it->second.real();
    if (!self_adjoint_[g]) x[first_coordinate_[g] + 1] = it->second.imag();
  }
  return x;
}

double SolverOptions::effective_coarse_threshold() const {
  return coarse_threshold > 0.0 ? coarse_threshold : std::max(1e-2, step / 2.0);
}

std::optional<std::vector<double>> refine(const CharacterSystem& sys, std::vector<double> x, double tol,
                                          int max_iterations) {
  const auto rows = static_cast<Eigen::Index>(2 * sys.equations());
  const auto cols = static_cast<Eigen::Index>(sys.unknowns());
  for (int it = 0; it <= max_iterations; ++it) {
    const auto vals = sys.values(x);
    double worst = 0.0;
    Eigen::VectorXd r(rows);
    for (std::size_t k = 0; k < vals.size(); ++k) {
      worst = std::max(worst, std::abs(vals[k]));
      r(static_cast<Eigen::Index>(2 * k)) = vals[k].real();
      r(static_cast<Eigen::Index>(2 * k + 1)) = vals[k].imag();
    }
    if (!std::isfinite(worst)) return std::nullopt;
    if (worst <= tol) return x;
    if (it == max_iterations) break;
    const auto jac = sys.jacobian(x);
    const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> j(
        jac.data(), rows, cols);
    const Eigen::VectorXd dx = j.completeOrthogonalDecomposition().solve(-r);
    for (Eigen::Index k = 0; k < cols; ++k) x[static_cast<std::size_t>(k)] += dx(k);
  }
  return std::nullopt;
}

SolveResult solve_grid(const Presentation& pres, const SolverOptions& options) {
  const CharacterSystem sys(pres);
  const std::size_t d = sys.unknowns();
  if (!(options.step > 0.0)) throw InvalidArgument("solver step must be positive");
  std::vector<std::pair<double, double>> box = options.box;
  if (box.empty()) box.assign(d, {-1.5, 1.5});
  if (box.size() != d) throw InvalidArgument("solver box has the wrong number of coordinates");

  std::vector<std::size_t> counts;
  std::size_t total = 1;
  for (const auto& [lo, hi] : box) {
    if (hi < lo) throw InvalidArgument("solver box interval is empty");
    counts.push_back(static_cast<std::size_t>(std::floor((hi - lo) / options.step + 1e-9)) + 1);
    total *= counts.back();
  }
  auto point = [&](std::size_t index) {
    std::vector<double> x(d);
    for (std::size_t k = d; k-- > 0;) {
      x[k] = box[k].first + static_cast<double>(index % counts[k]) * options.step;
      index /= counts[k];
    }
    return x;
  };

  const unsigned threads = thread_count(options.threads);
  const double coarse = options.effective_coarse_threshold();
  std::vector<std::vector<std::size_t>> chunk_seeds(threads);
  parallel_chunks(total, threads, [&](std::size_t begin, std::size_t end, std::size_t c) {
    for (std::size_t i = begin; i < end; ++i) {
      if (sys.residual(point(i)) < coarse) chunk_seeds[c].push_back(i);
    }
  });
  std::vector<std::size_t> seeds;
  for (const auto& s : chunk_seeds) seeds.insert(seeds.end(), s.begin(), s.end());

  std::vector<std::optional<std::vector<double>>> refined(seeds.size());
  parallel_chunks(seeds.size(), threads, [&](std::size_t begin, std::size_t end, std::size_t) {
    for (std::size_t i = begin; i < end; ++i) {
      refined[i] = refine(sys, point(seeds[i]), options.tol, options.max_iterations);
    }
  });

  SolveResult out;
  out.coordinate_names = sys.coordinate_names();
  out.grid_points = total;
  out.seeds = seeds.size();
  std::vector<std::vector<double>> accepted;
  for (auto& r : refined) {
    if (r) {
      accepted.push_back(std::move(*r));
    } else {
      ++out.dropped;
    }
  }
  std::sort(accepted.begin(), accepted.end());
  for (auto& x : accepted) {
    const bool duplicate = std::any_of(out.cloud.begin(), out.cloud.end(),
                                       [&](const auto& y) { return distance(x, y) < options.dedup_radius; });
    if (!duplicate) out.cloud.push_back(std::move(x));
  }
  return out;
}

std::size_t ComponentReport::isolated_count() const {
  return static_cast<std::size_t>(
      std::count_if(components.begin(), components.end(), [](const Component& c) { return c.isolated; }));
}

ComponentReport cluster_components(const std::vector<std::vector<double>>& cloud, double merge_radius) {
  if (cloud.empty()) throw InvalidArgument("cluster_components: empty cloud");
  const std::size_t n = cloud.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (distance(cloud[i], cloud[j]) <= merge_radius) {
        const std::size_t a = find(i), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < n; ++i) members[find(i)].push_back(i);

  ComponentReport report;
  report.merge_radius = merge_radius;
  for (const auto& [root, idx] : members) {
    Component c;
    c.samples = idx.size();
    c.representative = cloud[idx.front()];
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        c.diameter = std::max(c.diameter, distance(cloud[idx[a]], cloud[idx[b]]));
      }
    }
    c.isolated = c.diameter < merge_radius / 2.0;
    report.components.push_back(std::move(c));
  }
  return report;
}

CharacterAssignment noqg_family(NoqgFamily kind, std::complex<double> parameter) {
  const double r = std::abs(parameter);
  switch (kind) {
    case NoqgFamily::kOmega: {
      if (parameter != cd(0.0) && parameter != cd(1.0)) throw InvalidArgument("omega index must be 0 or 1");
      return {{"p", parameter}, {"q", parameter}, {"z", 0.0}};
    }
    case NoqgFamily::kPlus:
    case NoqgFamily::kMinus: {
      if (!(r < 0.5)) throw InvalidArgument("hemisphere families need |zeta| < 1/2");
      const double s = std::sqrt(0.25 - r * r);
      const double sign = kind == NoqgFamily::kPlus ? 1.0 : -1.0;
      return {{"p", 0.5 + sign * s}, {"q", 0.5 - sign * s}, {"z", parameter}};
    }
    case NoqgFamily::kZero: {
      if (std::abs(r - 0.5) > 1e-12) throw InvalidArgument("equator family needs |zeta| = 1/2");
      return {{"p", 0.5}, {"q", 0.5}, {"z", parameter}};
    }
  }
  throw InvalidArgument("unknown family");
}

double distance_to_noqg_families(const CharacterAssignment& a) {
  auto value = [&](const char* name) {
    auto it = a.find(name);
    if (it == a.end()) throw UnknownGenerator(name);
    return it->second;
  };
  auto coords = [](const CharacterAssignment& c) {
    return std::vector<double>{c.at("p").real(), c.at("q").real(), c.at("z").real(), c.at("z").imag()};
  };
  const std::vector<double> x{value("p").real(), value("q").real(), value("z").real(), value("z").imag()};
  std::vector<CharacterAssignment> candidates{noqg_family(NoqgFamily::kOmega, 0.0),
                                              noqg_family(NoqgFamily::kOmega, 1.0)};
  const cd z = value("z");
  const double r = std::abs(z);
  if (r < 0.5) {
    candidates.push_back(noqg_family(NoqgFamily::kPlus, z));
    candidates.push_back(noqg_family(NoqgFamily::kMinus, z));
  }
  candidates.push_back(noqg_family(NoqgFamily::kZero, r > 0.0 ? z * (0.5 / r) : cd(0.5)));
  double best = INFINITY;
  for (const auto& c : candidates) best = std::min(best, distance(x, coords(c)));
  return best;
}

}  // namespace qmaps
