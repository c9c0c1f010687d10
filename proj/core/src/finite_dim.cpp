#include "qmaps/finite_dim.hpp"

#include <set>
#include <sstream>

#include "qmaps/errors.hpp"

namespace qmaps {

namespace {

Presentation canonical_presentation(const FiniteDimAlgebra::Data& d) {
  const std::size_t n = d.basis_names.size();
  Presentation p;
  auto basis_combo = [&](const Vector& v) {
    NCExpr e;
    for (std::size_t k = 0; k < n; ++k) e += NCExpr::letter(d.basis_names[k]).scaled(v[k]);
    return e;
  };
  std::vector<bool> self_adjoint(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector unit_i(n);
    unit_i[i] = 1;
    self_adjoint[i] = d.involution[i] == unit_i;
    p.generators.push_back({d.basis_names[i], self_adjoint[i]});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector prod(d.structure.begin() + static_cast<long>((i * n + j) * n),
                  d.structure.begin() + static_cast<long>((i * n + j + 1) * n));
      p.relations.push_back(NCExpr::letter(d.basis_names[i]) * NCExpr::letter(d.basis_names[j]) -
                            basis_combo(prod));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!self_adjoint[i]) {
      p.relations.push_back(NCExpr::letter(d.basis_names[i], true) - basis_combo(d.involution[i]));
    }
  }
  p.relations.push_back(basis_combo(d.unit) - NCExpr::constant(1));
  return p;
}

std::string format_vector(const FiniteDimAlgebra::Data& d, const Vector& v) {
  std::size_t nonzero = 0;
  std::size_t last = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_zero()) {
      ++nonzero;
      last = k;
    }
  }
  if (nonzero == 1 && v[last] == Scalar(1)) return d.basis_names[last];
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    if (!first) os << "+";
    first = false;
    if (!(v[k] == Scalar(1))) os << v[k] << "*";
    os << d.basis_names[k];
  }
  os << ")";
  return os.str();
}

}  // namespace

std::vector<Vector> invert(std::vector<Vector> m) {
  const std::size_t n = m.size();
  std::vector<Vector> inv(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw InvalidArgument("invert: matrix not square");
    inv[i][i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw InvalidArgument("invert: singular matrix");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Scalar f = m[col][col].inverse();
    for (std::size_t k = 0; k < n; ++k) {
      m[col][k] *= f;
      inv[col][k] *= f;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const Scalar g = m[r][col];
      for (std::size_t k = 0; k < n; ++k) {
        m[r][k] -= g * m[col][k];
        inv[r][k] -= g * inv[col][k];
      }
    }
  }
  return inv;
}

FiniteDimAlgebra::FiniteDimAlgebra(Data data, Presentation presentation)
    : AlgebraObject(data.name, std::move(presentation)), data_(std::move(data)) {
  build_reduced_tables();
}

std::shared_ptr<const FiniteDimAlgebra> FiniteDimAlgebra::create(Data data) {
  const std::size_t n = data.basis_names.size();
  if (n == 0) throw InvalidArgument("finite-dimensional algebra of dimension 0");
  if (data.structure.size() != n * n * n) throw InvalidArgument("structure constants must be dim^3");
  if (data.unit.size() != n) throw InvalidArgument("unit vector has wrong length");
  if (data.involution.size() != n) throw InvalidArgument("involution matrix has wrong shape");
  for (const auto& row : data.involution) {
    if (row.size() != n) throw InvalidArgument("involution matrix has wrong shape");
  }
  if (data.reduced_complement.size() + 1 != n) {
    throw InvalidArgument("reduced complement must have dim-1 vectors");
  }
  for (const auto& v : data.reduced_complement) {
    if (v.size() != n) throw InvalidArgument("reduced complement vector has wrong length");
  }
  std::set<std::string> names(data.basis_names.begin(), data.basis_names.end());
  if (names.size() != n) throw InvalidArgument("duplicate basis names");
  for (const auto& name : data.basis_names) {
    if (name.find('_') != std::string::npos || name.find('@') != std::string::npos) {
      throw InvalidArgument("basis name '" + name + "' must not contain '_' or '@'");
    }
  }
  Presentation p = canonical_presentation(data);
  return std::make_shared<const FiniteDimAlgebra>(std::move(data), std::move(p));
}

void FiniteDimAlgebra::build_reduced_tables() {
  const std::size_t n = dim();
  std::vector<Vector> cols(n, Vector(n));
  for (std::size_t r = 0; r < n; ++r) {
    cols[r][0] = data_.unit[r];
    for (std::size_t c = 0; c + 1 < n; ++c) cols[r][c + 1] = data_.reduced_complement[c][r];
  }
  try {
    to_reduced_ = invert(cols);
  } catch (const InvalidArgument&) {
    throw InvalidArgument("unit and reduced complement of '" + data_.name + "' do not span");
  }
  for (const auto& v : data_.reduced_complement) complement_names_.push_back(format_vector(data_, v));

  const std::size_t m = complement_size();
  auto natural_product = [&](const Vector& x, const Vector& y) {
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j].is_zero()) continue;
        const Scalar xy = x[i] * y[j];
        for (std::size_t k = 0; k < n; ++k) out[k] += xy * structure_constant(i, j, k);
      }
    }
    return out;
  };
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      complement_products_.push_back(
          split(natural_product(data_.reduced_complement[a], data_.reduced_complement[b])));
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    Vector s(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Scalar ci = data_.reduced_complement[a][i].conj();
      if (ci.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) s[j] += ci * data_.involution[i][j];
    }
    complement_stars_.push_back(split(s));
  }
}

std::pair<Scalar, Vector> FiniteDimAlgebra::split(const Vector& natural) const {
  const std::size_t n = dim();
  Vector reduced(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!natural[k].is_zero()) reduced[r] += to_reduced_[r][k] * natural[k];
    }
  }
  Scalar unit_coeff = reduced[0];
  reduced.erase(reduced.begin());
  return {unit_coeff, reduced};
}

std::pair<Scalar, Vector> FiniteDimAlgebra::split(const Terms& natural) const {
  Vector v(dim());
  for (const auto& [w, c] : natural) v.at(static_cast<std::size_t>(w.at(0))) = c;
  return split(v);
}

Terms FiniteDimAlgebra::unit_terms() const {
  Terms t;
  for (std::size_t i = 0; i < dim(); ++i) accumulate(t, {static_cast<std::int32_t>(i)}, data_.unit[i]);
  return t;
}

Terms FiniteDimAlgebra::multiply_basis(const Word& a, const Word& b) const {
  Terms t;
  const auto i = static_cast<std::size_t>(a.at(0));
  const auto j = static_cast<std::size_t>(b.at(0));
  for (std::size_t k = 0; k < dim(); ++k) {
    accumulate(t, {static_cast<std::int32_t>(k)}, structure_constant(i, j, k));
  }
  return t;
}

Terms FiniteDimAlgebra::star_basis(const Word& w) const {
  Terms t;
  const auto& row = data_.involution.at(static_cast<std::size_t>(w.at(0)));
  for (std::size_t k = 0; k < dim(); ++k) accumulate(t, {static_cast<std::int32_t>(k)}, row[k]);
  return t;
}

Terms FiniteDimAlgebra::generator_terms(const std::string& name) const {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (data_.basis_names[i] == name) return Terms{{{static_cast<std::int32_t>(i)}, Scalar(1)}};
  }
  throw UnknownGenerator(name);
}

std::vector<NCExpr> FiniteDimAlgebra::basis_factors(const Word& w) const {
  return {NCExpr::letter(data_.basis_names.at(static_cast<std::size_t>(w.at(0))))};
}

std::string FiniteDimAlgebra::format_word(const Word& w) const {
  return data_.basis_names.at(static_cast<std::size_t>(w.at(0)));
}

std::vector<Word> FiniteDimAlgebra::basis_words(std::size_t /*max_length*/) const {
  std::vector<Word> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back({static_cast<std::int32_t>(i)});
  return out;
}

std::vector<std::string> FiniteDimAlgebra::axiom_failures() const {
  std::vector<std::string> out;
  const std::size_t n = dim();
  auto b = [&](std::size_t i) { return basis({static_cast<std::int32_t>(i)}); };
  const Element one = unit();
  for (std::size_t i = 0; i < n; ++i) {
    if (!(one * b(i) == b(i)) || !(b(i) * one == b(i))) {
      out.push_back("unit fails on " + basis_name(i));
    }
    if (!(b(i).star().star() == b(i))) out.push_back("involution not involutive on " + basis_name(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (!((b(i) * b(j)).star() == b(j).star() * b(i).star())) {
        out.push_back("involution not anti-multiplicative on " + basis_name(i) + "," + basis_name(j));
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (!((b(i) * b(j)) * b(k) == b(i) * (b(j) * b(k)))) {
          out.push_back("not associative on " + basis_name(i) + "," + basis_name(j) + "," +
                        basis_name(k));
        }
      }
    }
  }
  return out;
}

FiniteDimPtr make_cn(std::size_t n) {
  if (n == 0) throw InvalidArgument("make_cn: n must be positive");
  FiniteDimAlgebra::Data d;
  d.name = "C^" + std::to_string(n);
  d.structure.assign(n * n * n, Scalar());
  d.unit.assign(n, Scalar(1));
  d.involution.assign(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i) {
    d.basis_names.push_back("e" + std::to_string(i + 1));
    d.structure[(i * n + i) * n + i] = 1;
    d.involution[i][i] = 1;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Vector v(n);
    v[i] = 1;
    d.reduced_complement.push_back(v);
  }
  return FiniteDimAlgebra::create(std::move(d));
}

FiniteDimPtr make_matrix_algebra(std::size_t n) {
  if (n == 0) throw InvalidArgument("make_matrix_algebra: n must be positive");
  const std::size_t dim = n * n;
  auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
  FiniteDimAlgebra::Data d;
  d.name = "M_" + std::to_string(n);
  d.structure.assign(dim * dim * dim, Scalar());
  d.unit.assign(dim, Scalar());
  d.involution.assign(dim, Vector(dim));
  const std::string sep = n >= 10 ? "." : "";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      d.basis_names.push_back("E" + std::to_string(i + 1) + sep + std::to_string(j + 1));
      d.involution[idx(i, j)][idx(j, i)] = 1;
      for (std::size_t l = 0; l < n; ++l) {
        // E_ij E_jl = E_il
        d.structure[(idx(i, j) * dim + idx(j, l)) * dim + idx(i, l)] = 1;
      }
    }
    d.unit[idx(i, i)] = 1;
  }
  const Scalar inv_n = Scalar::rational(1, static_cast<long>(n));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Vector v(dim);
    for (std::size_t k = 0; k < n; ++k) v[idx(k, k)] = -inv_n;
    v[idx(i, i)] += 1;
    d.reduced_complement.push_back(v);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Vector v(dim);
      v[idx(i, j)] = 1;
      d.reduced_complement.push_back(v);
    }
  }
  return FiniteDimAlgebra::create(std::move(d));
}

}  // namespace qmaps
