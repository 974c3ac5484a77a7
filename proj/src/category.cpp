#include "fbal/category.hpp"

#include <sstream>
#include <stdexcept>

namespace fbal {

namespace f = field;

FinCategory::FinCategory(Data data) : d_(std::move(data)) {
  const std::size_t n = d_.names.size();
  if (d_.hom_dims.size() != n * n) throw std::invalid_argument("hom_dims must have n*n entries");
  if (d_.comp.size() != n * n * n) throw std::invalid_argument("composition tensor must have n^3 blocks");
  if (d_.identities.size() != n) throw std::invalid_argument("one identity per object required");
  for (std::size_t i = 0; i < n; ++i)
    if (d_.identities[i].size() != hom_dim(i, i)) throw std::invalid_argument("identity has wrong length");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        if (d_.comp[(i * n + j) * n + l].size() != hom_dim(j, l) * hom_dim(i, j) * hom_dim(i, l))
          throw std::invalid_argument("composition block has wrong size");
  if (!d_.generators.empty()) {
    generators_ = d_.generators;
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t a = 0; a < hom_dim(i, j); ++a) generators_.push_back({i, j, a});
  }
}

std::size_t FinCategory::total_hom_dim() const {
  std::size_t s = 0;
  for (std::size_t d : d_.hom_dims) s += d;
  return s;
}

Vector FinCategory::compose(std::size_t i, std::size_t j, std::size_t l, const Vector& g, const Vector& fv) const {
  const std::size_t dij = hom_dim(i, j), djl = hom_dim(j, l), dil = hom_dim(i, l);
  Vector out(dil, 0);
  const auto& block = d_.comp[(i * size() + j) * size() + l];
  for (std::size_t b = 0; b < djl; ++b) {
    if (g[b] == 0) continue;
    for (std::size_t a = 0; a < dij; ++a) {
      if (fv[a] == 0) continue;
      Scalar w = f::mul(g[b], fv[a]);
      const Scalar* row = &block[(b * dij + a) * dil];
      for (std::size_t c = 0; c < dil; ++c)
        if (row[c] != 0) out[c] = f::add(out[c], f::mul(w, row[c]));
    }
  }
  return out;
}

Matrix FinCategory::postcompose(std::size_t i, std::size_t j, std::size_t l, const Vector& g) const {
  const std::size_t dij = hom_dim(i, j), dil = hom_dim(i, l);
  Matrix m(dil, dij);
  for (std::size_t a = 0; a < dij; ++a) {
    Vector e(dij, 0);
    e[a] = 1;
    Vector r = compose(i, j, l, g, e);
    for (std::size_t c = 0; c < dil; ++c) m(c, a) = r[c];
  }
  return m;
}

Matrix FinCategory::precompose(std::size_t i, std::size_t j, std::size_t l, const Vector& fv) const {
  const std::size_t djl = hom_dim(j, l), dil = hom_dim(i, l);
  Matrix m(dil, djl);
  for (std::size_t b = 0; b < djl; ++b) {
    Vector e(djl, 0);
    e[b] = 1;
    Vector r = compose(i, j, l, e, fv);
    for (std::size_t c = 0; c < dil; ++c) m(c, b) = r[c];
  }
  return m;
}

FinCategory FinCategory::opposite() const {
  const std::size_t n = size();
  Data op;
  op.names = d_.names;
  op.hom_dims.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) op.hom_dims[i * n + j] = hom_dim(j, i);
  op.comp.resize(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        // g ∈ Hom(l,j), f ∈ Hom(j,i); g ∘op f = f ∘ g in Hom(l,i).
        const std::size_t dg = hom_dim(l, j), df = hom_dim(j, i), dout = hom_dim(l, i);
        auto& block = op.comp[(i * n + j) * n + l];
        block.assign(dg * df * dout, 0);
        for (std::size_t b = 0; b < dg; ++b)
          for (std::size_t a = 0; a < df; ++a)
            for (std::size_t c = 0; c < dout; ++c) block[(b * df + a) * dout + c] = comp_coeff(l, j, i, a, b, c);
      }
  op.identities = d_.identities;
  for (const auto& g : d_.generators) op.generators.push_back({g.target, g.source, g.index});
  return FinCategory(std::move(op));
}

std::vector<std::string> validate_category(const FinCategory& c) {
  std::vector<std::string> diags;
  const std::size_t n = c.size();
  auto basis = [](std::size_t dim, std::size_t k) {
    Vector e(dim, 0);
    e[k] = 1;
    return e;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < c.hom_dim(i, j); ++a) {
        Vector fa = basis(c.hom_dim(i, j), a);
        if (c.compose(i, j, j, c.identity(j), fa) != fa) {
          std::ostringstream os;
          os << "identity law: id_" << c.name(j) << " o f != f for basis " << a << " of Hom(" << c.name(i)
             << "," << c.name(j) << ")";
          diags.push_back(os.str());
        }
        if (c.compose(i, i, j, fa, c.identity(i)) != fa) {
          std::ostringstream os;
          os << "identity law: f o id_" << c.name(i) << " != f for basis " << a << " of Hom(" << c.name(i)
             << "," << c.name(j) << ")";
          diags.push_back(os.str());
        }
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t m = 0; m < n; ++m)
          for (std::size_t a = 0; a < c.hom_dim(i, j); ++a)
            for (std::size_t b = 0; b < c.hom_dim(j, l); ++b)
              for (std::size_t e = 0; e < c.hom_dim(l, m); ++e) {
                Vector fa = basis(c.hom_dim(i, j), a), gb = basis(c.hom_dim(j, l), b),
                       he = basis(c.hom_dim(l, m), e);
                Vector left = c.compose(i, l, m, he, c.compose(i, j, l, gb, fa));
                Vector right = c.compose(i, j, m, c.compose(j, l, m, he, gb), fa);
                if (left != right) {
                  std::ostringstream os;
                  os << "associativity: (h o g) o f != h o (g o f) on objects " << c.name(i) << "," << c.name(j)
                     << "," << c.name(l) << "," << c.name(m) << " basis (" << e << "," << b << "," << a << ")";
                  diags.push_back(os.str());
                }
              }
  return diags;
}

}  // namespace fbal
