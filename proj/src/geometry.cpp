#include "daw/geometry.hpp"

namespace daw {

std::size_t dim_V(const AffineCartanData& c) {
  return static_cast<std::size_t>(c.n) + 4;
}

VectorV zero_V(const AffineCartanData& c) {
  return VectorV{std::vector<Rat>(dim_V(c), Rat(0))};
}

VectorV basis_V(const AffineCartanData& c, std::size_t index) {
  VectorV v = zero_V(c);
  v.coords.at(index) = 1;
  return v;
}

VectorV delta1(const AffineCartanData& c) { return basis_V(c, c.n); }
VectorV delta2(const AffineCartanData& c) { return basis_V(c, c.n + 1); }
VectorV lambda1(const AffineCartanData& c) { return basis_V(c, c.n + 2); }
VectorV lambda2(const AffineCartanData& c) { return basis_V(c, c.n + 3); }

VectorV embed_finite(const AffineCartanData& c, const LatticeVector& v) {
  if (v.coords.size() != static_cast<std::size_t>(c.n))
    throw MismatchedTypeError(c.type_id + ": finite vector has wrong rank");
  VectorV out = zero_V(c);
  for (int i = 0; i < c.n; ++i) out.coords[i] = v.coords[i];
  out.coords[c.n] = v.delta;
  return out;
}

VectorV add_V(const VectorV& x, const VectorV& y) {
  VectorV out = x;
  for (std::size_t i = 0; i < out.coords.size(); ++i)
    out.coords[i] += y.coords[i];
  return out;
}

VectorV sub_V(const VectorV& x, const VectorV& y) {
  VectorV out = x;
  for (std::size_t i = 0; i < out.coords.size(); ++i)
    out.coords[i] -= y.coords[i];
  return out;
}

VectorV scale_V(const Rat& s, const VectorV& x) {
  VectorV out = x;
  for (auto& v : out.coords) v *= s;
  return out;
}

VectorV tilde_root_vector(const AffineCartanData& c, const TildeRoot& r) {
  VectorV out = zero_V(c);
  for (int i = 0; i < c.n; ++i) out.coords[i] = r.base.coords.at(i);
  out.coords[c.n] = r.m;
  out.coords[c.n + 1] = r.n;
  return out;
}

bool in_tilde_R(const AffineCartanData& c, const TildeRoot& r) {
  if (r.base.delta != 0) return false;
  if (r.base.coords.size() != static_cast<std::size_t>(c.n)) return false;
  if (!r.halfFlag) {
    std::vector<long> b(c.n);
    for (int i = 0; i < c.n; ++i) {
      if (!rat_is_int(r.base.coords[i])) return false;
      b[i] = static_cast<long>(r.base.coords[i].get_num().get_si());
    }
    if (!c.is_finite_root(b)) return false;
    if (c.is_short_root(b)) return rat_is_int(r.m) && rat_is_int(r.n);
    // long root: delta multiples must be divisible by r
    return rat_is_int(r.m / c.r) && rat_is_int(r.n / c.r);
  }
  // half-long component: only present for the weight-lattice family
  if (c.lattice_mode != LatticeMode::WeightLattice) return false;
  std::vector<long> b(c.n);
  for (int i = 0; i < c.n; ++i) {
    Rat twice = 2 * r.base.coords[i];
    if (!rat_is_int(twice)) return false;
    b[i] = static_cast<long>(twice.get_num().get_si());
  }
  if (!c.is_finite_root(b) || !c.is_long_root(b)) return false;
  return rat_is_int(r.m - Rat(1, 2)) && rat_is_int(r.n - Rat(1, 2));
}

Mat gram_V(const AffineCartanData& c) {
  std::size_t d = dim_V(c);
  Mat g(d, d);
  Mat fg = c.finite_gram();
  for (int i = 0; i < c.n; ++i)
    for (int j = 0; j < c.n; ++j) g(i, j) = fg(i, j);
  g(c.n, c.n + 2) = g(c.n + 2, c.n) = 1;      // (delta1, Lambda1)
  g(c.n + 1, c.n + 3) = g(c.n + 3, c.n + 1) = 1;  // (delta2, Lambda2)
  return g;
}

Rat form_V(const AffineCartanData& c, const VectorV& x, const VectorV& y) {
  std::size_t d = dim_V(c);
  if (x.coords.size() != d || y.coords.size() != d)
    throw MismatchedTypeError(c.type_id + ": vector has wrong dimension");
  std::vector<Rat> gy = gram_V(c).apply(y.coords);
  Rat s = 0;
  for (std::size_t i = 0; i < d; ++i) s += x.coords[i] * gy[i];
  return s;
}

Mat reflect(const AffineCartanData& c, const VectorV& a) {
  Rat norm = form_V(c, a, a);
  if (norm == 0) throw IsotropicRootError(c.type_id + ": isotropic root");
  std::size_t d = dim_V(c);
  std::vector<Rat> ga = gram_V(c).apply(a.coords);  // (e_j, a) = ga[j]
  Mat m = Mat::identity(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      m(i, j) -= 2 * a.coords[i] * ga[j] / norm;
  return m;
}

Mat reflect(const AffineCartanData& c, const TildeRoot& r) {
  return reflect(c, tilde_root_vector(c, r));
}

Mat generator_matrix(const AffineCartanData& c, const std::string& gen_id) {
  if (gen_id == "tau") return central_matrix(c, c.a0inv());
  VectorV th = embed_finite(c, theta(c));
  if (gen_id == "s_01")
    return reflect(c, scale_V(c.a0inv(), sub_V(delta1(c), th)));
  if (gen_id == "s_03")
    return reflect(c, scale_V(c.a0inv(), sub_V(delta2(c), th)));
  if (gen_id == "s_02")
    return reflect(
        c, scale_V(c.a0inv(), sub_V(add_V(delta1(c), delta2(c)), th)));
  if (gen_id.size() > 2 && gen_id.compare(0, 2, "s_") == 0) {
    int i = 0;
    try {
      i = std::stoi(gen_id.substr(2));
    } catch (const std::exception&) {
      throw UnknownGeneratorError("bad generator id: " + gen_id);
    }
    if (i >= 1 && i <= c.n) return reflect(c, basis_V(c, i - 1));
  }
  throw UnknownGeneratorError("bad generator id: " + gen_id);
}

Mat translation_matrix(const AffineCartanData& c, TranslationKind kind,
                       const LatticeVector& v) {
  if (!in_lattice(c, v))
    throw NotInLatticeError(c.type_id + ": vector is not in the lattice");
  // The delta component of v only shifts mu by a multiple of the relevant
  // delta, which leaves the map unchanged; drop it.
  LatticeVector finite{v.coords, Rat(0)};
  VectorV mu = embed_finite(c, finite);
  VectorV dl = kind == TranslationKind::Lambda ? delta1(c) : delta2(c);
  Rat half_norm = form_V(c, mu, mu) / 2;
  VectorV shifted = sub_V(mu, scale_V(half_norm, dl));
  std::size_t d = dim_V(c);
  Mat m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    VectorV e = basis_V(c, j);
    VectorV col = sub_V(e, scale_V(form_V(c, e, mu), dl));
    col = add_V(col, scale_V(form_V(c, e, dl), shifted));
    for (std::size_t i = 0; i < d; ++i) m(i, j) = col.coords[i];
  }
  return m;
}

Mat central_matrix(const AffineCartanData& c, const Rat& coef) {
  std::size_t d = dim_V(c);
  Mat m(d, d);
  VectorV d1 = delta1(c), d2 = delta2(c);
  for (std::size_t j = 0; j < d; ++j) {
    VectorV e = basis_V(c, j);
    VectorV col = add_V(e, scale_V(coef * form_V(c, e, d2), d1));
    col = sub_V(col, scale_V(coef * form_V(c, e, d1), d2));
    for (std::size_t i = 0; i < d; ++i) m(i, j) = col.coords[i];
  }
  return m;
}

bool preserves_form(const AffineCartanData& c, const Mat& m) {
  Mat g = gram_V(c);
  std::size_t d = dim_V(c);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Rat> mi = m.apply(basis_V(c, i).coords);
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<Rat> mj = m.apply(basis_V(c, j).coords);
      std::vector<Rat> gmj = g.apply(mj);
      Rat s = 0;
      for (std::size_t k = 0; k < d; ++k) s += mi[k] * gmj[k];
      if (s != g(i, j)) return false;
    }
  }
  return true;
}

}  // namespace daw
