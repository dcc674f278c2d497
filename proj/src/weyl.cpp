#include "daw/weyl.hpp"

#include <algorithm>

namespace daw {

LatticeVector scale_lattice(const Rat& s, const LatticeVector& v) {
  LatticeVector out = v;
  for (auto& x : out.coords) x *= s;
  out.delta *= s;
  return out;
}

namespace {

LatticeVector add_lattice(const LatticeVector& x, const LatticeVector& y) {
  LatticeVector out = x;
  for (std::size_t i = 0; i < out.coords.size(); ++i)
    out.coords[i] += y.coords[i];
  out.delta += y.delta;
  return out;
}

// Sign of the root w(alpha_i) read off column i-1; zero columns are not
// roots and signal a matrix outside the Weyl group.
int column_sign(const Mat& m, int col) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m(r, col) > 0) return 1;
    if (m(r, col) < 0) return -1;
  }
  return 0;
}

long c_denominator_bound(const AffineCartanData& c) {
  return c.lattice_mode == LatticeMode::RootLattice ? c.marks[0] : 2;
}

}  // namespace

FiniteWeylElement finite_identity(const AffineCartanData& c) {
  return {Mat::identity(c.n)};
}

FiniteWeylElement simple_reflection(const AffineCartanData& c, int i) {
  if (i < 1 || i > c.n)
    throw UnknownGeneratorError(c.type_id + ": bad simple reflection index");
  Mat m = Mat::identity(c.n);
  // s_i(alpha_j) = alpha_j - a_ij alpha_i
  for (int j = 1; j <= c.n; ++j) m(i - 1, j - 1) -= Rat(c.A[i][j]);
  return {m};
}

FiniteWeylElement theta_reflection(const AffineCartanData& c) {
  LatticeVector th = theta(c);
  Rat norm = bilinear(c, th, th);
  Mat g = c.finite_gram();
  std::vector<Rat> gth = g.apply(th.coords);
  Mat m = Mat::identity(c.n);
  for (int i = 0; i < c.n; ++i)
    for (int j = 0; j < c.n; ++j)
      m(i, j) -= 2 * th.coords[i] * gth[j] / norm;
  return {m};
}

LatticeVector apply_finite(const FiniteWeylElement& w, const LatticeVector& v) {
  return {w.m.apply(v.coords), v.delta};
}

std::vector<int> finite_word(const AffineCartanData& c,
                             const FiniteWeylElement& w) {
  std::size_t bound = c.finite_roots().size() / 2;
  Mat cur = w.m;
  std::vector<int> rev;
  while (!cur.is_identity()) {
    int descent = 0;
    for (int i = 1; i <= c.n && descent == 0; ++i)
      if (column_sign(cur, i - 1) < 0) descent = i;
    if (descent == 0 || rev.size() >= bound)
      throw NotInGroupError(c.type_id + ": matrix is not a Weyl element");
    cur = cur * simple_reflection(c, descent).m;
    rev.push_back(descent);
  }
  return {rev.rbegin(), rev.rend()};
}

std::vector<int> theta_word(const AffineCartanData& c) {
  Mat w = theta_reflection(c).m;
  Mat winv = w.inverse();
  std::vector<int> word;
  std::size_t bound = c.finite_roots().size() / 2;
  while (!w.is_identity()) {
    int descent = 0;
    for (int i = 1; i <= c.n && descent == 0; ++i)
      if (column_sign(winv, i - 1) < 0) descent = i;
    if (descent == 0 || word.size() > bound)
      throw NotInGroupError(c.type_id + ": theta reflection failed to reduce");
    Mat s = simple_reflection(c, descent).m;
    w = s * w;
    winv = winv * s;
    word.push_back(descent);
  }
  return word;
}

FiniteWeylElement longest_element(const AffineCartanData& c) {
  Mat g = c.finite_gram();
  // regular dominant vector: (v, alpha_i) = 1 for all i
  std::vector<Rat> ones(c.n, Rat(1));
  std::vector<Rat> v = g.inverse().apply(ones);
  Mat m = Mat::identity(c.n);
  for (;;) {
    std::vector<Rat> gv = g.apply(v);
    int i = 0;
    for (int j = 1; j <= c.n && i == 0; ++j)
      if (gv[j - 1] > 0) i = j;
    if (i == 0) break;
    Mat s = simple_reflection(c, i).m;
    v = s.apply(v);
    m = s * m;
  }
  return {m};
}

bool longest_is_minus_one(const AffineCartanData& c) {
  Mat m = longest_element(c).m;
  for (int i = 0; i < c.n; ++i)
    for (int j = 0; j < c.n; ++j)
      if (m(i, j) != (i == j ? Rat(-1) : Rat(0))) return false;
  return true;
}

DAWElement daw_identity(const AffineCartanData& c) {
  return {finite_identity(c), lattice_zero(c), lattice_zero(c), Rat(0)};
}

DAWElement multiply(const AffineCartanData& c, const DAWElement& g1,
                    const DAWElement& g2) {
  if (g1.mu.coords.size() != g2.mu.coords.size())
    throw MismatchedTypeError(c.type_id + ": elements of different rank");
  FiniteWeylElement w2inv{g2.w.m.inverse()};
  LatticeVector mu = add_lattice(apply_finite(w2inv, g1.mu), g2.mu);
  LatticeVector beta_moved = apply_finite(w2inv, g1.beta);
  LatticeVector beta = add_lattice(beta_moved, g2.beta);
  Rat cc = g1.c + g2.c + bilinear(c, beta_moved, g2.mu);
  return {{g1.w.m * g2.w.m}, mu, beta, cc};
}

DAWElement inverse(const AffineCartanData& c, const DAWElement& g) {
  return {{g.w.m.inverse()},
          scale_lattice(Rat(-1), apply_finite(g.w, g.mu)),
          scale_lattice(Rat(-1), apply_finite(g.w, g.beta)),
          -g.c + bilinear(c, g.beta, g.mu)};
}

DAWElement power(const AffineCartanData& c, const DAWElement& g, long k) {
  DAWElement base = k >= 0 ? g : inverse(c, g);
  long reps = k >= 0 ? k : -k;
  DAWElement out = daw_identity(c);
  for (long i = 0; i < reps; ++i) out = multiply(c, out, base);
  return out;
}

DAWElement from_generator(const AffineCartanData& c,
                          const std::string& gen_id) {
  if (gen_id.size() > 1 && gen_id[0] == 's' && gen_id[1] != '_' &&
      gen_id.find_first_not_of("0123456789", 1) == std::string::npos)
    return from_generator(c, "s_" + gen_id.substr(1));
  if (gen_id == "tau")
    return {finite_identity(c), lattice_zero(c), lattice_zero(c), c.a0inv()};
  LatticeVector th = scale_lattice(c.a0inv(), theta(c));
  LatticeVector mth = scale_lattice(Rat(-1), th);
  if (gen_id == "s_01")
    return {theta_reflection(c), mth, lattice_zero(c), Rat(0)};
  if (gen_id == "s_03")
    return {theta_reflection(c), lattice_zero(c), mth, Rat(0)};
  if (gen_id == "s_02") return {theta_reflection(c), mth, mth, c.a0inv()};
  if (gen_id.size() > 2 && gen_id.compare(0, 2, "s_") == 0) {
    int i = 0;
    try {
      i = std::stoi(gen_id.substr(2));
    } catch (const std::exception&) {
      throw UnknownGeneratorError("bad generator id: " + gen_id);
    }
    if (i >= 1 && i <= c.n)
      return {simple_reflection(c, i), lattice_zero(c), lattice_zero(c),
              Rat(0)};
  }
  throw UnknownGeneratorError("bad generator id: " + gen_id);
}

Mat rho(const AffineCartanData& c, const DAWElement& g) {
  std::size_t d = dim_V(c);
  Mat wbig = Mat::identity(d);
  for (int i = 0; i < c.n; ++i)
    for (int j = 0; j < c.n; ++j) wbig(i, j) = g.w.m(i, j);
  return wbig * translation_matrix(c, TranslationKind::Lambda, g.mu) *
         translation_matrix(c, TranslationKind::Tau, g.beta) *
         central_matrix(c, g.c);
}

DAWElement decode(const AffineCartanData& c, const Mat& m) {
  std::size_t d = dim_V(c);
  if (m.rows() != d || m.cols() != d)
    throw NotInGroupError(c.type_id + ": wrong matrix dimension");
  if (!preserves_form(c, m))
    throw NotInGroupError(c.type_id + ": matrix does not preserve the form");
  std::vector<Rat> m1 = m.apply(lambda1(c).coords);
  std::vector<Rat> m2 = m.apply(lambda2(c).coords);
  if (m1[c.n + 2] != 1 || m1[c.n + 3] != 0 || m2[c.n + 2] != 0 ||
      m2[c.n + 3] != 1)
    throw NotInGroupError(c.type_id + ": Lambda block is not unitriangular");
  Mat w(c.n, c.n);
  for (int i = 0; i < c.n; ++i)
    for (int j = 0; j < c.n; ++j) w(i, j) = m(i, j);
  FiniteWeylElement fw{w};
  finite_word(c, fw);  // throws NotInGroupError if w is not a Weyl element
  Mat winv = w.inverse();
  std::vector<Rat> wmu(m1.begin(), m1.begin() + c.n);
  std::vector<Rat> wbeta(m2.begin(), m2.begin() + c.n);
  LatticeVector mu{winv.apply(wmu), Rat(0)};
  LatticeVector beta{winv.apply(wbeta), Rat(0)};
  Rat cc = -m1[c.n + 1];
  if (!in_lattice(c, mu) || !in_lattice(c, beta))
    throw NotInGroupError(c.type_id + ": translation part is off-lattice");
  if (!rat_denominator_divides(cc, c_denominator_bound(c)))
    throw NotInGroupError(c.type_id + ": central part has a bad denominator");
  DAWElement g{fw, mu, beta, cc};
  if (!(rho(c, g) == m))
    throw NotInGroupError(c.type_id + ": matrix is not in the image of rho");
  return g;
}

DAWElement word_eval(const AffineCartanData& c, const Alphabet& a,
                     const Word& w) {
  DAWElement out = daw_identity(c);
  for (const Letter& l : w) {
    DAWElement g = from_generator(c, a.name(l.gen));
    if (l.sign < 0) g = inverse(c, g);
    out = multiply(c, out, g);
  }
  return out;
}

std::vector<Rat> level_action(const AffineCartanData& c, const DAWElement& g,
                              const std::vector<Rat>& x) {
  if (x.size() != static_cast<std::size_t>(c.n) + 2)
    throw MismatchedTypeError(c.type_id + ": affine vector has wrong size");
  for (const Rat& b : g.beta.coords)
    if (b != 0) throw NotAffineError(c.type_id + ": element has a tau part");
  if (g.beta.delta != 0 || g.c != 0)
    throw NotAffineError(c.type_id + ": element has a central part");
  VectorV v = zero_V(c);
  for (int i = 0; i < c.n; ++i) v.coords[i] = x[i];
  v.coords[c.n] = x[c.n];      // delta -> delta_1
  v.coords[c.n + 2] = x[c.n + 1];  // Lambda_0 -> Lambda_1
  std::vector<Rat> y = rho(c, g).apply(v.coords);
  std::vector<Rat> out(x.size());
  for (int i = 0; i < c.n; ++i) out[i] = y[i];
  out[c.n] = y[c.n];
  out[c.n + 1] = y[c.n + 2];
  return out;
}

DAWElement elliptic_project(const AffineCartanData& c, const DAWElement& g) {
  Rat step = c.a0inv();
  Rat q = g.c / step;
  mpz_class k;
  mpz_fdiv_q(k.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  DAWElement out = g;
  out.c = g.c - Rat(k) * step;
  return out;
}

DAWElement reflection_element(const AffineCartanData& c, const TildeRoot& r) {
  if (!in_tilde_R(c, r))
    throw NotInGroupError(c.type_id + ": root is outside the double affine set");
  return decode(c, reflect(c, r));
}

}  // namespace daw
