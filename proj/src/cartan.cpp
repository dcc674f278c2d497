#include "daw/cartan.hpp"

#include <algorithm>
#include <regex>
#include <set>

namespace daw {

namespace {

struct ParsedId {
  char family;
  int rank;
  int twist;
};

ParsedId parse_id(const std::string& id) {
  static const std::regex re("^([A-G])([0-9]+)~([0-9]+)$");
  std::smatch m;
  if (!std::regex_match(id, m, re))
    throw UnknownTypeError("unrecognized type id: " + id);
  return {m[1].str()[0], std::stoi(m[2].str()), std::stoi(m[3].str())};
}

std::vector<std::vector<long>> zero_matrix(int size) {
  std::vector<std::vector<long>> a(size, std::vector<long>(size, 0));
  for (int i = 0; i < size; ++i) a[i][i] = 2;
  return a;
}

void set_edge(std::vector<std::vector<long>>& a, int i, int j, long aij,
              long aji) {
  a[i][j] = aij;
  a[j][i] = aji;
}

}  // namespace

Rat AffineCartanData::simple_pairing(int j, int k) const {
  return Rat(A[j][k]) / d[j];
}

Rat AffineCartanData::root_norm(const std::vector<long>& root) const {
  std::vector<Rat> v(root.begin(), root.end());
  std::vector<Rat> gv = finite_gram_.apply(v);
  Rat s = 0;
  for (int i = 0; i < n; ++i) s += v[i] * gv[i];
  return s;
}

// The catalog normalizes short roots to norm 2; the rank-one twisted system
// has a single root of norm 4, which counts as long.
bool AffineCartanData::is_long_root(const std::vector<long>& root) const {
  return root_norm(root) > 2;
}

bool AffineCartanData::is_short_root(const std::vector<long>& root) const {
  return root_norm(root) <= 2;
}

bool AffineCartanData::is_finite_root(const std::vector<long>& root) const {
  return std::find(finite_roots_.begin(), finite_roots_.end(), root) !=
         finite_roots_.end();
}

void AffineCartanData::finalize_and_validate() {
  const int size = n + 1;
  // Basic Cartan matrix shape.
  for (int i = 0; i < size; ++i) {
    if (A[i][i] != 2)
      throw std::logic_error(type_id + ": diagonal entry is not 2");
    for (int j = 0; j < size; ++j) {
      if (i == j) continue;
      if (A[i][j] > 0)
        throw std::logic_error(type_id + ": positive off-diagonal entry");
      if ((A[i][j] == 0) != (A[j][i] == 0))
        throw std::logic_error(type_id + ": asymmetric zero pattern");
    }
  }

  // Kernel oracle: recomputed marks/comarks must match the embedded tables.
  std::vector<long> km = minimal_positive_kernel(A);
  std::vector<std::vector<long>> At(size, std::vector<long>(size));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) At[i][j] = A[j][i];
  std::vector<long> kc = minimal_positive_kernel(At);
  if (km != marks) throw std::logic_error(type_id + ": marks fail kernel check");
  if (kc != comarks)
    throw std::logic_error(type_id + ": comarks fail kernel check");

  d.resize(size);
  for (int j = 0; j < size; ++j) {
    d[j] = Rat(marks[j], comarks[j]);
    d[j].canonicalize();
  }

  // Symmetry of (alpha_j, alpha_k) = d_j^{-1} a_jk.
  for (int j = 0; j < size; ++j)
    for (int k = 0; k < size; ++k)
      if (simple_pairing(j, k) != simple_pairing(k, j))
        throw std::logic_error(type_id + ": bilinear form not symmetric");

  // alpha_0 must be short.
  for (int j = 1; j < size; ++j)
    if (simple_pairing(0, 0) > simple_pairing(j, j))
      throw std::logic_error(type_id + ": alpha_0 is not short");

  alpha_index = 1;
  while (alpha_index <= n && A[0][alpha_index] == 0) ++alpha_index;
  if (alpha_index > n)
    throw std::logic_error(type_id + ": affine node is isolated");

  r = 1;
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j)
      r = std::max<long>(r, laces(i, j));

  l0 = laces(0, alpha_index);
  if (l0 != 1 && l0 != 2 && l0 != 4)
    throw std::logic_error(type_id + ": bad l0");

  finite_gram_ = Mat(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) finite_gram_(i - 1, j - 1) = simple_pairing(i, j);

  // Enumerate the finite root system: closure of the simple roots under
  // simple reflections s_i(b) = b - <b, alpha_i^v> alpha_i.
  std::set<std::vector<long>> roots;
  std::vector<std::vector<long>> frontier;
  for (int i = 1; i <= n; ++i) {
    std::vector<long> e(n, 0);
    e[i - 1] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<long>> next;
    for (const auto& b : frontier) {
      for (int i = 1; i <= n; ++i) {
        long pairing = 0;  // <b, alpha_i^v> = sum_j b_j a_ij over the finite block
        for (int j = 1; j <= n; ++j) pairing += b[j - 1] * A[i][j];
        std::vector<long> rb = b;
        rb[i - 1] -= pairing;
        if (roots.insert(rb).second) next.push_back(rb);
      }
    }
    frontier = std::move(next);
  }
  finite_roots_.assign(roots.begin(), roots.end());
  min_norm_ = max_norm_ = root_norm(finite_roots_.front());
  for (const auto& rt : finite_roots_) {
    Rat nm = root_norm(rt);
    if (nm < min_norm_) min_norm_ = nm;
    if (nm > max_norm_) max_norm_ = nm;
  }
}

AffineCartanData load_catalog(const std::string& type_id) {
  ParsedId p = parse_id(type_id);
  AffineCartanData data;
  data.type_id = type_id;

  if (p.twist == 1 && (p.family == 'B' || p.family == 'C' ||
                       (p.family == 'F' && p.rank == 4) ||
                       (p.family == 'G' && p.rank == 2)))
    throw ExcludedTypeError(type_id + ": affine simple root is not short");

  if (p.family == 'A' && p.twist == 1) {
    if (p.rank == 1)
      throw UnknownTypeError(
          "A1~1 is outside the default catalog (4-lace affine bond)");
    if (p.rank < 2) throw UnknownTypeError("bad rank for A~1: " + type_id);
    int n = p.rank;
    data.n = n;
    data.A = zero_matrix(n + 1);
    for (int i = 0; i <= n; ++i) set_edge(data.A, i, (i + 1) % (n + 1), -1, -1);
    data.marks.assign(n + 1, 1);
    data.comarks.assign(n + 1, 1);
  } else if (p.family == 'D' && p.twist == 1) {
    if (p.rank < 4) throw UnknownTypeError("bad rank for D~1: " + type_id);
    int n = p.rank;
    data.n = n;
    data.A = zero_matrix(n + 1);
    for (int i = 1; i <= n - 2; ++i) set_edge(data.A, i, i + 1, -1, -1);
    set_edge(data.A, n - 2, n, -1, -1);
    set_edge(data.A, 0, 2, -1, -1);
    data.marks.assign(n + 1, 2);
    data.marks[0] = data.marks[1] = data.marks[n - 1] = data.marks[n] = 1;
    data.comarks = data.marks;
  } else if (p.family == 'E' && p.twist == 1) {
    int n = p.rank;
    data.n = n;
    if (n == 6) {
      data.A = zero_matrix(7);
      for (auto [i, j] : {std::pair{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4},
                          {0, 2}})
        set_edge(data.A, i, j, -1, -1);
      data.marks = {1, 1, 2, 2, 3, 2, 1};
    } else if (n == 7) {
      data.A = zero_matrix(8);
      for (auto [i, j] : {std::pair{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7},
                          {2, 4}, {0, 1}})
        set_edge(data.A, i, j, -1, -1);
      data.marks = {1, 2, 2, 3, 4, 3, 2, 1};
    } else if (n == 8) {
      data.A = zero_matrix(9);
      for (auto [i, j] : {std::pair{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7},
                          {7, 8}, {2, 4}, {0, 8}})
        set_edge(data.A, i, j, -1, -1);
      data.marks = {1, 2, 3, 4, 6, 5, 4, 3, 2};
    } else {
      throw UnknownTypeError("bad rank for E~1: " + type_id);
    }
    data.comarks = data.marks;
  } else if (p.family == 'A' && p.twist == 2) {
    // A_{2n}^{(2)}: the weight-lattice family.
    if (p.rank < 2 || p.rank % 2 != 0)
      throw UnknownTypeError("A~2 types need an even rank: " + type_id);
    int n = p.rank / 2;
    data.n = n;
    data.A = zero_matrix(n + 1);
    if (n == 1) {
      set_edge(data.A, 0, 1, -4, -1);
      data.marks = {2, 1};
      data.comarks = {1, 2};
    } else {
      set_edge(data.A, 0, 1, -2, -1);
      for (int i = 1; i <= n - 2; ++i) set_edge(data.A, i, i + 1, -1, -1);
      set_edge(data.A, n - 1, n, -2, -1);
      data.marks.assign(n + 1, 2);
      data.marks[n] = 1;
      data.comarks.assign(n + 1, 2);
      data.comarks[0] = 1;
    }
    data.lattice_mode = LatticeMode::WeightLattice;
  } else if (p.family == 'D' && p.twist == 2) {
    // D_{m}^{(2)}, m >= 3: finite part B_{m-1}; the second l0 = 2 family.
    if (p.rank < 3) throw UnknownTypeError("bad rank for D~2: " + type_id);
    int n = p.rank - 1;
    data.n = n;
    data.A = zero_matrix(n + 1);
    set_edge(data.A, 0, 1, -2, -1);
    for (int i = 1; i <= n - 2; ++i) set_edge(data.A, i, i + 1, -1, -1);
    set_edge(data.A, n - 1, n, -1, -2);
    data.marks.assign(n + 1, 1);
    data.comarks.assign(n + 1, 2);
    data.comarks[0] = data.comarks[n] = 1;
  } else {
    throw UnknownTypeError("unsupported type: " + type_id);
  }

  data.finalize_and_validate();
  return data;
}

std::vector<std::string> catalog_types() {
  std::vector<std::string> out;
  for (int n = 2; n <= 8; ++n) out.push_back("A" + std::to_string(n) + "~1");
  for (int n = 4; n <= 8; ++n) out.push_back("D" + std::to_string(n) + "~1");
  out.insert(out.end(), {"E6~1", "E7~1", "E8~1"});
  for (int n = 1; n <= 4; ++n) out.push_back("A" + std::to_string(2 * n) + "~2");
  for (int m = 3; m <= 8; ++m) out.push_back("D" + std::to_string(m) + "~2");
  return out;
}

}  // namespace daw
