#include "daw/cartan.hpp"

namespace daw {

LatticeVector lattice_zero(const AffineCartanData& data) {
  return LatticeVector{std::vector<Rat>(data.n, Rat(0)), Rat(0)};
}

bool in_lattice(const AffineCartanData& data, const LatticeVector& v) {
  if (static_cast<int>(v.coords.size()) != data.n) return false;
  if (data.lattice_mode == LatticeMode::RootLattice) {
    if (!rat_is_int(v.delta)) return false;
    for (const Rat& c : v.coords)
      if (!rat_is_int(c)) return false;
    return true;
  }
  // Weight lattice: (v, alpha_j^v) = d_j (v, alpha_j) integral for all j;
  // delta coefficient a half-integer.
  if (!rat_denominator_divides(v.delta, 2)) return false;
  for (int j = 1; j <= data.n; ++j) {
    Rat pairing = 0;
    for (int k = 1; k <= data.n; ++k)
      pairing += v.coords[k - 1] * data.simple_pairing(k, j);
    pairing *= data.d[j];
    pairing.canonicalize();
    if (!rat_is_int(pairing)) return false;
  }
  return true;
}

Rat bilinear(const AffineCartanData& data, const LatticeVector& x,
             const LatticeVector& y) {
  if (static_cast<int>(x.coords.size()) != data.n ||
      static_cast<int>(y.coords.size()) != data.n)
    throw MismatchedTypeError("bilinear: vector rank does not match type");
  Rat s = 0;
  for (int i = 1; i <= data.n; ++i)
    for (int j = 1; j <= data.n; ++j)
      s += x.coords[i - 1] * y.coords[j - 1] * data.simple_pairing(i, j);
  return s;  // delta is isotropic and orthogonal to the finite span
}

LatticeVector theta(const AffineCartanData& data) {
  LatticeVector t = lattice_zero(data);
  for (int j = 1; j <= data.n; ++j) t.coords[j - 1] = Rat(data.marks[j]);
  return t;
}

}  // namespace daw
