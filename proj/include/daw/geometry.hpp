#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "daw/cartan.hpp"
#include "daw/matrix.hpp"

namespace daw {

struct IsotropicRootError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownGeneratorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInLatticeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Vector in V = h* + R.delta1 + R.delta2 + R.Lambda1 + R.Lambda2.
// Coordinate order everywhere: (alpha_1..alpha_n, delta1, delta2, L1, L2).
struct VectorV {
  std::vector<Rat> coords;  // length n + 4

  bool operator==(const VectorV&) const = default;
};

std::size_t dim_V(const AffineCartanData& c);
VectorV zero_V(const AffineCartanData& c);
VectorV basis_V(const AffineCartanData& c, std::size_t index);
VectorV delta1(const AffineCartanData& c);
VectorV delta2(const AffineCartanData& c);
VectorV lambda1(const AffineCartanData& c);
VectorV lambda2(const AffineCartanData& c);
// Embeds a finite-lattice vector; its delta coordinate lands on delta1.
VectorV embed_finite(const AffineCartanData& c, const LatticeVector& v);

VectorV add_V(const VectorV& x, const VectorV& y);
VectorV sub_V(const VectorV& x, const VectorV& y);
VectorV scale_V(const Rat& s, const VectorV& x);

// A double affine root: base + m.delta1 + n.delta2.  When halfFlag is set
// the base holds half of a long finite root (the extra component that only
// exists in weight-lattice types) and m, n are half-integers.
struct TildeRoot {
  LatticeVector base;  // finite part; the delta field must be zero
  Rat m;
  Rat n;
  bool halfFlag = false;
};

VectorV tilde_root_vector(const AffineCartanData& c, const TildeRoot& r);
bool in_tilde_R(const AffineCartanData& c, const TildeRoot& r);

Mat gram_V(const AffineCartanData& c);
Rat form_V(const AffineCartanData& c, const VectorV& x, const VectorV& y);

// s_a(v) = v - (2 (v,a) / (a,a)) a.  Throws IsotropicRootError when (a,a)=0.
Mat reflect(const AffineCartanData& c, const VectorV& a);
Mat reflect(const AffineCartanData& c, const TildeRoot& r);

// genId: "s_1".."s_n", "s_01", "s_02", "s_03", "tau".
Mat generator_matrix(const AffineCartanData& c, const std::string& gen_id);

enum class TranslationKind { Lambda, Tau };

// lambda_mu(x) = x - (x,mu) delta1 + (x,delta1)(mu - |mu|^2/2 delta1);
// the Tau kind is the same with delta2 in place of delta1.
Mat translation_matrix(const AffineCartanData& c, TranslationKind kind,
                       const LatticeVector& v);

// tau_{c delta}(x) = x + c (x,delta2) delta1 - c (x,delta1) delta2.
Mat central_matrix(const AffineCartanData& c, const Rat& coef);

bool preserves_form(const AffineCartanData& c, const Mat& m);

}  // namespace daw
