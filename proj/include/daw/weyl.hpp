#pragma once

#include <optional>
#include <string>
#include <vector>

#include "daw/geometry.hpp"
#include "daw/word.hpp"

namespace daw {

struct NotInGroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAffineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element of the finite Weyl group, held as its exact matrix on the span of
// the simple roots (faithful there).
struct FiniteWeylElement {
  Mat m;
  bool operator==(const FiniteWeylElement&) const = default;
};

LatticeVector scale_lattice(const Rat& s, const LatticeVector& v);

FiniteWeylElement finite_identity(const AffineCartanData& c);
FiniteWeylElement simple_reflection(const AffineCartanData& c, int i);
FiniteWeylElement theta_reflection(const AffineCartanData& c);
LatticeVector apply_finite(const FiniteWeylElement& w, const LatticeVector& v);

// Factors w into simple reflections by right descents; lexicographically
// least reduced word, returned as generator indices 1..n.
std::vector<int> finite_word(const AffineCartanData& c,
                             const FiniteWeylElement& w);
// Lexicographically least reduced word for s_theta (left-greedy).
std::vector<int> theta_word(const AffineCartanData& c);

FiniteWeylElement longest_element(const AffineCartanData& c);
bool longest_is_minus_one(const AffineCartanData& c);

// Normal form w . lambda_mu . tau_beta . tau_{c delta}.
struct DAWElement {
  FiniteWeylElement w;
  LatticeVector mu;
  LatticeVector beta;
  Rat c;
  bool operator==(const DAWElement&) const = default;
};

DAWElement daw_identity(const AffineCartanData& c);
DAWElement multiply(const AffineCartanData& c, const DAWElement& g1,
                    const DAWElement& g2);
DAWElement inverse(const AffineCartanData& c, const DAWElement& g);
DAWElement power(const AffineCartanData& c, const DAWElement& g, long k);

// genId as in geometry::generator_matrix.
DAWElement from_generator(const AffineCartanData& c, const std::string& gen_id);

Mat rho(const AffineCartanData& c, const DAWElement& g);
// Inverts rho; throws NotInGroupError when the matrix is not in the image.
DAWElement decode(const AffineCartanData& c, const Mat& m);

DAWElement word_eval(const AffineCartanData& c, const Alphabet& a,
                     const Word& w);

// Action of the affine subgroup (beta = 0, c = 0) on coordinates over
// (alpha_1..alpha_n, delta, Lambda_0).
std::vector<Rat> level_action(const AffineCartanData& c, const DAWElement& g,
                              const std::vector<Rat>& x);

// Canonical representative modulo the central <tau_{a_0^{-1} delta}>.
DAWElement elliptic_project(const AffineCartanData& c, const DAWElement& g);

DAWElement reflection_element(const AffineCartanData& c, const TildeRoot& r);

}  // namespace daw
