#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "daw/matrix.hpp"
#include "daw/rational.hpp"

namespace daw {

struct UnknownTypeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ExcludedTypeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MismatchedTypeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class LatticeMode { RootLattice, WeightLattice };

// One admissible affine type: Cartan matrix indexed 0..n, marks, comarks,
// and the derived bond data. Immutable after load_catalog.
class AffineCartanData {
 public:
  std::string type_id;
  int n = 0;                                // rank of the finite part
  std::vector<std::vector<long>> A;         // (n+1) x (n+1)
  std::vector<long> marks;                  // a_0..a_n
  std::vector<long> comarks;                // a_0^v..a_n^v
  std::vector<Rat> d;                       // d_j = a_j / a_j^v
  int alpha_index = 1;                      // finite neighbor of node 0
  int l0 = 1;
  LatticeMode lattice_mode = LatticeMode::RootLattice;
  int r = 1;                                // max lace count in the diagram

  long laces(int i, int j) const { return A[i][j] * A[j][i]; }
  Rat a0inv() const { return Rat(1, marks[0]); }

  // (alpha_j, alpha_k) = d_j^{-1} a_jk for the affine index range 0..n.
  Rat simple_pairing(int j, int k) const;

  // n x n Gram matrix of (alpha_i, alpha_j) over the finite simple roots.
  const Mat& finite_gram() const { return finite_gram_; }

  // Finite roots of the subdiagram on nodes 1..n, as integer coordinate
  // vectors over (alpha_1..alpha_n).
  const std::vector<std::vector<long>>& finite_roots() const {
    return finite_roots_;
  }
  Rat root_norm(const std::vector<long>& root) const;
  bool is_long_root(const std::vector<long>& root) const;
  bool is_short_root(const std::vector<long>& root) const;
  bool is_finite_root(const std::vector<long>& root) const;

  friend AffineCartanData load_catalog(const std::string& type_id);

 private:
  Mat finite_gram_;
  std::vector<std::vector<long>> finite_roots_;
  Rat max_norm_ = 0;  // over finite_roots_
  Rat min_norm_ = 0;

  void finalize_and_validate();
};

// Builds the data for one catalog identifier ("A2~1", "D4~1", "E6~1",
// "A4~2", "D3~2", ...). Marks and comarks are validated against the
// minimal positive integer kernels of A and A^t.
AffineCartanData load_catalog(const std::string& type_id);

// Default listing for the catalog CLI (families cut off at desk scale).
std::vector<std::string> catalog_types();

// Element of the active lattice span: rational coordinates over
// (alpha_1..alpha_n) plus a delta coefficient.
struct LatticeVector {
  std::vector<Rat> coords;
  Rat delta = 0;

  bool operator==(const LatticeVector& o) const = default;
};

LatticeVector lattice_zero(const AffineCartanData& data);

// Membership in the active lattice: integer coordinates in RootLattice
// mode; weight-lattice membership ((mu, alpha_j^v) integral for all j) plus
// delta in (1/2)Z in WeightLattice mode.
bool in_lattice(const AffineCartanData& data, const LatticeVector& v);

// Canonical bilinear form; delta pairs to zero with everything.
Rat bilinear(const AffineCartanData& data, const LatticeVector& x,
             const LatticeVector& y);

// theta = delta - a_0 alpha_0 = sum_{j>=1} a_j alpha_j.
LatticeVector theta(const AffineCartanData& data);

}  // namespace daw
