#pragma once

#include <string>
#include <vector>

#include "daw/weyl.hpp"
#include "daw/word.hpp"

namespace daw {

struct UnsupportedKindError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class PresentationKind {
  FiniteCoxeter,
  AffineCoxeter,
  FiniteArtin,
  AffineArtin,
  Triple,
  TripleQuotient,
  DoubleAffineArtin,
  EllipticArtin,
  DoubleAffineWeyl,
  EllipticWeyl,
  Cherednik,
};

std::string kind_name(PresentationKind k);
PresentationKind kind_from_name(const std::string& s);  // UnsupportedKindError

struct Relation {
  Word lhs;
  Word rhs;
  std::string tag;
};

struct Presentation {
  PresentationKind kind;
  std::string type_id;
  Alphabet alphabet;
  std::vector<Relation> relations;
  long kbound = 3;
  // Hecke-algebra symbols carried along but never evaluated.
  std::vector<std::string> hecke_symbols;
};

// Deterministic: same inputs give identical relation lists.
Presentation presentation_of(PresentationKind k, const AffineCartanData& c,
                             long kbound = 3);

std::string presentation_text(const Presentation& p);

// Generator images indexed by alphabet position.
using Assignment = std::vector<DAWElement>;

Assignment canonical_assignment(const AffineCartanData& c,
                                const Presentation& p);

DAWElement assigned_eval(const AffineCartanData& c, const Assignment& a,
                         const Word& w);

struct RelationResult {
  std::string tag;
  bool pass;
  std::string witness;  // empty on pass
};

struct VerifyReport {
  bool pass = true;
  std::vector<RelationResult> results;
};

// Evaluates every relation under the assignment, both as normal forms and as
// matrices under rho; elliptic kinds compare modulo the central translation.
VerifyReport verify(const AffineCartanData& c, const Presentation& p,
                    const Assignment& a);

std::string element_str(const AffineCartanData& c, const DAWElement& g);

// Generator-wise homomorphism spec: image word over the target alphabet for
// each source generator, indexed by source alphabet position.
struct IsoSpec {
  std::vector<Word> images;
};

Word substitute(const IsoSpec& spec, const Word& w);  // freely reduced

// The mutually inverse maps between the quotiented triple group and the
// lattice form of the double affine Artin group.
IsoSpec main_iso_phi(const AffineCartanData& c, const Presentation& from_triple,
                     const Presentation& to_cher);
IsoSpec main_iso_psi(const AffineCartanData& c, const Presentation& from_cher,
                     const Presentation& to_triple);

// Checks, at the Weyl level: phi/psi send generators to the right elements,
// both composites are the identity on generators (also by free reduction),
// and both maps carry every relation to a relation that holds.
VerifyReport check_iso_on_generators(const AffineCartanData& c,
                                     const IsoSpec& phi, const IsoSpec& psi,
                                     const Presentation& p1,
                                     const Presentation& p2,
                                     const Assignment& a1,
                                     const Assignment& a2);

}  // namespace daw
