#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "daw/presentations.hpp"
#include "daw/word.hpp"

namespace daw {

struct BadStepError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Moves operate on words verbatim (no implicit free reduction), so every move
// is invertible by another move:
//   - relator move (relator, rotation, t, direction): the rotated relator (or
//     its inverse, direction -1) splits as u * rest; an occurrence of u is
//     replaced by rest^-1.  t = 0 inserts rest^-1.
//   - cancel: deletes an adjacent x x^-1 pair.
//   - insert(g, s): inserts g^s g^-s.
struct RewriteSystem {
  Alphabet alphabet;
  std::vector<Word> relators;  // freely reduced, nonempty
  // rule ids: relator rules first (by relator, rotation, t), then cancel,
  // then insert rules (by generator, sign).
  int relator_rule_count = 0;
};

RewriteSystem rewrite_system(const Alphabet& a,
                             const std::vector<Word>& relators);
RewriteSystem rewrite_system(const Presentation& p);
void add_relator(RewriteSystem& rs, const Word& lhs, const Word& rhs);

int rule_count(const RewriteSystem& rs);
int cancel_rule(const RewriteSystem& rs);
int insert_rule(const RewriteSystem& rs, int gen, int sign);
std::string rule_desc(const RewriteSystem& rs, int rule);

std::optional<Word> apply_rule(const RewriteSystem& rs, const Word& w, int rule,
                               int position, int direction);

struct DerivationStep {
  int rule;
  int position;
  int direction;  // +1 or -1
  bool operator==(const DerivationStep&) const = default;
};

// Step applicable to the step's result that recovers w.
DerivationStep invert_step(const RewriteSystem& rs, const Word& w,
                           const DerivationStep& s);

struct DerivationTrace {
  Word start;
  Word end;
  std::vector<DerivationStep> steps;
};

// Throws BadStepError (with the step index) if a step does not apply;
// returns the final word.
Word replay(const RewriteSystem& rs, const Word& start,
            const std::vector<DerivationStep>& steps);

bool verify_derivation(const RewriteSystem& rs, const DerivationTrace& t);

struct Budget {
  std::size_t max_len;
  std::size_t max_nodes;
};

Budget default_budget(const Word& w1, const Word& w2);

struct ProveResult {
  bool proved = false;
  DerivationTrace trace;  // valid when proved
  std::size_t nodes = 0;
};

// Bidirectional breadth-first search; Proved is sound (trace replays),
// Unknown is not a disproof.
ProveResult equal_modulo(const RewriteSystem& rs, const Word& w1,
                         const Word& w2, const Budget& budget);

// ---- fixture files -------------------------------------------------------
// JSON fixtures bundle a presentation (catalog reference or inline), optional
// lemma references (other fixtures in the same directory, acyclic; their
// proved equalities become extra relators, in listed order), and a trace.

struct FixtureResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Either a catalog reference {"type","kind","kbound"} or an inline listing
// {"generators":[...],"relations":[{"lhs","rhs","tag"},...]}.
Presentation presentation_from_json_text(const std::string& text);

FixtureResult verify_fixture_file(const std::string& path);
std::vector<FixtureResult> verify_fixture_dir(const std::string& dir);

}  // namespace daw
