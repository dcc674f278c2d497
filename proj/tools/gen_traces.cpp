// Regenerates the derivation-trace fixtures under fixtures/.
//
// Each fixture encodes a word equality as an explicit chain of invertible
// rewrite moves.  The chains are assembled from anchor words; adjacent
// anchors are at most two moves apart, so the bounded prover bridges them
// deterministically.  Every emitted file is re-verified through the same
// code path the test suite uses before the tool reports success.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "daw/cartan.hpp"
#include "daw/presentations.hpp"
#include "daw/rewriting.hpp"
#include "daw/word.hpp"

using namespace daw;
using nlohmann::json;

namespace {

struct Builder {
  const RewriteSystem& rs;
  const Alphabet& ab;
  Word cur;
  std::vector<DerivationStep> steps;

  Builder(const RewriteSystem& r, const Alphabet& a, const std::string& start)
      : rs(r), ab(a), cur(parse_word(a, start)) {}

  void step(int rule, int pos, int dir) {
    auto next = apply_rule(rs, cur, rule, pos, dir);
    if (!next)
      throw std::runtime_error("scripted step does not apply: " +
                               rule_desc(rs, rule) + " at " +
                               std::to_string(pos) + " on " +
                               format_word(ab, cur));
    cur = std::move(*next);
    steps.push_back(DerivationStep{rule, pos, dir});
  }

  // Inserts the pair g^sign g^-sign at pos.
  void ins(int pos, const std::string& g, int sign) {
    step(insert_rule(rs, ab.index(g), sign), pos, 1);
  }

  void cancel(int pos) { step(cancel_rule(rs), pos, 1); }

  void bridge(const std::string& target) {
    Word tgt = parse_word(ab, target);
    Budget b{std::max(cur.size(), tgt.size()) + 8, 2000000};
    ProveResult r = equal_modulo(rs, cur, tgt, b);
    if (!r.proved)
      throw std::runtime_error("no bridge from " + format_word(ab, cur) +
                               " to " + target);
    for (const DerivationStep& s : r.trace.steps) steps.push_back(s);
    cur = std::move(tgt);
  }
};

json steps_json(const std::vector<DerivationStep>& steps) {
  json out = json::array();
  for (const DerivationStep& s : steps)
    out.push_back(
        {{"ruleId", s.rule}, {"position", s.position}, {"direction", s.direction}});
  return out;
}

json custom_presentation_json(const Presentation& p) {
  json gens = json::array();
  for (std::size_t g = 0; g < p.alphabet.size(); ++g)
    gens.push_back(p.alphabet.name((int)g));
  json rels = json::array();
  for (const Relation& r : p.relations)
    rels.push_back({{"lhs", format_word(p.alphabet, r.lhs)},
                    {"rhs", format_word(p.alphabet, r.rhs)},
                    {"tag", r.tag}});
  return {{"generators", gens}, {"relations", rels}};
}

Presentation custom_presentation(
    const std::vector<std::string>& gens,
    const std::vector<std::array<std::string, 3>>& rels) {
  Presentation p;
  p.kind = PresentationKind::FiniteArtin;
  p.type_id = "custom";
  for (const std::string& g : gens) p.alphabet.intern(g);
  for (const auto& r : rels)
    p.relations.push_back(Relation{parse_word(p.alphabet, r[0]),
                                   parse_word(p.alphabet, r[1]), r[2]});
  return p;
}

void write_fixture(const std::filesystem::path& dir, const std::string& name,
                   const json& presentation, const std::vector<std::string>& lemmas,
                   const Builder& b, const std::string& start,
                   const std::string& end) {
  if (format_word(b.ab, b.cur) != end)
    throw std::runtime_error(name + ": chain ended at " +
                             format_word(b.ab, b.cur) + " expected " + end);
  json j;
  j["presentation"] = presentation;
  if (!lemmas.empty()) j["lemmas"] = lemmas;
  j["start"] = start;
  j["end"] = end;
  j["steps"] = steps_json(b.steps);
  std::ofstream out(dir / (name + ".json"));
  out << j.dump(1) << '\n';
  std::cerr << name << ": " << b.steps.size() << " steps\n";
}

// The two halves of the conjugation trick: with pxp = xpx and qxq = xqx,
// both sides of the braid relation for (p^-1 q p, x) reduce to words that
// differ only by one application of the doubled relation for (q p, x).
const char* kTrickLhsStart = "p^-1 q p x p^-1 q p";
const char* kTrickLhsEnd = "p^-1 x^-1 q^-1 x q p x q p";
const char* kTrickRhsStart = "x p^-1 q p x";
const char* kTrickRhsEnd = "p^-1 x^-1 q^-1 q p x q p x";

Presentation trick_presentation() {
  return custom_presentation(
      {"p", "q", "x"},
      {{"p x p", "x p x", "braid(p,x)"}, {"q x q", "x q x", "braid(q,x)"}});
}

void gen_trick_lhs(const std::filesystem::path& dir) {
  Presentation p = trick_presentation();
  RewriteSystem rs = rewrite_system(p);
  Builder b(rs, p.alphabet, kTrickLhsStart);
  b.bridge("p^-1 q x^-1 p x q p");
  b.bridge(kTrickLhsEnd);
  write_fixture(dir, "trick-lhs", custom_presentation_json(p), {}, b,
                kTrickLhsStart, kTrickLhsEnd);
}

void gen_trick_rhs(const std::filesystem::path& dir) {
  Presentation p = trick_presentation();
  RewriteSystem rs = rewrite_system(p);
  Builder b(rs, p.alphabet, kTrickRhsStart);
  b.bridge("p^-1 x^-1 p x q p x");
  b.bridge(kTrickRhsEnd);
  write_fixture(dir, "trick-rhs", custom_presentation_json(p), {}, b,
                kTrickRhsStart, kTrickRhsEnd);
}

// Given additionally the doubled relation q p x q p x = x q p x q p, the
// braid relation holds for the conjugated pair (p^-1 q p, x).  The two
// halves above enter as lemma relators.
void gen_trick_furthermore(const std::filesystem::path& dir) {
  Presentation p = trick_presentation();
  p.relations.push_back(Relation{parse_word(p.alphabet, "q p x q p x"),
                                 parse_word(p.alphabet, "x q p x q p"),
                                 "dbl(qp,x)"});
  RewriteSystem rs = rewrite_system(p);
  add_relator(rs, parse_word(p.alphabet, kTrickLhsStart),
              parse_word(p.alphabet, kTrickLhsEnd));
  add_relator(rs, parse_word(p.alphabet, kTrickRhsStart),
              parse_word(p.alphabet, kTrickRhsEnd));
  Builder b(rs, p.alphabet, kTrickLhsStart);
  b.bridge(kTrickLhsEnd);
  b.bridge(kTrickRhsEnd);
  b.bridge(kTrickRhsStart);
  write_fixture(dir, "trick-furthermore", custom_presentation_json(p),
                {"trick-lhs", "trick-rhs"}, b, kTrickLhsStart, kTrickRhsStart);
}

const char* kEeStart = "T1 T01 T02 T1 T02";
const char* kEeEnd = "T02 T1 T01 T02 T1";

// T1 T01 T02 T1 T02 = T02 T1 T01 T02 T1 in the triple group of A4~2.
void gen_ee(const std::filesystem::path& dir) {
  AffineCartanData c = load_catalog("A4~2");
  Presentation p = presentation_of(PresentationKind::Triple, c, 3);
  RewriteSystem rs = rewrite_system(p);
  Builder b(rs, p.alphabet, kEeStart);
  b.bridge(kEeEnd);
  write_fixture(dir, "ee",
                json{{"type", "A4~2"}, {"kind", "triple"}, {"kbound", 3}}, {},
                b, kEeStart, kEeEnd);
}

// Case with X0 Ta = Ta^-1 Xb and Xb T0^-1 = T0 Xa: the four-letter word
// T0^-1 X0 Ta commutes into position through the rank-two braid relation.
void gen_braid02_case1(const std::filesystem::path& dir) {
  Presentation p = custom_presentation(
      {"T0", "Ta", "X0", "Xa", "Xb"},
      {{"X0 Ta", "Ta^-1 Xb", "case(a)"},
       {"Xb T0^-1", "T0 Xa", "case(aa)"},
       {"T0 Ta T0", "Ta T0 Ta", "braid"},
       {"Xa X0", "Xb", "lattice"}});
  RewriteSystem rs = rewrite_system(p);
  const char* start = "T0^-1 X0 Ta T0^-1 X0";
  const char* end = "Ta T0^-1 X0 Ta";
  Builder b(rs, p.alphabet, start);
  b.bridge("T0^-1 Ta^-1 Xb T0^-1 X0");
  b.bridge("T0^-1 Ta^-1 T0 Xa X0");
  b.bridge("Ta T0^-1 Ta^-1 Xb");
  b.bridge(end);
  write_fixture(dir, "braid02-case1", custom_presentation_json(p), {}, b,
                start, end);
}

// Case with Xb T0^-1 = T0^-1 Xb and Xc central among the T's: the commuting
// word is longer and the braid relation has exponent four.
void gen_braid02_case2(const std::filesystem::path& dir) {
  Presentation p = custom_presentation(
      {"T0", "Ta", "X0", "Xb", "Xc"},
      {{"X0 Ta", "Ta^-1 Xb", "case(b)"},
       {"Xb T0^-1", "T0^-1 Xb", "case(bb)"},
       {"Xc Ta", "Ta Xc", "case(bbb)"},
       {"T0 Ta T0 Ta", "Ta T0 Ta T0", "braid"},
       {"Xb X0", "Xc", "lattice"}});
  RewriteSystem rs = rewrite_system(p);
  const char* start = "T0^-1 X0 Ta T0^-1 X0 Ta";
  const char* end = "Ta T0^-1 X0 Ta T0^-1 X0";
  Builder b(rs, p.alphabet, start);
  b.bridge("T0^-1 Ta^-1 Xb T0^-1 X0 Ta");
  b.bridge("T0^-1 Ta^-1 T0^-1 Xb X0 Ta");
  b.bridge("T0^-1 Ta^-1 T0^-1 Ta Xc");
  b.bridge("Ta T0^-1 Ta^-1 T0^-1 Xc");
  b.bridge("Ta T0^-1 Ta^-1 Xb T0^-1 X0");
  b.bridge(end);
  write_fixture(dir, "braid02-case2", custom_presentation_json(p), {}, b,
                start, end);
}

// Conjugating the commutation relation by T02: uses the ee fixture as a
// lemma relator.
void gen_ellbraidautom(const std::filesystem::path& dir) {
  AffineCartanData c = load_catalog("A4~2");
  Presentation p = presentation_of(PresentationKind::Triple, c, 3);
  RewriteSystem rs = rewrite_system(p);
  add_relator(rs, parse_word(p.alphabet, kEeStart),
              parse_word(p.alphabet, kEeEnd));
  const char* start = "T02 T1^-1 T02^-1 T01 T02 T1";
  const char* end = "T1^-1 T02^-1 T01 T02 T1 T02";
  Builder b(rs, p.alphabet, start);
  b.bridge("T1^-1 T02^-1 T1^-1 T02 T1 T01 T02 T1");
  b.bridge(end);
  write_fixture(dir, "ellbraidautom",
                json{{"type", "A4~2"}, {"kind", "triple"}, {"kbound", 3}},
                {"ee"}, b, start, end);
}

// In the quotient of the A2~1 triple group with C central, T02 equals a
// word in T01, T03 and the finite generators.  The central pair C^-1 C is
// planted next to the commutator and C is carried rightward one letter at a
// time with the central(C,g) relators.
void gen_magic1(const std::filesystem::path& dir) {
  AffineCartanData c = load_catalog("A2~1");
  Presentation p = presentation_of(PresentationKind::TripleQuotient, c, 3);
  RewriteSystem rs = rewrite_system(p);
  const char* start = "T02";
  const char* end =
      "T01^-1 T1^-1 T01 T1 T1^-1 T2^-1 T1^-1 T03^-1 T1 T03 T1 T2 T1 T01 "
      "T1^-1";
  const std::string head = "T01^-1 T1^-1 T01 T1 ";
  const std::string cwi = "T1^-1 T2^-1 T1^-1 T03^-1 T02^-1 T01^-1 ";
  const std::string cw = "T01 T02 T03 T1 T2 T1 ";
  Builder b(rs, p.alphabet, start);
  b.bridge("T1 T02 T1 T02^-1 T1^-1");
  b.ins(0, "T01", -1);
  b.ins(1, "T1", -1);
  b.bridge("T01^-1 T1^-1 T01 T1 T01 T02 T1 T02^-1 T1^-1");
  b.ins(8, "T01", -1);
  b.ins(4, "T1", -1);
  b.ins(5, "T2", -1);
  b.ins(6, "T1", -1);
  b.ins(7, "T03", -1);
  b.ins(8, "T02", -1);
  b.ins(9, "T01", -1);
  b.bridge(head + cwi + "T01 " + cw + "T02 T1 T02^-1 T01^-1 T01 T1^-1");
  b.bridge(head + cwi + "T01 T02 " + cw + "T1 T02^-1 T01^-1 T01 T1^-1");
  b.bridge(head + cwi + "T01 T02 T1 " + cw + "T02^-1 T01^-1 T01 T1^-1");
  b.bridge(head + cwi + "T01 T02 T1 T02^-1 " + cw + "T01^-1 T01 T1^-1");
  b.bridge(head + cwi + "T01 T02 T1 T02^-1 T01^-1 " + cw + "T01 T1^-1");
  b.cancel(9);
  b.cancel(8);
  b.cancel(10);
  b.cancel(9);
  write_fixture(
      dir, "magic1",
      json{{"type", "A2~1"}, {"kind", "triple-quotient"}, {"kbound", 3}}, {},
      b, start, end);
}

// With only the (1,2) commutation relation assumed, the (1,3) one follows:
// T03 is eliminated through the central element and reassembled.
void gen_reducel2(const std::filesystem::path& dir) {
  AffineCartanData c = load_catalog("A4~2");
  Presentation full = presentation_of(PresentationKind::DoubleAffineArtin, c, 3);
  Presentation p;
  p.kind = full.kind;
  p.type_id = "custom";
  for (std::size_t g = 0; g < full.alphabet.size(); ++g)
    p.alphabet.intern(full.alphabet.name((int)g));
  for (const Relation& r : full.relations)
    if (r.tag.rfind("ellbraid", 0) != 0) p.relations.push_back(r);
  p.relations.push_back(Relation{parse_word(p.alphabet, "T01 T1^-1 T02 T1"),
                                 parse_word(p.alphabet, "T1^-1 T02 T1 T01"),
                                 "ellbraid(1,2)"});
  RewriteSystem rs = rewrite_system(p);
  const char* start = "T01 T1^-1 T03 T1";
  const char* end = "T1^-1 T03 T1 T01";
  Builder b(rs, p.alphabet, start);
  b.ins(2, "T02", -1);
  b.ins(3, "T01", -1);
  b.ins(8, "T2", 1);
  b.ins(9, "T1", 1);
  b.bridge("T01 T1^-1 T02^-1 T01 T02 T03 T1 T2 T1 T01^-1 T1^-1 T2^-1");
  b.bridge("T01 T1^-1 T01 T02 T03 T1 T2 T1 T02^-1 T01^-1 T1^-1 T2^-1");
  b.bridge("T01 T01 T02 T03 T1 T2 T1 T1^-1 T02^-1 T01^-1 T1^-1 T2^-1");
  b.bridge("T01 T02 T03 T1 T2 T1 T01 T1^-1 T02^-1 T01^-1 T1^-1 T2^-1");
  b.ins(9, "T1", 1);
  b.bridge("T01 T02 T03 T1 T2 T1 T1^-1 T02^-1 T1 T01 T1^-1 T01^-1 T1^-1 T2^-1");
  b.bridge("T01 T02 T03 T1 T2 T1 T1^-1 T02^-1 T1 T1^-1 T01^-1 T1^-1 T01 T2^-1");
  b.bridge("T01 T02 T03 T1 T2 T1 T1^-1 T02^-1 T1 T1^-1 T01^-1 T1^-1 T2^-1 T01");
  b.cancel(8);
  b.bridge("T1^-1 T01 T02 T03 T1 T2 T1 T02^-1 T01^-1 T1^-1 T2^-1 T01");
  b.bridge("T1^-1 T02^-1 T01 T02 T03 T1 T2 T1 T01^-1 T1^-1 T2^-1 T01");
  b.bridge("T1^-1 T02^-1 T01^-1 T01 T02 T03 T1 T2 T1 T1^-1 T2^-1 T01");
  b.cancel(2);
  b.cancel(1);
  b.cancel(4);
  b.cancel(3);
  write_fixture(dir, "reducel-2", custom_presentation_json(p), {}, b, start,
                end);
}

// T01 commutes with Ta Tth^-1 T03^-1 Ta in the elliptic quotient of the
// A4~2 triple group.
void gen_lemma2(const std::filesystem::path& dir) {
  AffineCartanData c = load_catalog("A4~2");
  Presentation p = presentation_of(PresentationKind::TripleQuotient, c, 3);
  RewriteSystem rs = rewrite_system(p);
  const char* start = "T01 T1 T1^-1 T2^-1 T1^-1 T03^-1 T1";
  const char* end = "T1 T1^-1 T2^-1 T1^-1 T03^-1 T1 T01";
  const std::string cwi = "T1^-1 T2^-1 T1^-1 T03^-1 T02^-1 T01^-1";
  Builder b(rs, p.alphabet, start);
  b.ins(6, "T02", -1);
  b.ins(7, "T01", -1);
  b.bridge("T01 " + cwi + " T1 T01 T02 T1");
  b.bridge(cwi + " T01 T1 T01 T02 T1");
  b.ins(9, "T1", 1);
  b.bridge(cwi + " T1 T01 T1 T01 T1^-1 T02 T1");
  b.bridge(cwi + " T1 T01 T1 T1^-1 T02 T1 T01");
  b.cancel(8);
  b.bridge("T1 " + cwi + " T01 T02 T1 T01");
  b.cancel(6);
  b.cancel(5);
  write_fixture(
      dir, "lemma2",
      json{{"type", "A4~2"}, {"kind", "triple-quotient"}, {"kbound", 3}}, {},
      b, start, end);
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
  std::filesystem::create_directories(dir);
  try {
    gen_trick_lhs(dir);
    gen_trick_rhs(dir);
    gen_trick_furthermore(dir);
    gen_ee(dir);
    gen_braid02_case1(dir);
    gen_braid02_case2(dir);
    gen_ellbraidautom(dir);
    gen_magic1(dir);
    gen_reducel2(dir);
    gen_lemma2(dir);
  } catch (const std::exception& e) {
    std::cerr << "generation failed: " << e.what() << '\n';
    return 1;
  }
  bool ok = true;
  for (const FixtureResult& r : verify_fixture_dir(dir.string())) {
    std::cerr << (r.pass ? "ok   " : "FAIL ") << r.name
              << (r.detail.empty() ? "" : ": " + r.detail) << '\n';
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}
