#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <thread>

#include "daw/automorphisms.hpp"
#include "daw/geometry.hpp"
#include "daw/report.hpp"
#include "daw/rewriting.hpp"

using namespace daw;
using nlohmann::json;

namespace {

struct Options {
  std::string type;
  std::string kind = "daw";
  std::string word;
  std::string lhs, rhs;
  std::string presentation_file;
  std::string b3word = "a";
  std::string sl2z;
  std::string check = "descent";
  std::string fixtures = "fixtures";
  std::string out;
  long kbound = 3;
  long max_nodes = 0;  // 0: default budget
  unsigned long seed = 0xDA57;
  int jobs = 1;
};

int emit(const Report& r, const Options& o) {
  std::string text = report_json(r);
  if (o.out.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream f(o.out);
    f << text << "\n";
  }
  std::cerr << report_summary(r) << "\n";
  return r.pass() ? 0 : 1;
}

std::vector<std::vector<long>> transpose(
    const std::vector<std::vector<long>>& a) {
  std::vector<std::vector<long>> t(a.size(), std::vector<long>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) t[j][i] = a[i][j];
  return t;
}

void catalog_integrity(Report& r, const AffineCartanData& c) {
  std::vector<long> km = minimal_positive_kernel(c.A);
  std::vector<long> kc = minimal_positive_kernel(transpose(c.A));
  add_check(r, "catalog/" + c.type_id + "/marks", km == c.marks);
  add_check(r, "catalog/" + c.type_id + "/comarks", kc == c.comarks);
  bool zero = true;
  for (std::size_t i = 0; i <= (std::size_t)c.n; ++i) {
    long s = 0;
    for (std::size_t j = 0; j <= (std::size_t)c.n; ++j)
      s += c.A[i][j] * c.marks[j];
    zero = zero && s == 0;
  }
  add_check(r, "catalog/" + c.type_id + "/A.marks=0", zero);
}

Report cmd_catalog(const Options& o) {
  Report r;
  r.suite = "catalog";
  r.seed = o.seed;
  json types = json::array();
  for (const std::string& t : catalog_types()) {
    AffineCartanData c = load_catalog(t);
    catalog_integrity(r, c);
    types.push_back(json{{"type", t},
                         {"n", c.n},
                         {"l0", c.l0},
                         {"alphaIndex", c.alpha_index},
                         {"marks", c.marks},
                         {"comarks", c.comarks}});
  }
  r.payload = json{{"types", types}}.dump();
  return r;
}

Report cmd_eval(const Options& o) {
  Report r;
  r.suite = "eval/" + o.type;
  r.seed = o.seed;
  AffineCartanData c = load_catalog(o.type);
  Presentation p = presentation_of(PresentationKind::DoubleAffineWeyl, c);
  Word w = parse_word(p.alphabet, o.word);
  DAWElement g = word_eval(c, p.alphabet, w);
  Mat m = rho(c, g);
  add_check(r, "eval/decode-roundtrip", decode(c, m) == g);
  r.payload = json{{"word", o.word},
                   {"normalForm", element_str(c, g)},
                   {"rho", m.str()}}
                  .dump();
  return r;
}

Report cmd_verify(const Options& o) {
  Report r;
  r.suite = "verify/" + o.type + "/" + o.kind;
  r.seed = o.seed;
  AffineCartanData c = load_catalog(o.type);
  Presentation p = presentation_of(kind_from_name(o.kind), c, o.kbound);
  fold(r, "verify", verify(c, p, canonical_assignment(c, p)));
  return r;
}

Report cmd_prove(const Options& o) {
  Report r;
  r.suite = "prove";
  r.seed = o.seed;
  Presentation p;
  if (!o.presentation_file.empty()) {
    std::ifstream f(o.presentation_file);
    if (!f) throw CLI::ValidationError("cannot open " + o.presentation_file);
    std::stringstream ss;
    ss << f.rdbuf();
    p = presentation_from_json_text(ss.str());
  } else {
    AffineCartanData c = load_catalog(o.type);
    p = presentation_of(kind_from_name(o.kind), c, o.kbound);
  }
  RewriteSystem rs = rewrite_system(p);
  Word w1 = parse_word(p.alphabet, o.lhs);
  Word w2 = parse_word(p.alphabet, o.rhs);
  Budget b = default_budget(w1, w2);
  if (o.max_nodes > 0) b.max_nodes = (std::size_t)o.max_nodes;
  ProveResult pr = equal_modulo(rs, w1, w2, b);
  json payload{{"lhs", o.lhs}, {"rhs", o.rhs}, {"nodes", pr.nodes}};
  if (pr.proved) {
    bool replay_ok = verify_derivation(rs, pr.trace);
    add_check(r, "prove/equal", replay_ok,
              "trace found but replay failed");
    json steps = json::array();
    for (const DerivationStep& s : pr.trace.steps)
      steps.push_back(json{{"ruleId", s.rule},
                           {"position", s.position},
                           {"direction", s.direction}});
    payload["steps"] = steps;
  } else {
    add_unknown(r, "prove/equal",
                "no derivation within budget (nodes=" +
                    std::to_string(pr.nodes) + ")");
  }
  r.payload = payload.dump();
  return r;
}

SL2ZMatrix parse_sl2z(const std::string& s) {
  std::istringstream is(s);
  SL2ZMatrix u;
  char sep;
  if (s.find(',') != std::string::npos)
    is >> u.a >> sep >> u.b >> sep >> u.c >> sep >> u.d;
  else
    is >> u.a >> u.b >> u.c >> u.d;
  if (!is) throw CLI::ValidationError("cannot parse matrix entries: " + s);
  return u;
}

void center_checks(Report& r, const AffineCartanData& c,
                   const Presentation& p) {
  VerifyReport cr = check_center_action(c, p);
  bool affine_ok = true;
  json detail = json::array();
  for (const RelationResult& x : cr.results) {
    detail.push_back(json{{"id", x.tag}, {"agree", x.pass}});
    if (x.tag == "center(" + std::string(p.alphabet.contains("T01") ? "T" : "s") + "01)" ||
        x.tag.find("01)") != std::string::npos ||
        x.tag.find("02)") != std::string::npos ||
        x.tag.find("03)") != std::string::npos)
      affine_ok = affine_ok && x.pass;
  }
  add_check(r, "center/affine-generators-agree", affine_ok);
  add_check(r, "center/inner-iff-minus-one",
            cr.pass == longest_is_minus_one(c),
            "agreement pattern does not match the longest element");
  Assignment asg = canonical_assignment(c, p);
  EndoSpec c2 = b3_word_action(parse_b3_word("a b a a b a a b a a b a"), p);
  bool trivial = true;
  for (std::size_t g = 0; g < p.alphabet.size(); ++g)
    trivial = trivial && assigned_eval(c, asg, c2.images[g]) == asg[g];
  add_check(r, "center/c-squared-trivial", trivial);
  r.payload = json{{"generators", detail},
                   {"longestIsMinusOne", longest_is_minus_one(c)}}
                  .dump();
}

Report cmd_auto(const Options& o) {
  Report r;
  r.suite = "auto/" + o.type + "/" + o.check;
  r.seed = o.seed;
  AffineCartanData c = load_catalog(o.type);
  Presentation p = presentation_of(PresentationKind::DoubleAffineWeyl, c);
  if (!o.sl2z.empty()) {
    SL2ZMatrix u = parse_sl2z(o.sl2z);
    EndoSpec spec = sl2z_weyl_auto(c, u, p);
    EndoSpec inv = sl2z_weyl_auto(c, sl2z_inverse(u), p);
    fold(r, "auto/sl2z",
         is_automorphism(c, p, canonical_assignment(c, p), spec, {inv}));
    return r;
  }
  if (o.check == "descent") {
    fold(r, "descent", check_descent_diagram(c, p, parse_b3_word(o.b3word)));
  } else if (o.check == "center") {
    center_checks(r, c, p);
  } else if (o.check == "dual") {
    fold(r, "dual", duality_involution_check(c, p, o.seed));
  } else {
    throw CLI::ValidationError("--check must be descent, center or dual");
  }
  return r;
}

DAWElement random_element(const AffineCartanData& c, const Presentation& p,
                          const Assignment& a, std::mt19937_64& rng,
                          int maxlen) {
  std::uniform_int_distribution<int> lend(0, maxlen);
  std::uniform_int_distribution<int> gend(0, (int)p.alphabet.size() - 1);
  std::uniform_int_distribution<int> signd(0, 1);
  Word w;
  int len = lend(rng);
  for (int i = 0; i < len; ++i)
    w.push_back(Letter{gend(rng), signd(rng) ? 1 : -1});
  return assigned_eval(c, a, w);
}

Report cmd_paper_suite(const Options& o) {
  Report r;
  r.suite = "paper-suite/" + o.type;
  r.seed = o.seed;
  AffineCartanData c = load_catalog(o.type);
  catalog_integrity(r, c);

  for (const char* kn :
       {"coxeter", "affine-coxeter", "artin", "affine-artin", "triple",
        "triple-quotient", "daa", "elliptic-artin", "daw", "elliptic-weyl",
        "cherednik"}) {
    Presentation p = presentation_of(kind_from_name(kn), c, 2);
    VerifyReport v = verify(c, p, canonical_assignment(c, p));
    add_check(r, std::string("verify/") + kn, v.pass,
              v.pass ? "" : report_summary([&] {
                              Report tmp;
                              fold(tmp, kn, v);
                              return tmp;
                            }()));
  }

  Presentation pw = presentation_of(PresentationKind::DoubleAffineWeyl, c);
  Assignment aw = canonical_assignment(c, pw);

  // faithfulness sample, sharded across workers
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> lend(0, 12);
  std::uniform_int_distribution<int> gend(0, (int)pw.alphabet.size() - 1);
  std::uniform_int_distribution<int> signd(0, 1);
  const int N = 200;
  std::vector<Word> words(N);
  for (Word& w : words) {
    int len = lend(rng);
    for (int i = 0; i < len; ++i)
      w.push_back(Letter{gend(rng), signd(rng) ? 1 : -1});
  }
  int jobs = std::max(1, o.jobs);
  std::vector<char> ok(N, 1), collide(N, 0);
  auto worker = [&](int lo, int hi) {
    for (int i = lo; i < hi; ++i) {
      DAWElement g = word_eval(c, pw.alphabet, words[i]);
      Mat m = rho(c, g);
      ok[i] = decode(c, m) == g;
      collide[i] = m.is_identity() && !(g == daw_identity(c));
    }
  };
  if (jobs == 1) {
    worker(0, N);
  } else {
    std::vector<std::thread> ts;
    int chunk = (N + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j)
      ts.emplace_back(worker, j * chunk, std::min(N, (j + 1) * chunk));
    for (auto& t : ts) t.join();
  }
  bool all_ok = true, none_collide = true;
  for (int i = 0; i < N; ++i) {
    all_ok = all_ok && ok[i];
    none_collide = none_collide && !collide[i];
  }
  add_check(r, "faithfulness/decode-roundtrip", all_ok);
  add_check(r, "faithfulness/no-collision", none_collide);

  // elliptic projection is a homomorphism modulo the center
  DAWElement tau = from_generator(c, "tau");
  bool ehom = elliptic_project(c, tau) == daw_identity(c);
  for (int t = 0; t < 50 && ehom; ++t) {
    DAWElement g = random_element(c, pw, aw, rng, 10);
    DAWElement h = random_element(c, pw, aw, rng, 10);
    ehom = elliptic_project(c, multiply(c, g, tau)) == elliptic_project(c, g) &&
           elliptic_project(c, multiply(c, g, h)) ==
               elliptic_project(c, multiply(c, elliptic_project(c, g),
                                            elliptic_project(c, h)));
  }
  add_check(r, "elliptic/projection-homomorphism", ehom);

  // automorphism suite
  add_check(r, "auto/pi-letters",
            pi(parse_b3_word("a")) == u12() && pi(parse_b3_word("b")) == u21());
  bool descent_ok = true;
  for (int t = 0; t < 10 && descent_ok; ++t) {
    std::uniform_int_distribution<int> bl(1, 8), pick(0, 3);
    B3Word w;
    int len = bl(rng);
    for (int i = 0; i < len; ++i) {
      int k = pick(rng);
      w.push_back(B3Letter{k % 2 == 0 ? 'a' : 'b', k < 2 ? 1 : -1});
    }
    descent_ok = check_descent_diagram(c, pw, w).pass;
  }
  add_check(r, "auto/descent-random-words", descent_ok);
  add_check(r, "auto/center-dichotomy",
            check_center_action(c, pw).pass == longest_is_minus_one(c));
  add_check(r, "auto/duality", duality_involution_check(c, pw, o.seed).pass);

  // main isomorphism on generators
  {
    Presentation p1 = presentation_of(PresentationKind::TripleQuotient, c, 2);
    Presentation p2 = presentation_of(PresentationKind::Cherednik, c, 2);
    Assignment a1 = canonical_assignment(c, p1);
    Assignment a2 = canonical_assignment(c, p2);
    IsoSpec phi = main_iso_phi(c, p1, p2);
    IsoSpec psi = main_iso_psi(c, p2, p1);
    add_check(r, "iso/phi-psi-generators",
              check_iso_on_generators(c, phi, psi, p1, p2, a1, a2).pass);
  }

  // derivation fixtures
  try {
    fold(r, "fixtures", verify_fixture_dir(o.fixtures));
  } catch (const std::exception& e) {
    add_unknown(r, "fixtures", e.what());
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for double affine Weyl groups"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* s, bool need_type) {
    auto* t = s->add_option("--type", o.type, "catalog type, e.g. A2~1");
    if (need_type) t->required();
    s->add_option("--seed", o.seed, "seed for randomized checks");
    s->add_option("--out", o.out, "write the JSON report to this file");
    s->add_option("--jobs", o.jobs, "worker threads for sharded suites");
  };

  CLI::App* sc_catalog = app.add_subcommand("catalog", "list shipped types");
  add_common(sc_catalog, false);

  CLI::App* sc_eval =
      app.add_subcommand("eval", "normal form and matrix of a word");
  add_common(sc_eval, true);
  sc_eval->add_option("--word", o.word, "word over s1..sn,s01,s02,s03");

  CLI::App* sc_verify =
      app.add_subcommand("verify", "presentation conformance");
  add_common(sc_verify, true);
  sc_verify->add_option("--kind", o.kind, "presentation kind name");
  sc_verify->add_option("--kbound", o.kbound, "index bound for k-families");

  CLI::App* sc_prove =
      app.add_subcommand("prove", "bounded word-equality search");
  add_common(sc_prove, false);
  sc_prove->add_option("--kind", o.kind, "presentation kind name");
  sc_prove->add_option("--kbound", o.kbound, "index bound for k-families");
  sc_prove->add_option("--presentation", o.presentation_file,
                       "JSON presentation file instead of --type/--kind");
  sc_prove->add_option("--lhs", o.lhs, "left word")->required();
  sc_prove->add_option("--rhs", o.rhs, "right word")->required();
  sc_prove->add_option("--max-nodes", o.max_nodes, "search node budget");

  CLI::App* sc_auto = app.add_subcommand("auto", "automorphism checks");
  add_common(sc_auto, true);
  sc_auto->add_option("--b3-word", o.b3word, "braid word, e.g. \"a b a\"");
  sc_auto->add_option("--sl2z", o.sl2z, "matrix entries \"a b c d\"");
  sc_auto->add_option("--check", o.check, "descent | center | dual");

  CLI::App* sc_suite =
      app.add_subcommand("paper-suite", "all shipped checks for one type");
  add_common(sc_suite, true);
  sc_suite->add_option("--fixtures", o.fixtures, "derivation fixture dir");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    auto t0 = std::chrono::steady_clock::now();
    Report r;
    if (sc_catalog->parsed())
      r = cmd_catalog(o);
    else if (sc_eval->parsed())
      r = cmd_eval(o);
    else if (sc_verify->parsed())
      r = cmd_verify(o);
    else if (sc_prove->parsed())
      r = cmd_prove(o);
    else if (sc_auto->parsed())
      r = cmd_auto(o);
    else
      r = cmd_paper_suite(o);
    r.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return emit(r, o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
