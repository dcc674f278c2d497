#include "daw/presentations.hpp"

#include <algorithm>
#include <sstream>

namespace daw {

namespace {

// Braid exponent from the lace count; 0 means no braid relation.
int mexp(long laces) {
  switch (laces) {
    case 0:
      return 2;
    case 1:
      return 3;
    case 2:
      return 4;
    case 3:
      return 6;
    default:
      return 0;
  }
}

Word letter(int gen, int sign = 1) { return Word{Letter{gen, sign}}; }

Word alternating(const Word& x, const Word& y, int m) {
  Word out;
  for (int t = 0; t < m; ++t) out = concat(out, t % 2 == 0 ? x : y);
  return out;
}

void add_braid(Presentation& p, const Word& x, const Word& y, int m,
               const std::string& tag) {
  p.relations.push_back(Relation{free_reduce(alternating(x, y, m)),
                                 free_reduce(alternating(y, x, m)), tag});
}

bool is_weyl_kind(PresentationKind k) {
  return k == PresentationKind::FiniteCoxeter ||
         k == PresentationKind::AffineCoxeter ||
         k == PresentationKind::DoubleAffineWeyl ||
         k == PresentationKind::EllipticWeyl;
}

bool is_elliptic_kind(PresentationKind k) {
  return k == PresentationKind::EllipticArtin ||
         k == PresentationKind::EllipticWeyl;
}

bool is_triple_family(PresentationKind k) {
  return k == PresentationKind::Triple ||
         k == PresentationKind::TripleQuotient ||
         k == PresentationKind::DoubleAffineArtin ||
         k == PresentationKind::EllipticArtin ||
         k == PresentationKind::DoubleAffineWeyl ||
         k == PresentationKind::EllipticWeyl;
}

Word theta_letters(const AffineCartanData& c, const Alphabet& a,
                   const std::string& stem) {
  Word out;
  for (int i : theta_word(c))
    out.push_back(Letter{a.index(stem + std::to_string(i)), 1});
  return out;
}

}  // namespace

std::string kind_name(PresentationKind k) {
  switch (k) {
    case PresentationKind::FiniteCoxeter:
      return "coxeter";
    case PresentationKind::AffineCoxeter:
      return "affine-coxeter";
    case PresentationKind::FiniteArtin:
      return "artin";
    case PresentationKind::AffineArtin:
      return "affine-artin";
    case PresentationKind::Triple:
      return "triple";
    case PresentationKind::TripleQuotient:
      return "triple-quotient";
    case PresentationKind::DoubleAffineArtin:
      return "daa";
    case PresentationKind::EllipticArtin:
      return "elliptic-artin";
    case PresentationKind::DoubleAffineWeyl:
      return "daw";
    case PresentationKind::EllipticWeyl:
      return "elliptic-weyl";
    case PresentationKind::Cherednik:
      return "cherednik";
  }
  return "?";
}

PresentationKind kind_from_name(const std::string& s) {
  static const std::vector<PresentationKind> all = {
      PresentationKind::FiniteCoxeter,    PresentationKind::AffineCoxeter,
      PresentationKind::FiniteArtin,      PresentationKind::AffineArtin,
      PresentationKind::Triple,           PresentationKind::TripleQuotient,
      PresentationKind::DoubleAffineArtin, PresentationKind::EllipticArtin,
      PresentationKind::DoubleAffineWeyl, PresentationKind::EllipticWeyl,
      PresentationKind::Cherednik};
  for (PresentationKind k : all)
    if (kind_name(k) == s) return k;
  throw UnsupportedKindError("unknown presentation kind: " + s);
}

Presentation presentation_of(PresentationKind k, const AffineCartanData& c,
                             long kbound) {
  Presentation p;
  p.kind = k;
  p.type_id = c.type_id;
  p.kbound = kbound;

  const bool weyl = is_weyl_kind(k);
  const std::string stem = weyl ? "s" : "T";
  const int n = c.n;
  const int al = c.alpha_index;

  // Alphabet, in a fixed order.
  std::vector<int> fin(n + 1, -1), aff3(4, -1);
  int g0 = -1, gxth = -1, gxdl = -1;
  if (k == PresentationKind::Cherednik) {
    g0 = p.alphabet.intern("T0");
    for (int i = 1; i <= n; ++i) fin[i] = p.alphabet.intern("T" + std::to_string(i));
    gxth = p.alphabet.intern("Xth");
    gxdl = p.alphabet.intern("Xdl");
  } else {
    for (int i = 1; i <= n; ++i)
      fin[i] = p.alphabet.intern(stem + std::to_string(i));
    if (k == PresentationKind::AffineCoxeter ||
        k == PresentationKind::AffineArtin)
      g0 = p.alphabet.intern(stem + "0");
    if (is_triple_family(k))
      for (int j = 1; j <= 3; ++j)
        aff3[j] = p.alphabet.intern(stem + "0" + std::to_string(j));
  }

  auto order_two = [&]() {
    for (std::size_t g = 0; g < p.alphabet.size(); ++g)
      p.relations.push_back(Relation{concat(letter((int)g), letter((int)g)),
                                     Word{},
                                     "order2(" + p.alphabet.name((int)g) + ")"});
  };
  auto braid_pair = [&](int gi, int gj, long laces) {
    int m = mexp(laces);
    if (m == 0) return;  // no braid relation for quadruple laces
    add_braid(p, letter(gi), letter(gj), m,
              "braid(" + p.alphabet.name(gi) + "," + p.alphabet.name(gj) +
                  "|m=" + std::to_string(m) + ")");
  };

  if (weyl) order_two();

  // Braid relations between finite nodes.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) braid_pair(fin[i], fin[j], c.laces(i, j));

  switch (k) {
    case PresentationKind::FiniteCoxeter:
    case PresentationKind::FiniteArtin:
      break;
    case PresentationKind::AffineCoxeter:
    case PresentationKind::AffineArtin:
      for (int i = 1; i <= n; ++i) braid_pair(g0, fin[i], c.laces(0, i));
      break;
    case PresentationKind::Cherednik: {
      for (int i = 1; i <= n; ++i) braid_pair(g0, fin[i], c.laces(0, i));
      // X_{a0^-1 theta} T_{s_theta}^{-1} braids with T_i exactly as T_0 does.
      Word y = concat(letter(gxth),
                      invert_word(theta_letters(c, p.alphabet, "T")));
      for (int i = 1; i <= n; ++i) {
        int m = mexp(c.laces(0, i));
        if (m == 0) continue;
        add_braid(p, letter(fin[i]), y, m,
                  "braid03(T" + std::to_string(i) + "|m=" + std::to_string(m) +
                      ")");
      }
      for (std::size_t g = 0; g < p.alphabet.size(); ++g) {
        if ((int)g == gxdl) continue;
        p.relations.push_back(Relation{
            concat(letter(gxdl), letter((int)g)),
            concat(letter((int)g), letter(gxdl)),
            "central(Xdl," + p.alphabet.name((int)g) + ")"});
      }
      // One relation of each remaining type suffices.
      if (c.l0 == 1) {
        Word xa = free_reduce(concat(
            concat(letter(fin[al]), letter(gxth, -1)),
            concat(letter(fin[al]), letter(gxth))));
        p.relations.push_back(Relation{
            free_reduce(concat(concat(letter(g0), xa), letter(g0))),
            free_reduce(concat(concat(xa, letter(gxdl)), letter(gxth, -1))),
            "reduction2(i)"});
      } else if (c.l0 == 2) {
        Word xm = free_reduce(concat(concat(letter(fin[al]), letter(gxth, -1)),
                                     letter(fin[al])));
        p.relations.push_back(Relation{free_reduce(concat(letter(g0), xm)),
                                       free_reduce(concat(xm, letter(g0))),
                                       "reduction2(ii)"});
      }
      p.hecke_symbols = {"q"};
      for (int i = 0; i <= n; ++i)
        p.hecke_symbols.push_back("t" + std::to_string(i));
      break;
    }
    default: {  // triple family
      for (int j = 1; j <= 3; ++j)
        for (int i = 1; i <= n; ++i) braid_pair(aff3[j], fin[i], c.laces(0, i));

      Word ta = letter(fin[al]);
      Word tsth = theta_letters(c, p.alphabet, stem);
      Word cw = concat(concat(letter(aff3[1]), letter(aff3[2])),
                       concat(letter(aff3[3]), tsth));

      if (c.l0 == 1 &&
          (k == PresentationKind::Triple ||
           k == PresentationKind::TripleQuotient)) {
        Word d = concat(concat(letter(aff3[1]), letter(aff3[2])),
                        letter(aff3[3]));
        std::vector<std::pair<std::string, Word>> elems = {
            {stem + "01", letter(aff3[1])},
            {stem + "02", letter(aff3[2])},
            {stem + "03", letter(aff3[3])},
            {stem + "01*", free_reduce(concat(
                               concat(letter(aff3[1]), letter(aff3[2])),
                               letter(aff3[1], -1)))},
            {stem + "03*", free_reduce(concat(
                               concat(letter(aff3[3], -1), letter(aff3[2])),
                               letter(aff3[3])))}};
        for (const auto& [nm, e] : elems)
          for (long kk = -kbound; kk <= kbound; ++kk) {
            Word dk;
            for (long t = 0; t < std::abs(kk); ++t)
              dk = concat(dk, kk > 0 ? d : invert_word(d));
            Word y = free_reduce(concat(concat(dk, ta), invert_word(dk)));
            add_braid(p, e, y, 3,
                      "family-b(" + nm + ",k=" + std::to_string(kk) + ")");
          }
      }

      if (c.l0 == 2) {
        auto ellbraid = [&](int i, int j) {
          // With order-two generators the conjugating letter needs no inverse.
          Word tai = weyl ? ta : invert_word(ta);
          p.relations.push_back(Relation{
              free_reduce(concat(concat(letter(aff3[i]), tai),
                                 concat(letter(aff3[j]), ta))),
              free_reduce(concat(concat(tai, letter(aff3[j])),
                                 concat(ta, letter(aff3[i])))),
              weyl ? "wellbraid"
                   : "ellbraid(" + std::to_string(i) + "," + std::to_string(j) +
                         ")"});
        };
        if (k == PresentationKind::Triple ||
            k == PresentationKind::TripleQuotient ||
            k == PresentationKind::DoubleAffineWeyl ||
            k == PresentationKind::EllipticWeyl) {
          // Weyl kinds state it for the (1,3) pair; the triple group for all.
          if (weyl)
            ellbraid(1, 3);
          else
            for (int i = 1; i <= 3; ++i)
              for (int j = i + 1; j <= 3; ++j) ellbraid(i, j);
        } else {
          ellbraid(1, 3);
        }
      }

      if (k != PresentationKind::Triple) {
        if (is_elliptic_kind(k)) {
          p.relations.push_back(Relation{free_reduce(cw), Word{}, "elliptic"});
        } else {
          for (std::size_t g = 0; g < p.alphabet.size(); ++g)
            p.relations.push_back(Relation{
                concat(cw, letter((int)g)), concat(letter((int)g), cw),
                "central(C," + p.alphabet.name((int)g) + ")"});
        }
      }
      if (!weyl) {
        p.hecke_symbols = {"q", "t01", "t02", "t03"};
        for (int i = 1; i <= n; ++i)
          p.hecke_symbols.push_back("t" + std::to_string(i));
      }
      break;
    }
  }
  return p;
}

std::string presentation_text(const Presentation& p) {
  std::ostringstream os;
  os << "generators:";
  for (std::size_t g = 0; g < p.alphabet.size(); ++g)
    os << ' ' << p.alphabet.name((int)g);
  os << '\n';
  for (const Relation& r : p.relations)
    os << format_word(p.alphabet, r.lhs) << " = "
       << format_word(p.alphabet, r.rhs) << "  # " << r.tag << '\n';
  return os.str();
}

Assignment canonical_assignment(const AffineCartanData& c,
                                const Presentation& p) {
  Assignment a;
  a.reserve(p.alphabet.size());
  LatticeVector th = scale_lattice(c.a0inv(), theta(c));
  for (std::size_t g = 0; g < p.alphabet.size(); ++g) {
    const std::string& nm = p.alphabet.name((int)g);
    if (nm == "Xth") {
      a.push_back(DAWElement{finite_identity(c), lattice_zero(c), th, Rat(0)});
    } else if (nm == "Xdl") {
      a.push_back(from_generator(c, "tau"));
    } else if (nm == "s0" || nm == "T0" || nm == "s01" || nm == "T01") {
      a.push_back(from_generator(c, "s_01"));
    } else if (nm == "s02" || nm == "T02") {
      a.push_back(from_generator(c, "s_02"));
    } else if (nm == "s03" || nm == "T03") {
      a.push_back(from_generator(c, "s_03"));
    } else {
      a.push_back(from_generator(c, "s_" + nm.substr(1)));
    }
  }
  return a;
}

DAWElement assigned_eval(const AffineCartanData& c, const Assignment& a,
                         const Word& w) {
  DAWElement out = daw_identity(c);
  for (const Letter& l : w) {
    DAWElement g = a.at(l.gen);
    if (l.sign < 0) g = inverse(c, g);
    out = multiply(c, out, g);
  }
  return out;
}

std::string element_str(const AffineCartanData& c, const DAWElement& g) {
  std::ostringstream os;
  os << "(w=";
  std::vector<int> wd = finite_word(c, g.w);
  if (wd.empty()) os << "1";
  for (std::size_t i = 0; i < wd.size(); ++i)
    os << (i ? " s" : "s") << wd[i];
  auto coords = [&](const LatticeVector& v) {
    os << '[';
    for (int i = 0; i < c.n; ++i) os << (i ? "," : "") << rat_str(v.coords[i]);
    if (v.delta != 0) os << ";" << rat_str(v.delta) << "d";
    os << ']';
  };
  os << ", mu=";
  coords(g.mu);
  os << ", beta=";
  coords(g.beta);
  os << ", c=" << rat_str(g.c) << ")";
  return os.str();
}

VerifyReport verify(const AffineCartanData& c, const Presentation& p,
                    const Assignment& a) {
  VerifyReport rep;
  const bool ell = is_elliptic_kind(p.kind);
  for (const Relation& r : p.relations) {
    DAWElement l = assigned_eval(c, a, r.lhs);
    DAWElement rr = assigned_eval(c, a, r.rhs);
    if (ell) {
      l = elliptic_project(c, l);
      rr = elliptic_project(c, rr);
    }
    Mat ml = rho(c, l), mr = rho(c, rr);
    bool ok = (l == rr) && (ml == mr);
    RelationResult res{r.tag, ok, ""};
    if (!ok) {
      res.witness = "lhs=" + element_str(c, l) + " rhs=" + element_str(c, rr) +
                    " rho(lhs)=" + ml.str() + " rho(rhs)=" + mr.str();
      rep.pass = false;
    }
    rep.results.push_back(std::move(res));
  }
  return rep;
}

Word substitute(const IsoSpec& spec, const Word& w) {
  Word out;
  for (const Letter& l : w) {
    const Word& img = spec.images.at(l.gen);
    out = concat(out, l.sign > 0 ? img : invert_word(img));
  }
  return free_reduce(out);
}

IsoSpec main_iso_phi(const AffineCartanData& c, const Presentation& from_triple,
                     const Presentation& to_cher) {
  IsoSpec spec;
  const Alphabet& src = from_triple.alphabet;
  const Alphabet& dst = to_cher.alphabet;
  Word tsth = theta_letters(c, dst, "T");
  int t0 = dst.index("T0"), xth = dst.index("Xth"), xdl = dst.index("Xdl");
  spec.images.resize(src.size());
  for (std::size_t g = 0; g < src.size(); ++g) {
    const std::string& nm = src.name((int)g);
    if (nm == "T01")
      spec.images[g] = letter(t0);
    else if (nm == "T02")
      spec.images[g] = Word{Letter{t0, -1}, Letter{xdl, 1}, Letter{xth, -1}};
    else if (nm == "T03")
      spec.images[g] = concat(letter(xth), invert_word(tsth));
    else
      spec.images[g] = letter(dst.index(nm));
  }
  return spec;
}

IsoSpec main_iso_psi(const AffineCartanData& c, const Presentation& from_cher,
                     const Presentation& to_triple) {
  IsoSpec spec;
  const Alphabet& src = from_cher.alphabet;
  const Alphabet& dst = to_triple.alphabet;
  Word tsth = theta_letters(c, dst, "T");
  spec.images.resize(src.size());
  for (std::size_t g = 0; g < src.size(); ++g) {
    const std::string& nm = src.name((int)g);
    if (nm == "T0")
      spec.images[g] = letter(dst.index("T01"));
    else if (nm == "Xth")
      spec.images[g] = concat(letter(dst.index("T03")), tsth);
    else if (nm == "Xdl")
      spec.images[g] =
          concat(concat(letter(dst.index("T01")), letter(dst.index("T02"))),
                 concat(letter(dst.index("T03")), tsth));
    else
      spec.images[g] = letter(dst.index(nm));
  }
  return spec;
}

VerifyReport check_iso_on_generators(const AffineCartanData& c,
                                     const IsoSpec& phi, const IsoSpec& psi,
                                     const Presentation& p1,
                                     const Presentation& p2,
                                     const Assignment& a1,
                                     const Assignment& a2) {
  VerifyReport rep;
  auto record = [&](const std::string& tag, bool ok,
                    const std::string& witness) {
    if (!ok) rep.pass = false;
    rep.results.push_back(RelationResult{tag, ok, ok ? "" : witness});
  };
  for (std::size_t g = 0; g < p1.alphabet.size(); ++g) {
    const std::string nm = p1.alphabet.name((int)g);
    DAWElement img = assigned_eval(c, a2, phi.images[g]);
    record("phi(" + nm + ")", img == a1[g], element_str(c, img));
    Word comp = substitute(psi, phi.images[g]);
    bool ok = comp == letter((int)g) &&
              assigned_eval(c, a1, comp) == a1[g];
    record("psi.phi(" + nm + ")", ok, format_word(p1.alphabet, comp));
  }
  for (std::size_t g = 0; g < p2.alphabet.size(); ++g) {
    const std::string nm = p2.alphabet.name((int)g);
    DAWElement img = assigned_eval(c, a1, psi.images[g]);
    record("psi(" + nm + ")", img == a2[g], element_str(c, img));
    Word comp = substitute(phi, psi.images[g]);
    bool ok = comp == letter((int)g) &&
              assigned_eval(c, a2, comp) == a2[g];
    record("phi.psi(" + nm + ")", ok, format_word(p2.alphabet, comp));
  }
  for (const Relation& r : p1.relations) {
    DAWElement l = assigned_eval(c, a2, substitute(phi, r.lhs));
    DAWElement rr = assigned_eval(c, a2, substitute(phi, r.rhs));
    record("phi-rel(" + r.tag + ")", l == rr,
           "lhs=" + element_str(c, l) + " rhs=" + element_str(c, rr));
  }
  for (const Relation& r : p2.relations) {
    DAWElement l = assigned_eval(c, a1, substitute(psi, r.lhs));
    DAWElement rr = assigned_eval(c, a1, substitute(psi, r.rhs));
    record("psi-rel(" + r.tag + ")", l == rr,
           "lhs=" + element_str(c, l) + " rhs=" + element_str(c, rr));
  }
  return rep;
}

}  // namespace daw
