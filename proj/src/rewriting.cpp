#include "daw/rewriting.hpp"

#include <algorithm>
#include <deque>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "daw/cartan.hpp"

namespace daw {

namespace {

Word rotate(const Word& w, int r) {
  Word out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    out.push_back(w[(i + r) % w.size()]);
  return out;
}

struct RelatorRule {
  int relator;
  int rotation;
  int t;
};

// Deterministic enumeration shared by ids and search order.
std::vector<RelatorRule> relator_rules(const RewriteSystem& rs) {
  std::vector<RelatorRule> out;
  for (int k = 0; k < (int)rs.relators.size(); ++k) {
    int L = (int)rs.relators[k].size();
    for (int r = 0; r < L; ++r)
      for (int t = 0; t <= L; ++t) out.push_back({k, r, t});
  }
  return out;
}

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (const Letter& l : w) {
      h = (h ^ (std::size_t)(l.gen * 2 + (l.sign > 0))) * 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

RewriteSystem rewrite_system(const Alphabet& a,
                             const std::vector<Word>& relators) {
  RewriteSystem rs;
  rs.alphabet = a;
  for (const Word& r : relators) {
    Word red = free_reduce(r);
    if (!red.empty()) rs.relators.push_back(std::move(red));
  }
  for (const Word& r : rs.relators)
    rs.relator_rule_count += (int)r.size() * ((int)r.size() + 1);
  return rs;
}

RewriteSystem rewrite_system(const Presentation& p) {
  std::vector<Word> rel;
  for (const Relation& r : p.relations)
    rel.push_back(concat(r.lhs, invert_word(r.rhs)));
  return rewrite_system(p.alphabet, rel);
}

void add_relator(RewriteSystem& rs, const Word& lhs, const Word& rhs) {
  Word red = free_reduce(concat(lhs, invert_word(rhs)));
  if (red.empty()) return;
  rs.relators.push_back(red);
  rs.relator_rule_count += (int)red.size() * ((int)red.size() + 1);
}

int rule_count(const RewriteSystem& rs) {
  return rs.relator_rule_count + 1 + 2 * (int)rs.alphabet.size();
}

int cancel_rule(const RewriteSystem& rs) { return rs.relator_rule_count; }

int insert_rule(const RewriteSystem& rs, int gen, int sign) {
  return rs.relator_rule_count + 1 + 2 * gen + (sign < 0 ? 1 : 0);
}

std::string rule_desc(const RewriteSystem& rs, int rule) {
  if (rule < rs.relator_rule_count) {
    auto rules = relator_rules(rs);
    const RelatorRule& rr = rules.at(rule);
    return "relator " + std::to_string(rr.relator) + " rot " +
           std::to_string(rr.rotation) + " t " + std::to_string(rr.t);
  }
  if (rule == cancel_rule(rs)) return "cancel";
  int off = rule - rs.relator_rule_count - 1;
  return "insert " + rs.alphabet.name(off / 2) + (off % 2 ? "^-1" : "");
}

std::optional<Word> apply_rule(const RewriteSystem& rs, const Word& w, int rule,
                               int position, int direction) {
  if (rule < 0 || rule >= rule_count(rs) || position < 0) return std::nullopt;
  if (rule < rs.relator_rule_count) {
    // Locate the (relator, rotation, t) triple for this id.
    int k = 0, rem = rule;
    while (true) {
      int L = (int)rs.relators[k].size();
      if (rem < L * (L + 1)) break;
      rem -= L * (L + 1);
      ++k;
    }
    int L = (int)rs.relators[k].size();
    int r = rem / (L + 1), t = rem % (L + 1);
    Word base = direction >= 0 ? rs.relators[k] : invert_word(rs.relators[k]);
    Word rot = rotate(base, r);
    if (position + t > (int)w.size()) return std::nullopt;
    for (int i = 0; i < t; ++i)
      if (w[position + i] != rot[i]) return std::nullopt;
    Word out(w.begin(), w.begin() + position);
    for (int i = L - 1; i >= t; --i)
      out.push_back(Letter{rot[i].gen, -rot[i].sign});
    out.insert(out.end(), w.begin() + position + t, w.end());
    return out;
  }
  if (rule == cancel_rule(rs)) {
    if (position + 2 > (int)w.size()) return std::nullopt;
    if (w[position].gen != w[position + 1].gen ||
        w[position].sign != -w[position + 1].sign)
      return std::nullopt;
    Word out(w.begin(), w.begin() + position);
    out.insert(out.end(), w.begin() + position + 2, w.end());
    return out;
  }
  int off = rule - rs.relator_rule_count - 1;
  int gen = off / 2, sign = off % 2 ? -1 : 1;
  if (gen >= (int)rs.alphabet.size() || position > (int)w.size())
    return std::nullopt;
  Word out(w.begin(), w.begin() + position);
  out.push_back(Letter{gen, sign});
  out.push_back(Letter{gen, -sign});
  out.insert(out.end(), w.begin() + position, w.end());
  return out;
}

DerivationStep invert_step(const RewriteSystem& rs, const Word& w,
                           const DerivationStep& s) {
  if (s.rule < rs.relator_rule_count) {
    int k = 0, rem = s.rule;
    while (true) {
      int L = (int)rs.relators[k].size();
      if (rem < L * (L + 1)) break;
      rem -= L * (L + 1);
      ++k;
    }
    int L = (int)rs.relators[k].size();
    int r = rem / (L + 1), t = rem % (L + 1);
    int base = s.rule - (r * (L + 1) + t);
    int rinv = (L - r) % L;
    return DerivationStep{base + rinv * (L + 1) + (L - t), s.position,
                          -s.direction};
  }
  if (s.rule == cancel_rule(rs)) {
    const Letter& l = w.at(s.position);
    return DerivationStep{insert_rule(rs, l.gen, l.sign), s.position, 1};
  }
  return DerivationStep{cancel_rule(rs), s.position, 1};
}

Word replay(const RewriteSystem& rs, const Word& start,
            const std::vector<DerivationStep>& steps) {
  Word w = start;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    auto next = apply_rule(rs, w, steps[i].rule, steps[i].position,
                           steps[i].direction);
    if (!next)
      throw BadStepError("step " + std::to_string(i) + " does not apply (" +
                         rule_desc(rs, steps[i].rule) + " at " +
                         std::to_string(steps[i].position) + ")");
    w = std::move(*next);
  }
  return w;
}

bool verify_derivation(const RewriteSystem& rs, const DerivationTrace& t) {
  try {
    return replay(rs, t.start, t.steps) == t.end;
  } catch (const BadStepError&) {
    return false;
  }
}

Budget default_budget(const Word& w1, const Word& w2) {
  return Budget{std::max(w1.size(), w2.size()) + 8, 1000000};
}

ProveResult equal_modulo(const RewriteSystem& rs, const Word& w1,
                         const Word& w2, const Budget& budget) {
  ProveResult res;
  if (w1 == w2) {
    res.proved = true;
    res.trace = DerivationTrace{w1, w2, {}};
    return res;
  }
  auto rules = relator_rules(rs);

  struct Node {
    Word w;
    int parent;  // index within the same side; -1 for root
    DerivationStep via;
  };
  // side 0 grows from w1, side 1 from w2.
  std::vector<Node> nodes[2];
  std::unordered_map<Word, int, WordHash> seen[2];
  std::deque<int> frontier[2];
  for (int s : {0, 1}) {
    nodes[s].push_back(Node{s == 0 ? w1 : w2, -1, {}});
    seen[s].emplace(nodes[s][0].w, 0);
    frontier[s].push_back(0);
  }

  auto path_to_root = [&](int side, int idx) {
    std::vector<DerivationStep> steps;
    std::vector<Word> words;
    while (idx >= 0) {
      words.push_back(nodes[side][idx].w);
      if (nodes[side][idx].parent >= 0) steps.push_back(nodes[side][idx].via);
      idx = nodes[side][idx].parent;
    }
    // steps are child..root order; words one longer.
    return std::make_pair(steps, words);
  };

  auto build_trace = [&](int i0, int i1) {
    auto [s0, w0] = path_to_root(0, i0);  // meet -> w1
    auto [s1, w1p] = path_to_root(1, i1);
    DerivationTrace t;
    t.start = w1;
    t.end = w2;
    for (auto it = s0.rbegin(); it != s0.rend(); ++it) t.steps.push_back(*it);
    // Invert the w2-side path: steps lead w2 -> meet; we need meet -> w2.
    for (std::size_t i = 0; i < s1.size(); ++i)
      t.steps.push_back(invert_step(rs, w1p[i + 1], s1[i]));
    return t;
  };

  std::size_t expanded = 0;
  while (!frontier[0].empty() || !frontier[1].empty()) {
    int side;
    if (frontier[0].empty())
      side = 1;
    else if (frontier[1].empty())
      side = 0;
    else
      side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    int cur = frontier[side].front();
    frontier[side].pop_front();
    Word w = nodes[side][cur].w;

    auto visit = [&](const Word& child, const DerivationStep& via)
        -> std::optional<ProveResult> {
      if (child.size() > budget.max_len) return std::nullopt;
      if (seen[side].count(child)) return std::nullopt;
      int idx = (int)nodes[side].size();
      nodes[side].push_back(Node{child, cur, via});
      seen[side].emplace(child, idx);
      frontier[side].push_back(idx);
      auto hit = seen[1 - side].find(child);
      if (hit != seen[1 - side].end()) {
        ProveResult r;
        r.proved = true;
        r.trace = side == 0 ? build_trace(idx, hit->second)
                            : build_trace(hit->second, idx);
        r.nodes = nodes[0].size() + nodes[1].size();
        return r;
      }
      return std::nullopt;
    };

    // Children in (rule, direction, position) order for determinism.
    int rid = 0;
    for (const RelatorRule& rr : rules) {
      int L = (int)rs.relators[rr.relator].size();
      for (int dir : {1, -1}) {
        Word base = dir > 0 ? rs.relators[rr.relator]
                            : invert_word(rs.relators[rr.relator]);
        Word rot = rotate(base, rr.rotation);
        for (int p = 0; p + rr.t <= (int)w.size(); ++p) {
          bool match = true;
          for (int i = 0; i < rr.t && match; ++i)
            if (w[p + i] != rot[i]) match = false;
          if (!match) continue;
          Word child(w.begin(), w.begin() + p);
          for (int i = L - 1; i >= rr.t; --i)
            child.push_back(Letter{rot[i].gen, -rot[i].sign});
          child.insert(child.end(), w.begin() + p + rr.t, w.end());
          if (auto r = visit(child, DerivationStep{rid, p, dir})) return *r;
        }
      }
      ++rid;
    }
    for (int p = 0; p + 2 <= (int)w.size(); ++p) {
      if (w[p].gen != w[p + 1].gen || w[p].sign != -w[p + 1].sign) continue;
      Word child(w.begin(), w.begin() + p);
      child.insert(child.end(), w.begin() + p + 2, w.end());
      if (auto r = visit(child, DerivationStep{cancel_rule(rs), p, 1}))
        return *r;
    }
    for (int g = 0; g < (int)rs.alphabet.size(); ++g)
      for (int sgn : {1, -1})
        for (int p = 0; p <= (int)w.size(); ++p) {
          Word child(w.begin(), w.begin() + p);
          child.push_back(Letter{g, sgn});
          child.push_back(Letter{g, -sgn});
          child.insert(child.end(), w.begin() + p, w.end());
          if (auto r = visit(
                  child, DerivationStep{insert_rule(rs, g, sgn), p, 1}))
            return *r;
        }

    if (++expanded, nodes[0].size() + nodes[1].size() > budget.max_nodes)
      break;
  }
  res.nodes = nodes[0].size() + nodes[1].size();
  return res;
}

// ---- fixtures ------------------------------------------------------------

namespace {

using nlohmann::json;

Presentation presentation_from_json(const json& j) {
  if (j.contains("type")) {
    AffineCartanData c = load_catalog(j.at("type").get<std::string>());
    long kb = j.value("kbound", 3);
    return presentation_of(kind_from_name(j.at("kind").get<std::string>()), c,
                           kb);
  }
  Presentation p;
  p.kind = PresentationKind::FiniteArtin;  // inline fixtures are Artin-like
  p.type_id = "custom";
  for (const auto& g : j.at("generators"))
    p.alphabet.intern(g.get<std::string>());
  for (const auto& r : j.at("relations"))
    p.relations.push_back(
        Relation{parse_word(p.alphabet, r.at("lhs").get<std::string>()),
                 parse_word(p.alphabet, r.at("rhs").get<std::string>()),
                 r.value("tag", "")});
  return p;
}

struct FixtureCtx {
  std::filesystem::path dir;
  std::set<std::string> in_progress;
  std::map<std::string, FixtureResult> done;
};

FixtureResult verify_fixture(FixtureCtx& ctx, const std::string& name);

// Verifies the lemma fixtures and returns their proved equalities.
std::vector<std::pair<Word, Word>> resolve_lemmas(FixtureCtx& ctx,
                                                  const json& j,
                                                  const Alphabet& alphabet) {
  std::vector<std::pair<Word, Word>> eqs;
  for (const auto& l : j.value("lemmas", json::array())) {
    std::string lname = l.get<std::string>();
    FixtureResult lr = verify_fixture(ctx, lname);
    if (!lr.pass)
      throw BadStepError("lemma " + lname + " failed: " + lr.detail);
    std::ifstream in(ctx.dir / (lname + ".json"));
    json lj = json::parse(in);
    eqs.emplace_back(parse_word(alphabet, lj.at("start").get<std::string>()),
                     parse_word(alphabet, lj.at("end").get<std::string>()));
  }
  return eqs;
}

FixtureResult verify_fixture(FixtureCtx& ctx, const std::string& name) {
  if (auto it = ctx.done.find(name); it != ctx.done.end()) return it->second;
  FixtureResult res;
  res.name = name;
  if (!ctx.in_progress.insert(name).second) {
    res.detail = "cyclic lemma reference";
    ctx.done[name] = res;
    return res;
  }
  try {
    std::ifstream in(ctx.dir / (name + ".json"));
    if (!in) throw BadStepError("cannot open fixture " + name);
    json j = json::parse(in);
    Presentation p = presentation_from_json(j.at("presentation"));
    RewriteSystem rs = rewrite_system(p);
    for (const auto& [l, r] : resolve_lemmas(ctx, j, p.alphabet))
      add_relator(rs, l, r);
    DerivationTrace t;
    t.start = parse_word(p.alphabet, j.at("start").get<std::string>());
    t.end = parse_word(p.alphabet, j.at("end").get<std::string>());
    for (const auto& s : j.at("steps"))
      t.steps.push_back(DerivationStep{s.at("ruleId").get<int>(),
                                       s.at("position").get<int>(),
                                       s.at("direction").get<int>()});
    Word got = replay(rs, t.start, t.steps);
    if (got == t.end) {
      res.pass = true;
    } else {
      res.detail = "replay ended at " + format_word(p.alphabet, got);
    }
  } catch (const std::exception& e) {
    res.detail = e.what();
  }
  ctx.in_progress.erase(name);
  ctx.done[name] = res;
  return res;
}

}  // namespace

Presentation presentation_from_json_text(const std::string& text) {
  return presentation_from_json(json::parse(text));
}

FixtureResult verify_fixture_file(const std::string& path) {
  std::filesystem::path p(path);
  FixtureCtx ctx;
  ctx.dir = p.parent_path();
  return verify_fixture(ctx, p.stem().string());
}

std::vector<FixtureResult> verify_fixture_dir(const std::string& dir) {
  FixtureCtx ctx;
  ctx.dir = dir;
  std::vector<std::string> names;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".json") names.push_back(e.path().stem());
  std::sort(names.begin(), names.end());
  std::vector<FixtureResult> out;
  for (const std::string& n : names) out.push_back(verify_fixture(ctx, n));
  return out;
}

}  // namespace daw
