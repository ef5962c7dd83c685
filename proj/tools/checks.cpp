#include "checks.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>

#include "ordwalk/csequence.hpp"
#include "ordwalk/ladder.hpp"
#include "ordwalk/reference.hpp"
#include "ordwalk/space.hpp"

namespace ordwalk::checks {
namespace {

Ordinal lit(std::string_view s) { return parse(s); }

class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

  template <class T>
  std::set<T> subset(const std::vector<T>& pool, std::size_t max_size) {
    std::set<T> out;
    if (pool.empty()) return out;
    const std::size_t size = index(max_size + 1);
    for (std::size_t i = 0; i < size; ++i) out.insert(pool[index(pool.size())]);
    return out;
  }

private:
  std::mt19937_64 engine_;
};

std::vector<Ordinal> below(const std::vector<Ordinal>& xs, const Ordinal& bound) {
  std::vector<Ordinal> out;
  for (const Ordinal& x : xs) {
    if (x < bound) out.push_back(x);
  }
  return out;
}

const std::vector<Ordinal>& probe_w3_t2() {
  static const std::vector<Ordinal> members = enumerate_probe(lit("w^3"), 2).members;
  return members;
}

// Limits used as alpha by the randomized space checks, with a probe pool each.
struct Arena {
  Ordinal alpha;
  std::vector<Ordinal> pool;
};

const std::vector<Arena>& arenas() {
  static const std::vector<Arena> all = [] {
    std::vector<Arena> out;
    for (const char* s : {"w^2", "w^3", "w^2*3 + w", "w^3 + w^2", "w^(w)"}) {
      const Ordinal a = lit(s);
      out.push_back({a, enumerate_probe(a, 2).members});
    }
    return out;
  }();
  return all;
}

CheckResult make(std::string id, std::string title) {
  return CheckResult{std::move(id), std::move(title), true, Json::object()};
}

// Reference-side computations for the golden files.
std::vector<Ordinal> reference_extract(const std::set<Ordinal>& a, const Ordinal& alpha,
                                       Natural m) {
  std::vector<Ordinal> out;
  std::set<Ordinal> used;
  for (Natural n = 0; n <= m; ++n) {
    bool found = false;
    for (const Ordinal& xi : a) {
      if (xi < alpha && !used.count(xi) && reference::rho2(xi, alpha) >= n) {
        out.push_back(xi);
        used.insert(xi);
        found = true;
        break;
      }
    }
    if (!found) break;
  }
  return out;
}

struct ColoringSample {
  const char* gamma;
  std::vector<const char*> alphas;
};

const std::vector<ColoringSample>& coloring_samples() {
  static const std::vector<ColoringSample> samples = {
      {"w + 1", {"w"}},
      {"w*2", {"w"}},
      {"w^2", {"w", "w*2", "w*3", "w*4", "w*5", "w*6", "w*7", "w*8"}},
      {"w^3",
       {"w", "w*2", "w*3", "w*4", "w^2", "w^2*2", "w^2*3", "w^2*4", "w^2 + w", "w^2 + w*2",
        "w^2 + w*3", "w^2*2 + w", "w^2*2 + w*2", "w^2*2 + w*3", "w^2*3 + w", "w^2*3 + w*2",
        "w^2*3 + w*3"}},
  };
  return samples;
}

Json histogram_json(const std::map<Natural, std::size_t>& h) {
  Json out = Json::object();
  for (const auto& [v, c] : h) out[std::to_string(v)] = c;
  return out;
}

Json write_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream f(path);
  f << j.dump(2) << '\n';
  if (!f) throw ResourceError("cannot write " + path.string());
  return j;
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw ResourceError("cannot read " + path.string());
  return Json::parse(f);
}

const char* kTraceExamples[][2] = {
    {"0", "0"},       {"w", "w"},           {"0", "w^2"},        {"2", "w*2"},
    {"2", "w"},       {"w", "w*2"},         {"0", "w^(w)"},      {"5", "w"},
    {"0", "w"},       {"w + 1", "w^2 + 3"}, {"3", "w^(w^(w))"},  {"w^2 + 7", "w^(w) + w"},
};

const ColoringSample* find_sample(const std::string& gamma) {
  for (const auto& s : coloring_samples()) {
    if (gamma == s.gamma) return &s;
  }
  return nullptr;
}

}  // namespace

std::vector<std::pair<Ordinal, Ordinal>> coherence_pairs() {
  static const char* raw[][2] = {
      {"w", "w + 1"},           {"w", "w*2"},
      {"w", "w^2"},             {"w*2", "w*3"},
      {"w*2", "w^2"},           {"w*2", "w^2 + w"},
      {"w*3", "w^2*2"},         {"w^2", "w^2 + 1"},
      {"w^2", "w^2 + w"},       {"w^2", "w^2*2"},
      {"w^2", "w^2*2 + w*3"},   {"w^2 + w", "w^2*2"},
      {"w^2*2", "w^2*3"},       {"w^2*2", "w^2*2 + w"},
      {"w + 5", "w*2"},         {"w*2 + 3", "w^2"},
      {"w^2 + w*2", "w^2 + w*3"}, {"w^2*3", "w^2*3 + w + 1"},
      {"w^2 + 1", "w^2*2"},     {"w^2*2 + w", "w^2*3 + w*2"},
  };
  std::vector<std::pair<Ordinal, Ordinal>> out;
  for (const auto& p : raw) out.emplace_back(lit(p[0]), lit(p[1]));
  return out;
}

CheckResult oracle_equivalence() {
  auto r = make("oracle-equivalence", "production walks agree with the naive evaluator");
  const auto& p = probe_w3_t2();
  std::size_t pairs = 0, mismatches = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i; j < p.size(); ++j) {
      ++pairs;
      const WalkTrace t = trace(p[i], p[j]);
      if (t.points != reference::trace_points(p[i], p[j]) ||
          t.rho2() != reference::rho2(p[i], p[j]) || rho2(p[i], p[j]) != t.rho2()) {
        if (mismatches++ == 0) r.detail["firstMismatch"] = to_json(t);
      }
      if (i != j && !p[j].is_successor() &&
          min_above(p[j], p[i]) != reference::min_above(p[j], p[i])) {
        ++mismatches;
      }
    }
  }
  r.detail["pairs"] = pairs;
  r.detail["mismatches"] = mismatches;
  r.passed = mismatches == 0;
  return r;
}

CheckResult definitional_identities() {
  auto r = make("definitional-identities", "rho2(a,a) = 0 and rho2(a,a+1) = 1");
  std::size_t checked = 0, failures = 0;
  for (const Ordinal& a : enumerate_probe(lit("w^4"), 3).members) {
    ++checked;
    if (rho2(a, a) != 0 || rho2(a, successor(a)) != 1) ++failures;
  }
  r.detail["ordinals"] = checked;
  r.detail["failures"] = failures;
  r.passed = failures == 0;
  return r;
}

CheckResult trace_structure() {
  auto r = make("trace-structure", "traces descend from beta to alpha by min-above steps");
  const auto& p = probe_w3_t2();
  std::size_t pairs = 0, failures = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i; j < p.size(); ++j) {
      ++pairs;
      const WalkTrace t = trace(p[i], p[j]);
      bool ok = !t.points.empty() && t.points.front() == p[j] && t.points.back() == p[i] &&
                t.points.size() == rho2(p[i], p[j]) + 1;
      for (std::size_t k = 0; ok && k + 1 < t.points.size(); ++k) {
        ok = t.points[k + 1] < t.points[k] && t.points[k + 1] == min_above(t.points[k], p[i]);
      }
      if (i < j) ok = ok && t.rho2() >= 1;
      if (!ok) ++failures;
    }
  }
  r.detail["pairs"] = pairs;
  r.detail["failures"] = failures;
  r.passed = failures == 0;
  return r;
}

CheckResult stabilizer_soundness(std::uint64_t seed) {
  auto r = make("stabilizer-soundness",
                "walks from beta to any xi in (eta, alpha) pass through the trace to alpha");
  Sampler s(seed ^ 0x5354414249ULL);
  const auto p = enumerate_probe(lit("w^4"), 3).members;
  std::size_t pairs = 0, witnesses = 0, failures = 0;
  while (pairs < 200) {
    std::size_t i = s.index(p.size()), j = s.index(p.size());
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    ++pairs;
    const Ordinal& alpha = p[i];
    const Ordinal& beta = p[j];
    const Ordinal eta = stabilizer(alpha, beta);
    const WalkTrace t = trace(alpha, beta);
    const std::size_t n = t.rho2();
    for (std::size_t k = 0; k < i; ++k) {
      if (!(p[k] > eta)) continue;
      ++witnesses;
      const WalkTrace tx = trace(p[k], beta);
      const bool prefix = tx.points.size() > n &&
                          std::equal(t.points.begin(), t.points.begin() + n, tx.points.begin());
      if (tx.rho2() < n || !prefix) ++failures;
    }
  }
  r.detail["pairs"] = pairs;
  r.detail["xiChecked"] = witnesses;
  r.detail["failures"] = failures;
  r.passed = failures == 0 && witnesses > 0;
  return r;
}

CheckResult separation_exactness(std::uint64_t seed) {
  auto r = make("separation-exactness",
                "each point of B leaves its certified level; the apex stays in every level");
  Sampler s(seed ^ 0x5345504152ULL);
  std::size_t trials = 0, points = 0, failures = 0;
  for (; trials < 100; ++trials) {
    std::set<Ordinal> b;
    const std::size_t size = 1 + s.index(8);
    while (b.size() < size) b.insert(probe_w3_t2()[s.index(probe_w3_t2().size())]);
    const Separation sep = gdelta_separate(b);
    bool ok = sep.scheme.beta.is_limit() && sep.scheme.beta > *b.rbegin();
    for (const auto& [xi, level] : sep.certificate) {
      ++points;
      ok = ok && !member(Point{xi}, sep.scheme.level(level));
    }
    for (Natural n = 0; n <= 32; ++n) ok = ok && member(Point{Apex{}}, sep.scheme.level(n));
    if (!ok) ++failures;
  }
  r.detail["trials"] = trials;
  r.detail["points"] = points;
  r.detail["failures"] = failures;
  r.passed = failures == 0;
  return r;
}

CheckResult frechet_extraction(std::uint64_t seed) {
  auto r = make("frechet-extraction", "extracted sequences are injective with rho2(xi_n) >= n");
  Sampler s(seed ^ 0x4652454348ULL);
  std::size_t failures = 0, total_length = 0;
  for (int inst = 0; inst < 50; ++inst) {
    const Arena& arena = arenas()[s.index(arenas().size())];
    const auto a = s.subset(arena.pool, 40);
    const Natural m = s.index(11);
    const auto seq = frechet_extract(a, arena.alpha, m);
    total_length += seq.size();
    bool ok = seq.size() <= m + 1;
    std::set<Ordinal> seen;
    for (std::size_t n = 0; n < seq.size(); ++n) {
      ok = ok && a.count(seq[n]) && seq[n] < arena.alpha && seen.insert(seq[n]).second &&
           rho2(seq[n], arena.alpha) >= n;
    }
    if (seq.size() <= m) {
      // Stopped early: nothing unused can serve the next index.
      for (const Ordinal& xi : a) {
        if (xi < arena.alpha && !seen.count(xi) && rho2(xi, arena.alpha) >= seq.size()) ok = false;
      }
    }
    if (!ok) ++failures;
  }
  r.detail["instances"] = 50;
  r.detail["totalLength"] = total_length;
  r.detail["failures"] = failures;
  r.passed = failures == 0;
  return r;
}

CheckResult alpha1_merge_dominance(std::uint64_t seed) {
  auto r = make("alpha1-merge", "merged set almost contains each family with finite low fibers");
  Sampler s(seed ^ 0x4D45524745ULL);
  std::size_t failures = 0;
  for (int inst = 0; inst < 50; ++inst) {
    const Arena& arena = arenas()[s.index(arenas().size())];
    std::vector<std::set<Ordinal>> families(1 + s.index(6));
    for (auto& f : families) f = s.subset(arena.pool, 20);
    const auto merged = alpha1_merge(families, arena.alpha);
    auto weight = [&](const Ordinal& xi) { return rho2(xi, arena.alpha); };
    bool ok = true;
    Natural top = 0;
    for (std::size_t n = 0; n < families.size(); ++n) {
      for (const Ordinal& xi : families[n]) {
        top = std::max(top, weight(xi));
        if (!merged.count(xi) && weight(xi) > n) ok = false;
      }
    }
    for (Natural k = 0; k <= top + 1; ++k) {
      std::size_t lhs = 0, rhs = 0;
      for (const Ordinal& xi : merged) lhs += weight(xi) <= k;
      for (std::size_t n = 0; n < families.size() && n <= k; ++n) {
        for (const Ordinal& xi : families[n]) rhs += weight(xi) <= k;
      }
      if (lhs > rhs) ok = false;
    }
    if (!ok) ++failures;
  }
  r.detail["instances"] = 50;
  r.detail["failures"] = failures;
  r.passed = failures == 0;
  return r;
}

CheckResult coloring_certificates() {
  auto r = make("coloring-certificates", "ladder fibers of F stay within their certified bounds");
  std::size_t reports = 0, failures = 0;
  Json rows = Json::array();
  for (const auto& sample : coloring_samples()) {
    const Coloring coloring(lit(sample.gamma));
    for (const char* a : sample.alphas) {
      const Ordinal alpha = lit(a);
      const Natural b = coloring.bound(alpha);
      std::size_t worst = 0;
      for (Natural prefix : {64, 128, 256}) {
        ++reports;
        try {
          for (const auto& [v, c] : fiber_report(coloring, alpha, prefix)) {
            worst = std::max(worst, c);
          }
        } catch (const CertificateViolation&) {
          ++failures;
        }
      }
      rows.push_back(Json{{"gamma", sample.gamma}, {"alpha", a}, {"bound", b}, {"maxFiber", worst}});
    }
  }
  r.detail["reports"] = reports;
  r.detail["failures"] = failures;
  r.detail["ladders"] = std::move(rows);
  r.passed = failures == 0;
  return r;
}

CheckResult witness_productivity() {
  auto r = make("witness-productivity", "a pair with rho2 > 3 exists among probes below w^5");
  const ProbeSet p = enumerate_probe(lit("w^5"), 3);
  const auto w = unbounded_witness(p, p, 3);
  r.detail["probeSize"] = p.members.size();
  if (w) {
    r.detail["alpha"] = format(w->alpha);
    r.detail["beta"] = format(w->beta);
    r.detail["rho2"] = w->rho2;
  }
  r.passed = w && w->rho2 > 3;
  return r;
}

CheckResult coherence_stability() {
  auto r = make("coherence-stability", "max-delta at tier 3 equals tier 2 on at least 15 of 20 pairs");
  std::size_t stable = 0;
  Json rows = Json::array();
  for (const auto& [beta, gamma] : coherence_pairs()) {
    const auto t2 = coherence_delta(beta, gamma, enumerate_probe(beta, 2));
    const auto t3 = coherence_delta(beta, gamma, enumerate_probe(beta, 3));
    stable += t2.max_delta == t3.max_delta;
    rows.push_back(Json{{"beta", format(beta)},
                        {"gamma", format(gamma)},
                        {"tier2", to_json(t2)},
                        {"tier3", to_json(t3)}});
  }
  r.detail["stable"] = stable;
  r.detail["pairs"] = std::move(rows);
  r.passed = stable >= 15;
  return r;
}

std::vector<CheckResult> run_all(std::uint64_t seed) {
  return {oracle_equivalence(),          definitional_identities(),
          trace_structure(),             stabilizer_soundness(seed),
          separation_exactness(seed),    frechet_extraction(seed),
          alpha1_merge_dominance(seed),  coloring_certificates(),
          witness_productivity(),        coherence_stability()};
}

std::string selftest_json(std::uint64_t seed) {
  Json report;
  report["seed"] = seed;
  Json list = Json::array();
  bool all = true;
  for (const CheckResult& c : run_all(seed)) {
    all = all && c.passed;
    list.push_back(Json{{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"detail", c.detail}});
  }
  report["checks"] = std::move(list);
  report["passed"] = all;
  return report.dump(2);
}

void generate_golden(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);

  Json traces = Json::array();
  auto add_trace = [&](const Ordinal& a, const Ordinal& b) {
    const auto pts = reference::trace_points(a, b);
    traces.push_back(Json{{"alpha", format(a)},
                          {"beta", format(b)},
                          {"points", ordinal_list(pts)},
                          {"rho2", pts.size() - 1}});
  };
  for (const auto& e : kTraceExamples) add_trace(lit(e[0]), lit(e[1]));
  const auto small = enumerate_probe(lit("w^2"), 2).members;
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (std::size_t j = i; j < small.size(); ++j) add_trace(small[i], small[j]);
  }
  write_json(dir / "traces.json", traces);

  Json coherence = Json::array();
  for (const auto& [beta, gamma] : coherence_pairs()) {
    Json row{{"beta", format(beta)}, {"gamma", format(gamma)}};
    for (std::size_t tier : {2, 3}) {
      const auto [d, arg] = reference::coherence_delta(beta, gamma, enumerate_probe(beta, tier).members);
      row["tier" + std::to_string(tier)] = Json{{"maxDelta", d}, {"argmax", format(arg)}};
    }
    coherence.push_back(std::move(row));
  }
  write_json(dir / "coherence.json", coherence);

  const auto wp = enumerate_probe(lit("w^5"), 3).members;
  Json witness{{"cap", "w^5"}, {"tier", 3}, {"n", 3}};
  [&] {
    for (const Ordinal& a : wp) {
      for (const Ordinal& b : wp) {
        if (a < b && reference::rho2(a, b) > 3) {
          witness["alpha"] = format(a);
          witness["beta"] = format(b);
          witness["rho2"] = reference::rho2(a, b);
          return;
        }
      }
    }
  }();
  write_json(dir / "witness.json", witness);

  Json space;
  {
    const std::set<Ordinal> a{lit("w"), lit("w^2"), lit("w^3")};
    const Ordinal alpha = lit("w^(w)");
    const auto seq = reference_extract(a, alpha, 3);
    Json hist = Json::object();
    std::map<Natural, std::size_t> h;
    for (const Ordinal& xi : seq) ++h[reference::rho2(xi, alpha)];
    space["frechet"] = Json{{"set", ordinal_list({a.begin(), a.end()})},
                            {"alpha", format(alpha)},
                            {"m", 3},
                            {"sequence", ordinal_list(seq)},
                            {"histogram", histogram_json(h)}};
    Json seps = Json::array();
    for (const char* b : {"0", "5", "w + 3", "w^2*2 + 1"}) {
      const Ordinal xi = lit(b);
      const auto [mu, fin] = split_finite(xi);
      const Ordinal beta = mu + Ordinal::omega();
      seps.push_back(Json{{"set", Json::array({b})},
                          {"beta", format(beta)},
                          {"certificate", Json{{format(xi), reference::rho2(xi, beta)}}}});
    }
    space["separations"] = std::move(seps);
  }
  write_json(dir / "space.json", space);

  Json colorings = Json::array();
  for (const auto& sample : coloring_samples()) {
    const Ordinal gamma = lit(sample.gamma);
    for (const char* a : sample.alphas) {
      const Ordinal alpha = lit(a);
      std::map<Natural, std::size_t> h;
      for (Natural i = 0; i < 64; ++i) ++h[reference::coloring_value(gamma, reference::fund_seq(alpha, i))];
      std::size_t worst = 0;
      for (const auto& [v, c] : h) worst = std::max(worst, c);
      colorings.push_back(Json{{"gamma", sample.gamma},
                               {"alpha", a},
                               {"prefix", 64},
                               {"histogram", histogram_json(h)},
                               {"maxFiber", worst}});
    }
  }
  write_json(dir / "coloring.json", colorings);
}

std::vector<GoldenDiff> verify_golden(const std::filesystem::path& dir) {
  std::vector<GoldenDiff> out;

  {
    GoldenDiff d{"traces.json", true, ""};
    std::size_t n = 0;
    for (const Json& rec : read_json(dir / "traces.json")) {
      const WalkTrace t = trace_from_json(rec);
      ++n;
      if (to_json(trace(t.alpha, t.beta)) != rec) {
        d.matches = false;
        d.note = "trace differs for alpha=" + format(t.alpha) + " beta=" + format(t.beta);
        break;
      }
    }
    if (d.matches) d.note = std::to_string(n) + " records";
    out.push_back(d);
  }
  {
    GoldenDiff d{"coherence.json", true, ""};
    for (const Json& row : read_json(dir / "coherence.json")) {
      const Ordinal beta = lit(row.at("beta").get<std::string>());
      const Ordinal gamma = lit(row.at("gamma").get<std::string>());
      for (std::size_t tier : {2, 3}) {
        const auto got = to_json(coherence_delta(beta, gamma, enumerate_probe(beta, tier)));
        if (got != row.at("tier" + std::to_string(tier))) {
          d.matches = false;
          d.note = "delta differs for beta=" + format(beta) + " tier " + std::to_string(tier);
        }
      }
    }
    out.push_back(d);
  }
  {
    GoldenDiff d{"witness.json", true, ""};
    const Json g = read_json(dir / "witness.json");
    const ProbeSet p = enumerate_probe(lit(g.at("cap").get<std::string>()), g.at("tier").get<std::size_t>());
    const auto w = unbounded_witness(p, p, g.at("n").get<Natural>());
    d.matches = w && format(w->alpha) == g.at("alpha") && format(w->beta) == g.at("beta") &&
                w->rho2 == g.at("rho2").get<Natural>();
    if (!d.matches) d.note = "witness pair differs";
    out.push_back(d);
  }
  {
    GoldenDiff d{"space.json", true, ""};
    const Json g = read_json(dir / "space.json");
    const Json& f = g.at("frechet");
    const auto set_members = ordinals_from_json(f.at("set"));
    const Ordinal alpha = lit(f.at("alpha").get<std::string>());
    const auto seq = frechet_extract({set_members.begin(), set_members.end()}, alpha,
                                     f.at("m").get<Natural>());
    const auto report = convergence_report(seq, {alpha});
    if (ordinal_list(seq) != f.at("sequence") ||
        histogram_json(report.anchors.front().histogram) != f.at("histogram")) {
      d.matches = false;
      d.note = "frechet instance differs";
    }
    for (const Json& s : g.at("separations")) {
      const auto b = ordinals_from_json(s.at("set"));
      const Json got = to_json(gdelta_separate({b.begin(), b.end()}));
      if (got.at("beta") != s.at("beta") || got.at("certificate") != s.at("certificate")) {
        d.matches = false;
        d.note = "separation differs";
      }
    }
    out.push_back(d);
  }
  {
    GoldenDiff d{"coloring.json", true, ""};
    for (const Json& row : read_json(dir / "coloring.json")) {
      const Coloring coloring(lit(row.at("gamma").get<std::string>()));
      const Ordinal alpha = lit(row.at("alpha").get<std::string>());
      const auto h = fiber_report(coloring, alpha, row.at("prefix").get<Natural>());
      if (histogram_json(h) != row.at("histogram")) {
        d.matches = false;
        d.note = "fiber histogram differs for gamma=" + row.at("gamma").get<std::string>() +
                 " alpha=" + format(alpha);
      }
    }
    out.push_back(d);
  }
  return out;
}

}  // namespace ordwalk::checks
