#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "checks.hpp"
#include "ordwalk/csequence.hpp"
#include "ordwalk/json_io.hpp"
#include "ordwalk/ladder.hpp"
#include "ordwalk/probe.hpp"
#include "ordwalk/space.hpp"
#include "ordwalk/walks.hpp"

namespace ordwalk::cli {
namespace {

class UsageError : public Error {
public:
  using Error::Error;
};

struct RunConfig {
  std::string format = "text";
  std::size_t tier = 2;
  std::size_t step_guard = kDefaultStepGuard;
  std::uint64_t seed = 1;
  std::string out_file;
};

struct Output {
  Json json;
  std::string text;
  std::optional<std::string> csv;
  int status = 0;
};

using Action = std::function<Output()>;

std::vector<Ordinal> parse_list(const std::string& text) {
  std::vector<Ordinal> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(parse(item));
  }
  return out;
}

std::set<Ordinal> parse_set(const std::string& text) {
  const auto xs = parse_list(text);
  return {xs.begin(), xs.end()};
}

Point parse_point(const std::string& text) {
  if (text == "apex") return Apex{};
  return parse(text);
}

std::string join(const std::vector<Ordinal>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += format(xs[i]);
  }
  return out;
}

std::string lines(const std::vector<Ordinal>& xs) {
  std::string out;
  for (const Ordinal& x : xs) out += format(x) + '\n';
  return out;
}

Output scalar(Json value, std::string text) {
  Output o{std::move(value), text + '\n', text + '\n'};
  return o;
}

Output bool_output(bool b) { return scalar(b, b ? "true" : "false"); }

// ordinal literals are positional or named; both arrive as strings
struct Args {
  std::string a, b, c;
  std::vector<std::string> many;
  Natural n = 0;
  Natural m = 0;
  bool flag_a = false;
  bool flag_b = false;
};

void add_ord_commands(CLI::App& app, Action& action, const RunConfig& cfg, Args& args) {
  auto* ord = app.add_subcommand("ord", "ordinal arithmetic in Cantor normal form");
  ord->require_subcommand(1);

  auto* p = ord->add_subcommand("parse", "parse a literal and show its terms");
  p->add_option("literal", args.a)->required();
  p->callback([&] {
    action = [&] {
      const Ordinal x = parse(args.a);
      Json terms = Json::array();
      for (const Term& t : x.terms()) {
        terms.push_back(Json{{"exponent", format(t.exponent)}, {"coefficient", t.coefficient}});
      }
      Output o = scalar(format(x), format(x));
      o.json = Json{{"canonical", format(x)}, {"terms", std::move(terms)}};
      return o;
    };
  });

  auto* f = ord->add_subcommand("fmt", "print the canonical literal");
  f->add_option("literal", args.a)->required();
  f->callback([&] { action = [&] { return scalar(format(parse(args.a)), format(parse(args.a))); }; });

  auto* c = ord->add_subcommand("cmp", "compare two ordinals");
  c->add_option("a", args.a)->required();
  c->add_option("b", args.b)->required();
  c->callback([&] {
    action = [&] {
      const auto r = compare(parse(args.a), parse(args.b));
      const char* s = r < 0 ? "less" : r > 0 ? "greater" : "equal";
      return scalar(s, s);
    };
  });

  auto* a = ord->add_subcommand("add", "ordinal sum a + b");
  a->add_option("a", args.a)->required();
  a->add_option("b", args.b)->required();
  a->callback([&] {
    action = [&] {
      const std::string s = format(parse(args.a) + parse(args.b));
      return scalar(s, s);
    };
  });

  auto* s = ord->add_subcommand("succ", "successor a + 1");
  s->add_option("a", args.a)->required();
  s->callback([&] {
    action = [&] {
      const std::string r = format(successor(parse(args.a)));
      return scalar(r, r);
    };
  });

  auto* l = ord->add_subcommand("islimit", "whether a is a limit ordinal");
  l->add_option("a", args.a)->required();
  l->callback([&] { action = [&] { return bool_output(parse(args.a).is_limit()); }; });

  auto* pr = ord->add_subcommand("probe", "enumerate the probe set below a cap at --tier");
  pr->add_option("--cap", args.a)->required();
  pr->callback([&] {
    action = [&] {
      const ProbeSet ps = enumerate_probe(parse(args.a), cfg.tier);
      Output o{Json{{"cap", format(ps.cap)}, {"tier", ps.tier}, {"members", ordinal_list(ps.members)}},
               lines(ps.members), lines(ps.members)};
      return o;
    };
  });
}

void add_cseq_commands(CLI::App& app, Action& action, Args& args) {
  auto* cs = app.add_subcommand("cseq", "the canonical C-sequence");
  cs->require_subcommand(1);

  auto* f = cs->add_subcommand("fund", "i-th element of the fundamental sequence of a limit");
  f->add_option("lambda", args.a)->required();
  f->add_option("index", args.n)->required();
  f->callback([&] {
    action = [&] {
      const std::string s = format(fund_seq(parse(args.a), args.n));
      return scalar(s, s);
    };
  });

  auto* m = cs->add_subcommand("members", "elements of C_alpha below a bound");
  m->add_option("--alpha", args.a)->required();
  m->add_option("--below", args.b)->required();
  m->callback([&] {
    action = [&] {
      const auto xs = c_members(parse(args.a), parse(args.b));
      return Output{ordinal_list(xs), lines(xs), lines(xs)};
    };
  });

  auto* ab = cs->add_subcommand("above", "min(C_beta \\ alpha), one walk step");
  ab->add_option("--beta", args.a)->required();
  ab->add_option("--alpha", args.b)->required();
  ab->callback([&] {
    action = [&] {
      const std::string s = format(min_above(parse(args.a), parse(args.b)));
      return scalar(s, s);
    };
  });
}

void add_walk_commands(CLI::App& app, Action& action, const RunConfig& cfg, Args& args) {
  auto* w = app.add_subcommand("walk", "minimal walks and rho2");
  w->require_subcommand(1);

  auto* t = w->add_subcommand("trace", "points of the walk from beta down to alpha");
  t->add_option("--alpha", args.a)->required();
  t->add_option("--beta", args.b)->required();
  t->callback([&] {
    action = [&] {
      const WalkTrace tr = trace(parse(args.a), parse(args.b), cfg.step_guard);
      return Output{to_json(tr), join(tr.points, " > ") + '\n', lines(tr.points)};
    };
  });

  auto* r = w->add_subcommand("rho2", "number of steps of the walk");
  r->add_option("--alpha", args.a)->required();
  r->add_option("--beta", args.b)->required();
  r->callback([&] {
    action = [&] {
      const Natural v = rho2(parse(args.a), parse(args.b), cfg.step_guard);
      return scalar(v, std::to_string(v));
    };
  });

  auto* s = w->add_subcommand("stabilizer", "eta below alpha past which walks from beta agree");
  s->add_option("--alpha", args.a)->required();
  s->add_option("--beta", args.b)->required();
  s->callback([&] {
    action = [&] {
      const std::string v = format(stabilizer(parse(args.a), parse(args.b), cfg.step_guard));
      return scalar(v, v);
    };
  });

  auto* c = w->add_subcommand("coherence", "max |rho2(xi,beta) - rho2(xi,gamma)| over probes below beta");
  c->add_option("--beta", args.a)->required();
  c->add_option("--gamma", args.b)->required();
  c->callback([&] {
    action = [&] {
      const Ordinal beta = parse(args.a);
      const auto rep = coherence_delta(beta, parse(args.b), enumerate_probe(beta, cfg.tier), 1,
                                       cfg.step_guard);
      const std::string text = std::to_string(rep.max_delta) + " at " + format(rep.argmax);
      return Output{to_json(rep), text + '\n',
                    std::to_string(rep.max_delta) + ',' + format(rep.argmax) + '\n'};
    };
  });

  auto* x = w->add_subcommand("witness", "first probe pair a < b with rho2(a,b) > n");
  x->add_option("--a-cap", args.a)->required();
  x->add_option("--b-cap", args.b)->required();
  x->add_option("--n", args.n)->required();
  x->callback([&] {
    action = [&] {
      const auto wp = unbounded_witness(enumerate_probe(parse(args.a), cfg.tier),
                                        enumerate_probe(parse(args.b), cfg.tier), args.n,
                                        cfg.step_guard);
      if (!wp) return Output{Json(nullptr), "none\n", std::string("\n")};
      Json j{{"alpha", format(wp->alpha)}, {"beta", format(wp->beta)}, {"rho2", wp->rho2}};
      const std::string row = format(wp->alpha) + ',' + format(wp->beta) + ',' + std::to_string(wp->rho2);
      return Output{j, row + '\n', row + '\n'};
    };
  });
}

void add_space_commands(CLI::App& app, Action& action, Args& args) {
  auto* sp = app.add_subcommand("space", "the walk-weight topology on kappa + 1");
  sp->require_subcommand(1);

  auto* m = sp->add_subcommand("member", "membership of a point in a basic open set or descriptor");
  m->add_option("--point", args.a, "ordinal literal or 'apex'")->required();
  auto* anchor = m->add_option("--anchor", args.b);
  m->add_option("--level", args.n);
  auto* entries = m->add_option("--entry", args.many, "ANCHOR:LEVEL entry of a descriptor");
  anchor->excludes(entries);
  m->callback([&] {
    action = [&] {
      const Point p = parse_point(args.a);
      if (!args.b.empty()) return bool_output(member(p, BasicOpen(parse(args.b), args.n)));
      NeighborhoodDescriptor d;
      for (const std::string& e : args.many) {
        const auto colon = e.rfind(':');
        if (colon == std::string::npos) throw UsageError("--entry expects ANCHOR:LEVEL");
        d.add(parse(e.substr(0, colon)), std::stoull(e.substr(colon + 1)));
      }
      return bool_output(member(p, d));
    };
  });

  auto* ex = sp->add_subcommand("extract", "greedy sequence xi_n in A below alpha with rho2 >= n");
  ex->add_option("--set", args.a, "comma-separated literals")->required();
  ex->add_option("--alpha", args.b)->required();
  ex->add_option("--m", args.n)->required();
  ex->callback([&] {
    action = [&] {
      const auto seq = frechet_extract(parse_set(args.a), parse(args.b), args.n);
      return Output{ordinal_list(seq), lines(seq), lines(seq)};
    };
  });

  auto* mg = sp->add_subcommand("merge", "union of {xi in A_n : rho2(xi, alpha) > n}");
  mg->add_option("--family", args.many, "comma-separated literals, repeat per n")->required();
  mg->add_option("--alpha", args.b)->required();
  mg->callback([&] {
    action = [&] {
      std::vector<std::set<Ordinal>> fams;
      for (const std::string& f : args.many) fams.push_back(parse_set(f));
      const auto merged = alpha1_merge(fams, parse(args.b));
      const std::vector<Ordinal> xs(merged.begin(), merged.end());
      return Output{ordinal_list(xs), lines(xs), lines(xs)};
    };
  });

  auto* se = sp->add_subcommand("separate", "G-delta scheme separating a finite set from the apex");
  se->add_option("--set", args.a)->required();
  se->callback([&] {
    action = [&] {
      const Separation s = gdelta_separate(parse_set(args.a));
      std::string text = "beta " + format(s.scheme.beta) + '\n';
      std::string csv;
      for (const auto& [xi, n] : s.certificate) {
        text += format(xi) + " excluded at level " + std::to_string(n) + '\n';
        csv += format(xi) + ',' + std::to_string(n) + '\n';
      }
      return Output{to_json(s), text, csv};
    };
  });

  auto* rp = sp->add_subcommand("report", "rho2 histograms of a sequence below each anchor");
  rp->add_option("--seq", args.a)->required();
  rp->add_option("--anchor", args.many)->required();
  rp->callback([&] {
    action = [&] {
      std::vector<Ordinal> anchors;
      for (const std::string& a : args.many) anchors.push_back(parse(a));
      const auto r = convergence_report(parse_list(args.a), anchors);
      std::string text, csv;
      for (const AnchorHistogram& h : r.anchors) {
        for (const auto& [v, c] : h.histogram) {
          text += format(h.anchor) + ": rho2=" + std::to_string(v) + " x" + std::to_string(c) + '\n';
          csv += format(h.anchor) + ',' + std::to_string(v) + ',' + std::to_string(c) + '\n';
        }
      }
      text += "max fiber " + std::to_string(r.max_fiber) + '\n';
      return Output{to_json(r), text, csv};
    };
  });
}

void add_ladder_commands(CLI::App& app, Action& action, const RunConfig& cfg, Args& args) {
  auto* ld = app.add_subcommand("ladder", "ladder systems and finite-to-one colorings");
  ld->require_subcommand(1);

  auto* b = ld->add_subcommand("build", "coloring F on gamma over the probe set at --tier");
  b->add_option("--gamma", args.a)->required();
  b->callback([&] {
    action = [&] {
      const Coloring col(parse(args.a));
      Json rows = Json::array();
      std::string csv = "xi,value\n";
      for (const Ordinal& xi : enumerate_probe(col.gamma(), cfg.tier).members) {
        // Deep successor chains nest the pairing past 64 bits.
        try {
          const Natural v = col.evaluate(xi);
          rows.push_back(Json{{"xi", format(xi)}, {"value", v}});
          csv += '"' + format(xi) + "\"," + std::to_string(v) + '\n';
        } catch (const OverflowError&) {
          rows.push_back(Json{{"xi", format(xi)}, {"value", nullptr}, {"error", "overflow"}});
          csv += '"' + format(xi) + "\",overflow\n";
        }
      }
      return Output{rows, csv, csv};
    };
  });

  auto* f = ld->add_subcommand("fiber", "fiber histogram of F on a ladder prefix");
  f->add_option("--gamma", args.a)->required();
  f->add_option("--alpha", args.b)->required();
  f->add_option("--prefix", args.n)->required();
  f->callback([&] {
    action = [&] {
      const Coloring col(parse(args.a));
      const Ordinal alpha = parse(args.b);
      const auto h = fiber_report(col, alpha, args.n);
      Json hist = Json::object();
      std::string csv = "alpha,prefix,value,count\n";
      for (const auto& [v, c] : h) {
        hist[std::to_string(v)] = c;
        csv += '"' + format(alpha) + "\"," + std::to_string(args.n) + ',' + std::to_string(v) +
               ',' + std::to_string(c) + '\n';
      }
      Json j{{"gamma", format(col.gamma())},
             {"alpha", format(alpha)},
             {"prefix", args.n},
             {"bound", col.bound(alpha)},
             {"histogram", std::move(hist)}};
      return Output{j, csv, csv};
    };
  });

  auto* u = ld->add_subcommand("uniformize", "F' over the probe set below gamma");
  u->add_option("--gamma", args.a)->required();
  u->add_option("--depth", args.n)->required();
  u->callback([&] {
    action = [&] {
      const Uniformizer fp(ClubSequence(parse(args.a)), args.n);
      Json rows = Json::array();
      std::string csv = "xi,value\n";
      for (const Ordinal& xi : enumerate_probe(fp.club().gamma(), cfg.tier).members) {
        const Natural v = fp(xi);
        rows.push_back(Json{{"xi", format(xi)}, {"value", v}});
        csv += '"' + format(xi) + "\"," + std::to_string(v) + '\n';
      }
      return Output{rows, csv, csv};
    };
  });

  auto* cl = ld->add_subcommand("club", "first elements of the club E of gamma");
  cl->add_option("--gamma", args.a)->required();
  cl->add_option("--count", args.n)->required();
  cl->callback([&] {
    action = [&] {
      const ClubSequence club(parse(args.a));
      std::vector<Ordinal> xs;
      for (Natural k = 0; k < args.n; ++k) xs.push_back(club.at(k));
      return Output{ordinal_list(xs), lines(xs), lines(xs)};
    };
  });

  auto* ix = ld->add_subcommand("index", "position of xi on the ladder S_alpha (0 off the ladder)");
  ix->add_option("--alpha", args.a)->required();
  ix->add_option("--xi", args.b)->required();
  ix->callback([&] {
    action = [&] {
      const Natural v = enum_index(parse(args.a), parse(args.b));
      return scalar(v, std::to_string(v));
    };
  });

  auto* pr = ld->add_subcommand("pair", "Cantor pairing of two naturals");
  pr->add_option("a", args.n)->required();
  pr->add_option("b", args.m)->required();
  pr->callback([&] {
    action = [&] {
      const Natural v = pair(args.n, args.m);
      return scalar(v, std::to_string(v));
    };
  });
}

void add_selftest_command(CLI::App& app, Action& action, const RunConfig& cfg, Args& args) {
  auto* st = app.add_subcommand("selftest", "property checks and golden-file workflow");
  st->add_flag("--generate", args.flag_a, "write golden files with the naive evaluator");
  st->add_flag("--verify", args.flag_b, "recompute golden files with the production path");
  args.c = "tests/golden";
  st->add_option("--golden", args.c, "golden file directory");
  st->callback([&] {
    action = [&] {
      if (args.flag_a && args.flag_b) throw UsageError("--generate and --verify are exclusive");
      if (args.flag_a) {
        checks::generate_golden(args.c);
        return scalar(args.c, "golden files written to " + args.c);
      }
      if (args.flag_b) {
        Json rows = Json::array();
        std::string text;
        bool ok = true;
        for (const auto& d : checks::verify_golden(args.c)) {
          ok = ok && d.matches;
          rows.push_back(Json{{"file", d.file}, {"matches", d.matches}, {"note", d.note}});
          text += (d.matches ? "ok   " : "FAIL ") + d.file + "  " + d.note + '\n';
        }
        return Output{Json{{"files", rows}, {"passed", ok}}, text, std::nullopt, ok ? 0 : 1};
      }
      const Json report = Json::parse(checks::selftest_json(cfg.seed));
      std::string text;
      for (const auto& c : report.at("checks")) {
        text += (c.at("passed").get<bool>() ? "PASS " : "FAIL ") + c.at("id").get<std::string>() +
                '\n';
      }
      return Output{report, text, std::nullopt, report.at("passed").get<bool>() ? 0 : 1};
    };
  });
}

void emit(const Output& o, const RunConfig& cfg, std::ostream& out) {
  std::string body;
  if (cfg.format == "json") {
    body = o.json.dump(2) + '\n';
  } else if (cfg.format == "csv") {
    if (!o.csv) throw UsageError("this command has no csv output");
    body = *o.csv;
  } else {
    body = o.text;
  }
  if (cfg.out_file.empty()) {
    out << body;
    return;
  }
  std::ofstream f(cfg.out_file, std::ios::binary);
  f << body;
  if (!f) throw ResourceError("cannot write " + cfg.out_file);
}

int fail(std::ostream& err, int status, const char* kind, const std::string& what) {
  err << "error: " << kind << ": " << what << '\n';
  return status;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal walks, walk-weight topology and ladder colorings below epsilon_0",
               "ordwalk"};
  app.fallthrough();
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--format", cfg.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--tier", cfg.tier, "probe set tier");
  app.add_option("--step-guard", cfg.step_guard, "maximum walk steps");
  app.add_option("--seed", cfg.seed, "seed for randomized suites");
  app.add_option("--out", cfg.out_file, "write output to FILE");

  Action action;
  Args args;
  add_ord_commands(app, action, cfg, args);
  add_cseq_commands(app, action, args);
  add_walk_commands(app, action, cfg, args);
  add_space_commands(app, action, args);
  add_ladder_commands(app, action, cfg, args);
  add_selftest_command(app, action, cfg, args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    const Output o = action();
    emit(o, cfg, out);
    return o.status;
  } catch (const SyntaxError& e) {
    return fail(err, 2, "syntax", e.what());
  } catch (const UsageError& e) {
    return fail(err, 2, "usage", e.what());
  } catch (const DomainError& e) {
    return fail(err, 1, "domain", e.what());
  } catch (const CertificateViolation& e) {
    return fail(err, 1, "certificate", e.what());
  } catch (const OverflowError& e) {
    return fail(err, 3, "overflow", e.what());
  } catch (const ResourceError& e) {
    return fail(err, 3, "resource", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(err, 2, "usage", e.what());
  }
}

}  // namespace ordwalk::cli
