// agt: symbolic workbench for abelian groups and their canonical topologies.

#include <cctype>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "agt/arith.hpp"
#include "agt/cardinal.hpp"
#include "agt/classify.hpp"
#include "agt/error.hpp"
#include "agt/fg_group.hpp"
#include "agt/finite_group.hpp"
#include "agt/group.hpp"
#include "agt/intmat.hpp"
#include "agt/parse.hpp"
#include "agt/topo_invariants.hpp"
#include "agt/verify.hpp"

using json = nlohmann::ordered_json;

namespace {

struct GlobalOpts {
  std::string mode = "zfc";
  bool json_out = false;
  long long cap = 10000;
  unsigned long long seed = 0;
};

agt::CardinalMode mode_of(const GlobalOpts& g) {
  return g.mode == "gch" ? agt::CardinalMode::Gch : agt::CardinalMode::Zfc;
}

// Display form of a cardinal; GCH mode collapses to the aleph scale.
std::string render_card(const agt::Cardinal& c, const GlobalOpts& g) {
  return agt::to_string(mode_of(g) == agt::CardinalMode::Gch ? agt::gch_reduce(c)
                                                             : c);
}

std::string render_verdict(agt::Verdict v) {
  if (v == agt::Verdict::Unknown) return "unknown (independent of ZFC or unresolved)";
  return agt::to_string(v);
}

std::vector<long long> parse_orders(const std::string& text) {
  std::vector<long long> out;
  size_t i = 0, n = text.size();
  auto skip = [&] {
    while (i < n && (text[i] == ' ' || text[i] == '[' || text[i] == ']')) ++i;
  };
  skip();
  while (i < n) {
    size_t start = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start)
      throw agt::ParseError("expected a comma-separated list of cyclic orders",
                            i);
    long long v = 0;
    try {
      v = std::stoll(text.substr(start, i - start));
    } catch (const std::exception&) {
      throw agt::ParseError("cyclic order out of range", start);
    }
    out.push_back(v);
    skip();
    if (i < n) {
      if (text[i] != ',')
        throw agt::ParseError("expected ',' between cyclic orders", i);
      ++i;
      skip();
    }
  }
  return out;
}

std::string fmt_orders(const std::vector<long long>& orders) {
  std::string s;
  for (size_t i = 0; i < orders.size(); ++i)
    s += (i ? "," : "") + std::to_string(orders[i]);
  return s;
}

std::string fmt_elem(const agt::FiniteGroup& g, long long x) {
  std::string s = "(";
  auto d = g.digits(x);
  for (size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

// Symbolic form of the group presented by the cyclic orders.
agt::StructuredGroup symbolic_of(const std::vector<long long>& orders) {
  agt::StructuredGroup g;
  for (long long o : orders)
    for (auto [p, k] : agt::factorize(o))
      g.add_summand(agt::Atom::cyc(p, k), agt::card_one());
  return g;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ------------------------------------------------------------- subcommands

void cmd_invariants(const GlobalOpts& opt, const std::string& expr) {
  agt::StructuredGroup g = agt::parse_group(expr);
  agt::InvariantsRecord rec = agt::invariants(g);
  if (opt.json_out) {
    json jp = json::object(), jm = json::object(), ju = json::object();
    for (auto& [p, c] : rec.rankp) jp[std::to_string(p)] = render_card(c, opt);
    for (auto& [p, q] : rec.mod_p) jm[std::to_string(p)] = agt::to_string(q);
    for (auto& [p, u] : rec.ulm_p) ju[std::to_string(p)] = agt::to_string(u);
    emit(json{{"group", agt::to_string(g)},
              {"size", render_card(rec.size, opt)},
              {"rank0", render_card(rec.rank0, opt)},
              {"rankp", jp},
              {"mod_p", jm},
              {"ulm", agt::to_string(rec.ulm)},
              {"ulm_p", ju},
              {"divisible", agt::to_string(rec.divisible)},
              {"torsion", agt::to_string(rec.torsion)},
              {"exponent", rec.exponent ? json(rec.exponent->str()) : json()},
              {"mode", opt.mode}});
    return;
  }
  std::cout << "group: " << agt::to_string(g) << "\n";
  std::cout << "size: " << render_card(rec.size, opt) << "\n";
  std::cout << "rank0: " << render_card(rec.rank0, opt) << "\n";
  for (auto& [p, c] : rec.rankp)
    std::cout << "rank_" << p << ": " << render_card(c, opt) << "\n";
  for (auto& [p, q] : rec.mod_p)
    std::cout << "G/" << p << "G: " << agt::to_string(q) << "\n";
  for (auto& [p, u] : rec.ulm_p)
    std::cout << "ulm_" << p << ": " << agt::to_string(u) << "\n";
  std::cout << "ulm: " << agt::to_string(rec.ulm) << "\n";
  std::cout << "divisible: " << agt::to_string(rec.divisible) << "\n";
  std::cout << "torsion: " << agt::to_string(rec.torsion) << "\n";
  std::cout << "exponent: " << (rec.exponent ? rec.exponent->str() : "none")
            << "\n";
}

void cmd_classify(const GlobalOpts& opt, const std::string& expr,
                  const std::string& cls_name) {
  agt::StructuredGroup g = agt::parse_group(expr);
  if (!cls_name.empty()) {
    agt::GroupClass c = agt::parse_class(cls_name);
    bool member = agt::is_in_class(g, c);
    if (opt.json_out)
      emit(json{{"group", agt::to_string(g)},
                {"class", agt::to_string(c)},
                {"member", member}});
    else
      std::cout << (member ? "true" : "false") << "\n";
    return;
  }
  // Full report: every class, parametric ones at the primes of the group.
  std::vector<agt::GroupClass> classes;
  for (agt::GroupClassKind k : agt::all_class_kinds()) {
    if (!agt::class_parametric(k)) {
      classes.push_back(agt::cls(k));
    } else {
      for (long long p : agt::atom_primes(g)) classes.push_back(agt::cls_p(k, p));
    }
  }
  if (opt.json_out) {
    json arr = json::array();
    for (const agt::GroupClass& c : classes)
      arr.push_back(json{{"class", agt::to_string(c)},
                         {"member", agt::is_in_class(g, c)}});
    emit(json{{"group", agt::to_string(g)}, {"classes", arr}});
    return;
  }
  std::cout << "group: " << agt::to_string(g) << "\n";
  for (const agt::GroupClass& c : classes)
    std::cout << agt::to_string(c) << " = "
              << (agt::is_in_class(g, c) ? "true" : "false") << "\n";
}

void cmd_card(const GlobalOpts& opt, const std::string& expr,
              const std::string& topo_name, const std::string& inv_name) {
  agt::StructuredGroup g = agt::parse_group(expr);
  agt::TopologyName t = agt::parse_topology(topo_name);
  agt::CardinalInvariantKind k = agt::parse_invariant(inv_name);
  agt::InvariantResult res = agt::invariant(g, t, k, opt.cap);
  if (opt.json_out) {
    emit(json{{"group", agt::to_string(g)},
              {"topology", agt::to_string(t)},
              {"invariant", agt::to_string(k)},
              {"value", render_card(res.value, opt)},
              {"basis", res.basis},
              {"mode", opt.mode}});
    return;
  }
  std::cout << render_card(res.value, opt) << "\n";
}

void cmd_equalizer(const GlobalOpts& opt, const std::string& t1,
                   const std::string& t2, const std::string& expr) {
  agt::TopologyName a = agt::parse_topology(t1);
  agt::TopologyName b = agt::parse_topology(t2);
  agt::StructuredGroup g = agt::parse_group(expr);
  agt::EqualizerAnswer ans = agt::equalizer_member(a, b, g);
  if (opt.json_out) {
    emit(json{{"left", agt::to_string(a)},
              {"right", agt::to_string(b)},
              {"group", agt::to_string(g)},
              {"verdict", render_verdict(ans.verdict)},
              {"criterion",
               ans.backing ? json(agt::to_string(*ans.backing)) : json()},
              {"note", ans.note}});
    return;
  }
  std::cout << render_verdict(ans.verdict) << "\n";
  if (ans.backing)
    std::cout << "criterion: " << agt::to_string(*ans.backing) << "\n";
  if (!ans.note.empty()) std::cout << "note: " << ans.note << "\n";
}

void cmd_finite_subgroups(const GlobalOpts& opt, const std::string& orders_text) {
  std::vector<long long> orders = parse_orders(orders_text);
  agt::FiniteGroup g(orders, opt.cap);
  std::vector<agt::FinSubgroup> subs = agt::all_subgroups(g);
  bool list_elements = g.size() <= 50;
  if (opt.json_out) {
    json arr = json::array();
    for (const agt::FinSubgroup& s : subs) {
      json gens = json::array();
      for (long long x : s.generators(g)) gens.push_back(g.digits(x));
      json row{{"order", s.count()}, {"generators", gens}};
      if (list_elements) {
        json elems = json::array();
        for (long long x : s.elements()) elems.push_back(g.digits(x));
        row["elements"] = elems;
      }
      arr.push_back(row);
    }
    emit(json{{"orders", orders},
              {"size", g.size()},
              {"count", subs.size()},
              {"subgroups", arr}});
    return;
  }
  std::cout << "orders: " << fmt_orders(orders) << "\n";
  std::cout << "size: " << g.size() << "\n";
  std::cout << "subgroups: " << subs.size() << "\n";
  for (size_t i = 0; i < subs.size(); ++i) {
    std::cout << "#" << (i + 1) << " order=" << subs[i].count() << " gens=";
    auto gens = subs[i].generators(g);
    std::cout << "[";
    for (size_t j = 0; j < gens.size(); ++j)
      std::cout << (j ? " " : "") << fmt_elem(g, gens[j]);
    std::cout << "]";
    if (list_elements) {
      std::cout << " elements=[";
      auto elems = subs[i].elements();
      for (size_t j = 0; j < elems.size(); ++j)
        std::cout << (j ? " " : "") << fmt_elem(g, elems[j]);
      std::cout << "]";
    }
    std::cout << "\n";
  }
}

void cmd_finite_verify(const GlobalOpts& opt, const std::string& orders_text,
                       int& exit_code) {
  std::vector<long long> orders = parse_orders(orders_text);
  agt::FiniteGroup g(orders, opt.cap);
  std::vector<agt::FinSubgroup> subs = agt::all_subgroups(g);
  agt::StructuredGroup sym = symbolic_of(orders);

  struct Check {
    std::string name;
    std::string detail;
    bool ok;
  };
  std::vector<Check> checks;

  agt::Cardinal symbolic = agt::csize(sym, opt.cap);
  bool lattice_ok = symbolic == agt::card_finite(agt::Int(subs.size()));
  checks.push_back({"lattice",
                    std::to_string(subs.size()) + " subgroups, symbolic csize " +
                        agt::to_string(symbolic),
                    lattice_ok});

  auto fibers = agt::kernel_fiber_map(g);
  bool fibers_ok = true;
  long long total = 0;
  long long cyclic_subs = 0;
  for (const agt::FinSubgroup& s : subs) {
    long long want = agt::kernel_fiber_formula(g, s);
    auto it = fibers.find(s);
    long long got = it == fibers.end() ? 0 : it->second;
    if (got != want) fibers_ok = false;
    total += got;
    for (long long x : s.elements()) {
      if (g.order_of(x) == s.count()) {
        ++cyclic_subs;
        break;
      }
    }
  }
  checks.push_back({"fibers",
                    "character kernels match the totient formula on " +
                        std::to_string(subs.size()) + " subgroups",
                    fibers_ok});
  checks.push_back({"fiber-sum",
                    std::to_string(total) + " == |G| = " + std::to_string(g.size()),
                    total == g.size()});
  long long cyc_quot = static_cast<long long>(agt::cyclic_quotient_subgroups(g).size());
  checks.push_back({"cyclic",
                    std::to_string(cyclic_subs) + " cyclic subgroups, " +
                        std::to_string(cyc_quot) + " cyclic quotients",
                    cyclic_subs == cyc_quot});

  bool all_ok = true;
  for (const Check& c : checks) all_ok = all_ok && c.ok;
  if (opt.json_out) {
    json arr = json::array();
    for (const Check& c : checks)
      arr.push_back(json{{"name", c.name}, {"detail", c.detail}, {"ok", c.ok}});
    emit(json{{"orders", orders},
              {"size", g.size()},
              {"subgroup_count", subs.size()},
              {"checks", arr},
              {"ok", all_ok}});
  } else {
    std::cout << "orders: " << fmt_orders(orders) << "\n";
    std::cout << "size: " << g.size() << "\n";
    for (const Check& c : checks)
      std::cout << c.name << ": " << c.detail << ": "
                << (c.ok ? "ok" : "MISMATCH") << "\n";
    std::cout << (all_ok ? "ok" : "FAILED") << "\n";
  }
  if (!all_ok) exit_code = 3;
}

void cmd_fg_count(const GlobalOpts& opt, int rank, long long index) {
  if (rank < 0) throw agt::InvalidArgument("rank must be nonnegative");
  if (index < 1) throw agt::InvalidArgument("index must be positive");
  agt::FgGroup g{rank, {}};
  size_t count = agt::enumerate_finite_index(g, agt::Int(index)).size();
  if (opt.json_out)
    emit(json{{"rank", rank}, {"index", index}, {"count", count}});
  else
    std::cout << count << "\n";
}

void cmd_fg_enclose(const GlobalOpts& opt, const std::string& group_expr,
                    const std::string& subgroup_text) {
  agt::FgGroup g = agt::fg_group_of(agt::parse_group(group_expr));
  agt::intmat::Mat gens = agt::parse_matrix(subgroup_text);
  agt::FgSubgroup h = agt::FgSubgroup::from_generators(g, gens);
  agt::FgSubgroup closed = agt::nu_closure(g, h);
  agt::FgSubgroup n = agt::enclosing_finite_index(g, h);
  agt::IndexValue idx = agt::index_of(g, n);
  if (opt.json_out) {
    emit(json{{"group", group_expr},
              {"subgroup", agt::intmat::to_string(h.lattice())},
              {"closure", agt::intmat::to_string(closed.lattice())},
              {"enclosing", agt::intmat::to_string(n.lattice())},
              {"index", agt::to_string(idx)}});
    return;
  }
  std::cout << "closure: " << agt::intmat::to_string(closed.lattice()) << "\n";
  std::cout << "enclosing: " << agt::intmat::to_string(n.lattice()) << "\n";
  std::cout << "index: " << agt::to_string(idx) << "\n";
}

void cmd_verify(const GlobalOpts& opt, const std::string& suite, int& exit_code) {
  agt::SuiteOptions so;
  so.seed = opt.seed;
  so.cap = opt.cap;
  so.mode = mode_of(opt);
  agt::SuiteReport rep = agt::run_suite(suite, so);
  std::string summary = "suite " + rep.name + ": " + std::to_string(rep.checked) +
                        " checks, " + std::to_string(rep.skipped) +
                        " skipped, " + std::to_string(rep.failure_count) +
                        " failures";
  if (opt.json_out) {
    json j{{"suite", rep.name},
           {"checked", rep.checked},
           {"skipped", rep.skipped},
           {"failure_count", rep.failure_count},
           {"failures", rep.failures},
           {"ok", rep.ok()}};
    if (!rep.payload.empty()) j["payload"] = rep.payload;
    emit(j);
  } else if (!rep.payload.empty()) {
    // Table on stdout (byte-stable); summary out of band.
    std::cout << rep.payload;
    std::cerr << summary << "\n";
    for (const std::string& f : rep.failures)
      std::cerr << "counterexample: " << f << "\n";
  } else {
    std::cout << summary << "\n";
    for (const std::string& f : rep.failures)
      std::cout << "counterexample: " << f << "\n";
  }
  if (!rep.ok()) exit_code = 3;
}

void add_common(CLI::App* cmd, GlobalOpts& opt) {
  cmd->add_option("--mode", opt.mode, "Cardinal arithmetic mode (zfc|gch)")
      ->check(CLI::IsMember({"zfc", "gch"}));
  cmd->add_flag("--json", opt.json_out, "Emit a JSON object instead of text");
  cmd->add_option("--cap", opt.cap, "Finite-engine size budget")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", opt.seed, "Seed for randomized suites (0 = canonical)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic workbench for abelian groups and their canonical topologies"};
  app.require_subcommand(1);
  GlobalOpts opt;
  int exit_code = 0;

  std::string expr, cls_name, topo_name, inv_name, t1, t2, orders_text,
      subgroup_text, suite;
  int rank = 0;
  long long index = 1;

  CLI::App* inv = app.add_subcommand("invariants", "Structural invariants of a group expression");
  inv->add_option("expr", expr, "Group expression, e.g. \"Z^2 + Z(12)\"")->required();
  add_common(inv, opt);
  inv->callback([&] { cmd_invariants(opt, expr); });

  CLI::App* cls = app.add_subcommand("classify", "Class membership of a group expression");
  cls->add_option("expr", expr, "Group expression")->required();
  cls->add_option("--class", cls_name, "Single class to test, e.g. narrow or bounded_p:2");
  add_common(cls, opt);
  cls->callback([&] { cmd_classify(opt, expr, cls_name); });

  CLI::App* card = app.add_subcommand("card", "Cardinal invariant of a topology on a group");
  card->add_option("expr", expr, "Group expression")->required();
  card->add_option("--topology", topo_name, "gamma|nu|bohr|gamma_p:<p>|nu_p:<p>|bohr_p:<p>")->required();
  card->add_option("--invariant", inv_name, "w|chi|d")->required();
  add_common(card, opt);
  card->callback([&] { cmd_card(opt, expr, topo_name, inv_name); });

  CLI::App* eq = app.add_subcommand("equalizer", "Do two functorial topologies agree on a group?");
  eq->add_option("t1", t1, "First topology")->required();
  eq->add_option("t2", t2, "Second topology")->required();
  eq->add_option("expr", expr, "Group expression")->required();
  add_common(eq, opt);
  eq->callback([&] { cmd_equalizer(opt, t1, t2, expr); });

  CLI::App* fin = app.add_subcommand("finite", "Brute-force engine for finite abelian groups");
  fin->require_subcommand(1);
  CLI::App* fsub = fin->add_subcommand("subgroups", "Enumerate the full subgroup lattice");
  fsub->add_option("orders", orders_text, "Cyclic factor orders, e.g. 2,4")->required();
  add_common(fsub, opt);
  fsub->callback([&] { cmd_finite_subgroups(opt, orders_text); });
  CLI::App* fver = fin->add_subcommand("verify", "Cross-check lattice, characters and counts");
  fver->add_option("orders", orders_text, "Cyclic factor orders, e.g. 2,4")->required();
  add_common(fver, opt);
  fver->callback([&] { cmd_finite_verify(opt, orders_text, exit_code); });

  CLI::App* fg = app.add_subcommand("fg", "Exact engine for finitely generated groups");
  fg->require_subcommand(1);
  CLI::App* fgc = fg->add_subcommand("count", "Count subgroups of Z^rank of a given index");
  fgc->add_option("rank", rank, "Free rank")->required();
  fgc->add_option("index", index, "Subgroup index")->required();
  add_common(fgc, opt);
  fgc->callback([&] { cmd_fg_count(opt, rank, index); });
  CLI::App* fge = fg->add_subcommand("enclose", "Closure and a proper finite-index enclosure of a subgroup");
  fge->add_option("group", expr, "Finitely generated group expression, e.g. \"Z^2\"")->required();
  fge->add_option("subgroup", subgroup_text, "Generator rows, e.g. [[2,0],[0,3]]")->required();
  add_common(fge, opt);
  fge->callback([&] { cmd_fg_enclose(opt, expr, subgroup_text); });

  CLI::App* ver = app.add_subcommand("verify", "Run a batch verification suite");
  ver->add_option("suite", suite,
                  "formula-table|finite-lattice|zeta|closure|classifier|cardinal|dichotomy|equalizer")
      ->required();
  add_common(ver, opt);
  ver->callback([&] { cmd_verify(opt, suite, exit_code); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const agt::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const agt::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const agt::CapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const agt::UnsupportedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const agt::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
