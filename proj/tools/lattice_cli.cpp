// lattice: command-line front end for the culat library.
//
// Exit status: 0 on success, 1 on a domain error (bad input file, wrong kind
// of lattice, failed verification), 2 on a usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "culat/biclosed.hpp"
#include "culat/canonical.hpp"
#include "culat/congruence.hpp"
#include "culat/core_label.hpp"
#include "culat/doubling.hpp"
#include "culat/enumeration.hpp"
#include "culat/fixtures.hpp"
#include "culat/io.hpp"

using namespace culat;
using nlohmann::json;

namespace {

class DomainError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool g_json = false;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

NamedPoset load(const std::string& path) {
  try {
    return parse_poset(read_file(path));
  } catch (const ParseError& e) {
    throw DomainError(path + ": " + e.what());
  }
}

std::string set_names(ElementSet s, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for (Element x : s) {
    out += (first ? "" : ",") + names[x];
    first = false;
  }
  return out + "}";
}

std::string describe_non_lattice(const NotALattice& w, const std::vector<std::string>& names) {
  switch (w.kind) {
    case NotALattice::Kind::kEmpty:
      return "the poset is empty";
    case NotALattice::Kind::kNoMeet:
      return names[w.x] + " and " + names[w.y] + " have no meet" +
             (w.bounds.empty() ? "" : " (maximal lower bounds " + set_names(w.bounds, names) + ")");
    case NotALattice::Kind::kNoJoin:
      return names[w.x] + " and " + names[w.y] + " have no join" +
             (w.bounds.empty() ? "" : " (minimal upper bounds " + set_names(w.bounds, names) + ")");
  }
  return {};
}

Lattice require_lattice(const NamedPoset& np) {
  auto r = as_lattice(np.poset);
  if (auto* w = std::get_if<NotALattice>(&r)) throw DomainError("not a lattice: " + describe_non_lattice(*w, np.names));
  return std::get<Lattice>(std::move(r));
}

std::pair<Element, Element> parse_pair(const NamedPoset& np, const std::string& arg) {
  const auto comma = arg.find(',');
  if (comma == std::string::npos) throw DomainError("expected two elements separated by a comma, got '" + arg + "'");
  try {
    return {np.resolve(arg.substr(0, comma)), np.resolve(arg.substr(comma + 1))};
  } catch (const std::invalid_argument& e) {
    throw DomainError(e.what());
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) std::cout << text;
  else write_file(out_path, text);
}

std::string partition_names(const Congruence& t, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for (ElementSet cls : t.classes()) {
    out += (first ? "" : ",") + set_names(cls, names);
    first = false;
  }
  return out + "}";
}

// --- subcommands ----------------------------------------------------------

int cmd_check(const std::string& path) {
  const NamedPoset np = load(path);
  auto r = as_lattice(np.poset);
  json j;
  j["elements"] = np.poset.size();
  if (auto* w = std::get_if<NotALattice>(&r)) {
    j["lattice"] = false;
    j["reason"] = describe_non_lattice(*w, np.names);
    if (g_json) std::cout << j.dump(2) << "\n";
    else std::cout << "lattice: no (" << j["reason"].get<std::string>() << ")\n";
    return 0;
  }
  const Lattice& l = std::get<Lattice>(r);
  const bool jsd = is_join_semidistributive(l);
  const bool msd = is_meet_semidistributive(l);
  const bool cu = is_congruence_uniform(l);
  const int mu = mobius_bottom_top(l);
  j["lattice"] = true;
  j["join_semidistributive"] = jsd;
  j["meet_semidistributive"] = msd;
  j["semidistributive"] = jsd && msd;
  j["congruence_uniform"] = cu;
  j["mu"] = mu;
  if (msd) j["spherical"] = mu != 0;
  else j["spherical"] = nullptr;
  j["atoms"] = l.atoms().size();
  j["coatoms"] = l.coatoms().size();
  if (g_json) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "lattice: yes; semidistributive: " << yes_no(jsd && msd) << "; congruence-uniform: " << yes_no(cu)
            << "; mu: " << mu << "\n";
  std::cout << "join-semidistributive: " << yes_no(jsd) << "; meet-semidistributive: " << yes_no(msd) << "\n";
  std::cout << "spherical: " << (msd ? yes_no(mu != 0) : std::string("n/a (not meet-semidistributive)")) << "\n";
  std::cout << "elements: " << l.size() << "; atoms: " << l.atoms().size() << "; coatoms: " << l.coatoms().size()
            << "\n";
  return 0;
}

int cmd_con(const std::string& path) {
  const NamedPoset np = load(path);
  const Lattice l = require_lattice(np);
  const auto violation = congruence_uniformity_violation(l);
  json j;
  j["join_irreducible_congruences"] = json::array();
  for (const auto& ji : l.join_irreducibles()) {
    const Congruence t = cg(l, ji.j);
    j["join_irreducible_congruences"].push_back(
        {{"j", np.names[ji.j]}, {"classes", partition_names(t, np.names)}});
  }
  j["congruence_uniform"] = !violation.has_value();
  std::string reason;
  if (violation) {
    if (violation->a < 0) reason = "different numbers of join- and meet-irreducibles";
    else if (violation->dual)
      reason = "meet-irreducibles " + np.names[violation->a] + " and " + np.names[violation->b] +
               " generate the same congruence";
    else
      reason = "join-irreducibles " + np.names[violation->a] + " and " + np.names[violation->b] +
               " generate the same congruence";
    j["reason"] = reason;
  }
  try {
    j["congruences"] = congruence_lattice(l).congruences.size();
  } catch (const std::length_error&) {
    j["congruences"] = nullptr;
  }
  if (g_json) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (const auto& e : j["join_irreducible_congruences"]) {
    std::cout << "cg(" << e["j"].get<std::string>() << ") = " << e["classes"].get<std::string>() << "\n";
  }
  if (!j["congruences"].is_null()) std::cout << "congruences: " << j["congruences"].get<int>() << "\n";
  std::cout << "congruence-uniform: " << yes_no(!violation) << (violation ? " (" + reason + ")" : "") << "\n";
  return 0;
}

int cmd_quotient(const std::string& path, const std::string& collapse, const std::string& out) {
  const NamedPoset np = load(path);
  const Lattice l = require_lattice(np);
  const auto [u, v] = parse_pair(np, collapse);
  if (!l.poset().covers(u, v)) throw DomainError(np.names[u] + " is not covered by " + np.names[v]);
  const Congruence t = cg(l, u, v);
  const Quotient q = quotient(l, t);
  std::vector<std::string> names(q.lattice.size());
  const auto classes = t.classes();
  for (int c = 0; c < q.lattice.size(); ++c) names[c] = classes[c].size() == 1 ? np.names[classes[c].front()] : set_names(classes[c], np.names);
  emit(g_json ? format_poset_json(q.lattice.poset(), names) + "\n" : format_poset(q.lattice.poset(), names), out);
  return 0;
}

int cmd_double(const std::string& path, const std::string& interval, const std::string& out) {
  const NamedPoset np = load(path);
  const Lattice l = require_lattice(np);
  const auto [a, b] = parse_pair(np, interval);
  if (!l.leq(a, b)) throw DomainError("[" + np.names[a] + ", " + np.names[b] + "] is empty");
  std::vector<DoubledFrom> from;
  const Lattice d = double_interval(l, a, b, &from);
  const ElementSet doubled = l.poset().interval(a, b);
  std::vector<std::string> names;
  for (const auto& f : from) names.push_back(np.names[f.x] + (doubled.contains(f.x) && f.bit == 1 ? "'" : ""));
  emit(g_json ? format_poset_json(d.poset(), names) + "\n" : format_poset(d.poset(), names), out);
  return 0;
}

int cmd_run_script(const std::string& path, const std::string& out) {
  std::vector<Interval> steps;
  try {
    steps = parse_script(read_file(path));
  } catch (const ParseError& e) {
    throw DomainError(path + ": " + e.what());
  }
  try {
    const Lattice l = run_script(std::span<const Interval>(steps));
    emit(g_json ? format_poset_json(l.poset()) + "\n" : format_poset(l.poset()), out);
  } catch (const ScriptError& e) {
    throw DomainError(path + ": " + e.what());
  }
  return 0;
}

int cmd_gen_cu(int max_n, bool count_only) {
  std::vector<int> counts(std::max(max_n, 0) + 1, 0);
  json lattices = json::array();
  int index = 0;
  generate_cu(max_n, [&](const Lattice& l) {
    ++counts[l.size()];
    if (count_only) return;
    if (g_json) {
      lattices.push_back(json::parse(format_poset_json(l.poset())));
    } else {
      std::cout << "# lattice " << ++index << "\n" << format_poset(l.poset()) << "\n";
    }
  });
  if (g_json) {
    json j;
    j["counts"] = json::object();
    for (int n = 1; n <= max_n; ++n) j["counts"][std::to_string(n)] = counts[n];
    if (!count_only) j["lattices"] = lattices;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "n,c\n";
  for (int n = 1; n <= max_n; ++n) std::cout << n << "," << counts[n] << "\n";
  return 0;
}

int cmd_clo(const std::string& path, bool dot) {
  const NamedPoset np = load(path);
  const Lattice l = require_lattice(np);
  if (!is_congruence_uniform(l)) throw DomainError("not congruence-uniform; the core label order is undefined");
  const CoverLabeling cl(l);
  const CoreLabelOrder clo = core_label_order(cl);
  const auto& js = l.join_irreducibles();
  auto label_name = [&](Element u, Element v) { return std::to_string(cl.label(u, v) + 1); };
  if (dot) {
    std::cout << to_dot(l.poset(), np.names, "L", label_name);
    std::vector<std::string> clo_names;
    for (Element x = 0; x < l.size(); ++x) clo_names.push_back(np.names[x] + " " + clo.psi[x].to_string(1));
    std::cout << to_dot(clo.order, clo_names, "CLO");
    return 0;
  }
  const bool spherical = is_spherical(l);
  const bool meet_semilattice = is_clo_meet_semilattice(clo);
  const bool clo_lattice = is_clo_lattice(clo);
  const auto ip = intersection_property_violation(clo);
  const int bdef = boolean_defect(cl);
  const BooleanNexus nexus = boolean_nexus(cl);
  if (g_json) {
    json j;
    j["labels"] = json::array();
    for (const auto& ji : js) j["labels"].push_back(np.names[ji.j]);
    j["psi"] = json::object();
    for (Element x = 0; x < l.size(); ++x) {
      std::vector<int> labels;
      for (int k : clo.psi[x]) labels.push_back(k + 1);
      j["psi"][np.names[x]] = labels;
    }
    j["clo_covers"] = json::array();
    for (auto [u, v] : clo.order.cover_relations()) j["clo_covers"].push_back({np.names[u], np.names[v]});
    j["spherical"] = spherical;
    j["intersection_property"] = !ip.has_value();
    j["clo_meet_semilattice"] = meet_semilattice;
    j["clo_lattice"] = clo_lattice;
    j["boolean_defect"] = bdef;
    j["nexus_size"] = nexus.elements.size();
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "labels:";
  for (std::size_t k = 0; k < js.size(); ++k) std::cout << " " << k + 1 << "=" << np.names[js[k].j];
  std::cout << "\n";
  std::size_t width = 0;
  for (const auto& name : np.names) width = std::max(width, name.size());
  for (Element x = 0; x < l.size(); ++x) {
    std::cout << "psi(" << np.names[x] << ")" << std::string(width - np.names[x].size(), ' ') << " = "
              << clo.psi[x].to_string(1) << "\n";
  }
  std::cout << "core label order covers:";
  for (auto [u, v] : clo.order.cover_relations()) std::cout << " " << np.names[u] << "<" << np.names[v];
  std::cout << "\n";
  std::cout << "spherical: " << yes_no(spherical) << "\n";
  std::cout << "intersection property: " << yes_no(!ip)
            << (ip ? " (psi(" + np.names[ip->x] + ") and psi(" + np.names[ip->y] + ") intersect outside the family)" : "")
            << "\n";
  std::cout << "core label order meet-semilattice: " << yes_no(meet_semilattice) << "\n";
  std::cout << "core label order lattice: " << yes_no(clo_lattice) << "\n";
  std::cout << "Boolean defect: " << bdef << "\n";
  std::cout << "Boolean nexus: " << nexus.elements.size() << " elements " << set_names(nexus.elements, np.names)
            << "\n";
  return 0;
}

ClosureOperator load_closure(const std::string& path) {
  try {
    return parse_closure(read_file(path));
  } catch (const ParseError& e) {
    throw DomainError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw DomainError(path + ": " + e.what());
  }
}

int cmd_biclosed(const std::string& path, bool dot) {
  const ClosureOperator op = load_closure(path);
  if (const auto bad = validate(op)) throw DomainError("not a closure operator: " + bad->describe(op));
  const SetPoset closed = closed_sets(op);
  const SetPoset bic = biclosed_sets(op);
  std::vector<std::string> names;
  for (GroundSet x : bic.sets) names.push_back(op.format_set(x));
  if (dot) {
    std::cout << to_dot(bic.poset, names, "Bic");
    return 0;
  }
  json j;
  j["closed_sets"] = closed.sets.size();
  j["biclosed_sets"] = names;
  auto lat = as_lattice(bic.poset);
  const Lattice* l = std::get_if<Lattice>(&lat);
  j["lattice"] = l != nullptr;
  const auto step = single_step_violation(op);
  j["single_step"] = !step.has_value();
  if (step) j["multi_element_cover"] = {op.format_set(step->lower), op.format_set(step->upper)};
  if (l != nullptr) {
    const bool cu = is_congruence_uniform(*l);
    j["congruence_uniform"] = cu;
    j["mu"] = mobius_bottom_top(*l);
    if (cu) {
      j["spherical"] = is_spherical(*l);
      j["clo_lattice"] = is_clo_lattice(core_label_order(CoverLabeling(*l)));
    }
  }
  if (g_json) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "closed sets: " << closed.sets.size() << "\n";
  std::cout << "biclosed sets (" << names.size() << "):";
  for (const auto& n : names) std::cout << " " << n;
  std::cout << "\n";
  std::cout << "lattice: " << yes_no(l != nullptr) << "\n";
  if (l != nullptr) {
    std::cout << "congruence-uniform: " << yes_no(j["congruence_uniform"].get<bool>()) << "\n";
    std::cout << "mu: " << j["mu"].get<int>() << "\n";
    if (j.contains("spherical")) {
      std::cout << "spherical: " << yes_no(j["spherical"].get<bool>()) << "\n";
      std::cout << "core label order lattice: " << yes_no(j["clo_lattice"].get<bool>()) << "\n";
    }
  }
  std::cout << "single-step inclusion: " << yes_no(!step)
            << (step ? " (cover " + op.format_set(step->lower) + " < " + op.format_set(step->upper) + ")" : "") << "\n";
  return 0;
}

int cmd_search61(int m, bool no_single_step, bool all_operators, bool labeled, bool allow_m6, long limit) {
  SearchFilters filters;
  if (all_operators) {
    filters = SearchFilters{false, false, false, false, false, true};
  }
  if (no_single_step) filters.require_single_step = false;
  filters.up_to_symmetry = !labeled;
  if (m == 6 && allow_m6) std::cerr << "warning: m = 6 enumerates tens of billions of closure systems\n";
  json found = json::array();
  long shown = 0;
  const auto start = std::chrono::steady_clock::now();
  const SearchReport report = search_biclosed(
      m, filters,
      [&](const SearchCandidate& c) {
        if (limit >= 0 && shown >= limit) return;
        ++shown;
        if (g_json) {
          json e;
          e["closure"] = format_closure(c.op);
          if (c.biclosed) e["biclosed_size"] = c.biclosed->size();
          found.push_back(e);
        } else {
          std::cout << "# candidate " << shown;
          if (c.biclosed) std::cout << " (" << c.biclosed->size() << " biclosed sets)";
          std::cout << "\n" << format_closure(c.op) << "\n";
        }
      },
      allow_m6);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (g_json) {
    json j;
    j["m"] = m;
    j["moore_families"] = report.families;
    j["examined"] = report.examined;
    j["candidates"] = report.candidates;
    j["shown"] = found;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "m: " << m << "\n";
  std::cout << "closure operators (Moore families): " << report.families << "\n";
  std::cout << "examined" << (filters.up_to_symmetry ? " up to relabeling" : "") << ": " << report.examined << "\n";
  std::cout << "candidates: " << report.candidates << "\n";
  if (report.candidates == 0) std::cout << "result: verified empty at m = " << m << "\n";
  std::cout << "time: " << std::fixed << std::setprecision(2) << seconds << "s\n";
  return 0;
}

int cmd_table1(int max_n, bool extended, int threads) {
  EnumerationOptions options;
  options.extended = extended;
  options.threads = threads;
  const auto start = std::chrono::steady_clock::now();
  const auto rows = table1(max_n, options);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (g_json) {
    json j = json::array();
    for (const auto& r : rows) j.push_back({{"n", r.n}, {"l", r.l}, {"c", r.c}, {"s", r.s}, {"S", r.S}});
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << std::setw(4) << "n" << std::setw(12) << "l_n" << std::setw(10) << "c_n" << std::setw(8) << "s_n"
            << std::setw(8) << "S_n" << "\n";
  for (const auto& r : rows) {
    std::cout << std::setw(4) << r.n << std::setw(12) << r.l << std::setw(10) << r.c << std::setw(8) << r.s
              << std::setw(8) << r.S << "\n";
  }
  std::cout << "\nn,l,c,s,S\n";
  for (const auto& r : rows) std::cout << r.n << "," << r.l << "," << r.c << "," << r.s << "," << r.S << "\n";
  std::cerr << "time: " << std::fixed << std::setprecision(2) << seconds << "s\n";
  return 0;
}

int cmd_fixtures_verify() {
  const auto checks = verify_fixtures();
  int failed = 0;
  for (const auto& c : checks) failed += !c.passed;
  if (g_json) {
    json j = json::array();
    for (const auto& c : checks) {
      j.push_back({{"fixture", c.fixture}, {"property", c.property}, {"passed", c.passed}, {"detail", c.detail}});
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& c : checks) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.fixture << ": " << c.property
                << (c.passed ? "" : " (got " + c.detail + ")") << "\n";
    }
    std::cout << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  }
  if (failed > 0) throw DomainError(std::to_string(failed) + " fixture checks failed");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite lattices: congruences, doubling, core label orders, enumeration"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "Machine-readable output");

  std::string file, out, pair_arg, dir, fixture_name;
  int max_n = 0, m = 4, threads = 1;
  long limit = -1;
  bool count_only = false, dot = false, extended = false, no_single_step = false, all_ops = false, labeled = false,
       allow_m6 = false;

  auto* check = app.add_subcommand("check", "Lattice, semidistributivity, congruence-uniformity, mu, sphericity");
  check->add_option("file", file, "Poset file")->required();

  auto* con = app.add_subcommand("con", "Join-irreducible congruences and congruence-uniformity");
  con->add_option("file", file, "Lattice file")->required();

  auto* quot = app.add_subcommand("quotient", "Quotient by the congruence collapsing a cover");
  quot->add_option("file", file, "Lattice file")->required();
  quot->add_option("--collapse", pair_arg, "Cover u,v to collapse")->required();
  quot->add_option("-o,--output", out, "Write the quotient here instead of stdout");

  auto* dbl = app.add_subcommand("double", "Double a lattice by an interval");
  dbl->add_option("file", file, "Lattice file")->required();
  dbl->add_option("--interval", pair_arg, "Interval ends a,b")->required();
  dbl->add_option("-o,--output", out, "Write the result here instead of stdout");

  auto* script = app.add_subcommand("run-script", "Build a lattice from the singleton by interval doublings");
  script->add_option("file", file, "Script file (one `a b` interval per line)")->required();
  script->add_option("-o,--output", out, "Write the result here instead of stdout");

  auto* gen = app.add_subcommand("gen-cu", "Congruence-uniform lattices by interval doubling");
  gen->add_option("--max-n", max_n, "Largest size")->required()->check(CLI::Range(1, kMaxGeneratedSize));
  gen->add_flag("--count-only", count_only, "Only print counts per size");

  auto* clo = app.add_subcommand("clo", "Core label sets, core label order and related verdicts");
  clo->add_option("file", file, "Congruence-uniform lattice file")->required();
  clo->add_flag("--dot", dot, "Emit DOT for the lattice and its core label order");

  auto* bic = app.add_subcommand("biclosed", "Closed and biclosed sets of a closure operator");
  bic->add_option("file", file, "Closure table file")->required();
  bic->add_flag("--dot", dot, "Emit DOT for the poset of biclosed sets");

  auto* s61 = app.add_subcommand("search61",
                                 "Search closure operators for a spherical congruence-uniform biclosed-set lattice "
                                 "with single-step inclusion and non-lattice core label order");
  s61->add_option("--m", m, "Ground set size")->check(CLI::Range(0, kMaxGroundSize));
  s61->add_flag("--no-single-step", no_single_step, "Drop the single-step inclusion filter");
  s61->add_flag("--all-operators", all_ops, "Drop every filter (lists all closure operators)");
  s61->add_flag("--labeled", labeled, "Do not reduce by relabelings of the ground set");
  s61->add_flag("--allow-m6", allow_m6, "Permit m = 6 (very long)");
  s61->add_option("--limit", limit, "Print at most this many candidates");

  auto* t1 = app.add_subcommand("table1", "Count lattices, congruence-uniform, spherical, CLO-lattice by size");
  t1->add_option("--max-n", max_n, "Largest size")->required()->check(CLI::Range(1, kExtendedMaxLatticeSize));
  t1->add_flag("--extended", extended, "Allow sizes 13 and 14 (long-running)");
  t1->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 256));

  auto* fx = app.add_subcommand("fixtures", "Built-in figure fixtures");
  fx->require_subcommand(1);
  auto* fx_verify = fx->add_subcommand("verify", "Check every fixture against its recorded verdicts");
  auto* fx_export = fx->add_subcommand("export", "Write fixture files to a directory");
  fx_export->add_option("dir", dir, "Target directory")->required();
  auto* fx_list = fx->add_subcommand("list", "List fixtures");
  auto* fx_show = fx->add_subcommand("show", "Print a fixture file");
  fx_show->add_option("name", fixture_name, "Fixture name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*check) return cmd_check(file);
    if (*con) return cmd_con(file);
    if (*quot) return cmd_quotient(file, pair_arg, out);
    if (*dbl) return cmd_double(file, pair_arg, out);
    if (*script) return cmd_run_script(file, out);
    if (*gen) return cmd_gen_cu(max_n, count_only);
    if (*clo) return cmd_clo(file, dot);
    if (*bic) return cmd_biclosed(file, dot);
    if (*s61) return cmd_search61(m, no_single_step, all_ops, labeled, allow_m6, limit);
    if (*t1) {
      if (max_n > kDefaultMaxLatticeSize && !extended) {
        std::cerr << "error: --max-n above " << kDefaultMaxLatticeSize << " needs --extended\n";
        return 2;
      }
      return cmd_table1(max_n, extended, threads);
    }
    if (*fx_verify) return cmd_fixtures_verify();
    if (*fx_export) {
      for (const auto& p : export_fixtures(dir)) std::cout << p << "\n";
      return 0;
    }
    if (*fx_list) {
      for (const auto& f : fixture_catalog()) std::cout << f.name << "\t" << f.file_name << "\n";
      return 0;
    }
    if (*fx_show) {
      try {
        std::cout << fixture(fixture_name).text;
      } catch (const std::out_of_range& e) {
        throw DomainError(e.what());
      }
      return 0;
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
