#include "cnc/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "cnc/io.hpp"
#include "cnc/oracle.hpp"
#include "cnc/order.hpp"

namespace cnc::cli {

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kGuard = 3;

struct Request {
  std::vector<std::string> files;
  std::vector<std::string> set;
  std::string name;
  std::string left, right;
  std::string outer, inner;
  std::string foliation_name, rep_name;
  std::string gamma0 = "k", gamma1 = "k";
  bool oracle = false;

  io::Bundle bundle;

  void load(const io::ParseOptions& options = {}) {
    for (const std::string& path : files) {
      std::ifstream in(path);
      if (!in) throw Error("cannot open '" + path + "'");
      std::stringstream buffer;
      buffer << in.rdbuf();
      io::parse_into(bundle, buffer.str(), path, options);
    }
  }

  template <class T>
  const T& pick(const std::vector<T>& entities, const std::string& wanted,
                const char* kind) const {
    if (!wanted.empty()) {
      for (const T& e : entities)
        if (e.name == wanted) return e;
      throw Error("no " + std::string(kind) + " named '" + wanted + "' in the input");
    }
    if (entities.empty()) throw Error("the input declares no " + std::string(kind));
    if (entities.size() > 1)
      throw Error("the input declares several " + std::string(kind) +
                  "s; pick one with --name");
    return entities.front();
  }

  const io::NamedSpace& space() const { return pick(bundle.spaces, name, "space"); }

  /// The left/right pair for binary space commands; defaults to the two
  /// spaces of a two-space bundle, in declaration order.
  std::pair<const io::NamedSpace*, const io::NamedSpace*> space_pair() const {
    if (left.empty() && right.empty() && bundle.spaces.size() == 2)
      return {&bundle.spaces[0], &bundle.spaces[1]};
    return {&pick(bundle.spaces, left, "space"), &pick(bundle.spaces, right, "space")};
  }
  const io::NamedTopology& topology() const { return pick(bundle.topologies, name, "topology"); }
  const io::NamedDevice& device() const { return pick(bundle.devices, name, "device"); }
  const io::NamedRep& representation() const {
    return pick(bundle.representations, name, "representation");
  }
  const io::NamedFoliation& foliation() const {
    return pick(bundle.foliations, name, "foliation");
  }

  Subset parse_set(const GroundSet& ground) const {
    Subset out;
    for (const std::string& label : set) {
      auto index = ground.index_of(label);
      if (!index) throw Error("unknown point '" + label + "'");
      out |= Subset::single(*index);
    }
    return out;
  }
};

std::string render_verdict(bool b) { return b ? "true" : "false"; }

void oracle_check_membership(const ConnectivitySpace& space, Subset a, bool fast) {
  bool slow = oracle::closure_membership(space.ground(), space.generators(), space.integral(), a);
  if (slow != fast)
    throw Error("oracle divergence: membership fast path disagrees with the closure oracle");
}

std::string render_map_images(const SetMap& f) {
  std::string out;
  for (std::size_t i = 0; i < f.source().size(); ++i) {
    if (i) out += ' ';
    out += f.source().label(i) + "->" + f.target().label(f(i));
  }
  return out;
}

int cmd_is_connected(Request& r, std::ostream& out) {
  r.load();
  const auto& s = r.space();
  Subset a = r.parse_set(s.space.ground());
  bool fast = membership(s.space, a);
  if (r.oracle) oracle_check_membership(s.space, a, fast);
  out << render_verdict(fast) << "\n";
  return fast ? kOk : kNegative;
}

int cmd_components(Request& r, std::ostream& out) {
  r.load();
  const auto& s = r.space();
  Subset a = r.set.empty() ? s.space.ground().full() : r.parse_set(s.space.ground());
  auto comps = components(s.space, a);
  if (r.oracle) {
    auto m = oracle::closure(s.space.ground(), s.space.generators(), s.space.integral());
    std::vector<Subset> connected;
    for (Subset k : m.kappa)
      if (!k.empty() && k.subset_of(a)) connected.push_back(k);
    if (overlap_blocks(connected) != comps)
      throw Error("oracle divergence: components disagree with the closure oracle");
  }
  for (Subset c : comps) out << s.space.ground().render(c) << "\n";
  return kOk;
}

int cmd_induced(Request& r, std::ostream& out) {
  r.load();
  const auto& s = r.space();
  auto sub = induced(s.space, r.parse_set(s.space.ground()));
  out << io::render_space(s.name, sub);
  return kOk;
}

int cmd_compare(Request& r, std::ostream& out) {
  r.load();
  auto [a, b] = r.space_pair();
  out << to_string(compare(a->space, b->space)) << "\n";
  return kOk;
}

int cmd_meet_join(Request& r, std::ostream& out, bool is_meet) {
  r.load();
  auto [a, b] = r.space_pair();
  ConnectivitySpace result =
      is_meet ? meet(a->space, b->space) : join(a->space, b->space);
  out << io::render_space(a->name + (is_meet ? ".meet." : ".join.") + b->name, result);
  return kOk;
}

int cmd_topology_structure(Request& r, std::ostream& out, bool use_u) {
  r.load();
  const auto& t = r.topology();
  ConnectivitySpace space = use_u ? separation::u_t(t.topology) : separation::v_t(t.topology);
  if (r.set.empty()) {
    out << io::render_space(t.name + (use_u ? ".ut" : ".vt"), space);
    return kOk;
  }
  bool connected = membership(space, r.parse_set(t.topology.ground()));
  out << render_verdict(connected) << "\n";
  return connected ? kOk : kNegative;
}

int cmd_to_device(Request& r, std::ostream& out) {
  r.load();
  const auto& s = r.space();
  out << io::render_device(s.name + ".device", separation::device_of_structure(s.space));
  return kOk;
}

int cmd_from_device(Request& r, std::ostream& out) {
  r.load();
  const auto& d = r.device();
  out << io::render_space(d.name + ".space", separation::structure_of_device(d.device));
  return kOk;
}

int cmd_orbit_device(Request& r, std::ostream& out) {
  r.load();
  const auto& d = r.device();
  std::vector<SetMap> generators;
  for (const auto& m : r.bundle.maps) generators.push_back(m.map);
  separation::PermutationGroup group(d.device.ground(), std::move(generators));
  out << io::render_device(d.name + ".orbit", separation::orbit_device(group, d.device));
  return kOk;
}

int cmd_validate_rep(Request& r, std::ostream& out) {
  r.load(io::ParseOptions{.complete_topologies = false, .defer_representation_law = true});
  const auto& rep = r.representation();
  try {
    representation::Representation::validate(rep.rep.object(), rep.rep.space(),
                                             rep.rep.images());
  } catch (const InvariantViolation& e) {
    out << "invalid: " << e.what() << "\n";
    return kNegative;
  }
  out << "valid\n";
  return kOk;
}

int cmd_clear_distinct(Request& r, std::ostream& out, bool check_clear) {
  r.load();
  const auto& rep = r.representation();
  bool verdict = check_clear ? representation::is_clear(rep.rep)
                             : representation::is_distinct(rep.rep);
  out << render_verdict(verdict) << "\n";
  return verdict ? kOk : kNegative;
}

int cmd_compose(Request& r, std::ostream& out) {
  r.load();
  const auto& outer = r.pick(r.bundle.representations, r.outer, "representation");
  const auto& inner = r.pick(r.bundle.representations, r.inner, "representation");
  auto composite = representation::kleisli_compose(outer.rep, inner.rep);
  out << io::render_space(inner.from, composite.object());
  if (outer.to != inner.from) out << "\n" << io::render_space(outer.to, composite.space());
  out << "\n"
      << io::render_representation(io::NamedRep{outer.name + "." + inner.name, inner.from,
                                                outer.to, composite});
  return kOk;
}

int cmd_canonical_rep(Request& r, std::ostream& out) {
  r.load();
  const auto& s = r.space();
  auto rep = representation::canonical_representation(s.space);
  out << io::render_space(s.name, s.space);
  out << "\n" << io::render_space(s.name + ".rep-space", rep.space());
  out << "\n"
      << io::render_representation(
             io::NamedRep{s.name + ".canonical", s.name, s.name + ".rep-space", rep});
  return kOk;
}

int cmd_leaves(Request& r, std::ostream& out) {
  r.load();
  const auto& f = r.foliation();
  for (Subset leaf : foliation::leaves(f.fol)) out << f.fol.ground().render(leaf) << "\n";
  return kOk;
}

int cmd_leaf_space(Request& r, std::ostream& out) {
  r.load();
  const auto& f = r.foliation();
  out << io::render_space(f.name + ".leaves", foliation::induced_leaf_space(f.fol).space);
  return kOk;
}

foliation::FunctorialStructure parse_gamma(const std::string& g) {
  if (g == "d") return foliation::FunctorialStructure::Desintegrated;
  if (g == "k") return foliation::FunctorialStructure::Identity;
  if (g == "g") return foliation::FunctorialStructure::Coarse;
  throw Error("gamma must be one of d, k, g");
}

int cmd_phi(Request& r, std::ostream& out) {
  r.load();
  const auto& rep = r.representation();
  auto z = foliation::phi(parse_gamma(r.gamma0), parse_gamma(r.gamma1), rep.rep);
  out << io::render_space(rep.name + ".internal", z.internal());
  out << "\n" << io::render_space(rep.name + ".external", z.external());
  out << "\nfoliation " << rep.name << ".phi internal " << rep.name << ".internal external "
      << rep.name << ".external\n";
  return kOk;
}

int cmd_r_down(Request& r, std::ostream& out) {
  r.load();
  const auto& f = r.foliation();
  auto rep = foliation::r_down(f.fol);
  out << io::render_space(f.name + ".leafspace", rep.object());
  out << "\n" << io::render_space(f.name + ".external", rep.space());
  out << "\n"
      << io::render_representation(io::NamedRep{f.name + ".rdown", f.name + ".leafspace",
                                                f.name + ".external", rep});
  return kOk;
}

int cmd_check_adjunction(Request& r, std::ostream& out) {
  r.load();
  const auto& f = r.pick(r.bundle.foliations, r.foliation_name, "foliation");
  const auto& rep = r.pick(r.bundle.representations, r.rep_name, "representation");
  auto report = foliation::check_adjunction(f.fol, rep.rep);
  out << "rep-homs " << report.rep_homs.size() << "\n";
  out << "foliation-homs " << report.foliation_homs.size() << "\n";
  out << "projection-into-foliation-homs " << render_verdict(report.projection_into_foliation_homs) << "\n";
  out << "beta-determines-alpha " << render_verdict(report.beta_determines_alpha) << "\n";
  out << "unique-lift " << render_verdict(report.every_beta_lifts_once) << "\n";
  out << "bijection " << render_verdict(report.bijection) << "\n";
  for (const auto& [alpha, beta] : report.rep_homs)
    out << "rep alpha: " << render_map_images(alpha) << " | beta: " << render_map_images(beta)
        << "\n";
  for (const auto& beta : report.foliation_homs)
    out << "foliation beta: " << render_map_images(beta) << "\n";
  return report.ok() ? kOk : kNegative;
}

int cmd_irreducibles(Request& r, std::ostream& out) {
  r.load();
  const auto& s = r.space();
  auto graph = order::irreducibles(s.space);
  if (r.oracle) {
    auto slow = oracle::irreducibles_by_definition(s.space);
    canonical_sort(slow);
    if (slow != graph.elements)
      throw Error("oracle divergence: irreducibles disagree with the definitional oracle");
  }
  for (Subset k : graph.elements) out << s.space.ground().render(k) << "\n";
  return kOk;
}

int cmd_order(Request& r, std::ostream& out) {
  r.load();
  const auto& s = r.space();
  std::size_t fast = order::connectivity_order(s.space);
  if (r.oracle && fast != oracle::order_by_definition(s.space))
    throw Error("oracle divergence: order disagrees with the definitional oracle");
  out << fast << "\n";
  return kOk;
}

int cmd_foliation_order(Request& r, std::ostream& out) {
  r.load();
  const auto& f = r.foliation();
  std::size_t fast = order::foliation_order(f.fol);
  if (r.oracle) {
    auto ls = foliation::induced_leaf_space(f.fol);
    if (fast != oracle::order_by_definition(ls.space))
      throw Error("oracle divergence: foliation order disagrees with the definitional oracle");
  }
  out << fast << "\n";
  return kOk;
}

int cmd_obstruction(Request& r, std::ostream& out) {
  r.load();
  const auto& s = r.space();
  auto witness = topological_obstruction_witness(s.space);
  if (!witness) {
    out << "none\n";
    return kNegative;
  }
  const GroundSet& g = s.space.ground();
  out << "a=" << g.render(witness->a) << " b=" << g.render(witness->b)
      << " x=" << g.label(witness->x) << "\n";
  return kOk;
}

int cmd_close_topology(Request& r, std::ostream& out) {
  r.load(io::ParseOptions{.complete_topologies = true, .defer_representation_law = false});
  const auto& t = r.topology();
  out << io::render_topology(t.name, t.topology);
  return kOk;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite connectivity-space engine"};
  app.require_subcommand(1);
  Request r;
  app.add_flag("--oracle", r.oracle, "re-run through the brute-force oracle and compare");

  auto add_files = [&](CLI::App* sub) {
    sub->add_option("files", r.files, "input documents")->required()->expected(-1);
    sub->fallthrough();
    return sub;
  };
  auto add_name = [&](CLI::App* sub) {
    sub->add_option("--name", r.name, "entity to use when the input has several");
    return sub;
  };
  auto add_set = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--set", r.set, "points of the queried subset")->expected(-1);
    if (required) opt->required();
    return sub;
  };

  int (*handler)(Request&, std::ostream&) = nullptr;
  auto on = [&](CLI::App* sub, int (*fn)(Request&, std::ostream&)) {
    sub->callback([&handler, fn] { handler = fn; });
    return sub;
  };

  on(add_set(add_name(add_files(app.add_subcommand(
         "is-connected", "decide whether a subset is connected"))), true),
     cmd_is_connected);
  on(add_set(add_name(add_files(app.add_subcommand(
         "components", "maximal connected subsets of a set"))), false),
     cmd_components);
  on(add_set(add_name(add_files(app.add_subcommand(
         "induced", "induced structure on a subset"))), true),
     cmd_induced);

  auto* cmp = add_files(app.add_subcommand("compare", "compare two structures"));
  cmp->add_option("--left", r.left, "name of the left space");
  cmp->add_option("--right", r.right, "name of the right space");
  on(cmp, cmd_compare);

  auto* meet_cmd = add_files(app.add_subcommand("meet", "meet of two structures"));
  meet_cmd->add_option("--left", r.left);
  meet_cmd->add_option("--right", r.right);
  on(meet_cmd, +[](Request& rq, std::ostream& o) { return cmd_meet_join(rq, o, true); });
  auto* join_cmd = add_files(app.add_subcommand("join", "join of two structures"));
  join_cmd->add_option("--left", r.left);
  join_cmd->add_option("--right", r.right);
  on(join_cmd, +[](Request& rq, std::ostream& o) { return cmd_meet_join(rq, o, false); });

  on(add_set(add_name(add_files(app.add_subcommand(
         "u-t", "topological connectivity structure of a finite topology"))), false),
     +[](Request& rq, std::ostream& o) { return cmd_topology_structure(rq, o, true); });
  on(add_set(add_name(add_files(app.add_subcommand(
         "v-t", "disjoint-open separation structure of a finite topology"))), false),
     +[](Request& rq, std::ostream& o) { return cmd_topology_structure(rq, o, false); });

  on(add_name(add_files(app.add_subcommand("to-device", "separation device of a structure"))),
     cmd_to_device);
  on(add_name(add_files(app.add_subcommand("from-device", "structure of a separation device"))),
     cmd_from_device);
  on(add_name(add_files(app.add_subcommand(
         "orbit-device", "device of all images under the group generated by the maps"))),
     cmd_orbit_device);

  on(add_name(add_files(app.add_subcommand("validate-rep", "check a representation file"))),
     cmd_validate_rep);
  on(add_name(add_files(app.add_subcommand("clear", "is the representation clear?"))),
     +[](Request& rq, std::ostream& o) { return cmd_clear_distinct(rq, o, true); });
  on(add_name(add_files(app.add_subcommand("distinct", "is the representation distinct?"))),
     +[](Request& rq, std::ostream& o) { return cmd_clear_distinct(rq, o, false); });

  auto* comp = add_files(app.add_subcommand("compose", "Kleisli composition of representations"));
  comp->add_option("--outer", r.outer, "representation applied second")->required();
  comp->add_option("--inner", r.inner, "representation applied first")->required();
  on(comp, cmd_compose);

  on(add_name(add_files(app.add_subcommand(
         "canonical-rep", "clear and distinct representation of a space"))),
     cmd_canonical_rep);

  on(add_name(add_files(app.add_subcommand("leaves", "leaves of a foliation"))), cmd_leaves);
  on(add_name(add_files(app.add_subcommand("leaf-space", "induced leaf space of a foliation"))),
     cmd_leaf_space);

  auto* phi_cmd = add_name(add_files(app.add_subcommand(
      "phi", "foliation of a representation under functorial structures")));
  phi_cmd->add_option("--gamma0", r.gamma0, "structure at non-connected points: d, k or g");
  phi_cmd->add_option("--gamma1", r.gamma1, "structure at connected points: d, k or g");
  on(phi_cmd, cmd_phi);

  on(add_name(add_files(app.add_subcommand("r-down", "induced representation of a foliation"))),
     cmd_r_down);

  auto* adj = add_files(app.add_subcommand(
      "check-adjunction", "verify the leaf-space adjunction on one instance"));
  adj->add_option("--foliation", r.foliation_name, "foliation to use");
  adj->add_option("--rep", r.rep_name, "representation to use");
  on(adj, cmd_check_adjunction);

  on(add_name(add_files(app.add_subcommand("irreducibles", "irreducible connected parts"))),
     cmd_irreducibles);
  on(add_name(add_files(app.add_subcommand("order", "connectivity order of a space"))),
     cmd_order);
  on(add_name(add_files(app.add_subcommand("foliation-order", "order of the leaf space"))),
     cmd_foliation_order);
  on(add_name(add_files(app.add_subcommand(
         "obstruction", "witness that no topology realizes the structure"))),
     cmd_obstruction);
  on(add_name(add_files(app.add_subcommand(
         "close-topology", "close a family of opens under union and intersection"))),
     cmd_close_topology);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    return handler ? handler(r, out) : kUsage;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const SizeGuard& e) {
    err << "size guard: " << e.what() << "\n";
    return kGuard;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace cnc::cli
