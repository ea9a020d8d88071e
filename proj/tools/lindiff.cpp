// lindiff: command line driver for Janet bases of linear difference systems.
//
// Exit codes: 0 ok, 1 usage error, 2 parse error, 3 computation error.

#include "lindiff/frontend.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace lindiff;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct Args {
  std::string ring;
  std::string ranking, priority, blocks, dependent_order, mode, criteria, direction, format;
  std::string relations, session, input, system, to = "operators";
  std::vector<std::string> targets;
  std::optional<unsigned> degree_bound;
};

void add_common(CLI::App* cmd, Args& a) {
  cmd->add_option("--ring", a.ring, "\"x,y; u,ux,uy; params\"")->required();
  cmd->add_option("--ranking", a.ranking, "degrevlex|lex")->check(CLI::IsMember({"degrevlex", "lex"}));
  cmd->add_option("--priority", a.priority, "top|pot")->check(CLI::IsMember({"top", "pot"}));
  cmd->add_option("--blocks", a.blocks, "axis blocks, e.g. \"x|y\"");
  cmd->add_option("--dependent-order", a.dependent_order, "dependents from highest, e.g. \"ux,uy,u\"");
  cmd->add_option("--mode", a.mode, "janet|janet-like")->check(CLI::IsMember({"janet", "janet-like"}));
  cmd->add_option("--criteria", a.criteria, "enabled criteria, e.g. 1,2,3,4 or none");
  cmd->add_option("--direction", a.direction, "forward|backward")->check(CLI::IsMember({"forward", "backward"}));
  cmd->add_option("--relations", a.relations, "file of master relations such as f[0,*]");
  cmd->add_option("--format", a.format, "text|json")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--degree-bound", a.degree_bound, "total shift degree bound for enumerations");
  cmd->add_option("--session", a.session, "JSON file with default options");
  cmd->add_option("-i,--input", a.input, "read the system from a file");
  cmd->add_option("system", a.system, "equations separated by ';' (default: stdin)");
}

SessionOptions options_from(const Args& a) {
  SessionOptions o;
  if (!a.session.empty()) apply_session_json(o, read_file(a.session));
  nlohmann::json j = nlohmann::json::object();
  if (!a.ranking.empty()) j["ranking"] = a.ranking;
  if (!a.priority.empty()) j["priority"] = a.priority;
  if (!a.blocks.empty()) j["blocks"] = a.blocks;
  if (!a.dependent_order.empty()) j["dependent_order"] = a.dependent_order;
  if (!a.mode.empty()) j["mode"] = a.mode;
  if (!a.criteria.empty()) j["criteria"] = a.criteria;
  if (!a.direction.empty()) j["direction"] = a.direction;
  if (!a.format.empty()) j["format"] = a.format;
  apply_session_json(o, j.dump());
  return o;
}

std::string system_text(const Args& a) {
  if (!a.system.empty()) return a.system;
  if (!a.input.empty()) return read_file(a.input);
  std::ostringstream s;
  s << std::cin.rdbuf();
  return s.str();
}

std::vector<DiffPoly> lhs_only(const std::vector<Equation>& eqs) {
  std::vector<DiffPoly> out;
  bool affine = false;
  for (const auto& e : eqs) {
    out.push_back(e.lhs);
    affine = affine || !e.rhs.is_zero();
  }
  if (affine) std::cerr << "lindiff: right hand sides ignored (see compcond)\n";
  return out;
}

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

int run(const std::string& command, const Args& a) {
  const SessionOptions opts = options_from(a);
  const RingSpec ring = parse_ring(a.ring, opts.direction);
  const Ranking rk = make_ranking(ring, opts);
  RelationSet relations;
  if (!a.relations.empty()) relations = parse_relations(read_file(a.relations), ring);
  const auto eqs = parse_system(system_text(a), ring);
  if (eqs.empty()) throw UsageError("no equations given");

  Report report;
  report.ring = &ring;
  report.ranking = &rk;
  report.mode = opts.mode;

  if (command == "convert") {
    for (const auto& e : eqs) {
      if (a.to == "operators") {
        std::string s = format_operator_form(e.lhs, ring, rk);
        if (!e.rhs.is_zero()) s += " = " + format_coefficient(e.rhs, ring);
        report.reduced.push_back(s);
      } else {
        report.reduced.push_back(format_equation(e, ring, rk));
      }
    }
    std::cout << serialize(report, opts.format);
    return 0;
  }

  if (command == "compcond") {
    std::vector<DiffPoly> F;
    for (const auto& e : eqs) F.push_back(e.lhs);
    const auto res = comp_cond(ring, F, rk, opts.completion());
    nlohmann::json tags = nlohmann::json::array();
    for (std::size_t i = ring.m(); i < res.ring.m(); ++i) tags.push_back(res.ring.dependents[i]);
    bool consistent = true;
    for (const auto& c : res.conditions) {
      report.conditions.push_back(format_poly(c, res.ring, res.ranking));
      RatFun value;
      for (const auto& [u, coeff] : c.terms()) {
        RatFun r = eqs[u.dep - res.first_tag].rhs;
        for (std::size_t i = 0; i < ring.n(); ++i) r = r.shifted(i, u.exps[i]);
        value += coeff * r;
      }
      consistent = consistent && value.is_zero();
    }
    report.extras.emplace_back("tags", tags.dump());
    report.extras.emplace_back("consistent", consistent ? "true" : "false");
    std::cout << serialize(report, opts.format);
    return 0;
  }

  const Basis J = janet_basis(ring, lhs_only(eqs), rk, opts.completion());
  if (command == "basis") {
    report.elements = make_report(J).elements;
  } else if (command == "reduce") {
    if (a.targets.empty()) throw UsageError("reduce needs at least one --target");
    for (const auto& t : a.targets)
      report.reduced.push_back(format_poly(reduce_with_relations(parse_poly(t, ring), J, relations), ring, rk));
  } else if (command == "masters") {
    const auto set = residue_class_basis(J, a.degree_bound, &relations);
    report.finite = set.finite;
    for (const auto& u : set.monomials) report.masters.push_back(format_monomial(u, ring));
    if (!set.finite) {
      nlohmann::json cones = nlohmann::json::array();
      for (const auto& c : set.cones) {
        std::string s = format_monomial(c.base, ring) + " {";
        bool first = true;
        for (std::size_t i = 0; i < ring.n(); ++i)
          if ((c.free_axes >> i) & 1U) {
            s += (first ? "" : ",") + ring.independents[i];
            first = false;
          }
        cones.push_back(s + "}");
      }
      report.extras.emplace_back("cones", cones.dump());
    }
  } else if (command == "hilbert") {
    const auto series = hilbert_series(J);
    const auto hp = hilbert_polynomial(series);
    report.series = series.to_string();
    nlohmann::json hf = nlohmann::json::array();
    for (unsigned d = 0; d <= a.degree_bound.value_or(8); ++d) hf.push_back(series.coefficient(d));
    report.extras.emplace_back("hilbert_function", hf.dump());
    report.extras.emplace_back("hilbert_polynomial", json_string(hp.to_string()));
    report.extras.emplace_back("regularity", std::to_string(hp.regularity));
  }
  std::cout << serialize(report, opts.format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Janet bases of linear difference systems"};
  app.require_subcommand(1);
  Args args;
  for (const char* name : {"basis", "reduce", "masters", "hilbert", "compcond", "convert"}) {
    static const std::map<std::string, std::string> help = {
        {"basis", "minimal Janet (or Janet-like) basis"},
        {"reduce", "involutive normal forms of --target expressions"},
        {"masters", "standard monomials of the residue class module"},
        {"hilbert", "Hilbert series, function and polynomial"},
        {"compcond", "compatibility conditions on the right hand sides"},
        {"convert", "rewrite equations in operator form or back"}};
    auto* cmd = app.add_subcommand(name, help.at(name));
    add_common(cmd, args);
    if (std::string(name) == "reduce")
      cmd->add_option("-t,--target", args.targets, "expression to reduce (repeatable)")->allow_extra_args(false);
    if (std::string(name) == "convert")
      cmd->add_option("--to", args.to, "operators|equations")->check(CLI::IsMember({"operators", "equations"}));
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, args);
  } catch (const ParseError& e) {
    std::cerr << "lindiff: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "lindiff: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "lindiff: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "lindiff: " << e.what() << "\n";
    return 3;
  }
}
