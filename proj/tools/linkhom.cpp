#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "linkhom/errors.hpp"
#include "linkhom/harness/session.hpp"
#include "linkhom/modules/homological.hpp"
#include "linkhom/theory/linkage.hpp"

using nlohmann::json;
using namespace linkhom;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A path to a script, or the script text itself.
std::string script_text(const std::string& arg) {
  std::ifstream probe(arg);
  return probe ? slurp(arg) : arg;
}

void write_or_print(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

void print_summary(const SessionResult& r) {
  for (const auto& c : r.reports) {
    std::cerr << to_string(c.verdict) << "  " << c.check_id;
    for (const auto& in : c.inputs) std::cerr << " " << in.name;
    std::cerr << "\n";
  }
  std::cerr << "pass " << r.summary.pass << ", fail " << r.summary.fail << ", hypothesis-not-met "
            << r.summary.hypothesis_not_met << ", undetermined " << r.summary.undetermined << "\n";
}

json table_json(const HilbertTable& t) {
  json a = json::array();
  for (std::size_t k = 0; k < t.dims.size(); ++k) a.push_back(json::array({t.lo + static_cast<int>(k), t.dims[k]}));
  return a;
}

json module_json(const Workspace& ws, const FPModule& m) {
  json j;
  j["zero"] = m.is_zero();
  j["generator_degrees"] = m.gen_degs();
  j["relations"] = m.relations().cols.size();
  j["dimension"] = m.dimension();
  j["hilbert"] = table_json(ws.table(m));
  return j;
}

int compute(const std::string& op, const std::vector<std::string>& args) {
  if (args.empty()) throw InputError("compute needs a script (file or text) followed by operands");
  Workspace ws = Workspace::build(parse_session(script_text(args[0])));
  std::vector<std::string> rest(args.begin() + 1, args.end());
  auto need = [&](std::size_t n) {
    if (rest.size() != n) throw InputError(op + " takes " + std::to_string(n) + " operand(s)");
  };
  json out;
  out["op"] = op;
  if (op == "transpose") {
    need(1);
    out["result"] = module_json(ws, transpose(ws.module(rest[0])));
  } else if (op == "lambda") {
    need(1);
    out["result"] = module_json(ws, lambda(ws.module(rest[0])));
  } else if (op == "ext") {
    need(3);
    int i = std::stoi(rest[0]);
    out["result"] = module_json(ws, ext_module(i, ws.module(rest[1]), ws.module(rest[2])));
  } else if (op == "depth") {
    need(1);
    out["result"] = depth(ws.module(rest[0]));
  } else if (op == "link-ideal") {
    need(2);
    IdealLink l = link_ideal(ws.ideal(rest[0]), ws.ideal(rest[1]));
    out["result"] = {{"J", to_string(l.J)}, {"verified", l.verified}};
  } else {
    throw InputError("unknown operation '" + op + "' (transpose, lambda, ext, depth, link-ideal)");
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linkhom: linkage and semidualizing modules over graded rings"};
  app.require_subcommand(1);

  std::string script_path;
  std::string json_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> bound;
  auto* run = app.add_subcommand("run", "Run the checks of a session script");
  run->add_option("script", script_path, "Script file")->required();
  run->add_option("--seed", seed, "Random seed");
  run->add_option("--bound", bound, "Scan bound for bounded certificates");
  run->add_option("--json", json_path, "Write the report here instead of stdout");

  auto* catalog = app.add_subcommand("catalog", "Run every check over the built-in catalog");
  catalog->add_option("--json", json_path, "Write the report here instead of stdout");
  catalog->add_option("--seed", seed, "Random seed");
  catalog->add_option("--bound", bound, "Scan bound for bounded certificates");
  bool print_script = false;
  catalog->add_flag("--script", print_script, "Print the catalog script and exit");

  std::string op;
  std::vector<std::string> operands;
  auto* comp = app.add_subcommand("compute", "One operation: transpose, lambda, ext, depth, link-ideal");
  comp->add_option("op", op, "Operation")->required();
  comp->add_option("args", operands, "Script (file or text), then operand names");

  CLI11_PARSE(app, argc, argv);

  try {
    SettingsOverride over;
    over.seed = seed;
    over.bound = bound;
    if (*run) {
      SessionResult r = run_script(slurp(script_path), over);
      write_or_print(r.json, json_path);
      print_summary(r);
      return r.exit_code;
    }
    if (*catalog) {
      if (print_script) {
        std::cout << catalog_source();
        return 0;
      }
      SessionResult r = run_catalog(over);
      write_or_print(r.json, json_path);
      print_summary(r);
      return r.exit_code;
    }
    return compute(op, operands);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
