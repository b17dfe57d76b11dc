#include "cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "cn/cell_complex.hpp"
#include "cn/circle.hpp"
#include "cn/conversions.hpp"
#include "cn/error.hpp"
#include "cn/map_io.hpp"
#include "cn/presentation.hpp"
#include "cn/smith.hpp"
#include "cn/weights.hpp"

namespace cn::cli {

namespace {

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int homology_cmd(int n, std::ostream& out) {
  out << "k: rank, torsion\n";
  auto groups = homology(n);
  for (std::size_t k = 0; k < groups.size(); ++k) {
    std::string torsion;
    for (const auto& t : groups[k].torsion) {
      torsion += (torsion.empty() ? "" : ", ") + t.str();
    }
    out << k << ": " << groups[k].rank << ", [" << torsion << "]\n";
  }
  return kOk;
}

int pi1_cmd(int n, std::ostream& out) {
  auto p = pi1_presentation(n);
  out << "presentation: " << p.str() << "\n";
  out << "simplified: " << simplify_presentation(p).str() << "\n";
  return kOk;
}

int cells_cmd(int n, std::ostream& out) {
  auto cx = build_cell_complex(n);
  Json j;
  j["n"] = n;
  j["cell_counts"] = Json::array();
  j["cells"] = Json::array();
  for (const auto& row : cx.cells) {
    j["cell_counts"].push_back(row.size());
    Json names = Json::array();
    for (const auto& c : row) names.push_back(c.name());
    j["cells"].push_back(std::move(names));
  }
  j["boundaries"] = Json::array();
  for (std::size_t k = 1; k < cx.boundary.size(); ++k) {
    j["boundaries"].push_back({{"dim", k}, {"matrix", cx.boundary[k]}});
  }
  print_json(out, j);
  return kOk;
}

// Loads and validates; prints violations and returns false for invalid maps.
bool load_valid(const std::string& path, PLMultimap& f, std::ostream& err) {
  f = load_map(path);
  auto report = validate(f);
  if (report.valid()) return true;
  err << "invalid map " << path << ":\n";
  for (const auto& v : report.violations) err << "  " << v.message << "\n";
  return false;
}

int check_cmd(const std::string& path, std::ostream& out) {
  auto f = load_map(path);
  auto report = validate(f);
  Json j = validation_to_json(f, report);
  if (report.valid()) {
    j["profile"] = profile_to_json(cardinality_profile(f));
    j["equicardinal"] = is_equicardinal(f);
    j["one_n_valued"] = is_one_n_valued(f);
    j["components"] = components(f).size();
    j["union_check"] = union_check(f).verdict == UnionVerdict::Sufficient
                           ? "sufficient"
                           : "inconclusive";
  }
  print_json(out, j);
  return report.valid() ? kOk : kSemanticFailure;
}

int weights_cmd(const std::string& path, std::ostream& out, std::ostream& err) {
  PLMultimap f(1, DomainKind::Interval, {}, {});
  if (!load_valid(path, f, err)) return kSemanticFailure;
  auto sys = balance_constraints(f);
  print_json(out, certificate_to_json(sys, solve_positive(sys)));
  return kOk;
}

// Weights from the file if present, otherwise from the solver.
bool weighted_version(const PLMultimap& f, PLMultimap& weighted, std::ostream& err) {
  if (f.has_weights()) {
    weighted = f;
    return true;
  }
  auto sys = balance_constraints(f);
  auto cert = solve_positive(sys);
  if (!cert.feasible()) {
    err << "map admits no positive integer weights:\n";
    err << certificate_to_json(sys, cert).dump(2) << "\n";
    return false;
  }
  weighted = f.with_weights(cert.weights);
  return true;
}

int convert_cmd(const std::string& path, const std::string& target, std::ostream& out,
                std::ostream& err) {
  PLMultimap f(1, DomainKind::Interval, {}, {});
  if (!load_valid(path, f, err)) return kSemanticFailure;
  if (target == "nfold") {
    print_json(out, nfold_to_json(union_to_nfold(f)));
    return kOk;
  }
  if (target == "sp" && !f.has_weights() &&
      union_check(f).verdict == UnionVerdict::Sufficient) {
    print_json(out, sp_to_json(nfold_to_sp(union_to_nfold(f))));
    return kOk;
  }
  PLMultimap weighted = f;
  if (!weighted_version(f, weighted, err)) return kSemanticFailure;
  SPMap sp = weighted_to_sp(weighted);
  print_json(out, target == "sp" ? sp_to_json(sp) : map_to_json(sp_to_weighted(sp)));
  return kOk;
}

int hausdorff_cmd(const std::string& a, const std::string& b, std::ostream& out) {
  out << hausdorff_distance(Configuration::parse(a), Configuration::parse(b)).str()
      << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Configuration spaces C_n(S^1) and piecewise-linear multivalued maps", "cn"};
  app.require_subcommand(1);

  int n = 0;
  std::string path;
  std::string target;
  std::string config_a;
  std::string config_b;

  auto* homology_sub = app.add_subcommand("homology", "Integer homology of C_n(S^1)");
  auto* pi1_sub = app.add_subcommand("pi1", "Edge-path presentation of pi_1(C_n(S^1))");
  auto* cells_sub = app.add_subcommand("cells", "Cells and boundary matrices as JSON");
  for (auto* sub : {homology_sub, pi1_sub, cells_sub}) {
    sub->add_option("n", n, "number of points")->required()->check(CLI::PositiveNumber);
  }
  auto* check_sub = app.add_subcommand("check", "Validate and classify a map file");
  auto* weights_sub = app.add_subcommand("weights", "Decide positive integer weights");
  auto* convert_sub = app.add_subcommand("convert", "Convert a map to another representation");
  for (auto* sub : {check_sub, weights_sub, convert_sub}) {
    sub->add_option("map", path, "map JSON file")->required();
  }
  convert_sub->add_option("--to", target, "sp | weighted | nfold")
      ->required()
      ->check(CLI::IsMember({"sp", "weighted", "nfold"}));
  auto* hausdorff_sub = app.add_subcommand("hausdorff", "Hausdorff distance of two configurations");
  hausdorff_sub->add_option("a", config_a, "comma-separated rationals, e.g. 0,1/2")->required();
  hausdorff_sub->add_option("b", config_b, "comma-separated rationals")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  try {
    if (homology_sub->parsed()) return homology_cmd(n, out);
    if (pi1_sub->parsed()) return pi1_cmd(n, out);
    if (cells_sub->parsed()) return cells_cmd(n, out);
    if (check_sub->parsed()) return check_cmd(path, out);
    if (weights_sub->parsed()) return weights_cmd(path, out, err);
    if (convert_sub->parsed()) return convert_cmd(path, target, out, err);
    if (hausdorff_sub->parsed()) return hausdorff_cmd(config_a, config_b, out);
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kSemanticFailure;
  }
  return kUsageError;
}

}  // namespace cn::cli
