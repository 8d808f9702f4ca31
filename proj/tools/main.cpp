#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "parmod/cone.hpp"
#include "parmod/crossing.hpp"
#include "parmod/io.hpp"
#include "parmod/quantum.hpp"
#include "parmod/schubert.hpp"
#include "parmod/walls.hpp"
#include "parmod/weights.hpp"

namespace {

using nlohmann::json;
using namespace parmod;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse, "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    fail(errc::parse, "malformed JSON in '" + path + "': " + e.what());
  }
  return j;
}

// Arguments that name either a JSON file or carry inline JSON directly.
json load_json_or_inline(const std::string& arg) {
  std::string trimmed = arg;
  auto first = trimmed.find_first_not_of(" \t\n");
  if (first != std::string::npos && trimmed[first] == '{') {
    try {
      return json::parse(trimmed);
    } catch (const json::parse_error& e) {
      fail(errc::parse, std::string("malformed inline JSON: ") + e.what());
    }
  }
  return load_json(arg);
}

void emit(const json& record, const std::string& summary) {
  std::cout << record.dump(2) << "\n";
  std::cerr << summary << "\n";
}

std::vector<Partition> parse_partition_list(const std::string& text) {
  std::vector<Partition> out;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ';')) out.push_back(parse_partition(item));
  return out;
}

json partition_json(const Partition& p) {
  json parts = json::array();
  for (int k = 0; k < p.length(); ++k) parts.push_back(p.part(k));
  return parts;
}

std::pair<int, int> parse_grassmannian(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    fail(errc::parse, "--grassmannian wants 's,r' (plane dimension, space)");
  int s = std::stoi(text.substr(0, comma));
  int r = std::stoi(text.substr(comma + 1));
  return {s, r};
}

std::string plural(std::size_t k, const char* noun) {
  return std::to_string(k) + " " + noun + (k == 1 ? "" : "s");
}

void run_dim(int r, int n) {
  long long dim = moduli_dimension(r, n);
  json j;
  j["schema"] = "parmod/dim/1";
  j["rank"] = r;
  j["points"] = n;
  j["dimension"] = dim;
  emit(j, "dim M(" + std::to_string(r) + ", " + std::to_string(n) +
              ") = " + std::to_string(dim));
}

void run_lr(const std::string& lambda_text, const std::string& mu_text,
            const std::string& nu_text, const std::string& box_text) {
  Partition lambda = parse_partition(lambda_text);
  Partition mu = parse_partition(mu_text);
  json j;
  j["schema"] = "parmod/lr/1";
  j["lambda"] = partition_json(lambda);
  j["mu"] = partition_json(mu);
  if (!nu_text.empty()) {
    Partition nu = parse_partition(nu_text);
    Int c = lr_coefficient(lambda, mu, nu);
    j["nu"] = partition_json(nu);
    j["coefficient"] = int_json(c);
    emit(j, "coefficient " + int_to_string(c));
    return;
  }
  if (box_text.empty())
    fail(errc::parse, "lr needs --nu for one coefficient or --box s,r for "
                      "a box-truncated product");
  auto [s, r] = parse_grassmannian(box_text);
  CohomologyClass prod = cup_product(cohomology_class(r, s, lambda),
                                     cohomology_class(r, s, mu));
  json terms = json::array();
  for (const auto& [nu, c] : prod.terms) {
    json t;
    t["nu"] = partition_json(nu);
    t["coefficient"] = int_json(c);
    terms.push_back(std::move(t));
  }
  j["box"] = {{"s", s}, {"r", r}};
  j["product"] = std::move(terms);
  emit(j, plural(prod.terms.size(), "term"));
}

void run_gw(const std::string& grassmannian, const std::string& classes_text,
            int degree) {
  auto [s, r] = parse_grassmannian(grassmannian);
  std::vector<Partition> classes = parse_partition_list(classes_text);
  Int value = gw_invariant(r, s, classes, degree);
  json j;
  j["schema"] = "parmod/gw/1";
  j["s"] = s;
  j["r"] = r;
  j["degree"] = degree;
  json cl = json::array();
  for (const Partition& p : classes) cl.push_back(partition_json(p));
  j["classes"] = std::move(cl);
  j["invariant"] = int_json(value);
  emit(j, "invariant " + int_to_string(value));
}

void run_walls(const std::string& from_path, const std::string& to_path,
               std::optional<int> dmax) {
  ParabolicWeight w0 = weight_from_json(load_json(from_path));
  ParabolicWeight w1 = weight_from_json(load_json(to_path));
  bool bounded = false;
  std::vector<WallGroup> groups = segment_walls(w0, w1, dmax, &bounded);
  std::size_t walls = 0;
  for (const auto& g : groups) walls += g.walls.size();
  emit(wall_groups_record(w0.rank(), w0.points(), "segment", "t", groups,
                          bounded),
       plural(groups.size(), "crossing parameter") + ", " +
           plural(walls, "wall") + (bounded ? " (search bounded)" : ""));
}

void run_scaling(const std::string& path, const std::string& cmax_text,
                 std::optional<int> dmax) {
  ParabolicWeight base = weight_from_json(load_json(path));
  ScalingPath sp = ScalingPath::make(base, parse_rational(cmax_text));
  bool bounded = false;
  std::vector<WallGroup> groups = scaling_walls(sp, dmax, &bounded);
  std::size_t walls = 0;
  for (const auto& g : groups) walls += g.walls.size();
  emit(wall_groups_record(base.rank(), base.points(), "scaling", "c", groups,
                          bounded),
       plural(groups.size(), "crossing parameter") + ", " +
           plural(walls, "wall") + (bounded ? " (search bounded)" : ""));
}

void run_classify(const std::string& weight_path, const std::string& wall_arg,
                  std::optional<int> dmax) {
  ParabolicWeight w = weight_from_json(load_json(weight_path));
  Wall W = wall_from_json(load_json_or_inline(wall_arg));
  CrossingReport rep = classify(W, w, {true, dmax});
  emit(crossing_report_to_json(rep),
       crossing_kind_name(rep.kind) + ": ext- = " +
           std::to_string(rep.ext_minus) + ", ext+ = " +
           std::to_string(rep.ext_plus));
}

void run_dominant(const std::string& path, std::optional<int> dmax) {
  ParabolicWeight w = weight_from_json(load_json(path));
  DominanceTrace t = is_dominant(w, dmax);
  emit(dominance_trace_to_json(t),
       std::string(t.dominant ? "dominant" : "not dominant") + " (rho " +
           std::to_string(t.rho_initial) + " -> " +
           std::to_string(t.rho_final) + ", " +
           plural(t.steps.size(), "crossing") + ")");
}

void run_effcone(int r, int n, std::optional<int> dmax) {
  ConeDescription C = effective_cone(r, n, dmax);
  json j = cone_to_json(C);
  emit(j, plural(C.inequalities.size(), "inequality") + " (" +
              j["counts"].dump() + ")" +
              (C.bounded_search ? " (search bounded)" : ""));
}

void run_model(const std::string& path, std::optional<int> dmax) {
  DivisorClass D = divisor_from_json(load_json(path));
  ConeDescription C = effective_cone(D.r, D.n, dmax);
  ModelDescriptor m = projective_model(D, C, dmax);
  emit(model_to_json(m), "model kind: " + model_kind_name(m));
}

void run_anticanonical(int r, int n, bool git) {
  DivisorClass D = git ? git_anticanonical_class(r, n)
                       : anticanonical_class(r, n);
  json j = divisor_to_json(D);
  j["schema"] = "parmod/anticanonical/1";
  j["quotient"] = git ? "git" : "moduli";
  j["weight"] = weight_to_json(pauly_weight(D));
  emit(j, std::string(git ? "GIT" : "moduli") + " anticanonical class at "
              "level " + int_to_string(D.level));
}

void run_fano_report(int r, int n, std::optional<int> dmax) {
  WeakFanoReport rep = weak_fano_report(r, n, dmax);
  bool certified = rep.dominant && rep.no_blow_down_steps &&
                   rep.all_steps_certified && rep.no_boundary_steps;
  emit(fano_report_to_json(rep),
       std::string(certified ? "weak Fano certified"
                             : "weak Fano not certified") +
           " (rho " + std::to_string(rep.trace.rho_final) + ", " +
           plural(rep.trace.steps.size(), "crossing") + ")");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact wall-and-chamber computations for parabolic bundle "
               "moduli on the projective line"};
  app.require_subcommand(1);

  int dmax_flag = -1;
  app.add_option("--dmax", dmax_flag,
                 "cap |d| in wall and certificate searches; outputs carry a "
                 "bounded-search marker when this truncates")
      ->check(CLI::NonNegativeNumber);
  auto dmax = [&]() -> std::optional<int> {
    if (dmax_flag < 0) return std::nullopt;
    return dmax_flag;
  };

  int rank = 0, points = 0, degree = 0;
  bool git = false;
  std::string lambda, mu, nu, box, grassmannian, classes;
  std::string weights, to, wall, cmax = "1", divisor;

  CLI::App* dim = app.add_subcommand("dim", "moduli dimension");
  dim->add_option("--rank", rank)->required();
  dim->add_option("--points", points)->required();
  dim->callback([&] { run_dim(rank, points); });

  CLI::App* lr = app.add_subcommand(
      "lr", "Littlewood-Richardson coefficient or box product");
  lr->add_option("--lambda", lambda)->required();
  lr->add_option("--mu", mu)->required();
  lr->add_option("--nu", nu);
  lr->add_option("--box", box, "s,r for a product in the s x (r-s) box");
  lr->callback([&] { run_lr(lambda, mu, nu, box); });

  CLI::App* gw = app.add_subcommand(
      "gw", "Gromov-Witten invariant of a Grassmannian");
  gw->add_option("--grassmannian", grassmannian, "s,r")->required();
  gw->add_option("--classes", classes, "partitions separated by ';'")
      ->required();
  gw->add_option("--degree", degree)->required()
      ->check(CLI::NonNegativeNumber);
  gw->callback([&] { run_gw(grassmannian, classes, degree); });

  CLI::App* walls_cmd = app.add_subcommand(
      "walls", "walls crossed on the segment between two weights");
  walls_cmd->add_option("--weights", weights, "weight file (start)")
      ->required();
  walls_cmd->add_option("--to", to, "weight file (end)")->required();
  walls_cmd->callback([&] { run_walls(weights, to, dmax()); });

  CLI::App* scaling = app.add_subcommand(
      "scaling", "walls crossed on the ray c * base, c in (0, cmax]");
  scaling->add_option("--weights", weights, "weight file (ray base)")
      ->required();
  scaling->add_option("--cmax", cmax, "rational, default 1");
  scaling->callback([&] { run_scaling(weights, cmax, dmax()); });

  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "classify a simple crossing at an on-wall weight");
  classify_cmd->add_option("--weights", weights, "weight file (on the wall)")
      ->required();
  classify_cmd->add_option("--wall", wall, "wall file or inline JSON")
      ->required();
  classify_cmd->callback([&] { run_classify(weights, wall, dmax()); });

  CLI::App* dominant = app.add_subcommand(
      "dominant", "Picard-number trace along the scaling ray of a weight");
  dominant->add_option("--weights", weights)->required();
  dominant->callback([&] { run_dominant(weights, dmax()); });

  CLI::App* effcone = app.add_subcommand(
      "effcone", "H-representation of the effective cone");
  effcone->add_option("--rank", rank)->required();
  effcone->add_option("--points", points)->required();
  effcone->callback([&] { run_effcone(rank, points, dmax()); });

  CLI::App* model = app.add_subcommand(
      "model", "projective model of a divisor class in the cone");
  model->add_option("--divisor", divisor, "divisor class file")->required();
  model->callback([&] { run_model(divisor, dmax()); });

  CLI::App* anti = app.add_subcommand(
      "anticanonical", "anticanonical divisor class and its weight");
  anti->add_option("--rank", rank)->required();
  anti->add_option("--points", points)->required();
  anti->add_flag("--git", git, "class of the small-weight GIT quotient");
  anti->callback([&] { run_anticanonical(rank, points, git); });

  CLI::App* fano = app.add_subcommand(
      "fano-report", "dominance and blow-down audit of the central ray");
  fano->add_option("--rank", rank)->required();
  fano->add_option("--points", points)->required();
  fano->callback([&] { run_fano_report(rank, points, dmax()); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const DomainError& e) {
    std::cerr << "error [" << errc_name(e.kind()) << "]: " << e.what()
              << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
