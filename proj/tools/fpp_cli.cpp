// Command-line front end: individual computations, fixture export, and the full report.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include "fpp/hermitian.hpp"
#include "fpp/lfunctions.hpp"
#include "fpp/report.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::string utc_timestamp() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) t = static_cast<std::time_t>(std::atoll(epoch));
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

fpp::Config config_from(const std::string& path) {
  return path.empty() ? fpp::default_config() : fpp::load_config(path);
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw fpp::ConfigError("cannot write " + path);
  out << text;
}

fpp::ClassDataset dataset_for(const std::string& group, const std::string& file) {
  if (!file.empty()) return fpp::dataset_from_json(fpp::read_json_file(file));
  if (group == "gamma") return fpp::build_gamma_dataset();
  return fpp::build_gamma_tilde_dataset();
}

}  // namespace

int main(int argc, char** argv) {
  using fpp::to_string;
  CLI::App app{"Exact verification of a fake projective plane constructed as a ball quotient"};
  app.require_subcommand(1);
  app.set_version_flag("--version", fpp::version());

  std::string config_path;
  std::string output_path;

  auto* volume = app.add_subcommand("volume", "covolume of the arithmetic lattice");
  volume->add_option("--config", config_path, "configuration file")->check(CLI::ExistingFile);
  bool symbolic = false;
  volume->add_flag("--symbolic", symbolic, "print the unsimplified symbolic expression");

  auto* lvalue = app.add_subcommand("lvalue", "L(n, chi_D) in closed form with a series cross-check");
  int l_n = 3;
  long l_disc = -7;
  long l_terms = 100000;
  lvalue->add_option("-n,--n", l_n, "argument")->check(CLI::Range(1, 60));
  lvalue->add_option("-d,--discriminant", l_disc, "fundamental discriminant of the character");
  lvalue->add_option("--terms", l_terms, "series terms for the cross-check")->check(CLI::Range(1L, 100000000L));

  auto* resolve = app.add_subcommand("resolve", "Hirzebruch-Jung string of a cyclic quotient singularity");
  int r_n = 0;
  int r_q = 0;
  resolve->add_option("n", r_n, "group order")->required();
  resolve->add_option("q", r_q, "weight")->required();

  auto* heights = app.add_subcommand("heights", "orbifold Euler and signature heights of a JSON orbifold");
  std::string heights_file;
  heights->add_option("file", heights_file, "orbifold JSON")->required()->check(CLI::ExistingFile);

  auto* dims = app.add_subcommand("dims", "dimension of automorphic forms of weight k");
  std::string group = "gamma";
  int weight = 2;
  std::string dataset_file;
  dims->add_option("--group", group, "gamma or gamma_tilde")->check(CLI::IsMember({"gamma", "gamma_tilde"}));
  dims->add_option("--weight", weight, "weight k >= 2")->check(CLI::Range(2, 40));
  dims->add_option("--dataset", dataset_file, "class dataset JSON instead of the derived one")->check(CLI::ExistingFile);

  auto* classify = app.add_subcommand("classify", "Kodaira dimension from invariants JSON");
  std::string classify_file;
  classify->add_option("file", classify_file, "invariants JSON")->required()->check(CLI::ExistingFile);

  auto* division = app.add_subcommand("division", "division test for the cyclic algebra");
  std::string alpha_text = "lambda/lambda_bar";
  division->add_option("--alpha", alpha_text, "alpha as an expression in lambda, lambda_bar, zeta");

  auto* signature = app.add_subcommand("signature", "signature of the hermitian form H_b");

  auto* report = app.add_subcommand("report", "run every check and print the verification report");
  std::string format = "json";
  report->add_option("--format", format, "json or md")->check(CLI::IsMember({"json", "md"}));
  report->add_option("--config", config_path, "configuration file")->check(CLI::ExistingFile);
  report->add_option("-o,--output", output_path, "write to a file instead of stdout");

  auto* dump = app.add_subcommand("export", "write a built-in fixture as JSON");
  std::string what;
  dump->add_option("what", what, "fixture name")
      ->required()
      ->check(CLI::IsMember({"gamma", "gamma_tilde", "x_gamma", "x_gamma_tilde", "fibration_gamma",
                             "fibration_gamma_tilde", "config"}));
  dump->add_option("-o,--output", output_path, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*volume) {
      fpp::Config cfg = config_from(config_path);
      fpp::VolumeInput v = fpp::default_volume_input();
      v.local_factors = cfg.local_factors;
      std::cout << (symbolic ? to_string(fpp::covolume_symbolic(v)) : to_string(fpp::covolume(v))) << "\n";
    } else if (*lvalue) {
      auto chi = fpp::DirichletCharacter::from_discriminant(l_disc);
      fpp::SymbolicReal exact = fpp::dirichlet_L_value(l_n, chi);
      fpp::SeriesEstimate s = fpp::l_series_oracle(l_n, chi, l_terms);
      std::cout << to_string(exact) << "\n"
                << "approx " << fpp::sr_to_float(exact, 128).to_decimal(20) << "\n"
                << "series " << fpp::FloatApprox{s.partial_sum, s.total_error()}.to_decimal(20) << " +/- "
                << std::scientific << std::setprecision(3) << s.total_error().get_d() << std::defaultfloat << " ("
                << s.terms << " terms)\n";
    } else if (*resolve) {
      fpp::HJChain chain = fpp::hj_expand(fpp::CyclicSingularity(r_n, r_q));
      std::cout << to_string(chain) << "\n";
    } else if (*heights) {
      fpp::OrbifoldSurface x = fpp::orbifold_from_json(fpp::read_json_file(heights_file));
      fpp::ResolvedInvariants r = fpp::resolve_invariants(x);
      std::cout << "euler_height " << to_string(fpp::euler_height(x)) << "\n"
                << "signature_height " << to_string(fpp::signature_height(x)) << "\n"
                << "resolved_euler " << to_string(r.euler) << "\n"
                << "resolved_signature " << to_string(r.signature) << "\n";
    } else if (*dims) {
      std::cout << fpp::dimension(dataset_for(group, dataset_file), weight) << "\n";
    } else if (*classify) {
      fpp::KodairaResult k = fpp::kodaira_classify(fpp::invariants_from_json(fpp::read_json_file(classify_file)));
      for (const auto& line : k.trace) std::cout << "  " << line << "\n";
      std::cout << "kappa " << fpp::kodaira_to_string(k.kappa) << (k.invariants.minimal ? " minimal" : "")
                << (fpp::is_fake_projective_plane(k.invariants, k.kappa) ? " fake-projective-plane" : "") << "\n";
    } else if (*division) {
      fpp::DivisionWitness w = fpp::is_division_algebra(fpp::parse_cyc_expression(alpha_text));
      for (const auto& s : w.steps) std::cout << "  " << s << "\n";
      std::cout << (w.is_division ? "division" : "not division") << "\n";
    } else if (*signature) {
      fpp::Signature s = fpp::signature(fpp::build_H_b(fpp::standard_b()));
      std::cout << s.negatives_first() << " (negatives,positives); " << s.standard_convention()
                << " (positives,negatives)\n";
    } else if (*report) {
      fpp::VerificationReport rep = fpp::run_all(config_from(config_path));
      write_output(format == "md" ? fpp::render_markdown(rep) : fpp::render_json(rep, utc_timestamp()), output_path);
      return rep.has_mismatch() ? kExitMismatch : 0;
    } else if (*dump) {
      fpp::Json j;
      if (what == "gamma") j = fpp::to_json(fpp::build_gamma_dataset());
      else if (what == "gamma_tilde") j = fpp::to_json(fpp::build_gamma_tilde_dataset());
      else if (what == "x_gamma") j = fpp::to_json(fpp::x_gamma());
      else if (what == "x_gamma_tilde") j = fpp::to_json(fpp::x_gamma_tilde());
      else if (what == "fibration_gamma") j = fpp::to_json(fpp::fibration_x_gamma());
      else if (what == "fibration_gamma_tilde") j = fpp::to_json(fpp::fibration_x_gamma_tilde());
      else j = fpp::default_config().canonical;
      write_output(j.dump(2) + "\n", output_path);
    }
  } catch (const fpp::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fpp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return 0;
}
