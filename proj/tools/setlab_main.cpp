#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "setlab/cohomology/io.hpp"
#include "setlab/report/commands.hpp"

namespace {

using namespace setlab;
using report::Options;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::uint64_t seed_from_env() {
  const char* s = std::getenv("SETLAB_SEED");
  if (!s || !*s) return 0;
  char* end = nullptr;
  const auto v = std::strtoull(s, &end, 10);
  if (*end) throw report::UsageError(std::string("SETLAB_SEED is not a number: ") + s);
  return v;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw report::UsageError("cannot open " + path + " for writing");
  f << text;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"setlab: finite-size checks of a symmetry-enriched toric code"};
  app.require_subcommand(1);

  std::string cells, patch, out;
  bool json_out = false, timing = false;
  std::optional<std::uint64_t> seed;
  Options opt;

  auto common = [&](CLI::App* sub, bool lattice) {
    if (lattice) {
      auto* c = sub->add_option("--cells", cells, "torus of AxB unit cells (default 2x2)");
      auto* p = sub->add_option("--patch", patch, "open patch of WxH unit cells");
      c->excludes(p);
    }
    sub->add_option("--out", out, "also write the JSON report (or data) to this file");
    sub->add_flag("--json", json_out, "print the JSON report instead of text");
    sub->add_flag("--timing", timing, "include runtime_ms per check");
    sub->add_option("--seed", seed, "RNG seed (default: SETLAB_SEED or 0)");
  };

  auto* algebra = app.add_subcommand("verify-algebra", "operator algebra property suite");
  common(algebra, false);
  auto* model = app.add_subcommand("verify-model", "symbolic model identities on a lattice");
  common(model, true);
  auto* omega = app.add_subcommand("omega", "omega tables of the anyons");
  common(omega, true);
  omega->add_option("--path", opt.path, "bond steps of the X string from the default start, e.g. ZX");
  auto* cohom = app.add_subcommand("cohomology", "cocycle and class checks, H^2 with trivial action");
  common(cohom, true);
  cohom->add_option("--group", opt.group, "z<n>, z2z2 or AxB products of those");
  cohom->add_option("--coeff", opt.coeff, "coefficient modulus n of Z_n");
  cohom->add_flag("--h2", opt.h2, "compute H^2(G, Z_n)");
  cohom->add_option("files", opt.files, "2-cochain JSON files")->check(CLI::ExistingFile);
  auto* checkdata = app.add_subcommand("checkdata", "validate a category data file");
  common(checkdata, false);
  checkdata->add_option("file", opt.files, "data JSON file")->required()->check(CLI::ExistingFile);
  auto* orac = app.add_subcommand("oracle", "dense state-vector checks");
  common(orac, true);
  orac->add_option("--max-qubits", opt.max_qubits, "refuse states above this many qubits")
      ->check(CLI::Range(1, static_cast<int>(oracle::kHardMaxQubits)));
  orac->add_option("--dump", opt.dump, "write the vacuum state to this binary file");
  auto* exporter = app.add_subcommand("export-data", "write the model's category data file");
  common(exporter, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    opt.seed = seed ? *seed : seed_from_env();
    if (!cells.empty()) opt.lattice = report::LatticeSpec::torus(cells);
    if (!patch.empty()) opt.lattice = report::LatticeSpec::patch(patch);

    if (exporter->parsed()) {
      const std::string text = report::cmd_export_data(opt).dump(2) + "\n";
      if (!out.empty()) write_text(out, text);
      else std::cout << text;
      return 0;
    }

    report::Report rep("none");
    if (algebra->parsed()) rep = report::cmd_verify_algebra(opt);
    else if (model->parsed()) rep = report::cmd_verify_model(opt);
    else if (omega->parsed()) rep = report::cmd_omega(opt);
    else if (cohom->parsed()) rep = report::cmd_cohomology(opt);
    else if (checkdata->parsed()) rep = report::cmd_checkdata(opt);
    else if (orac->parsed()) rep = report::cmd_oracle(opt);

    const std::string json_text = rep.to_json(timing).dump(2) + "\n";
    if (!out.empty()) write_text(out, json_text);
    std::cout << (json_out ? json_text : rep.to_text(timing));
    return rep.all_pass() ? 0 : kExitFail;
  } catch (const report::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
  } catch (const cohomology::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
  } catch (const oracle::QubitLimitExceeded& e) {
    std::cerr << "refused: " << e.what() << " (raise --max-qubits)\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}
