// hamflow: enumerate Hamiltonian flow diagram atlases, analyze their
// degeneration posets, and run the internal consistency battery.

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hamflow/canonical.hpp"
#include "hamflow/io.hpp"

namespace {

using namespace hamflow;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitLimit = 3;
constexpr int kExitIo = 4;
constexpr int kExitSchema = 5;

std::pair<int, int> parse_centers(const std::string& s) {
  size_t comma = s.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("--centers expects i_cw,i_ccw");
  try {
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw std::invalid_argument("--centers expects two integers");
  }
}

int write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  f.flush();
  if (!f) {
    std::fprintf(stderr, "error: cannot write %s\n", path.c_str());
    return kExitIo;
  }
  return kExitOk;
}

Coefficients coeff_of(const std::string& s) {
  if (s == "q") return Coefficients::Q;
  if (s == "z2") return Coefficients::Z2;
  return Coefficients::Z;
}

int cmd_enumerate(const std::string& centers, const std::string& surface,
                  int max_codim, bool merge_mirrors, const std::string& out) {
  EnumRequest req;
  auto [cw, ccw] = parse_centers(centers);
  req.centers_cw = cw;
  req.centers_ccw = ccw;
  req.surface = surface == "sphere" ? Surface::Sphere : Surface::Disk;
  req.max_codim = max_codim;
  req.merge_mirrors = merge_mirrors;

  Atlas atlas = enumerate_classes(req);
  if (atlas.classes.empty()) {
    std::printf("no classes\n");
  } else {
    std::map<int, int> counts;
    for (const EnumClass& c : atlas.classes) ++counts[c.codim];
    std::printf("codim");
    for (auto [codim, count] : counts) std::printf(" %d:%d", codim, count);
    std::printf("\n");
  }
  if (!out.empty()) return write_file(out, atlas_json(atlas));
  return kExitOk;
}

int cmd_analyze(const std::string& atlas_path, const std::string& coefficients,
                bool paper_orientation, const std::string& out,
                const std::string& dot) {
  std::ifstream f(atlas_path, std::ios::binary);
  if (!f) {
    std::fprintf(stderr, "error: cannot read %s\n", atlas_path.c_str());
    return kExitIo;
  }
  std::ostringstream buf;
  buf << f.rdbuf();

  Atlas atlas = atlas_from_json(buf.str());
  AnalysisReport report = analyze_atlas(atlas, coeff_of(coefficients));

  for (size_t i = 0; i < report.components.size(); ++i) {
    const ComponentReport& c = report.components[i];
    std::printf("component %zu: %zu elements, core %zu, contractible=%s, core %s",
                i, c.members.size(), c.core_points.size(),
                c.contractible ? "true" : "false",
                homology_brief(c.core_homology).c_str());
    if (c.sphere_match >= 0)
      std::printf(", sphere(n=%d)=true", c.sphere_match);
    else
      std::printf(", sphere=none");
    std::printf("\n");
  }

  if (!out.empty())
    if (int rc = write_file(out, report_json(report))) return rc;
  if (!dot.empty()) {
    std::vector<std::string> labels;
    for (const EnumClass& c : atlas.classes) labels.push_back(code_hex(c.code));
    if (int rc = write_file(dot, hasse_dot(report.poset, labels,
                                           paper_orientation)))
      return rc;
  }
  return kExitOk;
}

int cmd_selftest(uint64_t seed, int fault) {
  std::vector<std::string> fails = selftest(seed, fault);
  if (fails.empty()) {
    std::printf("selftest: ok (seed %llu)\n",
                static_cast<unsigned long long>(seed));
    return kExitOk;
  }
  for (const std::string& f : fails)
    std::fprintf(stderr, "selftest: FAIL %s\n", f.c_str());
  return kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonian flow atlases on the sphere and the disk"};
  app.require_subcommand(1);

  std::string centers, surface = "disk", out, dot;
  int max_codim = -1;
  bool merge_mirrors = false;
  CLI::App* en = app.add_subcommand("enumerate",
                                    "enumerate equivalence classes");
  en->add_option("--centers", centers, "center counts i_cw,i_ccw")->required();
  en->add_option("--surface", surface, "sphere or disk")
      ->check(CLI::IsMember({"sphere", "disk"}));
  en->add_option("--max-codim", max_codim, "truncate strata (-1 = all)");
  en->add_flag("--merge-mirrors", merge_mirrors,
               "identify mirror-image classes");
  en->add_option("--out", out, "write atlas JSON here");

  std::string atlas_path, coefficients = "z", aout, adot;
  bool paper_orientation = false;
  CLI::App* an = app.add_subcommand("analyze", "analyze an atlas file");
  an->add_option("atlas", atlas_path, "atlas JSON file")->required();
  an->add_option("--coefficients", coefficients, "z, q, or z2")
      ->check(CLI::IsMember({"z", "q", "z2"}));
  an->add_flag("--paper-orientation", paper_orientation,
               "orient Hasse edges from degenerate to generic");
  an->add_option("--out", aout, "write analysis JSON here");
  an->add_option("--dot", adot, "write the Hasse diagram in DOT here");

  uint64_t seed = 20260816;
  int fault = 0;
  CLI::App* st = app.add_subcommand("selftest",
                                    "run the internal consistency battery");
  st->add_option("--seed", seed, "RNG seed for randomized properties");
  st->add_option("--fault", fault, "inject a known defect (negative test)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (en->parsed())
      return cmd_enumerate(centers, surface, max_codim, merge_mirrors, out);
    if (an->parsed())
      return cmd_analyze(atlas_path, coefficients, paper_orientation, aout,
                         adot);
    return cmd_selftest(seed, fault);
  } catch (const LimitExceeded& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitLimit;
  } catch (const SchemaError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitSchema;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  }
}
