#include <CLI11.hpp>

#include <iostream>

#include "bf/commands.hpp"
#include "bf/error.hpp"
#include "bf/report.hpp"

using namespace bf;

int main(int argc, char** argv) {
  CLI::App app{"bfill: obstruction computations for filling 3-manifolds"};
  app.set_version_flag("--version", std::string("bfill ") + tool_version());
  app.require_subcommand(1);

  HomologyArgs ha;
  auto* hom = app.add_subcommand("homology", "group homology with coefficients");
  hom->add_option("--group", ha.group, "group file or shorthand (trivial, z, z2, z2xz2, ...)")->required();
  hom->add_option("--coeff", ha.coeff, "z, z-twisted or z2");
  hom->add_option("--deg", ha.deg, "degree")->required();
  hom->add_option("--depth", ha.depth, "resolution depth (default deg+1)");
  hom->add_option("--w1", ha.w1, "orientation character: 0, x1+x2 or t=1,s=1");
  hom->add_option("--strategy", ha.strategy, "auto, periodic, tensor or bar");

  std::string xi_arg;
  auto* e2 = app.add_subcommand("e2", "E2 page of the James spectral sequence");
  e2->add_option("--xi", xi_arg, "normal 1-type file")->required();

  int row = 0;
  std::string line_arg = "q1";
  auto* d2 = app.add_subcommand("d2", "d2 differential as a GF(2) matrix");
  d2->add_option("--xi", xi_arg, "normal 1-type file")->required();
  d2->add_option("--row", row, "source degree r")->required();
  d2->add_option("--line", line_arg, "q0 or q1");

  FiltrationArgs fa;
  auto* filt = app.add_subcommand("filtration", "filtration quotients of the degree-3 bordism group");
  filt->add_option("--xi", fa.xi, "normal 1-type file")->required();
  filt->add_option("--d3-image", fa.d3_image, "file with d3 image classes, or 'zero'");
  filt->add_option("--registry", fa.registry, "directory of closed-manifold records");
  filt->add_flag("--assume-d3-30-zero", fa.assume_d3_30_zero, "declare d3 out of E3(3,0) zero");

  ObstructArgs oa;
  auto* obs = app.add_subcommand("obstruct", "staged obstruction evaluation");
  obs->add_option("--xi", oa.xi, "normal 1-type file")->required();
  obs->add_option("--y", oa.y, "three-manifold or closed-manifold record")->required();
  obs->add_option("--filling", oa.filling, "filling record");
  obs->add_option("--registry", oa.registry, "directory of closed-manifold records");
  obs->add_option("--stage", oa.stage, "force evaluation up to primary, secondary or tertiary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    json out;
    if (*hom) out = cmd_homology(ha);
    else if (*e2) out = cmd_e2(xi_arg);
    else if (*d2) out = cmd_d2(xi_arg, row, line_arg);
    else if (*filt) out = cmd_filtration(fa);
    else out = cmd_obstruct(oa);
    std::cout << out.dump(2) << "\n";
  } catch (const Error& e) {
    std::cerr << "bfill: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "bfill: internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
