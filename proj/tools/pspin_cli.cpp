#include <pspin/commands.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <map>

using namespace pspin::cli;

int main(int argc, char** argv) {
  CLI::App app{"Spin refinements of GL_2n: classification, slopes, zeta supports, M_tau tables"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::map<std::string, Format> formats{{"table", Format::Table}, {"json", Format::Json}, {"csv", Format::Csv}};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "table, json or csv")->transform(CLI::CheckedTransformer(formats));
    sub->add_option("--bound", cfg.bound, "largest rank accepted")->capture_default_str();
  };
  auto rank = [&](CLI::App* sub) { sub->add_option("--n", cfg.n, "rank n of GL_2n"); };

  auto* classify = app.add_subcommand("classify", "stratify S_2n by optimal spin parabolic");
  rank(classify);
  classify->add_option("--threads", cfg.threads, "worker threads for the enumeration")->capture_default_str();
  common(classify);

  auto* info = app.add_subcommand("info", "spin data, alpha(U_r) and B-spin switching for one refinement");
  info->add_option("--sigma", cfg.sigmas, "refinement in one-line notation")->required();
  rank(info);
  common(info);

  auto* slopes = app.add_subcommand("slopes", "non-critical slope audit");
  slopes->add_option("--sigma", cfg.sigmas, "refinement (repeatable)");
  slopes->add_option("--lambda", cfg.lambda, "pure dominant weight, e.g. 12,1,-1,-12");
  slopes->add_option("--slopes", cfg.slopes, "declared slopes r=v, paired with --sigma (repeatable)");
  slopes->add_option("--profile", cfg.profile, "valuations v(theta_1),...,v(theta_2n)");
  slopes->add_option("--parabolic", cfg.parabolic, "spin parabolic (default B)");
  slopes->add_flag("--solve", cfg.solve, "solve the declared slopes jointly for a valuation profile");
  rank(slopes);
  common(slopes);

  auto* zeta = app.add_subcommand("zeta", "support verdict for the zeta integral at u t_P^beta");
  zeta->add_option("--parabolic", cfg.parabolic, "composition, e.g. 1,2,1");
  zeta->add_option("--beta", cfg.beta, "beta >= 1")->capture_default_str();
  rank(zeta);
  common(zeta);

  auto* mtau = app.add_subcommand("mtau", "M_tau expansion of the [w_n]' vector");
  mtau->add_option("--parabolic", cfg.parabolic, "spin parabolic inside Q (default Q)");
  rank(mtau);
  common(mtau);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ExitCode::Usage);
  }

  const std::map<CLI::App*, Command> commands{{classify, Command::Classify}, {info, Command::Info},
                                              {slopes, Command::Slopes},     {zeta, Command::Zeta},
                                              {mtau, Command::MTau}};
  cfg.command = commands.at(app.get_subcommands().front());
  const auto res = run(cfg);
  std::cout << res.out;
  if (!res.err.empty()) std::cerr << "error: " << res.err << "\n";
  return static_cast<int>(res.code);
}
