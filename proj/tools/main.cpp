// airystable: evaluate higher-order/fractional Airy functions, pseudo-process
// densities, asymmetric stable densities, and run the verification suites.
// Exit codes: 0 ok, 2 invalid parameters, 3 numerical convergence failure,
// 4 verification failure.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "airystable/airy.hpp"
#include "airystable/density.hpp"
#include "airystable/oracles.hpp"
#include "airystable/rng.hpp"
#include "airystable/stable.hpp"
#include "airystable/types.hpp"
#include "airystable/verify.hpp"
#include "airystable/wright.hpp"

namespace {

using namespace airystable;

constexpr int kExitOk = 0;
constexpr int kExitParams = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitVerifyFailed = 4;

// Rows are streamed to a temp file and renamed on success, so a failed
// command never leaves a partial output file behind.
class CsvSink {
 public:
  explicit CsvSink(const std::string& path) : path_(path) {
    if (path_.empty()) {
      out_ = stdout;
    } else {
      tmp_ = path_ + ".tmp";
      out_ = std::fopen(tmp_.c_str(), "w");
      if (!out_) throw std::runtime_error("cannot open output file: " + path_);
    }
  }

  ~CsvSink() {
    if (out_ && out_ != stdout) {
      std::fclose(out_);
      std::remove(tmp_.c_str());  // only reached when commit() was not
    }
  }

  void row(const std::string& line) {
    std::fputs(line.c_str(), out_);
    std::fputc('\n', out_);
    ++rows_;
  }

  long commit() {
    if (out_ != stdout) {
      std::fclose(out_);
      out_ = nullptr;
      std::filesystem::rename(tmp_, path_);
    } else {
      std::fflush(out_);
      out_ = nullptr;
    }
    return rows_;
  }

 private:
  std::string path_, tmp_;
  std::FILE* out_ = nullptr;
  long rows_ = 0;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct GridOpts {
  double x_min = 0.0, x_max = 0.0, step = 1.0;

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--x-min", x_min, "grid start")->required();
    cmd->add_option("--x-max", x_max, "grid end")->required();
    cmd->add_option("--step", step, "grid step")->required();
  }

  std::vector<double> points() const {
    if (!(step > 0.0)) throw parameter_error("grid: step must be > 0");
    if (!(x_min <= x_max))
      throw parameter_error("grid: requires x_min <= x_max");
    const double n = std::floor((x_max - x_min) / step + 1e-9);
    if (n > 1e7) throw parameter_error("grid: more than 1e7 points");
    std::vector<double> xs;
    xs.reserve(static_cast<size_t>(n) + 1);
    for (long i = 0; i <= static_cast<long>(n); ++i)
      xs.push_back(x_min + i * step);
    return xs;
  }
};

int run(int argc, char** argv) {
  CLI::App app{"higher-order/fractional Airy functions, pseudo-process "
               "densities and asymmetric stable laws"};
  app.require_subcommand(1);

  // ---- airy ----
  auto* airy_cmd = app.add_subcommand(
      "airy", "tabulate Ai_{2n+1} (--n) or Ai_alpha (--alpha) on a grid");
  std::optional<double> airy_alpha;
  std::optional<int> airy_n;
  GridOpts airy_grid;
  std::string airy_out;
  double airy_tol = 0.0;
  airy_cmd->add_option("--alpha", airy_alpha, "fractional order alpha > 1");
  airy_cmd->add_option("--n", airy_n, "odd order index (order 2n+1)");
  airy_grid.add_flags(airy_cmd);
  airy_cmd->add_option("--tol", airy_tol,
                       "max acceptable abs_err_bound per row (0 = off)");
  airy_cmd->add_option("--out", airy_out, "output CSV path (default stdout)");

  // ---- density ----
  auto* dens_cmd = app.add_subcommand(
      "density",
      "tabulate the pseudo-density u (odd/fractional) or the subordinated "
      "density");
  std::optional<double> dens_alpha;
  std::optional<int> dens_n;
  double dens_theta = 1.0, dens_t = 1.0;
  GridOpts dens_grid;
  std::string dens_out;
  dens_cmd->add_option("--alpha", dens_alpha, "spatial order alpha > 1");
  dens_cmd->add_option("--n", dens_n, "odd order index (order 2n+1)");
  dens_cmd->add_option("--theta", dens_theta,
                       "subordinator exponent in (0,1], 1 = none");
  dens_cmd->add_option("--t", dens_t, "time horizon t > 0");
  dens_grid.add_flags(dens_cmd);
  double dens_tol = 0.0;
  dens_cmd->add_option("--tol", dens_tol,
                       "max acceptable abs_err_bound per row (0 = off)");
  dens_cmd->add_option("--out", dens_out, "output CSV path (default stdout)");

  // ---- stable ----
  auto* stable_cmd = app.add_subcommand(
      "stable", "tabulate the asymmetric stable density (series)");
  double st_nu = 1.5, st_beta = 0.5, st_sigma = 1.0, st_mu = 0.0,
         st_t = 1.0;
  GridOpts st_grid;
  std::string st_out;
  stable_cmd->add_option("--nu", st_nu, "stability exponent in (1,2)")
      ->required();
  stable_cmd->add_option("--beta", st_beta, "skewness, 0 < |beta| < 1")
      ->required();
  stable_cmd->add_option("--sigma", st_sigma, "scale > 0");
  stable_cmd->add_option("--mu", st_mu, "location");
  stable_cmd->add_option("--t", st_t, "time horizon t > 0");
  st_grid.add_flags(stable_cmd);
  double st_tol = 0.0;
  stable_cmd->add_option("--tol", st_tol,
                         "max acceptable abs_err_bound per row (0 = off)");
  stable_cmd->add_option("--out", st_out, "output CSV path (default stdout)");

  // ---- cauchy ----
  auto* cauchy_cmd = app.add_subcommand(
      "cauchy", "tabulate the Cauchy density of the theta = 1/alpha case");
  double cy_alpha = 2.0, cy_t = 1.0;
  GridOpts cy_grid;
  std::string cy_out;
  cauchy_cmd->add_option("--alpha", cy_alpha, "order alpha > 1")->required();
  cauchy_cmd->add_option("--t", cy_t, "time horizon t > 0");
  cy_grid.add_flags(cauchy_cmd);
  cauchy_cmd->add_option("--out", cy_out, "output CSV path (default stdout)");

  // ---- sample ----
  auto* sample_cmd =
      app.add_subcommand("sample", "draw subordinator or stable variates");
  std::string sample_kind;
  sample_cmd
      ->add_option("kind", sample_kind, "subordinator | stable")
      ->required();
  double sm_theta = 0.5, sm_nu = 1.5, sm_beta = 0.5, sm_sigma = 1.0,
         sm_mu = 0.0, sm_t = 1.0;
  long long sm_n = 10;
  std::uint64_t sm_seed = 0;
  std::string sm_out;
  sample_cmd->add_option("--theta", sm_theta, "subordinator exponent (0,1)");
  sample_cmd->add_option("--nu", sm_nu, "stable exponent (0,2], != 1");
  sample_cmd->add_option("--beta", sm_beta, "stable skewness [-1,1]");
  sample_cmd->add_option("--sigma", sm_sigma, "stable scale > 0");
  sample_cmd->add_option("--mu", sm_mu, "stable location");
  sample_cmd->add_option("--t", sm_t, "time horizon t > 0");
  sample_cmd->add_option("--n", sm_n, "number of draws")->required();
  sample_cmd->add_option("--seed", sm_seed, "RNG seed")->required();
  sample_cmd->add_option("--out", sm_out, "output CSV path (default stdout)");

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand(
      "verify", "run a verification suite (airy|density|bridge|mc|pde|all)");
  std::string verify_suite_name;
  verify_cmd->add_option("suite", verify_suite_name, "suite name")
      ->required();
  std::string verify_out;
  verify_cmd->add_option("--out", verify_out,
                         "output CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitParams;
  }

  try {
    if (airy_cmd->parsed()) {
      if (airy_alpha.has_value() == airy_n.has_value())
        throw parameter_error("airy: give exactly one of --alpha or --n");
      const auto xs = airy_grid.points();
      AirySeries series(airy_n ? OrderSpec::odd(*airy_n)
                               : OrderSpec::fractional(*airy_alpha));
      CsvSink sink(airy_out);
      sink.row("x,value,abs_err_bound,terms");
      for (double x : xs) {
        const EvalResult r = series.eval(x);
        if (airy_tol > 0.0 && r.err_bound > airy_tol)
          throw convergence_error("airy: err_bound above --tol", r);
        sink.row(num(x) + "," + num(r.value) + "," + num(r.err_bound) + "," +
                 std::to_string(r.terms));
      }
      std::fprintf(stderr, "airy: wrote %ld rows\n", sink.commit() - 1);
      return kExitOk;
    }

    if (dens_cmd->parsed()) {
      if (dens_alpha.has_value() == dens_n.has_value())
        throw parameter_error("density: give exactly one of --alpha or --n");
      const double alpha = dens_n ? double(2 * *dens_n + 1) : *dens_alpha;
      const SubordinationParams params{alpha, dens_theta};
      validate(params);
      if (params.alpha * params.theta <= 1.0 && params.theta < 1.0)
        throw parameter_error(
            "density: requires alpha*theta > 1 (series condition)");
      const auto xs = dens_grid.points();
      SubordinatedSeries series(params);
      CsvSink sink(dens_out);
      sink.row("x,density,abs_err_bound,terms");
      for (double x : xs) {
        const EvalResult r = series.eval(x, dens_t);
        if (dens_tol > 0.0 && r.err_bound > dens_tol)
          throw convergence_error("density: err_bound above --tol", r);
        sink.row(num(x) + "," + num(r.value) + "," + num(r.err_bound) + "," +
                 std::to_string(r.terms));
      }
      std::fprintf(stderr, "density: wrote %ld rows\n", sink.commit() - 1);
      return kExitOk;
    }

    if (stable_cmd->parsed()) {
      const StableParams params{st_nu, st_beta, st_sigma, st_mu};
      StablePdf pdf(params, st_t);  // validates, including the nu = 1 route
      const SubordinationParams sp = inverse_params(st_nu, std::fabs(st_beta));
      const double sigma0 = subordinated_scale(sp.theta, st_nu, st_t);
      std::fprintf(stderr,
                   "stable: mapped alpha=%.12g theta=%.12g sigma0=%.12g\n",
                   sp.alpha, sp.theta, sigma0);
      const auto xs = st_grid.points();
      CsvSink sink(st_out);
      sink.row("x,pdf");
      for (double x : xs) {
        const EvalResult r = pdf.eval(x);
        if (st_tol > 0.0 && r.err_bound > st_tol)
          throw convergence_error("stable: err_bound above --tol", r);
        sink.row(num(x) + "," + num(r.value));
      }
      std::fprintf(stderr, "stable: wrote %ld rows\n", sink.commit() - 1);
      return kExitOk;
    }

    if (cauchy_cmd->parsed()) {
      if (!(cy_alpha > 1.0)) throw parameter_error("cauchy: alpha > 1");
      const auto xs = cy_grid.points();
      CsvSink sink(cy_out);
      sink.row("x,pdf");
      for (double x : xs)
        sink.row(num(x) + "," + num(cauchy_pdf(cy_alpha, cy_t, x)));
      std::fprintf(stderr, "cauchy: wrote %ld rows\n", sink.commit() - 1);
      return kExitOk;
    }

    if (sample_cmd->parsed()) {
      if (sm_n < 1) throw parameter_error("sample: --n must be >= 1");
      const bool subord = sample_kind == "subordinator";
      if (!subord && sample_kind != "stable")
        throw parameter_error("sample: kind must be subordinator or stable");
      // validate parameters before any output is emitted
      RandomStream probe(sm_seed);
      const StableParams p{sm_nu, sm_beta, sm_sigma, sm_mu};
      if (subord)
        kanter_subordinator_sample(sm_theta, sm_t, probe);
      else
        cms_stable_sample(p, sm_t, probe);
      RandomStream rng(sm_seed);
      CsvSink sink(sm_out);
      sink.row("index,value");
      for (long long i = 0; i < sm_n; ++i) {
        const double v = subord
                             ? kanter_subordinator_sample(sm_theta, sm_t, rng)
                             : cms_stable_sample(p, sm_t, rng);
        sink.row(std::to_string(i) + "," + num(v));
      }
      std::fprintf(stderr, "sample: wrote %ld rows\n", sink.commit() - 1);
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      if (!is_verify_suite(verify_suite_name))
        throw parameter_error("verify: unknown suite '" + verify_suite_name +
                              "'");
      const auto rows = verify_suite(verify_suite_name);
      CsvSink sink(verify_out);
      sink.row("check_id,target,actual,tolerance,pass");
      bool all_pass = true;
      for (const CheckRow& r : rows) {
        all_pass = all_pass && r.pass;
        sink.row(r.id + "," + num(r.target) + "," + num(r.actual) + "," +
                 num(r.tolerance) + "," + (r.pass ? "1" : "0"));
      }
      sink.commit();
      std::fprintf(stderr, "verify %s: %zu checks, %s\n",
                   verify_suite_name.c_str(), rows.size(),
                   all_pass ? "all passed" : "FAILURES");
      return all_pass ? kExitOk : kExitVerifyFailed;
    }
  } catch (const convergence_error& e) {
    std::fprintf(stderr, "convergence failure: %s\n", e.what());
    return kExitConvergence;
  } catch (const parameter_error& e) {
    std::fprintf(stderr, "invalid parameters: %s\n", e.what());
    return kExitParams;
  } catch (const domain_error& e) {
    std::fprintf(stderr, "invalid parameters: %s\n", e.what());
    return kExitParams;
  } catch (const config_error& e) {
    std::fprintf(stderr, "invalid configuration: %s\n", e.what());
    return kExitParams;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConvergence;
  }
  return kExitParams;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
