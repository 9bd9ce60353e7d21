#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "zdisc/zdisc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct Failure {
  int code;
};

int exit_code_for(zd_status s) {
  switch (s) {
    case ZD_ERR_PARSE:
    case ZD_ERR_IO: return kExitUsage;
    default: return kExitNumeric;
  }
}

void check(zd_status s) {
  if (s == ZD_OK) return;
  std::fprintf(stderr, "error (%s): %s\n", zd_status_name(s), zd_last_error());
  throw Failure{exit_code_for(s)};
}

zd_complex complex_arg(const std::string& text) {
  zd_complex z{};
  check(zd_parse_complex(text.c_str(), &z));
  return z;
}

zd_observable* observable_arg(const std::string& text) {
  zd_observable* f = nullptr;
  size_t pos = 0;
  const zd_status s = zd_observable_parse(text.c_str(), &f, &pos);
  if (s == ZD_ERR_PARSE) {
    std::fprintf(stderr, "error (parse): %s\n  %s\n  %*s^\n", zd_last_error(), text.c_str(), static_cast<int>(pos), "");
    throw Failure{kExitUsage};
  }
  check(s);
  return f;
}

void print_complex(const char* label, zd_complex z) { std::printf("%s %.17g %.17g\n", label, z.re, z.im); }

int thread_cap() {
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("ZERNIKE_DISC_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) threads = std::min(threads, cap);
  }
  return threads;
}

int emit_report(zd_report* r, const std::string& out) {
  const zd_status s = zd_report_write(r, out.empty() ? "-" : out.c_str());
  const int pass = zd_report_pass(r);
  zd_report_free(r);
  check(s);
  return pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zernike polynomials on the disc: kernels, coherent states and quantization"};
  app.require_subcommand(1);

  std::string suite, out;
  double alpha = 0.0;
  int max_m = 10;
  auto* verify = app.add_subcommand("verify", "run a verification suite and write a JSON report");
  verify->add_option("suite", suite, "polynomials | kernels | quadrature | quantization | su11 | all")
      ->required()
      ->check(CLI::IsMember({"polynomials", "kernels", "quadrature", "quantization", "su11", "all"}));
  verify->add_option("--alpha", alpha, "weight parameter (> -1)");
  verify->add_option("--max-m", max_m, "largest index m in coefficient sweeps");
  verify->add_option("--out", out, "report file (default stdout)");

  int m = 0, n = 0;
  std::string za, wa, path = "j_sum";
  auto* eval_poly = app.add_subcommand("eval-poly", "evaluate P_{m,n}^alpha at z");
  eval_poly->add_option("m", m)->required();
  eval_poly->add_option("n", n)->required();
  eval_poly->add_option("alpha", alpha)->required();
  eval_poly->add_option("z", za)->required();
  eval_poly->add_option("--path", path)->check(CLI::IsMember({"j_sum", "k_sum", "hypergeometric"}));

  auto* kernel = app.add_subcommand("kernel", "reproducing kernel E_n^alpha(z, conj(w))");
  kernel->add_option("n", n)->required();
  kernel->add_option("alpha", alpha)->required();
  kernel->add_option("z", za)->required();
  kernel->add_option("w", wa)->required();

  std::string expr, csv;
  int cutoff = 0;
  auto* quantize = app.add_subcommand("quantize", "matrix of A_f on the first M basis states");
  quantize->add_option("--f", expr, "observable in z, zbar, r2")->required();
  quantize->add_option("--n", n)->required();
  quantize->add_option("--alpha", alpha)->required();
  quantize->add_option("--M", cutoff)->required();
  quantize->add_option("--csv", csv, "CSV file, '-' for stdout (default)");

  auto* berezin = app.add_subcommand("berezin", "Berezin transform B_n^alpha[f](z)");
  berezin->add_option("--f", expr)->required();
  berezin->add_option("--z", za)->required();
  berezin->add_option("--n", n)->required();
  berezin->add_option("--alpha", alpha)->required();

  double eta = 1.0;
  int size = 16;
  auto* compare = app.add_subcommand("compare-su11", "commutator spectra against the SU(1,1) reference");
  compare->add_option("--eta", eta)->required();
  compare->add_option("--n", n)->required();
  compare->add_option("--alpha", alpha)->required();
  compare->add_option("--M", size);
  compare->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) {
      zd_report* r = nullptr;
      check(zd_verify(suite.c_str(), alpha, max_m, thread_cap(), &r));
      return emit_report(r, out);
    }
    if (*eval_poly) {
      const zd_eval_path p = path == "k_sum" ? ZD_PATH_K_SUM : path == "hypergeometric" ? ZD_PATH_HYPERGEOMETRIC : ZD_PATH_J_SUM;
      zd_complex v{};
      check(zd_eval_poly(m, n, alpha, complex_arg(za), p, &v));
      print_complex("value", v);
      return kExitOk;
    }
    if (*kernel) {
      zd_complex v{};
      zd_kernel_path p{};
      check(zd_kernel(n, alpha, complex_arg(za), complex_arg(wa), &v, &p));
      print_complex("value", v);
      std::printf("path %s\n", zd_kernel_path_name(p));
      return kExitOk;
    }
    if (*quantize) {
      zd_observable* f = observable_arg(expr);
      zd_operator* op = nullptr;
      const zd_status s = zd_quantize(f, n, alpha, cutoff, &op);
      zd_observable_free(f);
      check(s);
      for (size_t i = 0; i < zd_operator_warning_count(op); ++i) std::fprintf(stderr, "warning: %s\n", zd_operator_warning(op, i));
      const zd_status w = zd_operator_write_csv(op, csv.empty() ? "-" : csv.c_str());
      zd_operator_free(op);
      check(w);
      return kExitOk;
    }
    if (*berezin) {
      zd_observable* f = observable_arg(expr);
      zd_complex v{};
      double accuracy = 0.0;
      const zd_status s = zd_berezin(f, complex_arg(za), n, alpha, &v, &accuracy);
      zd_observable_free(f);
      check(s);
      print_complex("value", v);
      std::printf("accuracy %.17g\n", accuracy);
      return kExitOk;
    }
    if (*compare) {
      zd_report* r = nullptr;
      check(zd_compare_su11(eta, n, alpha, size, &r));
      return emit_report(r, out);
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return kExitUsage;
}
