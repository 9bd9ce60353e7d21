#include "zdisc/zdisc.h"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <new>
#include <string>

#include "zdisc/kernels.hpp"
#include "zdisc/quantization.hpp"
#include "zdisc/su11.hpp"
#include "zdisc/verify.hpp"

using namespace zdisc;

struct zd_poly {
  std::vector<std::pair<std::pair<int, int>, cplx>> terms;
};
struct zd_rule {
  DiscQuadratureRule rule;
};
struct zd_observable {
  ObservableExpr expr;
};
struct zd_operator {
  OperatorMatrix op;
};
struct zd_report {
  bool pass;
  std::string json;
};

namespace {

thread_local std::string last_error;

zd_status map(ErrorCode c) {
  switch (c) {
    case ErrorCode::domain: return ZD_ERR_DOMAIN;
    case ErrorCode::overflow: return ZD_ERR_OVERFLOW;
    case ErrorCode::path: return ZD_ERR_PATH;
    case ErrorCode::parse: return ZD_ERR_PARSE;
    case ErrorCode::invalid_argument: return ZD_ERR_INVALID_ARGUMENT;
    case ErrorCode::convergence: return ZD_ERR_CONVERGENCE;
    case ErrorCode::cutoff: return ZD_ERR_CUTOFF;
    case ErrorCode::metadata_mismatch: return ZD_ERR_METADATA_MISMATCH;
    case ErrorCode::evaluation: return ZD_ERR_EVALUATION;
  }
  return ZD_ERR_INTERNAL;
}

zd_status set_error(zd_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
zd_status guarded(F&& body) {
  try {
    body();
    return ZD_OK;
  } catch (const Error& e) {
    return set_error(map(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(ZD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(ZD_ERR_INTERNAL, e.what());
  }
}

cplx in(zd_complex z) { return {z.re, z.im}; }
zd_complex out(cplx z) { return {z.real(), z.imag()}; }

#define ZD_REQUIRE(ptr)                                                           \
  do {                                                                            \
    if (!(ptr)) return set_error(ZD_ERR_INVALID_ARGUMENT, "null argument: " #ptr); \
  } while (0)

}  // namespace

extern "C" {

const char* zd_last_error(void) { return last_error.c_str(); }

const char* zd_status_name(zd_status s) {
  switch (s) {
    case ZD_OK: return "ok";
    case ZD_ERR_DOMAIN: return "domain";
    case ZD_ERR_OVERFLOW: return "overflow";
    case ZD_ERR_PATH: return "path";
    case ZD_ERR_PARSE: return "parse";
    case ZD_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case ZD_ERR_CONVERGENCE: return "convergence";
    case ZD_ERR_CUTOFF: return "cutoff";
    case ZD_ERR_METADATA_MISMATCH: return "metadata_mismatch";
    case ZD_ERR_EVALUATION: return "evaluation";
    case ZD_ERR_IO: return "io";
    case ZD_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

zd_status zd_parse_complex(const char* text, zd_complex* result) {
  ZD_REQUIRE(text);
  ZD_REQUIRE(result);
  return guarded([&] {
    const auto e = ObservableExpr::parse(text);
    if (e.degree() != 0) throw Error(ErrorCode::parse, std::string("not a complex constant: '") + text + "'");
    *result = out(e.evaluate(0.0));
  });
}

zd_status zd_poly_build(int m, int n, double alpha, zd_poly** result) {
  ZD_REQUIRE(result);
  return guarded([&] {
    auto p = std::make_unique<zd_poly>();
    const auto poly = build_zernike({m, n, alpha});
    for (const auto& [key, c] : poly.terms()) p->terms.push_back({key, c});
    *result = p.release();
  });
}

void zd_poly_free(zd_poly* p) { delete p; }

size_t zd_poly_term_count(const zd_poly* p) { return p ? p->terms.size() : 0; }

zd_status zd_poly_term(const zd_poly* p, size_t i, int* a, int* b, zd_complex* coefficient) {
  ZD_REQUIRE(p);
  if (i >= p->terms.size()) return set_error(ZD_ERR_INVALID_ARGUMENT, "zd_poly_term: index out of range");
  if (a) *a = p->terms[i].first.first;
  if (b) *b = p->terms[i].first.second;
  if (coefficient) *coefficient = out(p->terms[i].second);
  return ZD_OK;
}

zd_status zd_eval_poly(int m, int n, double alpha, zd_complex z, zd_eval_path path, zd_complex* result) {
  ZD_REQUIRE(result);
  return guarded([&] {
    const EvalPath p = path == ZD_PATH_K_SUM ? EvalPath::k_sum
                       : path == ZD_PATH_HYPERGEOMETRIC ? EvalPath::hypergeometric
                                                        : EvalPath::j_sum;
    *result = out(eval_zernike({m, n, alpha}, in(z), p));
  });
}

zd_status zd_normalization(int m, int n, double alpha, double* result) {
  ZD_REQUIRE(result);
  return guarded([&] {
    validate({m, n, alpha});
    *result = normalization(m, n, alpha);
  });
}

zd_status zd_kernel(int n, double alpha, zd_complex z, zd_complex w, zd_complex* value, zd_kernel_path* path) {
  ZD_REQUIRE(value);
  return guarded([&] {
    const auto k = evaluate_kernel(n, alpha, in(z), in(w));
    *value = out(k.value);
    if (path) *path = k.path == KernelPath::closed ? ZD_KERNEL_CLOSED : k.path == KernelPath::series ? ZD_KERNEL_SERIES : ZD_KERNEL_DIAGONAL;
  });
}

const char* zd_kernel_path_name(zd_kernel_path path) {
  return to_string(path == ZD_KERNEL_CLOSED ? KernelPath::closed : path == ZD_KERNEL_SERIES ? KernelPath::series : KernelPath::diagonal);
}

zd_status zd_rule_create(int n_rad, int n_ang, double alpha, zd_rule** result) {
  ZD_REQUIRE(result);
  return guarded([&] { *result = new zd_rule{disc_rule(n_rad, n_ang, alpha)}; });
}

void zd_rule_free(zd_rule* r) { delete r; }

size_t zd_rule_size(const zd_rule* r) { return r ? r->rule.size() : 0; }

int zd_rule_exact_degree(const zd_rule* r) { return r ? r->rule.exact_degree : -1; }

zd_status zd_rule_integrate(const zd_rule* r, const zd_observable* f, zd_complex* result) {
  ZD_REQUIRE(r);
  ZD_REQUIRE(f);
  ZD_REQUIRE(result);
  return guarded([&] { *result = out(integrate([&](cplx z) { return f->expr.evaluate(z); }, r->rule)); });
}

zd_status zd_observable_parse(const char* text, zd_observable** result, size_t* error_position) {
  ZD_REQUIRE(text);
  ZD_REQUIRE(result);
  try {
    *result = new zd_observable{ObservableExpr::parse(text)};
    return ZD_OK;
  } catch (const ParseError& e) {
    if (error_position) *error_position = e.position();
    return set_error(ZD_ERR_PARSE, e.what());
  } catch (const Error& e) {
    return set_error(map(e.code()), e.what());
  }
}

void zd_observable_free(zd_observable* f) { delete f; }

zd_status zd_observable_eval(const zd_observable* f, zd_complex z, zd_complex* result) {
  ZD_REQUIRE(f);
  ZD_REQUIRE(result);
  return guarded([&] { *result = out(f->expr.evaluate(in(z))); });
}

int zd_observable_degree(const zd_observable* f) { return f ? f->expr.degree() : -1; }

zd_status zd_observable_to_string(const zd_observable* f, char* buffer, size_t capacity, size_t* needed) {
  ZD_REQUIRE(f);
  const std::string s = f->expr.to_string();
  if (needed) *needed = s.size() + 1;
  if (!buffer || capacity < s.size() + 1) return set_error(ZD_ERR_INVALID_ARGUMENT, "zd_observable_to_string: buffer too small");
  std::memcpy(buffer, s.c_str(), s.size() + 1);
  return ZD_OK;
}

zd_status zd_quantize(const zd_observable* f, int n, double alpha, int M, zd_operator** result) {
  ZD_REQUIRE(f);
  ZD_REQUIRE(result);
  return guarded([&] { *result = new zd_operator{quantize_observable(f->expr, n, alpha, M)}; });
}

zd_status zd_ladder(int n, double alpha, int M, zd_operator** az, zd_operator** azbar) {
  ZD_REQUIRE(az);
  ZD_REQUIRE(azbar);
  return guarded([&] {
    auto l = ladder_matrices(n, alpha, M);
    auto a = std::make_unique<zd_operator>(zd_operator{std::move(l.az)});
    *azbar = new zd_operator{std::move(l.azbar)};
    *az = a.release();
  });
}

zd_status zd_commutator(const zd_operator* a, const zd_operator* b, zd_operator** result) {
  ZD_REQUIRE(a);
  ZD_REQUIRE(b);
  ZD_REQUIRE(result);
  return guarded([&] { *result = new zd_operator{commutator(a->op, b->op)}; });
}

void zd_operator_free(zd_operator* op) { delete op; }

int zd_operator_size(const zd_operator* op) { return op ? op->op.M : 0; }

zd_status zd_operator_entry(const zd_operator* op, int i, int j, zd_complex* result) {
  ZD_REQUIRE(op);
  ZD_REQUIRE(result);
  if (i < 0 || j < 0 || i >= op->op.M || j >= op->op.M) return set_error(ZD_ERR_INVALID_ARGUMENT, "zd_operator_entry: index out of range");
  *result = out(op->op.entries(i, j));
  return ZD_OK;
}

size_t zd_operator_warning_count(const zd_operator* op) { return op ? op->op.warnings.size() : 0; }

const char* zd_operator_warning(const zd_operator* op, size_t i) {
  if (!op || i >= op->op.warnings.size()) return nullptr;
  return op->op.warnings[i].c_str();
}

zd_status zd_operator_write_csv(const zd_operator* op, const char* path) {
  ZD_REQUIRE(op);
  ZD_REQUIRE(path);
  const bool to_stdout = std::strcmp(path, "-") == 0;
  std::FILE* f = to_stdout ? stdout : std::fopen(path, "w");
  if (!f) return set_error(ZD_ERR_IO, std::string("cannot open '") + path + "' for writing");
  const auto& m = op->op;
  std::fprintf(f, "# n=%d alpha=%.17g M=%d provenance=%s\n", m.n, m.alpha, m.M, to_string(m.provenance));
  for (int i = 0; i < m.M; ++i) {
    for (int j = 0; j < m.M; ++j)
      std::fprintf(f, "%s%.17g,%.17g", j ? "," : "", m.entries(i, j).real(), m.entries(i, j).imag());
    std::fputc('\n', f);
  }
  const bool failed = std::ferror(f) != 0;
  if (!to_stdout) std::fclose(f);
  else std::fflush(f);
  return failed ? set_error(ZD_ERR_IO, std::string("write failed: ") + path) : ZD_OK;
}

zd_status zd_lower_symbol(const zd_operator* op, zd_complex z, zd_complex* result, double* tail_mass) {
  ZD_REQUIRE(op);
  ZD_REQUIRE(result);
  return guarded([&] {
    const auto s = lower_symbol(op->op, in(z));
    *result = out(s.value);
    if (tail_mass) *tail_mass = s.tail_mass;
  });
}

zd_status zd_berezin(const zd_observable* f, zd_complex z, int n, double alpha, zd_complex* result, double* accuracy) {
  ZD_REQUIRE(f);
  ZD_REQUIRE(result);
  return guarded([&] {
    const auto b = berezin_transform(f->expr, in(z), n, alpha);
    *result = out(b.value);
    if (accuracy) *accuracy = b.accuracy_estimate;
  });
}

zd_status zd_verify(const char* suite, double alpha, int max_m, int threads, zd_report** result) {
  ZD_REQUIRE(suite);
  ZD_REQUIRE(result);
  return guarded([&] {
    VerifyOptions o;
    o.alpha = alpha;
    o.max_m = max_m;
    o.threads = threads > 0 ? threads : 1;
    const Report r = run_suite(suite, o);
    *result = new zd_report{r.pass(), r.to_json().dump(2)};
  });
}

zd_status zd_compare_su11(double eta, int n, double alpha, int M, zd_report** result) {
  ZD_REQUIRE(result);
  return guarded([&] {
    validate_eta(eta);
    const auto c = compare_with_zernike(n, alpha, eta, M);
    Report r;
    r.suite = "compare-su11";
    const nlohmann::json params = {{"eta", eta}, {"n", n}, {"alpha", alpha}, {"M", M}};
    r.add("compare.zernike_bounded_decaying", params, c.zernike_bounded_decaying ? 0.0 : 1.0, 0.0);
    r.add("compare.su11_linear", params, c.su11_linear ? 0.0 : 1.0, 0.0);
    r.add("compare.not_related_by_parameters", params, c.not_related_by_parameters ? 0.0 : 1.0, 0.0);
    auto j = r.to_json();
    j["comparison"] = {{"zernike_commutator_diagonal", c.zernike_diagonal},
                       {"su11_commutator_diagonal", c.su11_diagonal},
                       {"su11_slope", c.su11_slope},
                       {"verdict", c.not_related_by_parameters ? "not related by parameter adjustment" : "inconclusive"}};
    *result = new zd_report{r.pass(), j.dump(2)};
  });
}

int zd_report_pass(const zd_report* r) { return r && r->pass ? 1 : 0; }

const char* zd_report_json(const zd_report* r) { return r ? r->json.c_str() : ""; }

zd_status zd_report_write(const zd_report* r, const char* path) {
  ZD_REQUIRE(r);
  ZD_REQUIRE(path);
  if (std::strcmp(path, "-") == 0) {
    std::fwrite(r->json.data(), 1, r->json.size(), stdout);
    std::fputc('\n', stdout);
    return ZD_OK;
  }
  std::ofstream f(path);
  if (!f) return set_error(ZD_ERR_IO, std::string("cannot open '") + path + "' for writing");
  f << r->json << '\n';
  return f ? ZD_OK : set_error(ZD_ERR_IO, std::string("write failed: ") + path);
}

void zd_report_free(zd_report* r) { delete r; }

}  // extern "C"
