#include "lpsd.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <random>
#include <span>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <json.hpp>

#include "lpsd/cones.hpp"
#include "lpsd/io.hpp"
#include "lpsd/nls.hpp"
#include "lpsd/quartic.hpp"
#include "lpsd/realize.hpp"
#include "lpsd/spectra.hpp"
#include "lpsd/symmat.hpp"

using nlohmann::json;

struct lpsd_matrix {
  lpsd::MatrixValue value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

lpsd_status fail(lpsd_status st, const std::string& msg) {
  g_last_error = msg;
  return st;
}

template <class Fn>
lpsd_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const lpsd::ParseError& e) {
    return fail(LPSD_ERR_PARSE, e.what());
  } catch (const lpsd::DomainError& e) {
    return fail(LPSD_ERR_DOMAIN, e.what());
  } catch (const lpsd::FalsificationError& e) {
    return fail(LPSD_FALSIFIED, e.what());
  } catch (const lpsd::NumericError& e) {
    return fail(LPSD_ERR_NUMERIC, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(LPSD_ERR_DOMAIN, e.what());
  } catch (const std::exception& e) {
    return fail(LPSD_ERR_NUMERIC, e.what());
  }
}

const lpsd::SymMatrix& as_float(const lpsd_matrix* m, lpsd::SymMatrix& storage) {
  if (const auto* f = std::get_if<lpsd::SymMatrix>(&m->value)) return *f;
  storage = lpsd::to_float(std::get<lpsd::RatMatrix>(m->value));
  return storage;
}

lpsd_verdict to_c(lpsd::Verdict v) {
  switch (v) {
    case lpsd::Verdict::Inside: return LPSD_INSIDE;
    case lpsd::Verdict::Boundary: return LPSD_BOUNDARY;
    default: return LPSD_OUTSIDE;
  }
}

lpsd_status emit_report(const lpsd::MembershipReport& rep, lpsd_verdict* verdict,
                        char** report_json) {
  if (verdict) *verdict = to_c(rep.verdict);
  if (report_json) *report_json = dup_string(lpsd::report_to_json(rep));
  return LPSD_OK;
}

json matrix_json_value(const lpsd::SymMatrix& m) {
  return json::parse(lpsd::matrix_to_json(m));
}

// Verification block shared by the realize entry points: spectrum residual
// against the requested eigenvalues plus the cone verdict.
json verify_block(const lpsd::SymMatrix& m, std::span<const double> x, int k) {
  lpsd::Spectrum sp = lpsd::eigenvalues_sym(m);
  std::vector<double> want(x.begin(), x.end());
  std::sort(want.begin(), want.end());
  double resid = 0;
  for (int i = 0; i < m.dim(); ++i) resid = std::max(resid, std::abs(sp.values[i] - want[i]));
  lpsd::MembershipReport rep = lpsd::in_s_nk(m, k, 1e-8);
  return json{{"eigenvalue_residual", resid},
              {"membership_verdict", lpsd::to_string(rep.verdict)},
              {"membership_margin", rep.margin}};
}

json realization_json(const lpsd::RealizationResult& r, std::span<const double> x, int k) {
  return json{{"matrix", matrix_json_value(r.matrix)},
              {"shift", r.shift},
              {"route", lpsd::to_string(r.route)},
              {"verification", verify_block(r.matrix, x, k)}};
}

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double norm_value(lpsd_norm norm, double p, const lpsd::Spectrum& sp) {
  switch (norm) {
    case LPSD_NORM_TRACE: {
      double t = 0;
      for (double v : sp.values) t += v;
      return t;
    }
    case LPSD_NORM_FROBENIUS: {
      double s = 0;
      for (double v : sp.values) s += v * v;
      return std::sqrt(s);
    }
    default: {
      double s = 0;
      for (double v : sp.values) s += std::pow(std::abs(v), p);
      return std::pow(s, 1.0 / p);
    }
  }
}

}  // namespace

extern "C" {

const char* lpsd_last_error(void) { return g_last_error.c_str(); }

void lpsd_string_free(char* s) { delete[] s; }

void lpsd_matrix_free(lpsd_matrix* m) { delete m; }

lpsd_status lpsd_matrix_parse(const char* text, lpsd_matrix** out) {
  if (!text || !out) return fail(LPSD_ERR_DOMAIN, "null argument");
  return guarded([&] {
    *out = new lpsd_matrix{lpsd::parse_matrix(text)};
    return LPSD_OK;
  });
}

lpsd_status lpsd_matrix_dim(const lpsd_matrix* m, int* n) {
  if (!m || !n) return fail(LPSD_ERR_DOMAIN, "null argument");
  *n = std::visit([](const auto& v) { return v.dim(); }, m->value);
  return LPSD_OK;
}

lpsd_status lpsd_matrix_is_exact(const lpsd_matrix* m, int* exact) {
  if (!m || !exact) return fail(LPSD_ERR_DOMAIN, "null argument");
  *exact = std::holds_alternative<lpsd::RatMatrix>(m->value) ? 1 : 0;
  return LPSD_OK;
}

lpsd_status lpsd_matrix_to_json(const lpsd_matrix* m, char** out) {
  if (!m || !out) return fail(LPSD_ERR_DOMAIN, "null argument");
  return guarded([&] {
    *out = dup_string(lpsd::matrix_to_json(m->value));
    return LPSD_OK;
  });
}

lpsd_status lpsd_gram_g(int n, int k, int exact, lpsd_matrix** out) {
  if (!out) return fail(LPSD_ERR_DOMAIN, "null argument");
  return guarded([&] {
    if (exact)
      *out = new lpsd_matrix{lpsd::gram_g<lpsd::Rational>(n, k)};
    else
      *out = new lpsd_matrix{lpsd::gram_g<double>(n, k)};
    return LPSD_OK;
  });
}

lpsd_status lpsd_eigenvalues(const lpsd_matrix* m, double* values) {
  if (!m || !values) return fail(LPSD_ERR_DOMAIN, "null argument");
  return guarded([&] {
    lpsd::SymMatrix tmp;
    const lpsd::SymMatrix& f = as_float(m, tmp);
    lpsd::Spectrum sp = lpsd::eigenvalues_sym(f);
    std::copy(sp.values.begin(), sp.values.end(), values);
    return LPSD_OK;
  });
}

lpsd_status lpsd_membership_s_nk(const lpsd_matrix* m, int k, double tol,
                                 int full_certificates, lpsd_verdict* verdict,
                                 char** report_json) {
  if (!m) return fail(LPSD_ERR_DOMAIN, "null argument");
  return guarded([&] {
    lpsd::SymMatrix tmp;
    const lpsd::SymMatrix& f = as_float(m, tmp);
    return emit_report(lpsd::in_s_nk(f, k, tol, full_certificates != 0), verdict, report_json);
  });
}

lpsd_status lpsd_membership_h_e(const double* x, int n, int k, double tol,
                                lpsd_verdict* verdict, char** report_json) {
  if (!x || n < 1) return fail(LPSD_ERR_DOMAIN, "null or empty vector");
  return guarded([&] {
    return emit_report(lpsd::in_h_e(std::span<const double>(x, n), k, tol), verdict, report_json);
  });
}

lpsd_status lpsd_membership_h_c(const lpsd_matrix* m, int k, double tol,
                                lpsd_verdict* verdict, char** report_json) {
  if (!m) return fail(LPSD_ERR_DOMAIN, "null argument");
  return guarded([&] {
    lpsd::SymMatrix tmp;
    const lpsd::SymMatrix& f = as_float(m, tmp);
    return emit_report(lpsd::in_h_c(f, k, tol), verdict, report_json);
  });
}

lpsd_status lpsd_min_eig_bound(lpsd_norm norm, double p, int n, int k, double* out) {
  if (!out) return fail(LPSD_ERR_DOMAIN, "null argument");
  return guarded([&] {
    lpsd::BoundSpec spec;
    spec.norm = norm == LPSD_NORM_TRACE     ? lpsd::NormKind::Trace
                : norm == LPSD_NORM_FROBENIUS ? lpsd::NormKind::Frobenius
                                              : lpsd::NormKind::Schatten;
    spec.p = p;
    spec.n = n;
    spec.k = k;
    *out = lpsd::min_eig_bound(spec);
    return LPSD_OK;
  });
}

lpsd_status lpsd_frobenius_dist_bound(int n, int k, double* out) {
  if (!out) return fail(LPSD_ERR_DOMAIN, "null argument");
  return guarded([&] {
    *out = lpsd::frobenius_dist_bound(n, k);
    return LPSD_OK;
  });
}

lpsd_status lpsd_frobenius_dist_to_psd(const lpsd_matrix* m, double* out) {
  if (!m || !out) return fail(LPSD_ERR_DOMAIN, "null argument");
  return guarded([&] {
    lpsd::SymMatrix tmp;
    const lpsd::SymMatrix& f = as_float(m, tmp);
    *out = lpsd::frobenius_dist_to_psd(f);
    return LPSD_OK;
  });
}

lpsd_status lpsd_bound_verify(lpsd_norm norm, double p, int n, int k, int dist,
                              int samples, uint64_t seed, int threads,
                              double* worst) {
  if (!worst) return fail(LPSD_ERR_DOMAIN, "null argument");
  if (samples < 1) return fail(LPSD_ERR_DOMAIN, "samples must be >= 1");
  return guarded([&] {
    (void)lpsd::gram_g<double>(n, k);  // validates (n, k) up front
    int nthreads = threads > 0 ? threads
                               : std::max(1u, std::thread::hardware_concurrency());
    nthreads = std::min(nthreads, samples);
    // Per-sample generators keyed by index keep the result independent of
    // the thread count.
    std::vector<double> per(samples);
    auto work = [&](int lo, int hi) {
      for (int i = lo; i < hi; ++i) {
        std::mt19937_64 rng(splitmix64(seed ^ (0x9e3779b97f4a7c15ULL * (i + 1))));
        lpsd::SymMatrix m = lpsd::sample_s_nk(n, k, rng);
        if (dist) {
          double fro = lpsd::frobenius_norm(m);
          per[i] = fro > 1e-12 ? lpsd::frobenius_dist_to_psd(m) / fro : 0.0;
        } else {
          lpsd::Spectrum sp = lpsd::eigenvalues_sym(m);
          double nv = norm_value(norm, p, sp);
          per[i] = nv > 1e-12 ? sp.values.front() / nv : 0.0;
        }
      }
    };
    if (nthreads == 1) {
      work(0, samples);
    } else {
      std::vector<std::thread> pool;
      int chunk = (samples + nthreads - 1) / nthreads;
      for (int t = 0; t < nthreads; ++t) {
        int lo = t * chunk, hi = std::min(samples, lo + chunk);
        if (lo < hi) pool.emplace_back(work, lo, hi);
      }
      for (auto& th : pool) th.join();
    }
    // Worst case: smallest normalized eigenvalue, or largest normalized
    // distance to the PSD cone.
    *worst = dist ? *std::max_element(per.begin(), per.end())
                  : *std::min_element(per.begin(), per.end());
    return LPSD_OK;
  });
}

lpsd_status lpsd_realize_k1(const double* x, int n, double tol, char** out) {
  if (!x || n < 1 || !out) return fail(LPSD_ERR_DOMAIN, "null or empty vector");
  return guarded([&] {
    std::span<const double> xs(x, n);
    lpsd::RealizationResult r = lpsd::realize_k1(xs, tol);
    *out = dup_string(realization_json(r, xs, 1).dump());
    return LPSD_OK;
  });
}

lpsd_status lpsd_realize_h_nminus1(const double* x, int n, double tol, char** out) {
  if (!x || n < 2 || !out) return fail(LPSD_ERR_DOMAIN, "vector must have length >= 2");
  return guarded([&] {
    std::span<const double> xs(x, n);
    lpsd::RealizationResult r = lpsd::realize_h_nminus1(xs, tol);
    *out = dup_string(realization_json(r, xs, n - 1).dump());
    return LPSD_OK;
  });
}

lpsd_status lpsd_realize_quartic(double a0, double a1, double a2, double a3,
                                 char** out) {
  if (!out) return fail(LPSD_ERR_DOMAIN, "null argument");
  return guarded([&] {
    lpsd::QuarticPoly p{a0, a1, a2, a3};
    if (!lpsd::has_good_roots(p))
      throw lpsd::DomainError("quartic does not have good roots");
    auto cert = lpsd::find_almost_nonneg_k(p);
    if (!cert)
      throw lpsd::FalsificationError(
          "good-rooted quartic admitted no almost-nonnegative-root certificate");
    lpsd::SymMatrix m = lpsd::realize_quartic_as_dgd(p);
    auto roots = lpsd::real_roots(p);
    json j{{"matrix", matrix_json_value(m)},
           {"certificate",
            {{"k", cert->k},
             {"roots_q", cert->roots_q},
             {"d", cert->d},
             {"residual", cert->residual}}}};
    if (roots) j["verification"] = verify_block(m, *roots, 2);
    *out = dup_string(j.dump());
    return LPSD_OK;
  });
}

lpsd_status lpsd_classify_nls(const lpsd_matrix* m, int k, double tol,
                              int* nls, char** out) {
  if (!m) return fail(LPSD_ERR_DOMAIN, "null argument");
  return guarded([&] {
    bool result;
    bool locally_singular;
    json j;
    if (const auto* x = std::get_if<lpsd::RatMatrix>(&m->value)) {
      locally_singular = lpsd::is_locally_singular(*x, k);
      result = locally_singular && lpsd::determinant(*x) != 0;
      j["mode"] = "exact";
    } else {
      const auto& f = std::get<lpsd::SymMatrix>(m->value);
      locally_singular = lpsd::is_locally_singular(f, k, tol);
      result = lpsd::is_nls(f, k, tol);
      j["mode"] = "float";
    }
    j["k"] = k;
    j["locally_singular"] = locally_singular;
    j["nls"] = result;
    if (result) {
      lpsd::SymMatrix tmp;
      const lpsd::SymMatrix& f = as_float(m, tmp);
      lpsd::CongruenceWitness w = lpsd::diag_congruent_to_g(f, k, tol);
      json wj{{"found", w.found}};
      if (w.found)
        wj["d"] = w.d;
      else
        wj["reason"] = w.reason;
      j["witness"] = std::move(wj);
    }
    if (nls) *nls = result ? 1 : 0;
    if (out) *out = dup_string(j.dump());
    return LPSD_OK;
  });
}

lpsd_status lpsd_enumerate_sign_cases_42(char** out) {
  return guarded([&] {
    std::vector<lpsd::SignCase> cases = lpsd::enumerate_sign_cases_42();
    int singular = 0, congruent = 0;
    json arr = json::array();
    for (const lpsd::SignCase& c : cases) {
      bool is_g = c.label == lpsd::SignCase::Label::CongruentToG;
      (is_g ? congruent : singular)++;
      arr.push_back({{"id", c.id},
                     {"signs", c.signs},
                     {"label", is_g ? "congruent_to_g" : "singular"}});
    }
    json j{{"cases", std::move(arr)},
           {"singular", singular},
           {"congruent_to_g", congruent}};
    if (out) *out = dup_string(j.dump());
    return LPSD_OK;
  });
}

lpsd_status lpsd_diag_congruent_to_g(const lpsd_matrix* m, int k, double tol,
                                     int* found, char** out) {
  if (!m) return fail(LPSD_ERR_DOMAIN, "null argument");
  return guarded([&] {
    lpsd::SymMatrix tmp;
    const lpsd::SymMatrix& f = as_float(m, tmp);
    lpsd::CongruenceWitness w = lpsd::diag_congruent_to_g(f, k, tol);
    if (found) *found = w.found ? 1 : 0;
    if (out) {
      json j{{"found", w.found}};
      if (w.found)
        j["d"] = w.d;
      else
        j["reason"] = w.reason;
      *out = dup_string(j.dump());
    }
    return LPSD_OK;
  });
}

lpsd_status lpsd_verify_structure(int n, int k, int samples, uint64_t seed,
                                  char** out) {
  if (samples < 1) return fail(LPSD_ERR_DOMAIN, "samples must be >= 1");
  return guarded([&] {
    lpsd::StructureReport rep = lpsd::verify_structure_theorem(n, k, samples, seed);
    json failures = json::array();
    for (const lpsd::StructureSampleResult& r : rep.results)
      if (!r.passed)
        failures.push_back({{"index", r.index}, {"reason", r.reason}, {"d", r.d}});
    json j{{"n", rep.n},
           {"k", rep.k},
           {"samples", rep.samples},
           {"passed", rep.passed},
           {"falsified", rep.falsified},
           {"failures", std::move(failures)}};
    if (out) *out = dup_string(j.dump());
    if (rep.falsified)
      return fail(LPSD_FALSIFIED, "structure theorem verification found a counterexample");
    return LPSD_OK;
  });
}

}  // extern "C"
