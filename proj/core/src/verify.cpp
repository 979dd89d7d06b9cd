#include "e2fock/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "e2fock/e2group.hpp"
#include "e2fock/fock.hpp"
#include "e2fock/repk.hpp"
#include "e2fock/specfun.hpp"

namespace e2fock {

namespace {

using identities::formula::addition;

namespace eq {
constexpr const char* unitarity = "U*(g) U(g) = 1";
constexpr const char* representation = "U(g1) U(g2) = c U(g2 g1), |c| = 1";
constexpr const char* dim_monotone = "||U*U - 1|| on the leading dim/2 block decreases with dim";
constexpr const char* intertwining_z = "U(g) z U*(g) = e^(i phi) z + r e^(i psi)";
constexpr const char* intertwining_zs = "U(g) z* U*(g) = e^(-i phi) z* + r e^(-i psi)";
constexpr const char* vacuum = "U(g)|0> = e^(-r^2/2) exp(-r e^(i(psi-phi)) z*)|0>";
constexpr const char* displaced = "U(g)|n> = (g z*)^n/sqrt(n!) U(g)|0>";
constexpr const char* kummer = "(n+b) Phi(-n-1,b;c) - (b+2n-c) Phi(-n,b;c) + n Phi(-n+1,b;c) = 0";
constexpr const char* kummer_series = "Phi(-n,b;c) = sum_j (-n)_j/(b)_j c^j/j!";
constexpr const char* routes =
    "<m|U|n> via 2F0(-m,-n;-1/r^2) = <m|U|n> via Phi(-min,1+|n-m|;r^2)";
constexpr const char* laguerre_bridge =
    "Phi(-zeta,1+k;c) = zeta! k!/(zeta+k)! L^k_zeta(c)";
constexpr const char* casimir = "p p* D^lambda_k = lambda^2 D^lambda_k";
constexpr const char* casimir_alt = "p* p D^lambda_k = lambda^2 D^lambda_k";
constexpr const char* grading = "h D^lambda_k = k D^lambda_k";
constexpr const char* adjoint_p = "(p F, G) = (F, p* G), p* = -pbar";
constexpr const char* adjoint_h = "(h F, G) = (F, h G)";
constexpr const char* trace = "(F, G) = tr(F* G)";
constexpr const char* infinitesimal = "(T(g_eps) F - F)/eps = p_s F + O(eps)";
constexpr const char* diag_growth = "(D^lambda_k, D^lambda_k) truncated at zmax increases with zmax";
constexpr const char* offdiag_bound =
    "|(D^lambda_k, D^lambda'_k)| past zmax=100 <= running max up to zmax=100";
constexpr const char* limit_monotone = "error decreases along the limit sequence";
}  // namespace eq


// ---- grid access -------------------------------------------------------------

std::vector<double> reals(const RunConfig& c, const std::string& key, std::vector<double> def) {
  auto it = c.grid.find(key);
  if (it == c.grid.end() || it->second.empty()) return def;
  for (double v : it->second) {
    if (!std::isfinite(v)) throw UsageError("--" + key + ": values must be finite");
  }
  return it->second;
}

std::vector<int> ints(const RunConfig& c, const std::string& key, std::vector<int> def) {
  auto it = c.grid.find(key);
  if (it == c.grid.end() || it->second.empty()) return def;
  std::vector<int> out;
  for (double v : it->second) {
    if (!std::isfinite(v) || v != std::round(v) || std::abs(v) > 1e8) {
      throw UsageError("--" + key + ": expected integers");
    }
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::vector<int> range(int a, int b) {
  std::vector<int> out;
  for (int i = a; i <= b; ++i) out.push_back(i);
  return out;
}

double tolerance(const RunConfig& c, const std::string& name, double def) {
  auto it = c.tol_overrides.find(name);
  return it == c.tol_overrides.end() ? def : it->second;
}

std::string fmt(double v) { return format_double(v); }

// ---- task execution ----------------------------------------------------------

struct Task {
  std::string name;
  std::string equation;
  std::vector<Param> params;
  double tolerance = 0.0;
  std::function<CheckReport()> run;
};

using Tasks = std::vector<Task>;

CheckReport execute(const Task& t) {
  try {
    return t.run();
  } catch (const std::exception& e) {
    CheckReport r =
        CheckReport::error(t.name, t.equation, t.params, std::string("error: ") + e.what());
    r.tolerance = t.tolerance;
    return r;
  }
}

std::vector<CheckReport> execute_all(const Tasks& tasks, int threads) {
  std::vector<CheckReport> out(tasks.size());
  const int workers = std::clamp(threads, 1, std::max(1, static_cast<int>(tasks.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = execute(tasks[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < tasks.size(); i = next++) out[i] = execute(tasks[i]);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

// Adds a task whose body returns (residual, detail); name/equation/params are shared
// between the success and the error record.
void add(Tasks& tasks, const RunConfig& c, std::string name, const char* equation,
         std::vector<Param> params, double default_tol,
         std::function<std::pair<double, std::string>()> body) {
  const double tol = tolerance(c, name, default_tol);
  Task t{name, equation, params, tol, nullptr};
  t.run = [name, equation, params, tol, body = std::move(body)] {
    auto [residual, detail] = body();
    return CheckReport::make(name, equation, params, residual, tol, std::move(detail));
  };
  tasks.push_back(std::move(t));
}

// Adds a task that produces a complete report (identities module checks).
void add_report(Tasks& tasks, const RunConfig& c, std::string name, const char* equation,
                std::vector<Param> params, std::function<CheckReport(double)> body,
                double default_tol) {
  const double tol = tolerance(c, name, default_tol);
  Task t{name, equation, params, tol, nullptr};
  t.run = [tol, body = std::move(body)] { return body(tol); };
  tasks.push_back(std::move(t));
}

// Count of steps in `v` that fail to decrease; values below `floor` count as converged.
double decrease_violations(const std::vector<double>& v, double floor = 0.0) {
  double bad = 0.0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] < v[i - 1]) && !(v[i] <= floor && v[i - 1] <= floor)) bad += 1.0;
  }
  return bad;
}

std::string join(const std::vector<double>& v) {
  std::string out;
  for (double x : v) out += (out.empty() ? "" : ",") + fmt(x);
  return out;
}

// ---- random finite-support elements --------------------------------------------

// Uniform double in [-1, 1) from the raw 64-bit stream, identical on every platform.
double uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
}

AlgebraFunction random_function(std::mt19937_64& rng, int terms, int max_winding, int zmax) {
  AlgebraFunction f;
  for (int t = 0; t < terms; ++t) {
    const int w = static_cast<int>(rng() % static_cast<std::uint64_t>(2 * max_winding + 1)) -
                  max_winding;
    const int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(zmax + 1));
    std::vector<cplx> c(len);
    for (auto& v : c) {
      const double re = uniform(rng);
      v = cplx(re, uniform(rng));
    }
    f += AlgebraFunction::monomial(w, std::move(c));
  }
  return f;
}

// ---- suites ------------------------------------------------------------------

double unitarity_defect(const GroupElement& g, int dim, int block) {
  const FockMatrix u = u_matrix(g, dim);
  const FockMatrix d = u.adjoint() * u - FockMatrix::Identity(dim, dim);
  return fock::block_norm(d, block);
}

std::vector<Param> gparams(double r, double psi, double phi, int dim) {
  return {{"r", r}, {"psi", psi}, {"phi", phi}, {"dim", std::int64_t{dim}}};
}

void suite_unitarity(Tasks& tasks, const RunConfig& c) {
  const int dim = effective_dim(c);
  for (double r : reals(c, "r", {0.5, 1.0, 1.5, 2.0}))
    for (double psi : reals(c, "psi", {0.7}))
      for (double phi : reals(c, "phi", {0.3})) {
        add(tasks, c, "unitarity", eq::unitarity, gparams(r, psi, phi, dim), 1e-8, [=] {
          const int s = fock::safe_block(r, dim);
          return std::pair{unitarity_defect(GroupElement(r, psi, phi), dim, s),
                           "frobenius on safe block " + std::to_string(s)};
        });
        add(tasks, c, "representation", eq::representation, gparams(r, psi, phi, dim), 1e-8,
            [=] {
              const GroupElement g1(0.5 * r, psi, phi);
              const GroupElement g2(0.5 * r, 1.0 - psi, phi - 0.5);
              const FockMatrix a = u_matrix(g1, dim) * u_matrix(g2, dim);
              const FockMatrix b = u_matrix(compose(g2, g1), dim);
              const int s = fock::safe_block(r, dim);
              const cplx overlap =
                  (b.topLeftCorner(s, s).adjoint() * a.topLeftCorner(s, s)).trace();
              const cplx phase = overlap / std::abs(overlap);
              return std::pair{fock::block_norm(a - phase * b, s),
                               "global phase arg " + fmt(std::arg(phase)) + "; safe block " +
                                   std::to_string(s)};
            });
        add(tasks, c, "unitarity-dim-monotone", eq::dim_monotone,
            {{"r", r}, {"psi", psi}, {"phi", phi}}, 0.0, [=] {
              std::vector<double> d;
              for (int n : {32, 64, 128}) d.push_back(unitarity_defect(GroupElement(r, psi, phi), n, n / 2));
              return std::pair{decrease_violations(d, 1e-12),
                               "defects at dim 32,64,128: " + join(d)};
            });
      }
}

void suite_intertwining(Tasks& tasks, const RunConfig& c) {
  const int dim = effective_dim(c);
  for (double r : reals(c, "r", {0.5, 1.0, 1.5, 2.0}))
    for (double psi : reals(c, "psi", {0.7}))
      for (double phi : reals(c, "phi", {0.3})) {
        const auto params = gparams(r, psi, phi, dim);
        for (bool star : {false, true}) {
          add(tasks, c, star ? "intertwining-zstar" : "intertwining-z",
              star ? eq::intertwining_zs : eq::intertwining_z, params, 1e-8, [=] {
                const GroupElement g(r, psi, phi);
                const FockMatrix u = u_matrix(g, dim);
                const FockMatrix z = star ? fock::creator(dim) : fock::annihilator(dim);
                const auto act = act_on_generator(g);
                const cplx alpha = star ? std::conj(act.alpha) : act.alpha;
                const cplx beta = star ? std::conj(act.beta) : act.beta;
                const FockMatrix expect =
                    alpha * z + beta * FockMatrix::Identity(dim, dim);
                const int s = fock::safe_block(r, dim);
                return std::pair{fock::block_norm(u * z * u.adjoint() - expect, s),
                                 "safe block " + std::to_string(s)};
              });
        }
        add(tasks, c, "displaced-vacuum", eq::vacuum, params, 1e-10, [=] {
          const GroupElement g(r, psi, phi);
          const FockVector diff = u_matrix(g, dim).col(0) - fock::displaced_vacuum(g, dim);
          return std::pair{diff.norm(), std::string("full column")};
        });
        add(tasks, c, "displaced-basis", eq::displaced, params, 1e-8, [=] {
          const GroupElement g(r, psi, phi);
          const FockMatrix u = u_matrix(g, dim);
          const int s = fock::safe_block(r, dim);
          const int top = std::min(s, dim - 5);
          double worst = 0.0;
          for (int n = 0; n < top; ++n) {
            const FockVector diff = u.col(n) - fock::displaced_basis(g, dim, n);
            worst = std::max(worst, diff.head(s).norm());
          }
          return std::pair{worst, "n < " + std::to_string(top) + ", rows < " + std::to_string(s)};
        });
      }
}

void suite_recurrence(Tasks& tasks, const RunConfig& c) {
  const int zmax = ints(c, "zmax", {200}).front();
  for (int k : ints(c, "k", range(0, 20)))
    for (double cc : reals(c, "c", {0.25, 1.0, 4.0, 16.0})) {
      const std::vector<Param> params{{"k", std::int64_t{k}}, {"c", cc},
                                      {"zmax", std::int64_t{zmax}}};
      add(tasks, c, "kummer-recurrence", eq::kummer, params, 1e-10, [=] {
        const int b = 1 + k;
        double worst = 0.0;
        for (int n = 1; n < zmax; ++n) {
          const double t1 = (n + b) * specfun::kummer_phi(n + 1, b, cc);
          const double t2 = (b + 2.0 * n - cc) * specfun::kummer_phi(n, b, cc);
          const double t3 = n * specfun::kummer_phi(n - 1, b, cc);
          const double scale = std::abs(t1) + std::abs(t2) + std::abs(t3);
          if (scale > 0.0) worst = std::max(worst, std::abs(t1 - t2 + t3) / scale);
        }
        return std::pair{worst, std::string("relative to sum of term magnitudes")};
      });
      add(tasks, c, "kummer-series", eq::kummer_series, params, 1e-10, [=] {
        // Alternating series in long double, exact enough for n <= 30.
        const int b = 1 + k;
        double worst = 0.0;
        for (int n = 0; n <= std::min(zmax, 30); ++n) {
          long double term = 1.0L, sum = 1.0L, mass = 1.0L;
          for (int j = 0; j < n; ++j) {
            term *= -static_cast<long double>(n - j) * cc / ((b + j) * (j + 1.0L));
            sum += term;
            mass += std::abs(term);
          }
          const double v = specfun::kummer_phi(n, b, cc);
          worst = std::max(worst, static_cast<double>(std::abs(v - sum) / mass));
        }
        return std::pair{worst, std::string("n <= 30, relative to series mass")};
      });
    }
  for (double r : reals(c, "r", {0.25, 0.5, 1.0, 2.0, 4.0})) {
    add(tasks, c, "matrix-element-routes", eq::routes,
        {{"r", r}, {"psi", 0.4}, {"phi", -0.9}, {"nmax", std::int64_t{25}}}, 1e-10, [=] {
          const GroupElement g(r, 0.4, -0.9);
          double worst = 0.0;
          for (int m = 0; m <= 25; ++m)
            for (int n = 0; n <= 25; ++n) {
              const cplx a = u_matrix_element(g, m, n);
              const cplx b = u_matrix_element_hyp2f0(g, m, n);
              // Magnitude of the alternating 2F0 sum: the same polynomial at +1/r^2.
              const double mass =
                  std::exp((n + m) * std::log(r) - 0.5 * r * r -
                           0.5 * (specfun::log_factorial(n) + specfun::log_factorial(m))) *
                  specfun::hyp2f0_poly(m, n, 1.0 / (r * r));
              worst = std::max(worst, std::abs(a - b) / mass);
            }
          return std::pair{worst, std::string("m, n <= 25, relative to 2F0 term mass")};
        });
  }
  for (double lambda : reals(c, "lambda", {0.5, 2.0, 8.0}))
    for (int k : {0, 3, 20}) {
      add(tasks, c, "laguerre-bridge", eq::laguerre_bridge,
          {{"lambda", lambda}, {"k", std::int64_t{k}}, {"zmax", std::int64_t{zmax}}}, 1e-11, [=] {
            const auto a = basis_radial(lambda, k, zmax);
            const auto b = basis_radial_laguerre(lambda, k, zmax);
            double worst = 0.0;
            double peak = 0.0;
            for (const auto& v : a) peak = std::max(peak, std::abs(v));
            for (std::size_t i = 0; i < a.size(); ++i) {
              const double scale = std::max(std::abs(a[i]), 1e-3 * peak);
              worst = std::max(worst, std::abs(a[i] - b[i]) / scale);
            }
            return std::pair{worst, std::string("relative, floored at 1e-3 of the peak")};
          });
    }
}

void suite_eigen(Tasks& tasks, const RunConfig& c) {
  const int zmax = ints(c, "zmax", {200}).front();
  for (double lambda : reals(c, "lambda", {0.5, 1.0, 2.0, 4.0, 8.0}))
    for (int k : ints(c, "k", {-20, -7, -1, 0, 1, 2, 7, 20})) {
      const std::vector<Param> params{
          {"lambda", lambda}, {"k", std::int64_t{k}}, {"zmax", std::int64_t{zmax}}};
      // One computation feeds three records; the residuals are cheap to recompute.
      const auto residuals = [=] { return eigen_residuals(IrrepLabel(lambda, k), zmax); };
      add(tasks, c, "casimir", eq::casimir, params, 1e-10, [=] {
        return std::pair{residuals().casimir,
                         std::string("ordering p p*; zeta < zmax; phase ") +
                             kBasisPhaseConvention};
      });
      add(tasks, c, "casimir-alt", eq::casimir_alt, params, 1e-10, [=] {
        return std::pair{residuals().casimir_alt,
                         std::string("ordering p* p; identical to p p* since p, pbar commute")};
      });
      add(tasks, c, "grading", eq::grading, params, 0.0, [=] {
        return std::pair{residuals().grading, std::string("exact integer winding")};
      });
    }
}

void suite_lie_algebra(Tasks& tasks, const RunConfig& c) {
  const int dim = effective_dim(c);
  const int samples = ints(c, "samples", {3}).front();
  std::mt19937_64 rng(c.seed);
  for (int s = 0; s < samples; ++s) {
    const AlgebraFunction f = random_function(rng, 5, 2, 20);
    const AlgebraFunction g = random_function(rng, 5, 2, 20);
    const AlgebraFunction small = random_function(rng, 4, 2, 6);
    const std::vector<Param> params{{"seed", static_cast<std::int64_t>(c.seed)},
                                    {"sample", std::int64_t{s}}};
    add(tasks, c, "adjoint-p", eq::adjoint_p, params, 1e-10, [=] {
      const AlgebraFunction pf = op_p(f);
      const AlgebraFunction psg = adjoint_p(g);
      const double scale = hs_norm(pf) * hs_norm(g) + hs_norm(f) * hs_norm(psg);
      return std::pair{std::abs(inner_product(pf, g) - inner_product(f, psg)) / scale,
                       std::string("5-term random F, G, zmax 20")};
    });
    add(tasks, c, "adjoint-h", eq::adjoint_h, params, 1e-12, [=] {
      const AlgebraFunction hf = op_h(f);
      const AlgebraFunction hg = op_h(g);
      const double scale = hs_norm(hf) * hs_norm(g) + hs_norm(f) * hs_norm(hg);
      return std::pair{std::abs(inner_product(hf, g) - inner_product(f, hg)) / scale,
                       std::string("5-term random F, G, zmax 20")};
    });
    add(tasks, c, "trace-oracle", eq::trace, params, 1e-12, [=] {
      const FockMatrix a = to_matrix(f, dim);
      const FockMatrix b = to_matrix(g, dim);
      const cplx tr = (a.adjoint() * b).trace();
      return std::pair{std::abs(inner_product(f, g) - tr) / (hs_norm(f) * hs_norm(g)),
                       "dim " + std::to_string(dim)};
    });
    const std::pair<Subgroup, const char*> subgroups[] = {
        {Subgroup::translation_real, "infinitesimal-translation-real"},
        {Subgroup::translation_imag, "infinitesimal-translation-imag"},
        {Subgroup::rotation, "infinitesimal-rotation"}};
    for (const auto& [sub, name] : subgroups) {
      add(tasks, c, name, eq::infinitesimal, params, 0.3, [=, sub = sub] {
        const double e1 = difference_quotient_error(sub, small, 1e-4, dim);
        const double e2 = difference_quotient_error(sub, small, 1e-5, dim);
        return std::pair{std::abs(std::log10(e1 / e2) - 1.0),
                         "|log10(err(1e-4)/err(1e-5)) - 1|; errors " + fmt(e1) + ", " + fmt(e2)};
      });
    }
  }
}

void suite_addition(Tasks& tasks, const RunConfig& c) {
  const int dim = c.dim ? effective_dim(c) : 96;
  const double psi0 = reals(c, "psi", {0.7}).front();
  const double phi0 = reals(c, "phi", {0.3}).front();
  for (double lambda : reals(c, "lambda", {1.0, 2.0}))
    for (int k : ints(c, "k", range(-4, 4)))
      for (double r : reals(c, "r", {1.0, 2.0})) {
        const std::vector<Param> params{{"lambda", lambda}, {"k", std::int64_t{k}},
                                        {"r", r},           {"psi", psi0},
                                        {"phi", phi0},      {"dim", std::int64_t{dim}}};
        add_report(tasks, c, "addition-theorem", addition, params, [=](double tol) {
          return identities::addition_residual(GroupElement(r, psi0, phi0),
                                               IrrepLabel(lambda, k), dim, 60, tol);
        }, 1e-7);
        if (k >= 0) {
          add_report(tasks, c, "addition-vacuum-closure", identities::formula::vacuum_closure,
                     {{"lambda", lambda}, {"k", std::int64_t{k}}, {"r", r},
                      {"dim", std::int64_t{dim}}},
                     [=](double tol) {
                       return identities::addition_vacuum_closure(IrrepLabel(lambda, k), r, dim,
                                                                  tol);
                     },
                     1e-9);
        }
      }
}

void suite_identity_a(Tasks& tasks, const RunConfig& c) {
  for (int k : ints(c, "k", range(0, 10)))
    for (double x : reals(c, "x", {0.25, 0.5, 1.0, 2.0}))
      for (double r : reals(c, "r", {0.5, 1.0, 2.0})) {
        add_report(tasks, c, "identity-a", identities::formula::identity_a,
                   {{"k", std::int64_t{k}}, {"x", x}, {"r", r}},
                   [=](double tol) { return identities::identity_a(k, x, r, tol); }, 1e-10);
      }
}

void suite_identity_b(Tasks& tasks, const RunConfig& c) {
  for (int m : ints(c, "m", range(0, 10)))
    for (int k : ints(c, "k", range(0, 6)))
      for (double x : reals(c, "x", {0.5, 1.0, 2.0}))
        for (double r : reals(c, "r", {0.5, 1.0, 1.5})) {
          add_report(tasks, c, "identity-b", identities::formula::identity_b,
                     {{"m", std::int64_t{m}}, {"k", std::int64_t{k}}, {"x", x}, {"r", r}},
                     [=](double tol) { return identities::identity_b(m, k, x, r, tol); }, 1e-9);
        }
}

void suite_hille_hardy(Tasks& tasks, const RunConfig& c) {
  for (int k : ints(c, "k", range(0, 6)))
    for (double x : reals(c, "x", {0.5, 1.0, 2.0, 4.0}))
      for (double y : reals(c, "y", {0.5, 1.5, 4.0}))
        for (double zq : reals(c, "zq", {0.1, 0.5, 0.9})) {
          add_report(tasks, c, "hille-hardy", identities::formula::hille_hardy,
                     {{"k", std::int64_t{k}}, {"x", x}, {"y", y}, {"zq", zq}},
                     [=](double tol) { return identities::hille_hardy_residual(k, x, y, zq, tol); },
                     1e-8);
        }
}

void suite_orthogonality(Tasks& tasks, const RunConfig& c) {
  const std::vector<int> cutoffs{100, 400, 1000};
  for (int k : ints(c, "k", {0}))
    for (double lambda : reals(c, "lambda", {2.0}))
      for (double lambda2 : reals(c, "lambda2", {3.0})) {
        const std::vector<Param> params{
            {"k", std::int64_t{k}}, {"lambda", lambda}, {"lambda2", lambda2}};
        add(tasks, c, "orthogonality-cross-winding", identities::formula::orthogonality, params,
            0.0, [=] {
              double worst = 0.0;
              for (int n = k - 3; n <= k + 3; ++n) {
                if (n == k) continue;
                worst = std::max(worst,
                                 std::abs(identities::cross_winding_product(k, n, lambda, lambda2, 200)));
              }
              return std::pair{worst, std::string("windings k-3..k+3, zmax 200")};
            });
        add(tasks, c, "orthogonality-diagonal-growth", eq::diag_growth,
            {{"k", std::int64_t{k}}, {"lambda", lambda}}, 0.0, [=] {
              const auto series = identities::orthogonality_profile_series(k, lambda, lambda, 1000);
              std::vector<double> v;
              for (int z : cutoffs) v.push_back(series[z]);
              std::vector<double> neg;
              for (double x : v) neg.push_back(-x);
              return std::pair{decrease_violations(neg), "profile at zmax 100,400,1000: " + join(v)};
            });
        add(tasks, c, "orthogonality-offdiag-bounded", eq::offdiag_bound, params, 1.0, [=] {
          const auto series = identities::orthogonality_profile_series(k, lambda, lambda2, 1000);
          double head = 0.0, tail = 0.0;
          for (int z = 0; z <= 1000; ++z) {
            (z <= 100 ? head : tail) = std::max(z <= 100 ? head : tail, std::abs(series[z]));
          }
          return std::pair{tail / head, "max |profile| past 100 = " + fmt(tail) +
                                             ", running max at 100 = " + fmt(head)};
        });
      }
}

void suite_classical_limit(Tasks& tasks, const RunConfig& c) {
  const std::vector<double> sigmas = reals(c, "sigma", {1e-1, 1e-2, 1e-3, 1e-4});
  for (double lambda : reals(c, "lambda", {1.0, 2.0, 4.0}))
    for (int k : ints(c, "k", {-2, 0, 2, 8}))
      for (double r : reals(c, "r", {1.0, 1.5, 2.0}))
        for (double psi : reals(c, "psi", {0.7})) {
          const std::vector<Param> params{
              {"lambda", lambda}, {"k", std::int64_t{k}}, {"r", r}, {"psi", psi}};
          // Shared helper: both records look at the same error sequence.
          const auto errors = [=] {
            std::vector<double> e;
            for (double s : sigmas) {
              e.push_back(identities::classical_limit_error(IrrepLabel(lambda, k), r, psi, s));
            }
            return e;
          };
          add(tasks, c, "classical-limit", identities::formula::classical_limit, params, 1e-2,
              [=] {
                const auto e = errors();
                return std::pair{e.back(), "errors along sigma: " + join(e)};
              });
          add(tasks, c, "classical-limit-monotone", eq::limit_monotone, params, 0.0, [=] {
            const auto e = errors();
            return std::pair{decrease_violations(e), "sigma: " + join(sigmas) + "; errors: " + join(e)};
          });
        }
}

void suite_kummer_limit(Tasks& tasks, const RunConfig& c) {
  const std::vector<int> ns = ints(c, "n", {100, 1000, 10000});
  for (int b : ints(c, "b", {1, 3, 10}))
    for (double cc : reals(c, "c", {1.0, 4.0, 9.0})) {
      const std::vector<Param> params{{"b", std::int64_t{b}}, {"c", cc}};
      const auto residuals = [=] {
        std::vector<double> v;
        for (int n : ns) v.push_back(identities::kummer_bessel_limit_residual(n, b, cc));
        return v;
      };
      add(tasks, c, "kummer-limit", identities::formula::kummer_limit, params, 1e-2, [=] {
        const auto v = residuals();
        return std::pair{v.back(), std::string(identities::kKummerLimitSignPattern) +
                                       "; residuals along n: " + join(v)};
      });
      add(tasks, c, "kummer-limit-monotone", eq::limit_monotone, params, 0.0, [=] {
        const auto v = residuals();
        std::vector<double> nd(ns.begin(), ns.end());
        return std::pair{decrease_violations(v), "n: " + join(nd) + "; residuals: " + join(v)};
      });
    }
}

using SuiteFn = void (*)(Tasks&, const RunConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"unitarity", suite_unitarity},
      {"intertwining", suite_intertwining},
      {"recurrence", suite_recurrence},
      {"eigen", suite_eigen},
      {"lie-algebra", suite_lie_algebra},
      {"addition", suite_addition},
      {"identity-a", suite_identity_a},
      {"identity-b", suite_identity_b},
      {"hille-hardy", suite_hille_hardy},
      {"orthogonality", suite_orthogonality},
      {"classical-limit", suite_classical_limit},
      {"kummer-limit", suite_kummer_limit},
  };
  return r;
}

}  // namespace

std::vector<double> parse_grid_values(const std::string& text) {
  const auto parse_real = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(v)) {
      throw UsageError("cannot parse '" + s + "' in '" + text + "'");
    }
    return v;
  };
  std::vector<double> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const double a = parse_real(text.substr(0, dots));
    const double b = parse_real(text.substr(dots + 2));
    if (a != std::round(a) || b != std::round(b)) {
      throw UsageError("range '" + text + "' needs integer bounds");
    }
    if (b < a || b - a > 100000) throw UsageError("empty or oversized range '" + text + "'");
    for (double v = a; v <= b; v += 1.0) out.push_back(v);
    return out;
  }
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_real(text.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::pair<std::string, double> parse_tolerance(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw UsageError("--tol expects name=value, got '" + text + "'");
  }
  const auto values = parse_grid_values(text.substr(eq + 1));
  if (values.size() != 1 || values.front() < 0.0) {
    throw UsageError("--tol value must be one non-negative number");
  }
  return {text.substr(0, eq), values.front()};
}

int effective_dim(const RunConfig& config, int fallback) {
  int dim = fallback;
  if (config.dim) {
    dim = *config.dim;
  } else if (const char* env = std::getenv(kDimEnvVar); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0') throw UsageError(std::string(kDimEnvVar) + " is not an integer");
    dim = static_cast<int>(std::clamp(v, -1L, 100000L));
  }
  if (dim < 8 || dim > 512) {
    throw UsageError("dim " + std::to_string(dim) + " outside [8, 512]");
  }
  return dim;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    n.push_back("all");
    return n;
  }();
  return names;
}

std::vector<CheckReport> run_suite(const std::string& suite, const RunConfig& config) {
  Tasks tasks;
  bool found = false;
  for (const auto& [name, fn] : registry()) {
    if (suite == "all" || suite == name) {
      fn(tasks, config);
      found = true;
    }
  }
  if (!found) throw UsageError("unknown suite '" + suite + "'");
  return execute_all(tasks, config.threads);
}

int run_verify(const std::string& suite, const RunConfig& config, std::ostream& out) {
  const std::vector<CheckReport> records = run_suite(suite, config);
  write_reports(out, records, config.format);
  const bool ok = std::all_of(records.begin(), records.end(),
                              [](const CheckReport& r) { return r.pass; });
  return ok ? kExitPass : kExitFail;
}

}  // namespace e2fock
