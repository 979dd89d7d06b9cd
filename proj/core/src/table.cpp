#include "e2fock/table.hpp"

#include <cmath>
#include <ostream>

#include "json.hpp"

#include "e2fock/e2group.hpp"
#include "e2fock/identities.hpp"
#include "e2fock/repk.hpp"

namespace e2fock {

namespace {

using Json = nlohmann::ordered_json;

class TableWriter {
 public:
  TableWriter(std::ostream& out, Format format) : out_(out), format_(format) {}

  void header(const std::string& kind, const std::string& equation,
              const std::vector<Param>& params, std::vector<std::string> columns) {
    columns_ = std::move(columns);
    if (format_ == Format::csv) {
      out_ << "# " << kind << " | " << equation << " | " << format_params(params) << '\n';
      for (std::size_t i = 0; i < columns_.size(); ++i) out_ << (i ? "," : "") << columns_[i];
      out_ << '\n';
      return;
    }
    Json j;
    j["kind"] = kind;
    j["equation"] = equation;
    Json p = Json::object();
    for (const auto& param : params) std::visit([&](auto v) { p[param.name] = v; }, param.value);
    j["params"] = std::move(p);
    j["columns"] = columns_;
    out_ << j.dump() << '\n';
  }

  void row(const std::vector<std::variant<std::int64_t, double>>& values) {
    if (format_ == Format::csv) {
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out_ << ',';
        if (const auto* v = std::get_if<std::int64_t>(&values[i])) {
          out_ << *v;
        } else {
          out_ << format_double(std::get<double>(values[i]));
        }
      }
      out_ << '\n';
      return;
    }
    Json j;
    for (std::size_t i = 0; i < values.size(); ++i) {
      std::visit([&](auto v) { j[columns_[i]] = v; }, values[i]);
    }
    out_ << j.dump() << '\n';
  }

 private:
  std::ostream& out_;
  Format format_;
  std::vector<std::string> columns_;
};

double scalar(const RunConfig& c, const std::string& key, double def) {
  auto it = c.grid.find(key);
  if (it == c.grid.end() || it->second.empty()) return def;
  if (it->second.size() != 1) throw UsageError("--" + key + ": table takes a single value");
  return it->second.front();
}

int integer(const RunConfig& c, const std::string& key, int def) {
  const double v = scalar(c, key, def);
  if (v != std::round(v) || std::abs(v) > 1e8) throw UsageError("--" + key + ": expected an integer");
  return static_cast<int>(v);
}

std::vector<int> integers(const RunConfig& c, const std::string& key, std::vector<int> def) {
  auto it = c.grid.find(key);
  if (it == c.grid.end() || it->second.empty()) return def;
  std::vector<int> out;
  for (double v : it->second) {
    if (v != std::round(v) || std::abs(v) > 1e8) throw UsageError("--" + key + ": expected integers");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

std::int64_t i64(int v) { return v; }

}  // namespace

const std::vector<std::string>& table_kinds() {
  static const std::vector<std::string> kinds{"u-matrix", "irrep", "basis", "profile"};
  return kinds;
}

void run_table(const std::string& kind, const RunConfig& config, std::ostream& out) {
  TableWriter w(out, config.format);
  if (kind == "u-matrix") {
    const double r = scalar(config, "r", 1.0);
    const double psi = scalar(config, "psi", 0.0);
    const double phi = scalar(config, "phi", 0.0);
    const int dim = config.dim ? *config.dim : 8;
    if (dim < 2 || dim > 512) throw UsageError("--dim: expected 2..512 for tables");
    const FockMatrix u = guarded([&] { return u_matrix(GroupElement(r, psi, phi), dim); });
    w.header(kind,
             "<m|U(g)|n> = (-1)^m e^(i(m-n)psi - i m phi) r^(n+m) e^(-r^2/2)/sqrt(n!m!) "
             "2F0(-m,-n;-1/r^2)",
             {{"r", r}, {"psi", psi}, {"phi", phi}, {"dim", i64(dim)}}, {"m", "n", "re", "im"});
    for (int m = 0; m < dim; ++m)
      for (int n = 0; n < dim; ++n) w.row({i64(m), i64(n), u(m, n).real(), u(m, n).imag()});
    return;
  }
  if (kind == "irrep") {
    const double lambda = scalar(config, "lambda", 1.0);
    const double r = scalar(config, "r", 1.0);
    const double psi = scalar(config, "psi", 0.0);
    const double phi = scalar(config, "phi", 0.0);
    const auto ks = integers(config, "k", {-3, -2, -1, 0, 1, 2, 3});
    const auto ns = integers(config, "n", ks);
    const GroupElement g = guarded([&] { return GroupElement(r, psi, phi); });
    guarded([&] { return IrrepLabel(lambda, 0); });
    w.header(kind, "t^lambda_kn(g) = i^(n-k) e^(-i(n phi + (k-n) psi)) J_(n-k)(lambda r)",
             {{"lambda", lambda}, {"r", r}, {"psi", psi}, {"phi", phi}},
             {"k", "n", "re", "im"});
    for (int k : ks)
      for (int n : ns) {
        const cplx t = irrep_element(IrrepLabel(lambda, k), n, g);
        w.row({i64(k), i64(n), t.real(), t.imag()});
      }
    return;
  }
  if (kind == "basis") {
    const double lambda = scalar(config, "lambda", 1.0);
    const int k = integer(config, "k", 0);
    const int zmax = integer(config, "zmax", 20);
    const auto f = guarded([&] {
      IrrepLabel(lambda, k);
      if (zmax < 0) throw UsageError("--zmax: expected >= 0");
      return basis_radial(lambda, k, zmax);
    });
    w.header(kind,
             "f^lambda_k(zeta) = (i lambda)^|k|/(2^|k| |k|!) e^(-lambda^2/8) "
             "Phi(-zeta,1+|k|;lambda^2/4)",
             {{"lambda", lambda}, {"k", i64(k)}, {"zmax", i64(zmax)}}, {"zeta", "re", "im"});
    for (int z = 0; z <= zmax; ++z) w.row({i64(z), f[z].real(), f[z].imag()});
    return;
  }
  if (kind == "profile") {
    const double lambda = scalar(config, "lambda", 2.0);
    const double lambda2 = scalar(config, "lambda2", lambda);
    const int k = integer(config, "k", 0);
    const int zmax = integer(config, "zmax", 100);
    const auto series = guarded([&] {
      IrrepLabel(lambda, k);
      IrrepLabel(lambda2, k);
      if (zmax < 0) throw UsageError("--zmax: expected >= 0");
      return identities::orthogonality_profile_series(k, lambda, lambda2, zmax);
    });
    w.header(kind, identities::formula::orthogonality,
             {{"k", i64(k)}, {"lambda", lambda}, {"lambda2", lambda2}, {"zmax", i64(zmax)}},
             {"zmax", "value"});
    for (int z = 0; z <= zmax; ++z) w.row({i64(z), series[z]});
    return;
  }
  throw UsageError("unknown table kind '" + kind + "'");
}

}  // namespace e2fock
