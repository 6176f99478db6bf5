//! \file runner.cpp
//! \brief Run orchestration, CSV/report emitters, and the reference cache.

#include "mapweno/runner.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "mapweno/time_integration.hpp"

namespace mapweno {

namespace {

struct Resolved {
  Problem p;
  int n = 0, nx = 0, ny = 0;
  double t_final = 0.0;
  CflRule cfl;
};

Resolved resolve(const RunConfig& cfg) {
  Resolved r;
  r.p = make_problem(cfg.problem);
  r.n = cfg.n > 0 ? cfg.n : r.p.default_n;
  r.nx = cfg.nx > 0 ? cfg.nx : r.p.default_nx;
  r.ny = cfg.ny > 0 ? cfg.ny : r.p.default_ny;
  r.t_final = cfg.t_final >= 0.0 ? cfg.t_final : r.p.t_final;
  if (cfg.cfl > 0.0)
    r.cfl = CflRule::fixed(cfg.cfl);
  else if (cfg.cfl < 0.0)
    r.cfl = CflRule::scaled();
  else
    r.cfl = r.p.cfl > 0.0 ? CflRule::fixed(r.p.cfl) : CflRule::scaled();
  return r;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write: " + path);
  return out;
}

void write_field_csv(const std::string& path, const CellField& u) {
  std::ofstream out = open_out(path);
  out << (u.components() == 1 ? "x,u\n" : "x,rho,rhou,E\n");
  const Grid1D& g = u.grid();
  for (int i = 0; i < g.n; ++i) {
    out << format_g17(g.center(i));
    for (int c = 0; c < u.components(); ++c) out << ',' << format_g17(u(i, c));
    out << '\n';
  }
}

void write_field_csv(const std::string& path, const CellField2D& u) {
  std::ofstream out = open_out(path);
  out << "x,y,rho,rhou,rhov,E\n";
  const Grid2D& g = u.grid();
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      if (g.is_blank(i, j)) continue;
      out << format_g17(g.xc(i)) << ',' << format_g17(g.yc(j));
      for (int c = 0; c < u.components(); ++c) out << ',' << format_g17(u(i, j, c));
      out << '\n';
    }
}

void write_report_kv(const std::string& path, const RunConfig& cfg, const Resolved& rr,
                     const RunReport& rep) {
  std::ofstream out = open_out(path);
  out << "problem=" << rr.p.name << '\n';
  out << "scheme=" << to_string(cfg.scheme.kind) << '\n';
  if (rr.p.system == SystemKind::euler2d)
    out << "nx=" << rr.nx << "\nny=" << rr.ny << '\n';
  else
    out << "n=" << rr.n << '\n';
  out << "t_final=" << format_g17(rr.t_final) << '\n';
  if (rr.cfl.accuracy_scaled)
    out << "cfl=scaled\n";
  else
    out << "cfl=" << format_g17(rr.cfl.nu) << '\n';
  out << "t_reached=" << format_g17(rep.t_reached) << '\n';
  out << "n_steps=" << rep.n_steps << '\n';
  out << "blow_up=" << (rep.blow_up ? 1 : 0) << '\n';
  if (rep.blow_up) out << "blow_up_time=" << format_g17(rep.blow_up_time) << '\n';
  out << "eigen_fallbacks=" << rep.eigen_fallbacks << '\n';
  if (rr.p.system != SystemKind::advection) {
    out << "min_rho=" << format_g17(rep.min_rho) << '\n';
    out << "min_p=" << format_g17(rep.min_p) << '\n';
  }
  if (!rep.blow_up) out << "mass_drift=" << format_g17(rep.mass_drift) << '\n';
  if (rep.has_norms) {
    out << "l1=" << format_g17(rep.norms.l1) << '\n';
    out << "l2=" << format_g17(rep.norms.l2) << '\n';
    out << "linf=" << format_g17(rep.norms.linf) << '\n';
  }
  if (rep.has_osc) {
    out << "overshoot=" << format_g17(rep.osc.over) << '\n';
    out << "undershoot=" << format_g17(rep.osc.under) << '\n';
  }
  if (rep.has_range) {
    out << "rho_min=" << format_g17(rep.rho_range.lo) << '\n';
    out << "rho_max=" << format_g17(rep.rho_range.hi) << '\n';
  }
}

double interior_mass_2d(const CellField2D& u) {
  const Grid2D& g = u.grid();
  double m = 0.0;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      if (!g.is_blank(i, j)) m += u(i, j, 0);
  return m * g.dx() * g.dy();
}

std::uint64_t fnv1a(const unsigned char* bytes, std::size_t size) {
  std::uint64_t h = 14695981039346656037ull;
  for (std::size_t i = 0; i < size; ++i) {
    h ^= bytes[i];
    h *= 1099511628211ull;
  }
  return h;
}

constexpr char kCacheMagic[8] = {'M', 'W', 'R', 'E', 'F', '0', '1', '\0'};

bool read_cache(const std::string& path, const Problem& p, int n, int m, CellField& u) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  char magic[8];
  if (!in.read(magic, 8) || std::memcmp(magic, kCacheMagic, 8) != 0) return false;
  std::uint32_t name_len = 0;
  if (!in.read(reinterpret_cast<char*>(&name_len), 4) || name_len > 256) return false;
  std::string name(name_len, '\0');
  if (!in.read(name.data(), name_len) || name != p.name) return false;
  std::int32_t fn = 0, fm = 0;
  double ft = 0.0;
  if (!in.read(reinterpret_cast<char*>(&fn), 4) || fn != n) return false;
  if (!in.read(reinterpret_cast<char*>(&fm), 4) || fm != m) return false;
  if (!in.read(reinterpret_cast<char*>(&ft), 8) || ft != p.t_final) return false;
  std::vector<double> payload(static_cast<std::size_t>(n) * m);
  const std::size_t bytes = payload.size() * sizeof(double);
  if (!in.read(reinterpret_cast<char*>(payload.data()), bytes)) return false;
  std::uint64_t sum = 0;
  if (!in.read(reinterpret_cast<char*>(&sum), 8)) return false;
  if (sum != fnv1a(reinterpret_cast<const unsigned char*>(payload.data()), bytes)) return false;
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < m; ++c) u(i, c) = payload[static_cast<std::size_t>(i) * m + c];
  return true;
}

void write_cache(const std::string& path, const Problem& p, int n, int m, const CellField& u) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write: " + path);
  out.write(kCacheMagic, 8);
  const std::uint32_t name_len = static_cast<std::uint32_t>(p.name.size());
  out.write(reinterpret_cast<const char*>(&name_len), 4);
  out.write(p.name.data(), name_len);
  const std::int32_t fn = n, fm = m;
  out.write(reinterpret_cast<const char*>(&fn), 4);
  out.write(reinterpret_cast<const char*>(&fm), 4);
  out.write(reinterpret_cast<const char*>(&p.t_final), 8);
  std::vector<double> payload(static_cast<std::size_t>(n) * m);
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < m; ++c) payload[static_cast<std::size_t>(i) * m + c] = u(i, c);
  const std::size_t bytes = payload.size() * sizeof(double);
  out.write(reinterpret_cast<const char*>(payload.data()), bytes);
  const std::uint64_t sum =
      fnv1a(reinterpret_cast<const unsigned char*>(payload.data()), bytes);
  out.write(reinterpret_cast<const char*>(&sum), 8);
}

}  // namespace

std::string format_g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

RunReport run_solve(const RunConfig& cfg) {
  const Resolved rr = resolve(cfg);
  const Problem& p = rr.p;
  RunReport rep;
  const auto tic = std::chrono::steady_clock::now();

  if (p.system == SystemKind::euler2d) {
    CellField2D u = initial_field_2d(p, rr.nx, rr.ny);
    const double m0 = interior_mass_2d(u);
    const AdvanceStats st = advance_to(u, p.bc, cfg.scheme, rr.cfl, 0.0, rr.t_final);
    rep.blow_up = st.blow_up;
    if (st.blow_up) rep.blow_up_time = st.t_reached;
    rep.t_reached = st.t_reached;
    rep.n_steps = st.n_steps;
    rep.eigen_fallbacks = st.eigen_fallbacks;
    rep.min_rho = st.min_rho;
    rep.min_p = st.min_p;
    if (!st.blow_up) {
      rep.mass_drift = std::fabs(interior_mass_2d(u) - m0) / std::fmax(1.0, std::fabs(m0));
      rep.has_range = true;
      rep.rho_range = field_range(u, u.grid(), 0);
      if (!cfg.out_field.empty()) write_field_csv(cfg.out_field, u);
    }
  } else {
    const SystemSpec sys{p.system, p.advection_speed};
    CellField u = initial_field(p, rr.n);
    const double dx = u.grid().dx();
    const double m0 = total_mass(u, dx);
    const AdvanceStats st = advance_to(u, sys, p.bc, cfg.scheme, rr.cfl, 0.0, rr.t_final);
    rep.blow_up = st.blow_up;
    if (st.blow_up) rep.blow_up_time = st.t_reached;
    rep.t_reached = st.t_reached;
    rep.n_steps = st.n_steps;
    rep.eigen_fallbacks = st.eigen_fallbacks;
    rep.min_rho = st.min_rho;
    rep.min_p = st.min_p;
    if (!st.blow_up) {
      rep.mass_drift = std::fabs(total_mass(u, dx) - m0) / std::fmax(1.0, std::fabs(m0));
      if (p.has_exact_advection) {
        const CellField exact = exact_advection(p, rr.n, rr.t_final);
        rep.has_norms = true;
        rep.norms = error_norms(u, exact, dx);
        rep.has_osc = true;
        rep.osc = oscillation_metrics(u, p.umin, p.umax);
      }
      if (!cfg.out_field.empty()) write_field_csv(cfg.out_field, u);
    }
  }

  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - tic).count();
  if (!cfg.out_report.empty()) write_report_kv(cfg.out_report, cfg, rr, rep);
  return rep;
}

std::vector<ConvergeRow> run_converge(const RunConfig& cfg) {
  if (cfg.grids.empty()) throw ConfigError("converge mode needs a grids list");
  const Resolved rr = resolve(cfg);
  const Problem& p = rr.p;
  if (!p.has_exact_advection)
    throw ConfigError("convergence study needs an exactly advected profile: " + p.name);

  const SystemSpec sys{p.system, p.advection_speed};
  std::vector<ConvergeRow> rows;
  for (const int n : cfg.grids) {
    CellField u = initial_field(p, n);
    const AdvanceStats st = advance_to(u, sys, p.bc, cfg.scheme, rr.cfl, 0.0, rr.t_final);
    if (st.blow_up)
      throw std::runtime_error("run blew up at n = " + std::to_string(n));
    ConvergeRow row;
    row.n = n;
    row.err = error_norms(u, exact_advection(p, n, rr.t_final), u.grid().dx());
    if (!rows.empty()) {
      const ConvergeRow& prev = rows.back();
      const double lr = std::log(static_cast<double>(n) / prev.n);
      row.order.l1 = std::log(prev.err.l1 / row.err.l1) / lr;
      row.order.l2 = std::log(prev.err.l2 / row.err.l2) / lr;
      row.order.linf = std::log(prev.err.linf / row.err.linf) / lr;
    }
    rows.push_back(row);
  }

  if (!cfg.out_report.empty()) {
    std::ofstream out = open_out(cfg.out_report);
    out << "n,l1,l1_order,l2,l2_order,linf,linf_order\n";
    for (const ConvergeRow& row : rows)
      out << row.n << ',' << format_g17(row.err.l1) << ',' << format_g17(row.order.l1) << ','
          << format_g17(row.err.l2) << ',' << format_g17(row.order.l2) << ','
          << format_g17(row.err.linf) << ',' << format_g17(row.order.linf) << '\n';
  }
  return rows;
}

void write_map_dump(const Scheme& scheme, int points, const std::string& path) {
  if (points < 1) throw std::invalid_argument("map dump needs at least one sample");
  std::ofstream out = open_out(path);
  out << "omega,g0,g1,g2\n";
  MappingContext ctx;
  ctx.beta = {1.0, 1.0, 1.0};
  ctx.omega_js = kOptimalWeights;
  for (int i = 0; i < points; ++i) {
    const double w = (i + 1.0) / (points + 1.0);
    out << format_g17(w);
    for (int s = 0; s < 3; ++s)
      out << ','
          << format_g17(g_maim(scheme.kind, scheme.params, ctx, w, kOptimalWeights[s],
                               kOptimalWeights));
    out << '\n';
  }
}

const std::vector<PublishedQRow>& tabulated_q_reference() {
  // omega_crit/q_max = -1 marks a row whose reference tabulates alpha only.
  static const std::vector<PublishedQRow> rows = {
      {1, 0, -1.0, -1.0, 0.0001},
      {2, 0, 0.380873415, 0.092362764, 0.0924},
      {2, 1, 0.619126585, 0.092362764, 0.0924},
      {3, 0, 0.156515839, 0.574903653, 0.5750},
      {3, 1, 0.570057856, 0.033129692, 0.0332},
      {3, 2, 0.354983613, 0.133395837, 0.1334},
      {4, 0, 0.050334141, 0.954367890, 0.9544},
      {4, 1, 0.388078022, 0.082052483, 0.0821},
      {4, 2, 0.509902230, 0.000674949, 0.0007},
      {4, 3, 0.174716514, 0.527277883, 0.5273},
      {5, 0, 0.014533733, 1.289877215, 1.2899},
      {5, 1, 0.226106436, 0.401303129, 0.4014},
      {5, 2, 0.483489850, 0.001874973, 0.0019},
      {5, 3, 0.368684520, 0.110936397, 0.1110},
      {5, 4, 0.068631349, 0.862927630, 0.8630},
      {6, 0, 0.004036768, 1.617654227, 1.6177},
      {6, 1, 0.107726908, 0.716954249, 0.7170},
      {6, 2, 0.374254393, 0.102277562, 0.1023},
      {6, 3, 0.453273191, 0.014901369, 0.0150},
      {6, 4, 0.229973747, 0.392223085, 0.3923},
      {6, 5, 0.023524596, 1.163386235, 1.1634},
      {7, 0, 0.001099119, 1.945668808, 1.9457},
      {7, 1, 0.043419023, 0.996333645, 0.9964},
      {7, 2, 0.251943992, 0.341617878, 0.3417},
      {7, 3, 0.435602337, 0.028078584, 0.0281},
      {7, 4, 0.359684813, 0.125509465, 0.1256},
      {7, 5, 0.120110409, 0.678155990, 0.6782},
      {7, 6, 0.007550349, 1.458456912, 1.4585},
      {8, 0, 0.000295439, 2.275453190, 2.2755},
      {8, 1, 0.015907656, 1.266360740, 1.2664},
      {8, 2, 0.145076866, 0.605994603, 0.6060},
      {8, 3, 0.358612853, 0.127291552, 0.1273},
      {8, 4, 0.416050440, 0.047165647, 0.0472},
      {8, 5, 0.251123145, 0.343478122, 0.3435},
      {8, 6, 0.053489044, 0.936837253, 0.9369},
      {8, 7, 0.002330913, 1.756424091, 1.7565},
      {9, 0, 0.000078677, 2.607051525, 2.6071},
      {9, 1, 0.005504277, 2.607051528, 2.6071},
      {9, 2, 0.071503078, 0.850403988, 0.8505},
      {9, 3, 0.261799125, 0.319476358, 0.3195},
      {9, 4, 0.402941270, 0.062457658, 0.0625},
      {9, 5, 0.347184466, 0.146872875, 0.1469},
      {9, 6, 0.152246813, 0.586388730, 0.5864},
      {9, 7, 0.021508966, 1.187147894, 1.1872},
      {9, 8, 0.000700372, 2.058883535, 2.0589},
  };
  return rows;
}

void write_table(const std::string& which, const std::string& path) {
  if (which == "appendixA") {
    std::ofstream out = open_out(path);
    out << "r,s,d,omega_crit,q_max,alpha,agrees_ref\n";
    const std::vector<PublishedQRow>& ref = tabulated_q_reference();
    std::size_t row = 0;
    for (int r = 1; r <= 9; ++r) {
      const std::vector<double> d = optimal_weights(r);
      for (int s = 0; s < r; ++s, ++row) {
        const QAnalysis qa = analyze_q(d[s]);
        const PublishedQRow& pr = ref[row];
        const bool alpha_ok = std::lround(qa.alpha * 1e4) == std::lround(pr.alpha * 1e4);
        const bool agrees = pr.omega_crit < 0.0
                                ? alpha_ok
                                : alpha_ok && std::fabs(qa.omega_crit - pr.omega_crit) <= 1e-7 &&
                                      std::fabs(qa.q_max - pr.q_max) <= 1e-7;
        char alpha_buf[16];
        std::snprintf(alpha_buf, sizeof alpha_buf, "%.4f", qa.alpha);
        out << r << ',' << s << ',' << format_g17(d[s]) << ',' << format_g17(qa.omega_crit)
            << ',' << format_g17(qa.q_max) << ',' << alpha_buf << ',' << (agrees ? 1 : 0)
            << '\n';
      }
    }
  } else if (which == "table1") {
    std::ofstream out = open_out(path);
    out << "r,ncp,js,m1,m2,im,k_im_min,maim,k_maim_min\n";
    for (int r = 2; r <= 9; ++r)
      for (int ncp = 0; ncp < r; ++ncp)
        out << r << ',' << ncp << ',' << predict_order_js(r, ncp) << ','
            << predict_order_m(r, ncp, 1) << ',' << predict_order_m(r, ncp, 2) << ','
            << predict_order_mapped(r, ncp) << ',' << k_im_min(r, ncp) << ','
            << predict_order_mapped(r, ncp) << ',' << k_maim_min(r, ncp) << '\n';
  } else {
    throw std::invalid_argument("unknown table: " + which);
  }
}

CellField load_or_generate_reference(const Problem& p, int n) {
  if (p.default_n <= 0) throw std::invalid_argument("reference cache covers 1D problems only");
  const char* env = std::getenv("MAPWENO_CACHE_DIR");
  const std::filesystem::path dir = env && *env ? env : "ref_cache";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / (p.name + "_n" + std::to_string(n) + ".bin")).string();

  const int m = p.system == SystemKind::advection ? 1 : 3;
  CellField u = initial_field(p, n);
  if (read_cache(path, p, n, m, u)) return u;

  const SystemSpec sys{p.system, p.advection_speed};
  const CflRule cfl = p.cfl > 0.0 ? CflRule::fixed(p.cfl) : CflRule::scaled();
  const AdvanceStats st = advance_to(u, sys, p.bc, make_scheme("js"), cfl, 0.0, p.t_final);
  if (st.blow_up) throw std::runtime_error("reference run blew up: " + p.name);
  write_cache(path, p, n, m, u);
  return u;
}

}  // namespace mapweno
