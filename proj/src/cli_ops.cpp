#include "scw/cli_ops.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace scw::cli {

std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<SweepPoint> sweep_points(const RunConfig& cfg) {
  cfg.validate();
  const SweepSpec& sw = cfg.sweep;
  std::vector<SweepPoint> pts;
  pts.reserve(static_cast<std::size_t>(sw.steps));
  for (int i = 0; i < sw.steps; ++i) {
    const double t = sw.start + (sw.stop - sw.start) * i / (sw.steps - 1);
    SweepPoint p{};
    if (sw.variable == SweepVariable::LossDb) {
      p.loss_dB = t;
      p.L_km = t / cfg.system.xi;
    } else {
      p.L_km = t;
      p.loss_dB = t * cfg.system.xi;
    }
    pts.push_back(p);
  }
  return pts;
}

std::string cmd_qber_curve(const RunConfig& cfg) {
  std::ostringstream out;
  out << "loss_dB,L_km,E,G,Q\n";
  for (const SweepPoint& pt : sweep_points(cfg)) {
    const BseeChannel ch = channel_from_system(cfg.system, cfg.detector, pt.L_km);
    const double q = ch.G < 1.0 ? qber(ch) : std::nan("");
    out << csv_number(pt.loss_dB) << ',' << csv_number(pt.L_km) << ','
        << csv_number(ch.E) << ',' << csv_number(ch.G) << ',' << csv_number(q) << '\n';
  }
  return out.str();
}

std::string cmd_keyrate_curve(const RunConfig& cfg) {
  const bool both = cfg.protocol == ProtocolSelection::Both;
  std::ostringstream out;
  out << "loss_dB,L_km,Q,G,chi,";
  if (both)
    out << "K_b92,K_bb84_osd\n";
  else
    out << "K\n";
  for (const SweepPoint& pt : sweep_points(cfg)) {
    if (both) {
      const KeyRatePoint b92 =
          secure_rate(cfg.system, cfg.detector, Protocol::B92, cfg.ec, pt.L_km);
      const KeyRatePoint osd =
          secure_rate(cfg.system, cfg.detector, Protocol::BB84_OSD, cfg.ec, pt.L_km);
      out << csv_number(pt.loss_dB) << ',' << csv_number(pt.L_km) << ','
          << csv_number(b92.Q) << ',' << csv_number(b92.G) << ',' << csv_number(b92.chi)
          << ',' << csv_number(b92.K) << ',' << csv_number(osd.K) << '\n';
    } else {
      const KeyRatePoint kp = secure_rate(cfg.system, cfg.detector,
                                          single_protocol(cfg.protocol), cfg.ec, pt.L_km);
      out << csv_number(pt.loss_dB) << ',' << csv_number(pt.L_km) << ','
          << csv_number(kp.Q) << ',' << csv_number(kp.G) << ',' << csv_number(kp.chi)
          << ',' << csv_number(kp.K) << '\n';
    }
  }
  return out.str();
}

std::string cmd_optimal_mu(const RunConfig& cfg) {
  const Protocol proto = single_protocol(cfg.protocol);
  std::ostringstream out;
  out << "loss_dB,L_km,mu_star,m_star,K_star,status\n";
  for (const SweepPoint& pt : sweep_points(cfg)) {
    const auto opt = optimal_mu(cfg.system, cfg.detector, proto, cfg.ec, pt.L_km);
    out << csv_number(pt.loss_dB) << ',' << csv_number(pt.L_km) << ',';
    if (opt) {
      out << csv_number(opt->mu) << ',' << csv_number(opt->m) << ','
          << csv_number(opt->K) << ",ok\n";
    } else {
      out << "nan,nan,0,no_positive_rate\n";
    }
  }
  return out.str();
}

Report cmd_validate(const RunConfig& cfg) {
  cfg.validate();
  SessionConfig sc;
  sc.params = cfg.system;
  sc.detector = cfg.detector;
  sc.protocol = single_protocol(cfg.protocol);
  sc.L_km = cfg.sweep.variable == SweepVariable::LossDb
                ? cfg.sweep.start / cfg.system.xi
                : cfg.sweep.start;
  sc.n_windows = cfg.n_windows;
  sc.seed = cfg.seed;
  const ValidationReport r = validate_against_analytic(sc);
  const SessionStats& st = r.stats;

  std::ostringstream text;
  text << "monte-carlo validation, " << st.n_windows << " windows, seed " << sc.seed
       << ", L = " << csv_number(sc.L_km) << " km ("
       << csv_number(sc.L_km * cfg.system.xi) << " dB)\n";
  text << "  protocol " << (sc.protocol == Protocol::B92 ? "b92" : "bb84-osd")
       << ": sifted " << st.sifted << ", conclusive " << st.conclusive << ", errors "
       << st.errors << "\n";
  const auto row = [&](const char* name, double analytic, double hat, double z) {
    text << "  " << name << ": analytic " << csv_number(analytic) << ", empirical "
         << csv_number(hat) << ", z = " << csv_number(z) << "\n";
  };
  row("E", r.E, st.E_hat, r.z_E);
  row("G", r.G, st.G_hat, r.z_G);
  row("Q", r.Q, st.Q_hat, r.z_Q);
  text << (r.pass ? "  PASS: all |z| < 3\n" : "  FAIL: some |z| >= 3\n");

  std::ostringstream csv;
  csv << "metric,analytic,empirical,std_error,z,pass\n";
  const auto line = [&](const char* name, double analytic, double hat, double se,
                        double z) {
    csv << name << ',' << csv_number(analytic) << ',' << csv_number(hat) << ','
        << csv_number(se) << ',' << csv_number(z) << ','
        << (std::fabs(z) < 3.0 ? "1" : "0") << '\n';
  };
  line("E", r.E, st.E_hat, st.se_E, r.z_E);
  line("G", r.G, st.G_hat, st.se_G, r.z_G);
  line("Q", r.Q, st.Q_hat, st.se_Q, r.z_Q);

  return {text.str(), csv.str(), r.pass};
}

Report cmd_compare_bb84(const RunConfig& cfg) {
  const std::vector<SweepPoint> pts = sweep_points(cfg);
  std::ostringstream csv;
  csv << "loss_dB,L_km,mu_s,mu_bar_c,mu_bar,mu_s_prime,rate_osd,rate_bb84_total,"
         "relative_difference,low_modulation\n";
  for (const SweepPoint& pt : pts) {
    const Bb84Comparison c = compare_bb84_variants(cfg.system, pt.L_km);
    csv << csv_number(pt.loss_dB) << ',' << csv_number(pt.L_km) << ','
        << csv_number(c.mu_s) << ',' << csv_number(c.mu_bar_c) << ','
        << csv_number(c.mu_bar) << ',' << csv_number(c.mu_s_prime) << ','
        << csv_number(c.rate_osd) << ',' << csv_number(c.rate_bb84_total) << ','
        << csv_number(c.relative_difference) << ',' << (c.low_modulation ? "1" : "0")
        << '\n';
  }

  const Bb84Comparison c0 = compare_bb84_variants(cfg.system, pts.front().L_km);
  std::ostringstream text;
  text << "two-detector BB84 vs BB84-OSD at " << csv_number(pts.front().loss_dB)
       << " dB\n";
  text << "  mu_s = " << csv_number(c0.mu_s) << ", mu_bar_c = " << csv_number(c0.mu_bar_c)
       << ", mu_bar = " << csv_number(c0.mu_bar) << " (= mu_bar_c + 2 mu_s)\n";
  text << "  mu_s' = " << csv_number(c0.mu_s_prime) << "\n";
  text << "  count rate: BB84 2 eta_B mu_s' = " << csv_number(c0.rate_bb84_total)
       << ", BB84-OSD 2 eta_B mu_s = " << csv_number(c0.rate_osd) << "\n";
  text << "  relative difference mu_s'/mu_s - 1 = " << csv_number(c0.relative_difference)
       << "\n";
  if (!c0.low_modulation)
    text << "  note: outside the low-modulation regime (mu_s/mu_bar > 0.05)\n";
  return {text.str(), csv.str(), true};
}

}  // namespace scw::cli
