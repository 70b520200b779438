#pragma once
/**
 * @brief Config ingestion, parameter sweeps and CSV emission for the accdet CLI.
 *
 * Config grammar (one statement per line, '#' starts a comment):
 *
 *     key = value
 *     [sweep]
 *     axis = accel_group            # accel_group | mode_index | efficiency | window_T | gap
 *     values = 0.01, 0.02, 0.05     # explicit list, or:
 *     min = 0.002
 *     max = 0.05
 *     count = 40
 *     spacing = log                 # linear | log
 *
 * Unknown keys, duplicate keys and malformed values are errors carrying the
 * line number.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "accdet/core_params.hpp"
#include "accdet/detector_mode.hpp"
#include "accdet/numerics.hpp"
#include "accdet/rindler_field.hpp"
#include "accdet/single_detector.hpp"
#include "accdet/two_detector.hpp"
#include "accdet/udw_dynamics.hpp"

namespace accdet::cli {

inline constexpr const char* version = "0.1.0";

class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SweepAxis { accel_group, mode_index, efficiency, window_T, gap };

inline const char* axis_name(SweepAxis a) {
    switch (a) {
        case SweepAxis::accel_group: return "accel_group";
        case SweepAxis::mode_index: return "mode_index";
        case SweepAxis::efficiency: return "efficiency";
        case SweepAxis::window_T: return "window_T";
        case SweepAxis::gap: return "gap";
    }
    return "?";
}

struct SweepSpec {
    SweepAxis axis = SweepAxis::accel_group;
    std::vector<double> values;
};

/// Everything a config file can set. Unset optionals take subcommand defaults.
struct RunConfig {
    std::optional<double> accel_group;
    std::optional<int> mode_index;
    PhysicalConfig physical;  ///< cutoff / efficiency / box; accel and N copied in when resolved
    double regime_r1 = default_regime_r1;
    double regime_r2 = default_regime_r2;

    // udw
    std::optional<double> window_T;
    std::optional<double> window_tau0;
    double detector_xi0 = 0.0;
    std::optional<double> gap;
    double coupling = 1e-3;
    std::string monopole = "two_level";
    double band_spacing = 0.25;
    int band_levels = 161;
    std::optional<double> state_mean;
    std::optional<double> state_pair_re;
    std::optional<double> state_pair_im;

    // photocount
    std::optional<double> mean_override;

    // fig3
    std::vector<int> fig3_modes{800, 1200, 1600};

    std::optional<SweepSpec> sweep;
    std::vector<std::pair<std::string, std::string>> resolved;  ///< key/value pairs in file order

    PhysicalConfig point() const {
        if (!accel_group) throw config_error("missing required key: accel_group");
        if (!mode_index) throw config_error("missing required key: mode_index");
        PhysicalConfig c = physical;
        c.accel_group = *accel_group;
        c.mode_index = *mode_index;
        return validate(c);
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline double parse_double(const std::string& v, const std::string& key, int line) {
    // strtod rather than stod: denormal inputs (a -> 0 rows) must parse, not throw.
    char* end = nullptr;
    const double out = std::strtod(v.c_str(), &end);
    if (v.empty() || end != v.c_str() + v.size() || std::isinf(out))
        throw config_error("line " + std::to_string(line) + ": invalid number for " + key + ": '" + v + "'");
    return out;
}

inline int parse_int(const std::string& v, const std::string& key, int line) {
    const double d = parse_double(v, key, line);
    if (d != std::floor(d) || std::abs(d) > 2e9)
        throw config_error("line " + std::to_string(line) + ": " + key + " must be an integer");
    return static_cast<int>(d);
}

inline std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(trim(item));
    return out;
}

inline SweepAxis parse_axis(const std::string& v, int line) {
    if (v == "accel_group") return SweepAxis::accel_group;
    if (v == "mode_index") return SweepAxis::mode_index;
    if (v == "efficiency") return SweepAxis::efficiency;
    if (v == "window_T") return SweepAxis::window_T;
    if (v == "gap") return SweepAxis::gap;
    throw config_error("line " + std::to_string(line) + ": unknown sweep axis '" + v + "'");
}

inline void check_axis_value(SweepAxis axis, double v) {
    const bool ok = [&] {
        switch (axis) {
            case SweepAxis::accel_group: return v > 0.0;
            case SweepAxis::mode_index: return v >= 1.0 && v == std::floor(v);
            case SweepAxis::efficiency: return v > 0.0 && v <= 1.0;
            case SweepAxis::window_T: return v > 0.0;
            case SweepAxis::gap: return v > 0.0;
        }
        return false;
    }();
    if (!ok || !std::isfinite(v))
        throw config_error(std::string("sweep value out of range for ") + axis_name(axis));
}

}  // namespace detail

inline RunConfig parse_config(std::istream& in) {
    RunConfig cfg;
    std::map<std::string, int> seen;
    bool in_sweep = false;
    std::optional<SweepAxis> axis;
    std::optional<std::vector<double>> values;
    std::optional<double> smin, smax;
    std::optional<int> scount;
    std::string spacing = "linear";
    int sweep_line = 0;

    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        const std::string text = detail::trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (text.empty()) continue;
        if (text.front() == '[') {
            if (text != "[sweep]")
                throw config_error("line " + std::to_string(line) + ": unknown section " + text);
            if (in_sweep) throw config_error("line " + std::to_string(line) + ": duplicate [sweep] section");
            in_sweep = true;
            sweep_line = line;
            continue;
        }
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw config_error("line " + std::to_string(line) + ": expected key = value");
        const std::string key = detail::trim(text.substr(0, eq));
        const std::string val = detail::trim(text.substr(eq + 1));
        const std::string qualified = (in_sweep ? "sweep." : "") + key;
        if (seen.count(qualified))
            throw config_error("line " + std::to_string(line) + ": duplicate key " + key);
        seen[qualified] = line;
        auto num = [&] { return detail::parse_double(val, key, line); };
        auto integer = [&] { return detail::parse_int(val, key, line); };

        if (in_sweep) {
            if (key == "axis") axis = detail::parse_axis(val, line);
            else if (key == "values") {
                std::vector<double> v;
                for (const auto& item : detail::split_list(val)) v.push_back(detail::parse_double(item, key, line));
                values = v;
            } else if (key == "min") smin = num();
            else if (key == "max") smax = num();
            else if (key == "count") scount = integer();
            else if (key == "spacing") {
                if (val != "linear" && val != "log")
                    throw config_error("line " + std::to_string(line) + ": spacing must be linear or log");
                spacing = val;
            } else
                throw config_error("line " + std::to_string(line) + ": unknown key '" + key + "' in [sweep]");
            cfg.resolved.emplace_back(qualified, val);
            continue;
        }

        if (key == "accel_group") cfg.accel_group = num();
        else if (key == "mode_index") cfg.mode_index = integer();
        else if (key == "cutoff_scaled") cfg.physical.cutoff_scaled = num();
        else if (key == "efficiency") cfg.physical.efficiency = num();
        else if (key == "box_length_scaled") cfg.physical.box_length_scaled = num();
        else if (key == "regime_r1") cfg.regime_r1 = num();
        else if (key == "regime_r2") cfg.regime_r2 = num();
        else if (key == "window_T") cfg.window_T = num();
        else if (key == "window_tau0") cfg.window_tau0 = num();
        else if (key == "detector_xi0") cfg.detector_xi0 = num();
        else if (key == "gap") cfg.gap = num();
        else if (key == "coupling") cfg.coupling = num();
        else if (key == "monopole") {
            if (val != "two_level" && val != "photoelectric")
                throw config_error("line " + std::to_string(line) + ": monopole must be two_level or photoelectric");
            cfg.monopole = val;
        } else if (key == "band_spacing") cfg.band_spacing = num();
        else if (key == "band_levels") cfg.band_levels = integer();
        else if (key == "state_mean") cfg.state_mean = num();
        else if (key == "state_pair_re") cfg.state_pair_re = num();
        else if (key == "state_pair_im") cfg.state_pair_im = num();
        else if (key == "mean_override") cfg.mean_override = num();
        else if (key == "fig3_modes") {
            cfg.fig3_modes.clear();
            for (const auto& item : detail::split_list(val)) cfg.fig3_modes.push_back(detail::parse_int(item, key, line));
            if (cfg.fig3_modes.empty()) throw config_error("line " + std::to_string(line) + ": fig3_modes is empty");
        } else
            throw config_error("line " + std::to_string(line) + ": unknown key '" + key + "'");
        cfg.resolved.emplace_back(key, val);
    }

    if (in_sweep) {
        const std::string where = "[sweep] at line " + std::to_string(sweep_line) + ": ";
        if (!axis) throw config_error(where + "missing axis");
        SweepSpec sweep{*axis, {}};
        if (values) {
            if (smin || smax || scount) throw config_error(where + "give either values or min/max/count");
            sweep.values = *values;
        } else {
            if (!smin || !smax || !scount) throw config_error(where + "needs values or min, max and count");
            if (*scount < 1) throw config_error(where + "count must be positive");
            if (spacing == "log" && !(*smin > 0.0 && *smax > 0.0))
                throw config_error(where + "log spacing needs positive bounds");
            sweep.values = numerics::spaced(*smin, *smax, static_cast<std::size_t>(*scount), spacing == "log");
        }
        if (sweep.values.empty()) throw config_error(where + "no sweep values");
        for (double v : sweep.values) detail::check_axis_value(sweep.axis, v);
        cfg.sweep = sweep;
    }

    // Validate the physical fields that are present.
    try {
        PhysicalConfig probe = cfg.physical;
        probe.accel_group = cfg.accel_group.value_or(1.0);
        probe.mode_index = cfg.mode_index.value_or(1);
        validate(probe);
        if (cfg.mode_index) regime(probe, cfg.regime_r1, cfg.regime_r2);
    } catch (const domain_error& e) {
        throw config_error(e.what());
    }
    return cfg;
}

inline RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    return parse_config(in);
}

/// Scientific notation, 17 significant digits; "-inf", "inf", "nan" sentinels.
inline std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

inline std::string format_int(long long v) { return std::to_string(v); }

using Row = std::vector<std::string>;

struct Table {
    std::vector<std::string> header;
    std::vector<Row> rows;
};

/// Evaluates fn(i) for i in [0, count) on up to `workers` threads; results stay in index order.
template <typename Fn>
auto parallel_map(std::size_t count, int workers, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
    using R = decltype(fn(std::size_t{}));
    std::vector<std::optional<R>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    const auto threads = static_cast<std::size_t>(std::clamp<long long>(workers, 1, static_cast<long long>(std::max<std::size_t>(count, 1))));
    auto work = [&](std::size_t w) {
        for (std::size_t i = w; i < count; i += threads) {
            try {
                slots[i].emplace(fn(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (threads <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < threads; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    std::vector<R> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        out.push_back(std::move(*slots[i]));
    }
    return out;
}

struct RunOptions {
    int workers = 1;
    int n_max = 20;
};

namespace detail {

struct FieldPoint {
    PhysicalConfig config;
    OverlapSpectrum overlap;
    ThermalSpectrum thermal;
};

inline FieldPoint field_point(const PhysicalConfig& config) {
    FieldPoint p{config, {}, {}};
    const auto mode = build_mode(config);
    p.overlap = overlap_spectrum(mode, config);
    p.thermal = thermal_spectrum(p.overlap.wavenumbers, config.accel_group);
    return p;
}

/// Sweep points as resolved RunConfigs (a single point when no sweep is given).
inline std::vector<RunConfig> sweep_points(const RunConfig& cfg, std::initializer_list<SweepAxis> allowed,
                                           const std::string& subcommand) {
    if (!cfg.sweep) return {cfg};
    if (std::find(allowed.begin(), allowed.end(), cfg.sweep->axis) == allowed.end())
        throw config_error(subcommand + " cannot sweep " + axis_name(cfg.sweep->axis));
    std::vector<RunConfig> out;
    for (double v : cfg.sweep->values) {
        RunConfig c = cfg;
        switch (cfg.sweep->axis) {
            case SweepAxis::accel_group: c.accel_group = v; break;
            case SweepAxis::mode_index: c.mode_index = static_cast<int>(v); break;
            case SweepAxis::efficiency: c.physical.efficiency = v; break;
            case SweepAxis::window_T: c.window_T = v; break;
            case SweepAxis::gap: c.gap = v; break;
        }
        out.push_back(c);
    }
    return out;
}

inline std::string flag(bool b) { return b ? "1" : "0"; }

}  // namespace detail

inline Table run_mode(const RunConfig& cfg) {
    if (cfg.sweep) throw config_error("mode does not accept a [sweep] section");
    const auto p = detail::field_point(cfg.point());
    Table t{{"k", "weight", "re_f", "im_f", "log_abs2"}, {}};
    for (std::size_t i = 0; i < p.overlap.size(); ++i)
        t.rows.push_back({format_double(p.overlap.wavenumbers[i]), format_double(p.overlap.weights[i]),
                          format_double(p.overlap.coefficients[i].real()), format_double(p.overlap.coefficients[i].imag()),
                          format_double(p.overlap.log_abs2[i])});
    return t;
}

inline Table run_number(const RunConfig& cfg, const RunOptions& opt) {
    const auto points = detail::sweep_points(cfg, {SweepAxis::accel_group, SweepAxis::mode_index}, "number");
    Table t{{"accel_group", "N", "log_mean", "mean", "log_mean_asymptotic", "regime_flag"}, {}};
    t.rows = parallel_map(points.size(), opt.workers, [&](std::size_t i) {
        const auto p = detail::field_point(points[i].point());
        const auto r = mean_number(p.overlap, p.thermal, cfg.regime_r1, cfg.regime_r2);
        return Row{format_double(p.config.accel_group), format_int(p.config.mode_index), format_double(r.log_mean),
                   format_double(r.mean), format_double(r.log_mean_asymptotic), detail::flag(r.asymptotic_valid)};
    });
    return t;
}

inline Table run_photocount(const RunConfig& cfg, const RunOptions& opt) {
    const auto points =
        detail::sweep_points(cfg, {SweepAxis::accel_group, SweepAxis::mode_index, SweepAxis::efficiency}, "photocount");
    Table t{{"accel_group", "N", "efficiency", "effective_mean", "log_effective_mean", "n", "P", "log_P", "tail_mass"}, {}};
    auto blocks = parallel_map(points.size(), opt.workers, [&](std::size_t i) {
        const RunConfig& c = points[i];
        NumberResult number;
        std::string accel = "nan", modes = "nan";
        if (c.mean_override) {
            if (!(*c.mean_override >= 0.0)) throw config_error("mean_override must be non-negative");
            number = number_from_log(std::log(*c.mean_override));
            if (c.accel_group) accel = format_double(*c.accel_group);
            if (c.mode_index) modes = format_int(*c.mode_index);
        } else {
            const auto p = detail::field_point(c.point());
            number = mean_number(p.overlap, p.thermal, cfg.regime_r1, cfg.regime_r2);
            accel = format_double(p.config.accel_group);
            modes = format_int(p.config.mode_index);
        }
        const auto dist = photocount(number, c.physical.efficiency, opt.n_max);
        std::vector<Row> rows;
        for (std::size_t n = 0; n < dist.probs.size(); ++n)
            rows.push_back({accel, modes, format_double(c.physical.efficiency), format_double(dist.effective_mean),
                            format_double(dist.log_effective_mean), format_int(static_cast<long long>(n)),
                            format_double(dist.probs[n]), format_double(dist.log_probs[n]), format_double(dist.tail_mass)});
        return rows;
    });
    for (auto& b : blocks)
        for (auto& r : b) t.rows.push_back(std::move(r));
    return t;
}

inline Table run_temperature(const RunConfig& cfg, const RunOptions& opt) {
    const auto points = detail::sweep_points(cfg, {SweepAxis::accel_group, SweepAxis::mode_index}, "temperature");
    Table t{{"accel_group", "N", "mean_energy", "log_mean", "kT_est", "kT_unruh", "kT_approx", "regime_flag"}, {}};
    t.rows = parallel_map(points.size(), opt.workers, [&](std::size_t i) {
        const auto p = detail::field_point(points[i].point());
        const auto r = mean_number(p.overlap, p.thermal, cfg.regime_r1, cfg.regime_r2);
        const auto temp = temperature(p.overlap, r, p.config);
        return Row{format_double(p.config.accel_group), format_int(p.config.mode_index), format_double(temp.mean_energy),
                   format_double(r.log_mean), format_double(temp.kT_est), format_double(temp.kT_unruh),
                   format_double(temp.kT_approx), detail::flag(r.asymptotic_valid)};
    });
    return t;
}

inline TwoDetectorMoments entangle_point(const PhysicalConfig& config) {
    const auto p = detail::field_point(config);
    return two_detector_moments(p.overlap, mirror_mode(p.overlap), p.thermal);
}

inline Table run_entangle(const RunConfig& cfg, const RunOptions& opt) {
    const auto points = detail::sweep_points(cfg, {SweepAxis::accel_group, SweepAxis::mode_index}, "entangle");
    Table t{{"accel_group", "N", "log_n_I", "log_n_II", "log_cross", "cross_sign", "log_estimator_arg", "E", "duan_lhs",
             "duan_deviation", "deviation_sign", "entangled", "regime_flag"},
            {}};
    t.rows = parallel_map(points.size(), opt.workers, [&](std::size_t i) {
        const auto c = points[i].point();
        const auto m = entangle_point(c);
        return Row{format_double(c.accel_group), format_int(c.mode_index), format_double(m.log_n_I),
                   format_double(m.log_n_II), format_double(m.cross.log_abs), format_int(m.cross.sign),
                   format_double(m.log_estimator_arg), format_double(entanglement_estimator(m)),
                   format_double(m.duan_lhs), format_double(m.deviation.log_abs), format_int(m.deviation.sign),
                   detail::flag(m.entangled),
                   detail::flag(regime(c, cfg.regime_r1, cfg.regime_r2).asymptotic_valid)};
    });
    return t;
}

inline std::vector<double> default_fig3_accelerations() { return numerics::spaced(1.0 / 500.0, 1.0 / 20.0, 40, true); }

inline Table run_fig3(const RunConfig& cfg, const RunOptions& opt) {
    std::vector<double> accels = default_fig3_accelerations();
    if (cfg.sweep) {
        if (cfg.sweep->axis != SweepAxis::accel_group) throw config_error("fig3 only sweeps accel_group");
        accels = cfg.sweep->values;
    }
    std::vector<PhysicalConfig> points;
    for (int modes : cfg.fig3_modes)
        for (double a : accels) {
            PhysicalConfig c = cfg.physical;
            c.accel_group = a;
            c.mode_index = modes;
            points.push_back(validate(c));
        }
    Table t{{"accel_group", "N", "E", "log_estimator_arg", "duan_deviation", "regime_flag"}, {}};
    t.rows = parallel_map(points.size(), opt.workers, [&](std::size_t i) {
        const auto m = entangle_point(points[i]);
        return Row{format_double(points[i].accel_group), format_int(points[i].mode_index),
                   format_double(entanglement_estimator(m)), format_double(m.log_estimator_arg),
                   format_double(m.deviation.sign > 0 ? m.deviation.log_abs : std::nan("")),
                   detail::flag(regime(points[i], cfg.regime_r1, cfg.regime_r2).asymptotic_valid)};
    });
    return t;
}

inline Table run_udw(const RunConfig& cfg, const RunOptions& opt) {
    const auto points = detail::sweep_points(cfg, {SweepAxis::window_T, SweepAxis::gap, SweepAxis::accel_group,
                                                   SweepAxis::mode_index}, "udw");
    Table t{{"T", "gap", "rwa", "counter", "vacuum", "alpha", "p_click_factored", "p_click_full", "perturbativity",
             "log_p_click_factored"},
            {}};
    t.rows = parallel_map(points.size(), opt.workers, [&](std::size_t i) {
        const RunConfig& c = points[i];
        const auto p = detail::field_point(c.point());
        const double omega_c = p.overlap.mode.central_wavenumber;
        const double T = c.window_T.value_or(p.overlap.mode.sigma);
        WindowSpec window = WindowSpec::centered(T, c.detector_xi0);
        if (c.window_tau0) window.tau0 = *c.window_tau0;
        MonopoleSpec spec;
        if (c.monopole == "photoelectric") {
            if (c.band_levels < 1) throw config_error("band_levels must be positive");
            const double half = 0.5 * c.band_spacing * (c.band_levels - 1);
            spec = MonopoleSpec::photoelectric(c.gap.value_or(omega_c - half), c.band_spacing,
                                               static_cast<std::size_t>(c.band_levels), 1.0, c.coupling);
        } else {
            spec = MonopoleSpec::two_level(c.gap.value_or(omega_c), 1.0, c.coupling);
        }
        StateMoments state;
        if (c.state_mean) {
            if (!(*c.state_mean >= 0.0)) throw config_error("state_mean must be non-negative");
            state.log_mean = std::log(*c.state_mean);
        } else {
            state.log_mean = mean_number(p.overlap, p.thermal, cfg.regime_r1, cfg.regime_r2).log_mean;
        }
        state.pair_moment = std::complex<double>{c.state_pair_re.value_or(0.0), c.state_pair_im.value_or(0.0)};
        const auto b = click_probability(spec, window, p.overlap, state);
        return Row{format_double(T), format_double(spec.gaps.front()), format_double(b.rwa_term),
                   format_double(b.counter_term), format_double(b.vacuum_term), format_double(b.alpha),
                   format_double(b.click_prob), format_double(b.click_prob_full.value_or(std::nan(""))),
                   format_double(b.perturbativity), format_double(b.log_click_prob)};
    });
    return t;
}

inline const std::vector<std::string>& subcommands() {
    static const std::vector<std::string> names{"mode", "number", "photocount", "temperature", "entangle", "udw", "fig3"};
    return names;
}

inline Table run_table(const std::string& name, const RunConfig& cfg, const RunOptions& opt) {
    if (name == "mode") return run_mode(cfg);
    if (name == "number") return run_number(cfg, opt);
    if (name == "photocount") return run_photocount(cfg, opt);
    if (name == "temperature") return run_temperature(cfg, opt);
    if (name == "entangle") return run_entangle(cfg, opt);
    if (name == "udw") return run_udw(cfg, opt);
    if (name == "fig3") return run_fig3(cfg, opt);
    throw config_error("unknown subcommand: " + name);
}

/// '#' stamp lines (version + resolved config), header row, rows; LF endings.
inline void write_csv(std::ostream& out, const std::string& name, const RunConfig& cfg, const RunOptions& opt,
                      const Table& table) {
    out << "# accdet " << version << ' ' << name << '\n';
    out << "# config:";
    for (const auto& [k, v] : cfg.resolved) out << ' ' << k << '=' << v;
    out << '\n';
    out << "# n_max=" << opt.n_max << '\n';
    for (std::size_t i = 0; i < table.header.size(); ++i) out << (i ? "," : "") << table.header[i];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << '\n';
    }
}

/// gnuplot script drawing E against aL/c^2, one curve per N.
inline std::string fig3_plot_script(const std::string& csv_path, const std::vector<int>& modes) {
    std::ostringstream s;
    s << "# generated by accdet " << version << "\n"
      << "set datafile separator ','\n"
      << "set xlabel 'aL/c^2'\n"
      << "set ylabel 'E'\n"
      << "set logscale x\n"
      << "set key bottom right\n"
      << "plot \\\n";
    const char* styles[] = {"1", "2", "3", "4", "5"};
    for (std::size_t i = 0; i < modes.size(); ++i) {
        s << "  '" << csv_path << "' using 1:($2==" << modes[i] << " ? $3 : NaN) with lines dt "
          << styles[i % 5] << " title 'N=" << modes[i] << "'" << (i + 1 < modes.size() ? ", \\\n" : "\n");
    }
    return s.str();
}

/// Runs a subcommand and writes its CSV. Returns a process exit code.
inline int run_subcommand(const std::string& name, const RunConfig& cfg, const RunOptions& opt, std::ostream& out,
                          std::ostream& err) {
    try {
        const auto table = run_table(name, cfg, opt);
        write_csv(out, name, cfg, opt, table);
        if (name == "udw") {
            const double warn = UdwOptions{}.warn_threshold;
            for (const auto& row : table.rows)
                if (std::strtod(row[8].c_str(), nullptr) > warn)
                    err << "accdet udw: warning: perturbativity " << row[8] << " at T=" << row[0] << " exceeds " << warn << '\n';
        }
        return 0;
    } catch (const std::exception& e) {
        err << "accdet " << name << ": " << e.what() << '\n';
        return 1;
    }
}

}  // namespace accdet::cli
