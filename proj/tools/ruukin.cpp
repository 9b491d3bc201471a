#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ruukin/catalog.hpp"
#include "ruukin/constraints.hpp"
#include "ruukin/design.hpp"
#include "ruukin/grid.hpp"
#include "ruukin/kinematics.hpp"
#include "ruukin/singularity.hpp"
#include "ruukin/verify.hpp"
#include "ruukin/version.hpp"
#include "ruukin/workspace.hpp"

namespace {

using namespace ruukin;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFail = 2;
constexpr int kExitDegenerate = 3;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt(const mpq_class& q) { return q.get_str(); }

// Pose/input component: exact rational when the token is an integer or p/q,
// else the exact binary rational of the parsed double.
mpq_class token_to_mpq(const std::string& tok) {
    if (tok.find('/') != std::string::npos) {
        mpq_class q;
        if (q.set_str(tok, 10) != 0) throw std::invalid_argument("malformed rational '" + tok + "'");
        q.canonicalize();
        return q;
    }
    if (tok.find_first_of(".eE") == std::string::npos) {
        mpq_class q;
        if (q.set_str(tok, 10) == 0) {
            q.canonicalize();
            return q;
        }
    }
    std::size_t used = 0;
    const double d = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("malformed number '" + tok + "'");
    return mpq_class(d);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

std::array<mpq_class, 3> parse_triple_exact(const std::string& s, const char* what) {
    const auto parts = split(s, ',');
    if (parts.size() != 3)
        throw std::invalid_argument(std::string(what) + " needs exactly three comma-separated values");
    return {token_to_mpq(parts[0]), token_to_mpq(parts[1]), token_to_mpq(parts[2])};
}

std::array<double, 3> parse_triple_double(const std::string& s, const char* what) {
    const auto q = parse_triple_exact(s, what);
    return {q[0].get_d(), q[1].get_d(), q[2].get_d()};
}

std::array<AxisSpec, 3> parse_grid(const std::string& s) {
    const auto specs = split(s, ',');
    if (specs.size() != 1 && specs.size() != 3)
        throw std::invalid_argument("--grid needs one or three min:max:count specs");
    std::array<AxisSpec, 3> axes;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto parts = split(specs[specs.size() == 1 ? 0 : i], ':');
        if (parts.size() != 3) throw std::invalid_argument("grid spec must be min:max:count");
        AxisSpec ax;
        ax.min = std::stod(parts[0]);
        ax.max = std::stod(parts[1]);
        const long n = std::stol(parts[2]);
        if (n < 1) throw std::invalid_argument("grid count must be at least 1");
        ax.count = static_cast<std::size_t>(n);  // count 1 pins the axis at min
        axes[i] = ax;
    }
    return axes;
}

// Output sink: --out file or stdout.
struct Sink {
    std::ofstream file;
    std::ostream* os = &std::cout;
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw std::invalid_argument("cannot open output file '" + path + "'");
            os = &file;
        }
    }
    std::ostream& out() { return *os; }
};

struct CommonOpts {
    std::string design_path;
    std::string out_path;
    std::string format;
    double tol = 0;
};

Design load_design(const std::string& path, const Design& fallback) {
    if (path.empty()) return fallback;
    return Design::load(path);
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
            out += c;
        } else if (c == '\n') {
            out += "\\n";
        } else {
            out += c;
        }
    }
    return out;
}

int cmd_constraints(const CommonOpts& opt) {
    const Design d = load_design(opt.design_path, Design::pars());
    Sink sink(opt.out_path);
    std::ostream& os = sink.out();
    const ConstraintSystem cs = ConstraintSystem::for_design(d);
    const auto wt = translational_system(d);
    const WorkspaceSystem ws = eliminate_inputs(cs);

    const std::array<std::pair<std::string, const MPoly*>, 14> sections{{
        {"g1", &cs.g[0]}, {"g2", &cs.g[1]}, {"g3", &cs.g[2]}, {"g4", &cs.g[3]},
        {"g5", &cs.g[4]}, {"g6", &cs.g[5]}, {"g7", &cs.g[6]}, {"g8", &cs.g[7]},
        {"wt1", &wt[0]}, {"wt2", &wt[1]}, {"wt3", &wt[2]},
        {"g12", &ws.g12}, {"g34", &ws.g34}, {"g56", &ws.g56},
    }};
    if (opt.format == "json") {
        os << "{\n  \"design\": \"" << d.str() << "\"";
        for (const auto& [name, p] : sections)
            os << ",\n  \"" << name << "\": \"" << json_escape(p->str()) << "\"";
        os << "\n}\n";
        return kExitOk;
    }
    if (opt.format != "dump" && !opt.format.empty()) {
        std::cerr << "constraints: supported formats are dump and json\n";
        return kExitUsage;
    }
    os << "# ruukin constraints " << kToolVersion << " | " << d.str() << "\n";
    for (const auto& [name, p] : sections) {
        os << "[" << name << "]\n";
        p->dump(os);
    }
    return kExitOk;
}

int cmd_ik(const CommonOpts& opt, const std::string& pose) {
    const Design d = load_design(opt.design_path, Design::pars());
    const auto y = parse_triple_exact(pose, "--pose");
    const IkSolution sol = ik(d, y);
    Sink sink(opt.out_path);
    std::ostream& os = sink.out();
    os << "{\n  \"design\": \"" << d.str() << "\",\n  \"pose\": [" << fmt(y[0]) << ", "
       << fmt(y[1]) << ", " << fmt(y[2]) << "],\n  \"limbs\": [\n";
    bool degenerate = false;
    for (int i = 0; i < 3; ++i) {
        const IkLimb& l = sol.limb[i];
        degenerate = degenerate || l.identically_zero;
        os << "    {\"roots\": [";
        for (std::size_t k = 0; k < l.roots.size(); ++k)
            os << (k ? ", " : "") << fmt(l.roots[k]);
        os << "], \"double_root\": " << (l.double_root ? "true" : "false")
           << ", \"linear\": " << (l.linear ? "true" : "false")
           << ", \"identically_zero\": " << (l.identically_zero ? "true" : "false") << "}"
           << (i < 2 ? ",\n" : "\n");
    }
    os << "  ],\n  \"combinations\": " << sol.combinations() << "\n}\n";
    return degenerate ? kExitDegenerate : kExitOk;
}

int cmd_fk(const CommonOpts& opt, const std::string& inputs) {
    const Design d = load_design(opt.design_path, Design::pars());
    const auto t = parse_triple_double(inputs, "--inputs");
    const FkSolution sol = fk(d, t);
    Sink sink(opt.out_path);
    std::ostream& os = sink.out();
    const char* tag = sol.tag == FkSolution::Tag::self_motion_circle ? "self-motion-circle"
                      : sol.tag == FkSolution::Tag::inconsistent     ? "inconsistent"
                                                                     : "none";
    os << "{\n  \"design\": \"" << d.str() << "\",\n  \"inputs\": [" << fmt(t[0]) << ", "
       << fmt(t[1]) << ", " << fmt(t[2]) << "],\n  \"degeneration\": \"" << tag << "\",\n";
    if (sol.tag == FkSolution::Tag::self_motion_circle)
        os << "  \"circle_center\": [" << fmt(sol.circle_center[0]) << ", "
           << fmt(sol.circle_center[1]) << ", " << fmt(sol.circle_center[2])
           << "],\n  \"circle_radius_sq\": " << fmt(sol.circle_radius_sq)
           << ",\n  \"full_sphere\": " << (sol.full_sphere ? "true" : "false") << ",\n";
    os << "  \"points\": [";
    for (std::size_t k = 0; k < sol.points.size(); ++k)
        os << (k ? ", " : "") << "[" << fmt(sol.points[k][0]) << ", " << fmt(sol.points[k][1])
           << ", " << fmt(sol.points[k][2]) << "]";
    os << "]\n}\n";
    if (sol.tag == FkSolution::Tag::self_motion_circle && sol.points.empty())
        return kExitDegenerate;
    return kExitOk;
}

int cmd_classify(const CommonOpts& opt, const std::string& pose, const std::string& inputs) {
    const Design d = load_design(opt.design_path, Design::pars());
    const auto y = parse_triple_double(pose, "--pose");
    const auto t = parse_triple_double(inputs, "--inputs");
    const double tol = opt.tol > 0 ? opt.tol : 1e-8;
    SingularityReport rep;
    try {
        rep = classify(d, y, t, tol);
    } catch (const std::domain_error& e) {
        std::cerr << "classify: " << e.what() << "\n";
        return kExitUsage;
    }
    Sink sink(opt.out_path);
    std::ostream& os = sink.out();
    os << "{\n  \"design\": \"" << d.str() << "\",\n  \"tol\": " << fmt(rep.tol) << ",\n";
    os << "  \"wt_residual\": [" << fmt(rep.wt_residual[0]) << ", " << fmt(rep.wt_residual[1])
       << ", " << fmt(rep.wt_residual[2]) << "],\n";
    os << "  \"input_singular\": [";
    bool first = true;
    for (int i = 0; i < 3; ++i)
        if (rep.input_singular[i]) {
            os << (first ? "" : ", ") << (i + 1);
            first = false;
        }
    os << "],\n  \"p_residual\": [" << fmt(rep.p_residual[0]) << ", " << fmt(rep.p_residual[1])
       << ", " << fmt(rep.p_residual[2]) << "],\n";
    os << "  \"output_singular\": " << (rep.output_singular ? "true" : "false")
       << ",\n  \"s_residuals\": [" << fmt(rep.s_small_residual) << ", "
       << fmt(rep.s_large_residual) << "],\n";
    os << "  \"self_motion\": " << (rep.self_motion ? "true" : "false") << "\n}\n";
    return kExitOk;
}

int cmd_surface(const CommonOpts& opt, const std::string& kind, const std::string& grid) {
    const Design d = load_design(opt.design_path, Design::pars());
    const auto axes = parse_grid(grid);

    MPoly field;
    bool joint_space = false;
    if (kind == "input-torus") {
        field = torus_equation(1, d);
    } else if (kind == "output-eliminant") {
        field = output_eliminant(d);
    } else if (kind == "joint-input" || kind == "joint-output") {
        joint_space = true;
        if (!(d == Design::pars())) {
            std::cerr << "surface: the joint-space catalogs are printed for the bundled design "
                      << Design::pars().str() << "; got " << d.str() << "\n";
            return kExitUsage;
        }
        field = kind == "joint-input" ? catalog::joint_input_deg12()
                                      : catalog::joint_output_deg12();
    } else {
        std::cerr << "surface: unknown kind '" << kind
                  << "' (input-torus|output-eliminant|joint-input|joint-output)\n";
        return kExitUsage;
    }

    std::array<double, kNumVars> base{};
    d.fill(base);
    const int v0 = joint_space ? VT1 : VY1;
    const GridFn fn = [&](const std::array<double, 3>& v) {
        std::array<double, kNumVars> pt = base;
        pt[v0] = v[0];
        pt[v0 + 1] = v[1];
        pt[v0 + 2] = v[2];
        return field.eval_double(pt);
    };
    const std::vector<double> values = sample_grid_parallel(axes, fn);

    Sink sink(opt.out_path);
    std::ostream& os = sink.out();
    const std::size_t n0 = axes[0].count, n1 = axes[1].count, n2 = axes[2].count;
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) {
        return values[(i * n1 + j) * n2 + k];
    };
    auto crossing = [&](std::size_t i, std::size_t j, std::size_t k) {
        const double v = at(i, j, k);
        if (v == 0) return true;
        const bool s = std::signbit(v);
        if (i > 0 && at(i - 1, j, k) != 0 && std::signbit(at(i - 1, j, k)) != s) return true;
        if (j > 0 && at(i, j - 1, k) != 0 && std::signbit(at(i, j - 1, k)) != s) return true;
        if (k > 0 && at(i, j, k - 1) != 0 && std::signbit(at(i, j, k - 1)) != s) return true;
        return false;
    };

    const std::string axis_names = joint_space ? "t1,t2,t3" : "y1,y2,y3";
    if (opt.format == "json") {
        os << "{\n  \"design\": \"" << d.str() << "\",\n  \"surface\": \"" << kind
           << "\",\n  \"axes\": \"" << axis_names << "\",\n  \"grid\": [";
        for (int i = 0; i < 3; ++i)
            os << (i ? ", " : "") << "[" << fmt(axes[i].min) << ", " << fmt(axes[i].max) << ", "
               << axes[i].count << "]";
        os << "],\n  \"values\": [";
        for (std::size_t i = 0; i < values.size(); ++i)
            os << (i ? ", " : "") << fmt(values[i]);
        os << "]\n}\n";
        return kExitOk;
    }
    if (!opt.format.empty() && opt.format != "csv") {
        std::cerr << "surface: supported formats are csv and json\n";
        return kExitUsage;
    }
    os << "# design=" << d.str() << "; surface=" << kind << "; grid=";
    for (int i = 0; i < 3; ++i)
        os << (i ? "," : "") << fmt(axes[i].min) << ":" << fmt(axes[i].max) << ":"
           << axes[i].count;
    os << "\n" << axis_names << ",value,zero_crossing\n";
    for (std::size_t i = 0; i < n0; ++i)
        for (std::size_t j = 0; j < n1; ++j)
            for (std::size_t k = 0; k < n2; ++k)
                os << fmt(axis_value(axes[0], i)) << "," << fmt(axis_value(axes[1], j)) << ","
                   << fmt(axis_value(axes[2], k)) << "," << fmt(at(i, j, k)) << ","
                   << (crossing(i, j, k) ? 1 : 0) << "\n";
    return kExitOk;
}

int cmd_selfmotion(const CommonOpts& opt) {
    const Design d = load_design(opt.design_path, Design::pars());
    const SelfMotion sm = self_motion(d);
    Sink sink(opt.out_path);
    std::ostream& os = sink.out();
    os << "{\n  \"design\": \"" << d.str() << "\",\n  \"radius_sq\": \"" << fmt(sm.radius_sq)
       << "\",\n  \"exists\": " << (sm.exists ? "true" : "false")
       << ",\n  \"r0_equals_r1\": " << (sm.r0_equals_r1 ? "true" : "false")
       << ",\n  \"inputs_complex\": " << (sm.inputs_complex ? "true" : "false");
    if (!sm.inputs_complex) {
        os << ",\n  \"fixed_inputs\": [";
        if (sm.inputs_rational)
            os << "\"" << fmt(sm.fixed_inputs_exact[0]) << "\", \""
               << fmt(sm.fixed_inputs_exact[1]) << "\"";
        else
            os << fmt(sm.fixed_inputs[0]) << ", " << fmt(sm.fixed_inputs[1]);
        os << "]";
    }
    os << "\n}\n";
    return kExitOk;
}

int cmd_curve(const CommonOpts& opt, int rotate, const std::string& grid) {
    if (!opt.design_path.empty()) {
        const Design d = Design::load(opt.design_path);
        if (!(d == Design::pars2())) {
            std::cerr << "curve: the transition curve is computed for the bundled design "
                      << Design::pars2().str() << "; got " << d.str() << "\n";
            return kExitUsage;
        }
    }
    AxisSpec ax{-1.0, 1.0, 41};
    if (!grid.empty()) {
        const auto parts = split(grid, ':');
        if (parts.size() != 3) throw std::invalid_argument("grid spec must be min:max:count");
        ax.min = std::stod(parts[0]);
        ax.max = std::stod(parts[1]);
        const long n = std::stol(parts[2]);
        if (n < 2) throw std::invalid_argument("grid count must be at least 2");
        ax.count = static_cast<std::size_t>(n);
    }
    Sink sink(opt.out_path);
    std::ostream& os = sink.out();
    if (opt.format == "json") {
        os << "{\n  \"design\": \"" << Design::pars2().str() << "\",\n  \"rotate\": " << rotate
           << ",\n  \"points\": [\n";
        for (std::size_t i = 0; i < ax.count; ++i) {
            const CurvePoint cp = transition_curve_point(axis_value(ax, i), rotate);
            os << "    {\"t\": " << fmt(cp.t) << ", \"h\": " << fmt(cp.h)
               << ", \"valid\": " << (cp.valid ? "true" : "false") << ", \"pose\": [";
            for (int c = 0; c < 8; ++c) os << (c ? ", " : "") << fmt(cp.pose.c[c]);
            os << "]}" << (i + 1 < ax.count ? ",\n" : "\n");
        }
        os << "  ]\n}\n";
        return kExitOk;
    }
    if (!opt.format.empty() && opt.format != "csv") {
        std::cerr << "curve: supported formats are csv and json\n";
        return kExitUsage;
    }
    os << "# design=" << Design::pars2().str() << "; curve=transition; rotate=" << rotate
       << "; grid=" << fmt(ax.min) << ":" << fmt(ax.max) << ":" << ax.count << "\n";
    os << "t,h,valid,x0,x1,x2,x3,y0,y1,y2,y3\n";
    for (std::size_t i = 0; i < ax.count; ++i) {
        const CurvePoint cp = transition_curve_point(axis_value(ax, i), rotate);
        os << fmt(cp.t) << "," << fmt(cp.h) << "," << (cp.valid ? 1 : 0);
        for (int c = 0; c < 8; ++c) os << "," << fmt(cp.pose.c[c]);
        os << "\n";
    }
    return kExitOk;
}

int cmd_verify(const CommonOpts& opt, bool as_json) {
    const Design d = load_design(opt.design_path, Design::pars());
    const auto results = verify_suite(d);
    Sink sink(opt.out_path);
    std::ostream& os = sink.out();
    if (as_json || opt.format == "json") {
        os << "{\n  \"design\": \"" << d.str() << "\",\n  \"checks\": [\n";
        for (std::size_t i = 0; i < results.size(); ++i)
            os << "    {\"name\": \"" << results[i].name << "\", \"pass\": "
               << (results[i].pass ? "true" : "false") << ", \"detail\": \""
               << json_escape(results[i].detail) << "\"}" << (i + 1 < results.size() ? ",\n" : "\n");
        os << "  ],\n  \"all_passed\": " << (all_passed(results) ? "true" : "false") << "\n}\n";
    } else {
        os << "verification of design " << d.str() << "\n";
        for (const auto& r : results) {
            os << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
            if (!r.detail.empty()) os << "  (" << r.detail << ")";
            os << "\n";
        }
        os << (all_passed(results) ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    }
    return all_passed(results) ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact kinematic analysis of a 3-RUU parallel manipulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    CommonOpts opt;
    std::string pose, inputs, grid, kind;
    int rotate = 0;
    bool as_json = false;

    auto add_common = [&](CLI::App* sub, bool with_format = true) {
        sub->add_option("--design", opt.design_path, "design JSON file (default: bundled pars)");
        sub->add_option("--out", opt.out_path, "output file (default: stdout)");
        if (with_format) sub->add_option("--format", opt.format, "output format");
        sub->add_option("--tol", opt.tol, "tolerance")->check(CLI::PositiveNumber);
    };

    CLI::App* c_constraints =
        app.add_subcommand("constraints", "emit the constraint, translational and workspace systems");
    add_common(c_constraints);

    CLI::App* c_ik = app.add_subcommand("ik", "inverse kinematics at a translational position");
    add_common(c_ik);
    c_ik->add_option("--pose", pose, "y1,y2,y3")->required();

    CLI::App* c_fk = app.add_subcommand("fk", "forward kinematics for fixed inputs");
    add_common(c_fk);
    c_fk->add_option("--inputs", inputs, "t1,t2,t3")->required();

    CLI::App* c_classify = app.add_subcommand("classify", "singularity classification of a configuration");
    add_common(c_classify);
    c_classify->add_option("--pose", pose, "y1,y2,y3")->required();
    c_classify->add_option("--inputs", inputs, "t1,t2,t3")->required();

    CLI::App* c_surface = app.add_subcommand("surface", "sample a singularity surface on a grid");
    add_common(c_surface);
    c_surface->add_option("kind", kind, "input-torus|output-eliminant|joint-input|joint-output")
        ->required();
    c_surface->add_option("--grid", grid, "min:max:count[,min:max:count,min:max:count]")->required();

    CLI::App* c_selfmotion = app.add_subcommand("selfmotion", "self-motion circle of a design");
    add_common(c_selfmotion);

    CLI::App* c_curve = app.add_subcommand("curve", "transition curve of the bundled design pars2");
    add_common(c_curve);
    c_curve->add_option("--rotate", rotate, "platform symmetry copy (0, 1, 2)")
        ->check(CLI::Range(0, 2));
    c_curve->add_option("--grid", grid, "min:max:count over the curve parameter");

    CLI::App* c_verify = app.add_subcommand("verify", "run the full identity suite");
    add_common(c_verify);
    c_verify->add_flag("--json", as_json, "machine-readable results");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(c_constraints)) return cmd_constraints(opt);
        if (app.got_subcommand(c_ik)) return cmd_ik(opt, pose);
        if (app.got_subcommand(c_fk)) return cmd_fk(opt, inputs);
        if (app.got_subcommand(c_classify)) return cmd_classify(opt, pose, inputs);
        if (app.got_subcommand(c_surface)) return cmd_surface(opt, kind, grid);
        if (app.got_subcommand(c_selfmotion)) return cmd_selfmotion(opt);
        if (app.got_subcommand(c_curve)) return cmd_curve(opt, rotate, grid);
        if (app.got_subcommand(c_verify)) return cmd_verify(opt, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
