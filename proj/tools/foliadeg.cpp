// Command-line driver: degrees of Legendrian and pencil-tangent foliations of P^3 by localization.

#include "foliadeg/bott.hpp"
#include "foliadeg/contact_limit.hpp"
#include "foliadeg/pencil.hpp"
#include "foliadeg/polynomial_lab.hpp"
#include "foliadeg/reports.hpp"
#include "foliadeg/sections.hpp"
#include "foliadeg/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace foliadeg;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitBadWeights = 2;

struct Common {
    std::string weights = "0,2,7,10";
    std::string format = "text";
    unsigned jobs = 1;
    std::string out;
};

void add_common(CLI::App* cmd, Common& c, bool with_jobs = true) {
    cmd->add_option("--weights", c.weights, "torus weights a,b,c,d")->capture_default_str();
    cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    if (with_jobs) cmd->add_option("--jobs", c.jobs, "worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
    cmd->add_option("--out", c.out, "also write the JSON report to FILE");
}

void emit(const Common& c, const std::string& text, const std::string& json) {
    std::cout << (c.format == "json" ? json + "\n" : text);
    if (!c.out.empty()) {
        std::ofstream f(c.out);
        if (!f) throw std::runtime_error("cannot write " + c.out);
        f << json << '\n';
    }
}

MethodChoice parse_method(const std::string& m) {
    if (m == "image") return MethodChoice::Image;
    if (m == "kernel") return MethodChoice::Kernel;
    if (m == "both") return MethodChoice::Both;
    return MethodChoice::Auto;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int print_checks(const std::vector<Check>& checks) {
    int failed = 0;
    for (const auto& c : checks) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << "  (" << c.detail << ")\n";
        failed += c.passed ? 0 : 1;
    }
    std::cout << (checks.size() - static_cast<std::size_t>(failed)) << "/" << checks.size() << " checks passed\n";
    return failed == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Degrees of Legendrian and pencil-tangent foliations of P^3 via torus localization"};
    app.require_subcommand(1);

    Common common;
    int degree = 2;
    std::string method = "auto";

    auto* leg = app.add_subcommand("legendrian", "degree of the variety of Legendrian foliations");
    leg->add_option("--degree", degree, "foliation degree d >= 2")->required();
    leg->add_option("--method", method, "limit-fiber method")
        ->check(CLI::IsMember({"image", "kernel", "both", "auto"}))
        ->capture_default_str();
    add_common(leg, common);

    auto* pen = app.add_subcommand("pencil", "degree of the variety of foliations tangent to a pencil of planes");
    pen->add_option("--degree", degree, "foliation degree d >= 2")->required();
    add_common(pen, common, false);

    std::string pair_text = "3,4";
    auto* fib = app.add_subcommand("fiber", "limit fiber weights at one fixed point of P^5");
    fib->add_option("--degree", degree, "foliation degree d >= 1")->required();
    fib->add_option("--pair", pair_text, "fixed point i,j (1-based)")->capture_default_str();
    fib->add_option("--method", method, "limit-fiber method")
        ->check(CLI::IsMember({"image", "kernel"}))
        ->capture_default_str();
    add_common(fib, common);

    auto* bas = app.add_subcommand("basis", "weight eigenbasis of the divergence-free fields of degree d");
    bas->add_option("--degree", degree, "degree d >= 1")->required();
    bas->add_option("--weights", common.weights, "torus weights a,b,c,d")->capture_default_str();

    bool example = false;
    std::string constants;
    auto* ver = app.add_subcommand("verify", "recompute the d=2 worked example against embedded values");
    ver->add_flag("--example", example, "also check the contact-form tangency example");
    ver->add_option("--constants", constants, "JSON file overriding embedded reference values");
    ver->add_option("--jobs", common.jobs, "worker threads")->check(CLI::Range(1u, 256u));

    std::string family = "legendrian";
    int d_min = 2, d_max = 17;
    bool partial = false;
    auto* itp = app.add_subcommand("interpolate", "interpolate a degree family and compare with its closed form");
    itp->add_option("--family", family, "legendrian or pencil")
        ->check(CLI::IsMember({"legendrian", "pencil"}))
        ->capture_default_str();
    itp->add_option("--min", d_min, "smallest degree")->capture_default_str();
    itp->add_option("--max", d_max, "largest degree")->capture_default_str();
    itp->add_flag("--partial", partial, "compare pointwise with the closed form instead of interpolating");
    add_common(itp, common);

    CLI11_PARSE(app, argc, argv);

    WeightSystem w;
    try {
        w = parse_weights(common.weights);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadWeights;
    }

    try {
        if (*leg) {
            const auto r = legendrian_degree(degree, w, {parse_method(method), common.jobs});
            emit(common, to_text(r), to_json(r));
        } else if (*pen) {
            const auto r = pencil_degree(degree, w);
            emit(common, to_text(r), to_json(r));
        } else if (*fib) {
            const int comma = static_cast<int>(pair_text.find(','));
            const IndexPair p = make_pair_of(std::stoi(pair_text.substr(0, comma)) - 1,
                                             std::stoi(pair_text.substr(static_cast<std::size_t>(comma) + 1)) - 1);
            const auto fm = method == "kernel" ? FiberMethod::KernelLimit : FiberMethod::ImageFiber;
            const auto r = limit_fiber_weights({p}, degree, w, fm, {common.jobs});
            std::ostringstream text;
            text << "fixed point " << to_string(p) << " d=" << degree << " method=" << to_string(r.method) << '\n';
            text << "  quotient weights (" << r.quotient_weights.size() << "):";
            for (long x : r.quotient_weights) text << ' ' << x;
            text << "\n  kernel weights (" << r.kernel_weights.size() << "):";
            for (long x : r.kernel_weights) text << ' ' << x;
            text << "\n  e5(quotient) = " << to_string(elementary_symmetric(5, r.quotient_weights)) << '\n';
            emit(common, text.str(), to_json(r));
        } else if (*bas) {
            const auto b = build_phi_basis(degree, w);
            std::cout << "basis of size " << b.size() << " for d=" << degree << " weights=" << to_string(w) << '\n';
            for (const auto& f : b.fields) std::cout << "  [" << f.weight << "]  " << render(f) << '\n';
        } else if (*ver) {
            const ReferenceValues ref =
                constants.empty() ? embedded_reference_values() : reference_values_from_json(read_file(constants));
            auto checks = verify(ref, common.jobs);
            if (example) checks.push_back(verify_tangency_example());
            return print_checks(checks);
        } else if (*itp) {
            const Family f = parse_family(family);
            if (partial) {
                const auto matches = pointwise_matches(f, d_min, d_max, w, {MethodChoice::Auto, common.jobs});
                int ok = 0;
                nlohmann::ordered_json j = nlohmann::ordered_json::array();
                std::ostringstream text;
                for (const auto& m : matches) {
                    ok += m.matches() ? 1 : 0;
                    text << (m.matches() ? "match    " : "MISMATCH ") << "d=" << m.d << "  computed "
                         << to_string(m.computed) << "  closed form " << to_string(m.expected) << '\n';
                    j.push_back({{"d", m.d},
                                 {"computed", to_string(m.computed)},
                                 {"closed_form", to_string(m.expected)},
                                 {"match", m.matches()}});
                }
                text << ok << "/" << matches.size() << " pointwise matches\n";
                emit(common, text.str(), j.dump());
                return ok == static_cast<int>(matches.size()) ? kExitOk : kExitFailure;
            }
            const auto r = interpolate_family(f, d_min, d_max, w, {MethodChoice::Auto, common.jobs});
            emit(common, to_text(r), to_json(r));
            return r.matches_closed_form ? kExitOk : kExitFailure;
        }
    } catch (const InadmissibleWeights& e) {
        std::cerr << "error: inadmissible weights: " << e.what() << '\n';
        return kExitBadWeights;
    } catch (const NonIntegralTotal& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}
