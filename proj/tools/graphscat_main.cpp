// graphscat: scattering analysis on a weighted graph with one semi-infinite
// tail. Subcommands: validate, reflect, bound, winding, verify, reduce.
//
// Exit codes shared by every subcommand:
//   0  success / all identities hold
//   1  identity violation or method disagreement
//   2  input or validation error
//   3  numerical ambiguity flag (near-boundary root, census disagreement,
//      refinement exhaustion)

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "graphscat/errors.hpp"
#include "graphscat/instance_io.hpp"
#include "graphscat/phase_winding.hpp"
#include "graphscat/verify.hpp"

namespace {

using namespace graphscat;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitAmbiguity = 3;

int classify_error(const Error& e) {
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const NonHermitian*>(&e) ||
        dynamic_cast<const NonRealSelfLoop*>(&e) || dynamic_cast<const NonFinite*>(&e) ||
        dynamic_cast<const PreconditionViolated*>(&e))
        return kExitInput;
    return kExitAmbiguity;
}

struct ReflectArgs {
    std::string path;
    int samples = 360;
    std::string out;
};

int cmd_validate(const std::string& path) {
    const InstanceFile f = read_instance(path);
    const SpectralData sd = spectral_decompose(f.spec);
    std::printf("ok: m=%zu |b|=%.12g", f.spec.m(), f.spec.b_norm());
    if (!sd.lines.empty())
        std::printf(" spectrum=[%.12g, %.12g]", sd.lines.front().lambda,
                    sd.lines.back().lambda);
    std::printf("\n");
    return kExitOk;
}

int cmd_reflect(const ReflectArgs& args) {
    const InstanceFile f = read_instance(args.path);
    if (args.samples < 2) throw ParseError("--samples must be at least 2");
    const SpectralData sd = spectral_decompose(f.spec);
    const QRational q = build_Q_rational(f.spec, sd);
    const ReflectionRational rr = build_R_rational(f.spec, sd, q);
    // N uniform rows spanning the closed loop; the tracker runs on a grid
    // refined by c so its 16-interval floor never coarsens small requests
    int n_init = args.samples - 1, stride = 1;
    while (n_init < 16) {
        n_init *= 2;
        stride *= 2;
    }
    const PhaseTrace trace = winding_by_phase_tracking(rr, n_init);

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!args.out.empty()) {
        file.open(args.out);
        if (!file) throw ParseError("cannot open " + args.out + " for writing");
        os = &file;
    }
    (*os) << "k,re_R,im_R,phase_unwrapped\n";
    char buf[160];
    int ordinal = 0;
    for (const auto& s : trace.samples) {
        if (!s.on_initial_grid) continue;
        if (ordinal++ % stride != 0) continue;
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", s.k, s.r.real(),
                      s.r.imag(), s.theta);
        (*os) << buf;
    }
    return kExitOk;
}

int cmd_bound(const std::string& path, bool json) {
    const InstanceFile f = read_instance(path);
    const BoundStateCensus census = classify(f.spec);
    if (json) {
        std::printf("{\n  \"m\": %zu,\n  \"n_b\": %d,\n  \"n_h\": %d,\n  \"n_c\": %d,\n",
                    census.m, census.n_b, census.n_h, census.n_c);
        std::printf("  \"evanescent\": [");
        for (std::size_t i = 0; i < census.evanescent.size(); ++i) {
            const auto& st = census.evanescent[i];
            std::printf("%s{\"sign\": %d, \"kappa\": %.17g, \"energy\": %.17g}",
                        i ? ", " : "", st.sign, st.kappa, st.energy);
        }
        std::printf("],\n  \"half_bound\": {\"plus\": %s, \"minus\": %s},\n",
                    census.half_bound.at_plus_one ? "true" : "false",
                    census.half_bound.at_minus_one ? "true" : "false");
        std::printf("  \"confined\": [");
        for (std::size_t i = 0; i < census.confined.size(); ++i)
            std::printf("%s%.17g", i ? ", " : "", census.confined[i].lambda);
        std::printf("]\n}\n");
        return kExitOk;
    }
    std::printf("m=%zu  n_b=%d  n_h=%d  n_c=%d\n", census.m, census.n_b, census.n_h,
                census.n_c);
    for (const auto& st : census.evanescent)
        std::printf("evanescent: sign=%+d kappa=%.12g energy=%.12g\n", st.sign, st.kappa,
                    st.energy);
    if (census.half_bound.at_plus_one) std::printf("half-bound at +1\n");
    if (census.half_bound.at_minus_one) std::printf("half-bound at -1\n");
    for (const auto& st : census.confined)
        std::printf("confined: lambda=%.12g\n", st.lambda);
    return kExitOk;
}

int cmd_winding(const std::string& path, const std::string& method, bool json) {
    const InstanceFile f = read_instance(path);
    const SpectralData sd = spectral_decompose(f.spec);
    const QRational q = build_Q_rational(f.spec, sd);
    std::optional<int> w_phase, w_roots;
    if (method == "phase" || method == "both")
        w_phase = winding_by_phase_tracking(f.spec, sd, q, 512).winding;
    if (method == "roots" || method == "both")
        w_roots = winding_by_argument_principle(f.spec, sd, q).winding;
    if (json) {
        std::printf("{");
        if (w_phase) std::printf("\"w_phase\": %d", *w_phase);
        if (w_phase && w_roots) std::printf(", ");
        if (w_roots) std::printf("\"w_roots\": %d", *w_roots);
        std::printf("}\n");
    } else {
        if (w_phase) std::printf("w_phase=%d\n", *w_phase);
        if (w_roots) std::printf("w_roots=%d\n", *w_roots);
    }
    if (w_phase && w_roots && *w_phase != *w_roots) {
        std::fprintf(stderr, "windings disagree\n");
        return kExitViolation;
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string path;
    bool json = false;
    int fuzz = 0;
    std::uint64_t seed = 0;
    std::size_t max_m = 8;
    bool force_half_bound = false;
    bool force_confined = false;
    std::optional<int> override_nb; // test hook
};

int cmd_verify(const VerifyArgs& args) {
    if (args.fuzz > 0) {
        FuzzOptions opts;
        opts.count = args.fuzz;
        opts.seed = args.seed;
        opts.max_m = args.max_m;
        opts.force_half_bound = args.force_half_bound;
        opts.force_confined = args.force_confined;
        const FuzzSummary sum = run_fuzz(opts);
        if (args.json) {
            std::fputs(fuzz_summary_to_json(sum).c_str(), stdout);
        } else {
            std::printf("%d/%d hold\n", sum.held, sum.count);
            for (const auto& fail : sum.failures) {
                std::printf("  seed=%llu m=%zu w_phase=%d w_roots=%d rhs=%g %s\n",
                            static_cast<unsigned long long>(fail.seed), fail.m,
                            fail.report.w_phase, fail.report.w_roots, fail.report.rhs.value(),
                            fail.report.flagged() ? "flagged" : "violated");
                for (const auto& d : fail.report.diagnostics)
                    std::printf("    %s\n", d.c_str());
            }
        }
        if (sum.flagged > 0) return kExitAmbiguity;
        return sum.violated > 0 ? kExitViolation : kExitOk;
    }

    const InstanceFile f = read_instance(args.path);
    VerificationReport rep = verify(f.spec);
    if (args.override_nb) {
        // census override used by the negative-path tests
        rep.census.n_b = *args.override_nb;
        const long long m = static_cast<long long>(rep.census.m);
        rep.rhs = Rational{2 * (m - rep.census.n_b - rep.census.n_c) - rep.census.n_h, 1};
        rep.holds = rep.diagnostics.empty() && rep.w_phase == rep.w_roots &&
                    rep.rhs.equals(rep.w_phase);
    }
    if (args.json) {
        std::fputs(report_to_json(rep).c_str(), stdout);
    } else {
        std::printf("m=%zu n_b=%d n_h=%d n_c=%d\n", rep.census.m, rep.census.n_b,
                    rep.census.n_h, rep.census.n_c);
        std::printf("w_phase=%d w_roots=%d rhs=%g reduced=%s\n", rep.w_phase, rep.w_roots,
                    rep.rhs.value(), rep.reduced ? "yes" : "no");
        for (const auto& d : rep.diagnostics) std::printf("diagnostic: %s\n", d.c_str());
        std::printf("%s\n", rep.holds ? "holds" : "VIOLATED");
    }
    if (rep.flagged()) return kExitAmbiguity;
    return rep.holds ? kExitOk : kExitViolation;
}

int cmd_reduce(const std::string& path, const std::string& out) {
    const InstanceFile f = read_instance(path);
    const GraphSpec reduced = reduce_degenerate(f.spec);
    const std::string name = f.name.empty() ? std::string() : f.name + " (reduced)";
    if (out.empty()) {
        std::fputs(instance_to_json(reduced, name, f.seed).c_str(), stdout);
    } else {
        write_instance(reduced, out, name, f.seed);
        std::printf("m: %zu -> %zu\n", f.spec.m(), reduced.m());
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Scattering analysis on a weighted graph with a semi-infinite tail"};
    app.require_subcommand(1);

    std::string path, out, method = "both";
    ReflectArgs reflect_args;
    VerifyArgs verify_args;
    bool json = false;
    int override_nb = 0;

    auto* validate_cmd = app.add_subcommand("validate", "parse and validate an instance file");
    validate_cmd->add_option("path", path)->required();

    auto* reflect_cmd =
        app.add_subcommand("reflect", "tabulate R(e^{ik}) and its unwrapped phase as CSV");
    reflect_cmd->add_option("path", reflect_args.path)->required();
    reflect_cmd->add_option("--samples", reflect_args.samples, "number of uniform rows");
    reflect_cmd->add_option("--out", reflect_args.out, "CSV output path (default stdout)");

    auto* bound_cmd = app.add_subcommand("bound", "enumerate bound states");
    bound_cmd->add_option("path", path)->required();
    bound_cmd->add_flag("--json", json);

    auto* winding_cmd = app.add_subcommand("winding", "winding number of the reflection phase");
    winding_cmd->add_option("path", path)->required();
    winding_cmd->add_option("--method", method)
        ->check(CLI::IsMember({"phase", "roots", "both"}));
    winding_cmd->add_flag("--json", json);

    auto* verify_cmd = app.add_subcommand("verify", "check the winding/bound-state identity");
    verify_cmd->add_option("path", verify_args.path);
    verify_cmd->add_flag("--json", verify_args.json);
    verify_cmd->add_option("--fuzz", verify_args.fuzz, "verify this many random instances");
    verify_cmd->add_option("--seed", verify_args.seed);
    verify_cmd->add_option("--max-m", verify_args.max_m);
    verify_cmd->add_flag("--force-half-bound", verify_args.force_half_bound);
    verify_cmd->add_flag("--force-confined", verify_args.force_confined);
    verify_cmd->add_option("--test-override-nb", override_nb)->group(""); // test hook

    auto* reduce_cmd = app.add_subcommand("reduce", "peel degenerate attachment vertices");
    reduce_cmd->add_option("path", path)->required();
    reduce_cmd->add_option("--out", out, "write the reduced instance here (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate_cmd->parsed()) return cmd_validate(path);
        if (reflect_cmd->parsed()) return cmd_reflect(reflect_args);
        if (bound_cmd->parsed()) return cmd_bound(path, json);
        if (winding_cmd->parsed()) return cmd_winding(path, method, json);
        if (verify_cmd->parsed()) {
            if (verify_cmd->count("--test-override-nb") > 0)
                verify_args.override_nb = override_nb;
            if (verify_args.fuzz == 0 && verify_args.path.empty()) {
                std::fprintf(stderr, "verify needs an instance path or --fuzz\n");
                return kExitInput;
            }
            return cmd_verify(verify_args);
        }
        if (reduce_cmd->parsed()) return cmd_reduce(path, out);
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return classify_error(e);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInput;
    }
    return kExitInput;
}
