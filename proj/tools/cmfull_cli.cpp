// Command-line front end: analyze / gb / gin / betti / hilbert / verify.
//
// Input is the line-oriented ideal format (see README); reports print as
// aligned text or, with --json, as stable-key JSON suitable for diffing.
// Exit codes: 0 success, 1 usage or input error, 2 mathematical
// inconsistency detected.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmf/analysis.hpp"
#include "cmf/gin.hpp"
#include "cmf/ideal_doc.hpp"
#include "cmf/report_io.hpp"
#include "cmf/verify.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

struct CommonOpts {
    std::string input = "-";
    std::uint64_t seed = 1;
    int trials = cmf::kDefaultGinTrials;
    int samples = cmf::kDefaultSamples;
    bool json = false;
    int max_degree = 12;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

cmf::Ideal load_ideal(const CommonOpts& opts) {
    cmf::IdealDocument doc = cmf::parse_document(read_input(opts.input));
    cmf::Ideal I = cmf::document_to_ideal(doc);
    int maxdeg = I.max_gen_degree();
    if (maxdeg > opts.max_degree)
        throw std::runtime_error(
            "generator degree " + std::to_string(maxdeg) +
            " exceeds the safety cap " + std::to_string(opts.max_degree) +
            " (raise with --max-degree)");
    // Characteristic guard: random coordinates only behave generically when
    // the degrees stay far below the field size.
    if (static_cast<long long>(maxdeg) * 100 >
        static_cast<long long>(I.ring().field.modulus()))
        throw std::runtime_error(
            "field F" + std::to_string(I.ring().field.modulus()) +
            " is too small for generator degree " + std::to_string(maxdeg) +
            "; use a larger prime (need p >= 100 * degree)");
    return I;
}

ordered_json ring_json(const cmf::PolyRing& R) {
    return {{"p", R.field.modulus()}, {"vars", R.names}};
}

int cmd_analyze(const CommonOpts& opts) {
    cmf::Ideal I = load_ideal(opts);
    cmf::Rng rng(opts.seed);
    cmf::AnalysisOptions aopts;
    aopts.samples = opts.samples;
    aopts.gin_trials = opts.trials;
    cmf::Report rep = cmf::analyze(I, rng, aopts);
    std::cout << (opts.json ? cmf::report_to_json(rep)
                            : cmf::report_to_text(rep));
    return rep.consistent ? 0 : 2;
}

int cmd_gb(const CommonOpts& opts) {
    cmf::Ideal I = load_ideal(opts);
    const auto& G = I.groebner();
    if (opts.json) {
        ordered_json j;
        j["ring"] = ring_json(I.ring());
        ordered_json basis = ordered_json::array();
        for (const auto& g : G.elements)
            basis.push_back(cmf::to_string(I.ring(), g));
        j["groebner_basis"] = basis;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& g : G.elements)
            std::cout << cmf::to_string(I.ring(), g) << "\n";
    }
    return 0;
}

int cmd_gin(const CommonOpts& opts) {
    cmf::Ideal I = load_ideal(opts);
    cmf::Rng rng(opts.seed);
    cmf::GinResult g = cmf::gin(I, rng, opts.trials);
    bool stable = cmf::is_stable(g.gin);
    if (opts.json) {
        ordered_json j;
        j["ring"] = ring_json(I.ring());
        ordered_json gens = ordered_json::array();
        for (const auto& m : g.gin.min_gens())
            gens.push_back(cmf::to_string(I.ring(), m));
        j["gin"] = gens;
        j["stable"] = stable;
        j["agreement"] = g.agreement;
        j["trials_used"] = g.trials_used;
        j["seed"] = opts.seed;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "gin        ";
        for (std::size_t i = 0; i < g.gin.min_gens().size(); ++i)
            std::cout << (i ? ", " : "")
                      << cmf::to_string(I.ring(), g.gin.min_gens()[i]);
        std::cout << "\nstable     " << (stable ? "true" : "false")
                  << "\nagreement  " << (g.agreement ? "true" : "false")
                  << "\ntrials     " << g.trials_used << "\n";
    }
    return 0;
}

int cmd_betti(const CommonOpts& opts) {
    cmf::Ideal I = load_ideal(opts);
    cmf::Rng rng(opts.seed);
    int reg = cmf::regularity(I, rng);
    cmf::BettiTable t = cmf::betti_table(I, reg);
    if (opts.json) {
        ordered_json j;
        j["ring"] = ring_json(I.ring());
        ordered_json entries = ordered_json::array();
        for (const auto& [ij, v] : t.entries)
            entries.push_back(ordered_json::array({ij.first, ij.second, v}));
        j["betti"] = entries;
        j["projective_dimension"] = t.projective_dimension();
        j["regularity"] = reg;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "graded Betti numbers of R/I (i, j): value\n";
        for (const auto& [ij, v] : t.entries)
            std::cout << "  (" << ij.first << ", " << ij.second << "): " << v
                      << "\n";
        std::cout << "projective dimension " << t.projective_dimension()
                  << ", regularity " << reg << "\n";
    }
    return 0;
}

int cmd_hilbert(const CommonOpts& opts, int up_to) {
    cmf::Ideal I = load_ideal(opts);
    cmf::HilbertFunction hf = cmf::hilbert(I, up_to);
    cmf::IntPoly numer = cmf::ideal_numerator(I);
    if (opts.json) {
        ordered_json j;
        j["ring"] = ring_json(I.ring());
        j["values"] = hf.values;
        j["stable_from"] = hf.stable_from;
        j["numerator"] = numer;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "Hilb(R/I, d) for d = 0.." << up_to << ":";
        for (auto v : hf.values) std::cout << " " << v;
        std::cout << "\nnumerator coefficients:";
        for (auto c : numer) std::cout << " " << c;
        std::cout << "\n(series is h(t)/(1-t)^n; values follow the Hilbert "
                     "polynomial from degree "
                  << hf.stable_from << ")\n";
    }
    return 0;
}

int cmd_verify(const cmf::VerifyParams& params, bool json) {
    cmf::VerificationSummary s = cmf::run_verify(params);
    std::cout << (json ? cmf::summary_to_json(s) : cmf::summary_to_text(s));
    return s.all_passed() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of graded ideals over prime fields: "
                 "m-fullness, componentwise linearity, and the supporting "
                 "invariants"};
    app.require_subcommand(1);

    CommonOpts opts;
    auto add_common = [&](CLI::App* cmd, bool with_input = true) {
        if (with_input)
            cmd->add_option("input", opts.input,
                            "input file in the ideal format ('-' for stdin)");
        cmd->add_option("--seed", opts.seed, "random seed");
        cmd->add_option("--trials", opts.trials, "gin trials per decision");
        cmd->add_option("--samples", opts.samples,
                        "linear-form samples per genericity point");
        cmd->add_flag("--json", opts.json, "emit JSON");
        cmd->add_option("--max-degree", opts.max_degree,
                        "safety cap on generator degree");
    };

    auto* analyze = app.add_subcommand("analyze", "run every decider");
    add_common(analyze);
    auto* gb = app.add_subcommand("gb", "reduced Groebner basis");
    add_common(gb);
    auto* ging = app.add_subcommand("gin", "generic initial ideal");
    add_common(ging);
    auto* betti = app.add_subcommand("betti", "graded Betti numbers of R/I");
    add_common(betti);
    auto* hilbert = app.add_subcommand("hilbert", "Hilbert function and numerator");
    add_common(hilbert);
    int hilbert_up_to = 10;
    hilbert->add_option("--up-to", hilbert_up_to, "top degree to print");

    cmf::VerifyParams vp;
    auto* verify = app.add_subcommand(
        "verify", "random-instance verification of the main equivalence");
    bool verify_json = false;
    int verify_trials = 50;
    verify->add_option("--seed", vp.seed, "random seed");
    verify->add_option("--trials", verify_trials, "number of instances");
    verify->add_option("--n-min", vp.n_min, "minimum variable count");
    verify->add_option("--n-max", vp.n_max, "maximum variable count");
    verify->add_option("--deg-min", vp.deg_min, "minimum generator degree");
    verify->add_option("--deg-max", vp.deg_max, "maximum generator degree");
    verify->add_option("--max-gens", vp.max_gens, "maximum generators");
    verify->add_option("--field", vp.p, "field modulus");
    verify->add_option("--samples", vp.samples,
                       "linear-form samples per genericity point");
    verify->add_option("--gin-trials", vp.gin_trials, "gin trials");
    verify->add_option("--extension-max-n", vp.extension_check_max_n,
                       "run the fresh-variable check only below this n");
    verify->add_flag("--json", verify_json, "emit JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(opts);
        if (app.got_subcommand(gb)) return cmd_gb(opts);
        if (app.got_subcommand(ging)) return cmd_gin(opts);
        if (app.got_subcommand(betti)) return cmd_betti(opts);
        if (app.got_subcommand(hilbert)) return cmd_hilbert(opts, hilbert_up_to);
        if (app.got_subcommand(verify)) {
            if (verify_trials < 1) {
                std::cerr << "error: --trials must be at least 1\n";
                return 1;
            }
            vp.trials = verify_trials;
            return cmd_verify(vp, verify_json);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const cmf::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
