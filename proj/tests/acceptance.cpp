// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.
//
// Criteria 1-2 drive the installed CLI binary end to end (path via --cli);
// the rest run in process against the library.  Every tolerance is exact;
// the randomized criteria pin their seeds here.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmf/analysis.hpp"
#include "cmf/betti.hpp"
#include "cmf/ideal_doc.hpp"
#include "cmf/instances.hpp"
#include "cmf/report_io.hpp"
#include "cmf/verify.hpp"

using namespace cmf;
using nlohmann::json;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& name,
            const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << "  " << criterion << "  " << name;
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << std::endl;
    if (!pass) ++g_failures;
}

std::string run_command(const std::string& cmd, int* exit_code) {
    std::string full = cmd + " 2>/dev/null";
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) {
        *exit_code = -1;
        return {};
    }
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    int status = pclose(pipe);
    *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

Ideal make(const std::string& doc) {
    return document_to_ideal(parse_document(doc));
}

std::string temp_doc(const std::string& name, const std::string& content) {
    std::string path = "acceptance_" + name + ".tmp";
    std::ofstream out(path);
    out << content;
    return path;
}

// Deterministic instance mix shared by criteria 3, 7 and 8.
Ideal mixed_instance(int idx, std::uint64_t seed, int n_max, int deg_max,
                     int max_gens) {
    Rng inst(Rng(seed).fork(idx).seed());
    Rng gen = inst.fork(1);
    int n = 2 + static_cast<int>(gen.below(n_max - 1));
    PolyRing R(n, 32003);
    int gens = 1 + static_cast<int>(gen.below(max_gens));
    switch (idx % 4) {
        case 0:
            return random_graded_ideal(R, gen, gens, 1, deg_max);
        case 1: {
            MonomialIdeal M = random_monomial_ideal(n, gen, gens, 1, deg_max);
            return monomial_to_ideal(R, M);
        }
        case 2:
            return monomial_to_ideal(R, random_stable_ideal(n, gen, gens, deg_max));
        default: {
            MonomialIdeal M = random_stable_ideal(n, gen, gens, deg_max);
            return apply_change(monomial_to_ideal(R, M),
                                random_linear_change(R, gen));
        }
    }
}

void criterion_1_and_2(const std::string& cli) {
    int code = 0;
    std::string out = run_command(
        cli + " verify --seed 1 --trials 200 --n-min 2 --n-max 4 "
              "--deg-min 1 --deg-max 4 --max-gens 5 --field 32003 --json",
        &code);
    bool parsed = false;
    long long main_failed = -1, mu_failed = -1;
    try {
        json j = json::parse(out);
        parsed = true;
        main_failed = j["checks"]["main_theorem"]["failed"].get<long long>();
        mu_failed = j["checks"]["mu_le_B"]["failed"].get<long long>();
        long long ran = j["checks"]["main_theorem"]["ran"].get<long long>();
        report(1, code == 0 && ran == 200 && main_failed == 0,
               "main theorem equivalence on 200 instances (seed 1, n 2..4, "
               "deg <= 4, gens <= 5)",
               "exit " + std::to_string(code) + ", disagreements " +
                   std::to_string(main_failed));
        report(2, mu_failed == 0 && j["checks"]["mu_le_B"]["ran"] == 200,
               "mu(I) <= B(I) on all 200 instances",
               "violations " + std::to_string(mu_failed));
    } catch (const std::exception& e) {
        if (!parsed) {
            report(1, false, "main theorem equivalence", "verify output unparsable");
            report(2, false, "mu <= B", "verify output unparsable");
        } else {
            report(1, false, "main theorem equivalence", e.what());
            report(2, false, "mu <= B", e.what());
        }
    }
}

void criterion_3() {
    // t-sequence transfer to gin on 100 instances (n <= 3), plus seed
    // stability: three distinct seeds agree on at least 99 of them, with
    // any mismatch resolved by an explicit fresh-seed retry, never by a
    // silent majority vote.
    int transfer_violations = 0;
    int stable_first_try = 0;
    int resolved_by_retry = 0;
    int unresolved = 0;
    for (int i = 0; i < 100; ++i) {
        Ideal I = mixed_instance(i, 33, 3, 3, 4);
        if (I.is_zero() || I.is_unit()) continue;
        Rng t0(Rng(1000 + i).seed());
        TSequence base = t_sequence(I, t0);
        Rng gr(Rng(5000 + i).seed());
        GinResult g = gin(I, gr);
        Ideal J = monomial_to_ideal(I.ring(), g.gin);
        Rng tg(Rng(6000 + i).seed());
        if (t_sequence(J, tg).values != base.values) ++transfer_violations;

        Rng s2(Rng(2000 + i).seed());
        Rng s3(Rng(3000 + i).seed());
        TSequence t2 = t_sequence(I, s2);
        TSequence t3 = t_sequence(I, s3);
        if (t2.values == base.values && t3.values == base.values) {
            ++stable_first_try;
        } else {
            // Retry protocol: recompute every run with fresh recorded seeds
            // until they agree, logging the seeds used.
            bool fixed = false;
            for (int retry = 1; retry <= 4 && !fixed; ++retry) {
                std::uint64_t sa = 7000 + 10 * i + retry;
                std::uint64_t sb = 8000 + 10 * i + retry;
                std::uint64_t sc = 9000 + 10 * i + retry;
                Rng ra(sa), rb(sb), rc(sc);
                TSequence a = t_sequence(I, ra);
                TSequence b = t_sequence(I, rb);
                TSequence c = t_sequence(I, rc);
                if (a.values == b.values && b.values == c.values) {
                    fixed = true;
                    std::cout << "      note: criterion 3 instance " << i
                              << " resolved with fresh seeds " << sa << "," << sb
                              << "," << sc << std::endl;
                }
            }
            if (fixed)
                ++resolved_by_retry;
            else
                ++unresolved;
        }
    }
    report(3, transfer_violations == 0 && stable_first_try >= 99 && unresolved == 0,
           "t-sequence transfers to gin on 100 instances; >= 99% seed-stable",
           "transfer violations " + std::to_string(transfer_violations) +
               ", first-try stable " + std::to_string(stable_first_try) +
               ", retried " + std::to_string(resolved_by_retry) +
               ", unresolved " + std::to_string(unresolved));
}

// Stability checked on minimal generators must agree with the definition
// quantified over every monomial of the ideal (brute force to degree 8).
bool stability_definitions_agree(const MonomialIdeal& M) {
    bool fast = is_stable(M);
    bool slow = true;
    for (int d = 1; d <= 8 && slow; ++d)
        for (const auto& u : monomials_of_degree(M.nvars(), d)) {
            if (!M.contains(u)) continue;
            std::size_t m = m_index(u);
            Monomial base = u.divided_by(Monomial::variable(M.nvars(), m));
            for (std::size_t i = 0; i < m && slow; ++i)
                if (!M.contains(base.times(Monomial::variable(M.nvars(), i))))
                    slow = false;
        }
    return fast == slow;
}

void criterion_4() {
    // 100 random stable ideals: stability implies the coordinate-form
    // recursion succeeds; 100 random non-stable monomial ideals: the
    // recursion must fail.  Alongside, the minimal-generator stability
    // test must agree with the all-monomials definition on every instance.
    int stable_bad = 0;
    int made_stable = 0;
    int definition_bad = 0;
    Rng rng(44);
    while (made_stable < 100) {
        Rng g = rng.fork(made_stable);
        std::size_t n = 2 + g.below(3);
        MonomialIdeal M = random_stable_ideal(n, g, 1 + g.below(4), 1 + g.below(5));
        if (M.is_unit()) {
            M = MonomialIdeal(n, monomials_of_degree(n, 2));
        }
        ++made_stable;
        if (!stability_definitions_agree(M)) ++definition_bad;
        PolyRing R(n, 32003);
        if (!is_completely_m_full_coordinate(monomial_to_ideal(R, M)))
            ++stable_bad;
    }
    int nonstable_bad = 0;
    int made_nonstable = 0;
    std::uint64_t tag = 0;
    while (made_nonstable < 100) {
        Rng g = rng.fork(100000 + tag++);
        std::size_t n = 2 + g.below(3);
        MonomialIdeal M = random_monomial_ideal(n, g, 1 + g.below(5), 1, 5);
        if (M.is_zero() || M.is_unit() || is_stable(M)) continue;
        ++made_nonstable;
        if (!stability_definitions_agree(M)) ++definition_bad;
        PolyRing R(n, 32003);
        if (is_completely_m_full_coordinate(monomial_to_ideal(R, M)))
            ++nonstable_bad;
    }
    report(4, stable_bad == 0 && nonstable_bad == 0 && definition_bad == 0,
           "stable <=> coordinate-form recursion (100 stable + 100 non-stable); "
           "minimal-generator stability matches the full definition",
           "stable failures " + std::to_string(stable_bad) +
               ", non-stable false positives " + std::to_string(nonstable_bad) +
               ", definition mismatches " + std::to_string(definition_bad));
}

void criterion_5() {
    int mismatches = 0;
    int done = 0;
    Rng rng(55);
    std::uint64_t tag = 0;
    while (done < 50) {
        Rng g = rng.fork(tag++);
        std::size_t n = 2 + g.below(3);
        MonomialIdeal M = random_stable_ideal(n, g, 1 + g.below(3), 1 + g.below(5));
        if (M.is_unit() || M.is_zero()) continue;
        ++done;
        PolyRing R(n, 32003);
        Ideal I = monomial_to_ideal(R, M);
        BettiTable ek = ek_betti(M);
        BettiTable kz = betti_table(I, M.max_gen_degree());
        if (!(ek.entries == kz.entries)) ++mismatches;
    }
    report(5, mismatches == 0,
           "Eliahou-Kervaire equals Koszul on 50 random stable ideals",
           "mismatches " + std::to_string(mismatches));
}

void criterion_6() {
    bool ok = true;
    std::string detail;
    {
        Rng rng(1);
        Report r = analyze(make("ring F32003 [x, y]\nideal\nx^2\nx*y\ny^2\n"), rng);
        bool good = r.mu == 3 && r.t_sequence == std::vector<long long>{1, 2} &&
                    r.B == 3 && r.m_full && r.completely_m_full_recursive &&
                    r.completely_m_full_B && r.componentwise_linear &&
                    r.nagel_romer && r.consistent;
        if (!good) {
            ok = false;
            detail += "m^2 mismatch; ";
        }
    }
    {
        Rng rng(1);
        Ideal I = make("ring F32003 [x, y]\nideal\nx^2\ny^2\n");
        Report r = analyze(I, rng);
        HomologicalProfile prof = homological_profile(I);
        bool good = r.mu == 2 && r.t_sequence == std::vector<long long>{1, 2} &&
                    r.B == 3 && !r.completely_m_full_recursive &&
                    !r.completely_m_full_B && !r.componentwise_linear &&
                    !r.nagel_romer && r.type && *r.type == 1 && prof.gorenstein;
        bool betti_good = false;
        for (const auto& [i, j, v] : r.betti)
            if (i == 1 && j == 2 && v == 2) betti_good = true;
        bool b24 = false;
        for (const auto& [i, j, v] : r.betti)
            if (i == 2 && j == 4 && v == 1) b24 = true;
        if (!(good && betti_good && b24)) {
            ok = false;
            detail += "(x^2,y^2) numeric mismatch; ";
        }
        // The pinned table for this instance also expects m_full = true.
        // That value is not attainable: m(x^2,y^2) = m^3, and m^3 : z = m^2
        // for every nonzero linear form (colons by higher-degree elements
        // contain m or everything), so mI : z = I has no solution; the
        // length identity agrees, mu(I) = 2 != 3 = mu(image) + l((I:z)/I).
        // The decider follows its contract and reports false; the pinned
        // assertion is kept and this line fails instead of hiding it.
        if (!r.m_full) {
            ok = false;
            detail += "(x^2,y^2): computed m_full=false; the pinned "
                      "expectation `true` is unattainable because "
                      "m(x^2,y^2)=m^3 and m^3:z=m^2 for every linear z; ";
        }
    }
    {
        Rng rng(1);
        Report r = analyze(make("ring F32003 [x, y]\nideal\nx\ny^3\n"), rng);
        Rng ltc(2);
        bool good = r.m_full && r.completely_m_full_recursive &&
                    r.completely_m_full_B && r.componentwise_linear &&
                    r.nagel_romer && r.consistent &&
                    low_type_check(make("ring F32003 [x, y]\nideal\nx\ny^3\n"), ltc);
        if (!good) {
            ok = false;
            detail += "(x, y^3) mismatch; ";
        }
    }
    report(6, ok, "fixed worked instances match exactly", detail);
}

void criterion_7() {
    int violations = 0;
    for (int i = 0; i < 100; ++i) {
        Ideal I = mixed_instance(i, 77, 4, 4, 4);
        if (I.is_zero() || I.is_unit()) continue;
        Rng gr(Rng(4000 + i).seed());
        GinResult g = gin(I, gr);
        HilbertFunction hf = hilbert(I, 10);
        for (int d = 0; d <= 10; ++d)
            if (hf.values[d] != std_monomial_count(g.gin, d)) {
                ++violations;
                break;
            }
    }
    report(7, violations == 0,
           "Hilbert functions survive gin (100 instances, degrees <= 10)",
           "violations " + std::to_string(violations));
}

void criterion_8() {
    int qualifying = 0;
    int violations = 0;
    for (int i = 0; i < 100; ++i) {
        Ideal I = mixed_instance(i, 88, 4, 4, 4);
        if (I.is_zero() || I.is_unit()) continue;
        Rng m1(Rng(1234 + i).seed());
        if (!is_m_full(I, m1)) continue;
        Rng gr(Rng(2345 + i).seed());
        GinResult g = gin(I, gr);
        Ideal J = monomial_to_ideal(I.ring(), g.gin);
        Rng m2(Rng(3456 + i).seed());
        if (!is_m_full(J, m2)) continue;
        ++qualifying;
        if (type_of(I) != type_of(J)) ++violations;
    }
    report(8, violations == 0 && qualifying > 0,
           "type transfers to gin whenever both are m-full",
           std::to_string(qualifying) + " qualifying, " +
               std::to_string(violations) + " violations");
}

void criterion_9() {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 4; ++n) {
        for (int d = 1; d <= 5; ++d) {
            PolyRing R(n, 32003);
            std::vector<Polynomial> gens;
            for (int i = 0; i + 1 < n; ++i)
                gens.push_back(Polynomial::monomial(
                    R, Monomial::variable(n, i), R.field.one()));
            std::vector<int> e(n, 0);
            e[n - 1] = d;
            gens.push_back(Polynomial::monomial(R, Monomial(e), R.field.one()));
            Ideal I(R, std::move(gens));
            Rng rng(static_cast<std::uint64_t>(100 * n + d));
            bool cwl = is_componentwise_linear(I, rng);
            HomologicalProfile prof = homological_profile(I);
            if (!cwl || !prof.gorenstein) {
                ok = false;
                detail += "(n=" + std::to_string(n) + ",d=" + std::to_string(d) +
                          ") cwl=" + (cwl ? "1" : "0") +
                          " gor=" + (prof.gorenstein ? "1" : "0") + "; ";
            }
        }
    }
    // (x^2, y^2) is Gorenstein with no linear generators, so it must be
    // rejected as componentwise linear.
    Rng rng(9);
    Ideal I = make("ring F32003 [x, y]\nideal\nx^2\ny^2\n");
    if (is_componentwise_linear(I, rng) || !homological_profile(I).gorenstein) {
        ok = false;
        detail += "(x^2,y^2) not rejected; ";
    }
    report(9, ok,
           "complete intersections (x_1..x_{n-1}, x_n^d) are componentwise "
           "linear Gorenstein; (x^2, y^2) is rejected",
           detail);
}

void criterion_10(const std::string& cli) {
    std::string doc = "ring F32003 [x, y]\nideal\nx^2 - y^2\nx*y\n";
    std::string path = temp_doc("det", doc);
    std::vector<std::pair<std::string, std::string>> cmds = {
        {"analyze", cli + " analyze " + path + " --seed 9 --json"},
        {"gb", cli + " gb " + path + " --json"},
        {"gin", cli + " gin " + path + " --seed 9 --json"},
        {"betti", cli + " betti " + path + " --seed 9 --json"},
        {"hilbert", cli + " hilbert " + path + " --json"},
        {"verify", cli + " verify --seed 9 --trials 6 --n-min 2 --n-max 3 "
                         "--deg-max 3 --max-gens 3 --json"},
    };
    bool ok = true;
    std::string detail;
    for (const auto& [name, cmd] : cmds) {
        int c1 = 0, c2 = 0;
        std::string a = run_command(cmd, &c1);
        std::string b = run_command(cmd, &c2);
        if (a.empty() || a != b || c1 != c2) {
            ok = false;
            detail += name + " differs; ";
        }
    }
    std::remove(path.c_str());
    // Exit-code contract: analyze exits 0 on a consistent instance, usage
    // errors exit 1.
    int code = 0;
    run_command(cli + " analyze " + path + "missing --json", &code);
    if (code != 1) {
        ok = false;
        detail += "missing-file exit " + std::to_string(code) + "; ";
    }
    run_command(cli + " verify --trials 0", &code);
    if (code != 1) {
        ok = false;
        detail += "trials=0 exit " + std::to_string(code) + "; ";
    }
    std::string small = temp_doc("guard", "ring F7 [x]\nideal\nx^5\n");
    run_command(cli + " analyze " + small, &code);
    std::remove(small.c_str());
    if (code != 1) {
        ok = false;
        detail += "characteristic guard exit " + std::to_string(code) + "; ";
    }
    report(10, ok, "byte-identical JSON reruns and exit-code contract", detail);
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int i = 1; i + 1 < argc; i += 2)
        if (std::string(argv[i]) == "--cli") cli = argv[i + 1];
    if (cli.empty()) {
        std::cerr << "usage: acceptance --cli <path-to-cmfull-binary>\n";
        return 2;
    }

    criterion_1_and_2(cli);
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10(cli);

    if (g_failures == 0) {
        std::cout << "acceptance: all criteria passed" << std::endl;
        return 0;
    }
    std::cout << "acceptance: " << g_failures << " criterion line(s) failed"
              << std::endl;
    return 1;
}
