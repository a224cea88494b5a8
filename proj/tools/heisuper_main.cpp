// Command-line front end: construct the Heisenberg superalgebras and their
// minimal faithful representations, verify representation files, print
// dimension reports and abelian witnesses, and run the self-test grid.
//
// Exit codes: 0 pass, 1 check failure, 2 usage or parse failure.

#include "heisuper/b_form.hpp"
#include "heisuper/constructions.hpp"
#include "heisuper/dimension.hpp"
#include "heisuper/json_io.hpp"
#include "heisuper/layout.hpp"
#include "heisuper/rho.hpp"
#include "heisuper/rng.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace heisuper;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
    std::string family;
    long m = -1;
    long n = -1;
    long r = -1;
    std::string variant = "standard";
    std::string format = "text";
    std::string out;
};

HeisenbergSpec spec_from_opts(const CommonOpts& o) {
    if (o.family == "hmn") {
        if (o.m < 0 || o.n < 0)
            throw CLI::ValidationError("--family hmn requires --m and --n");
        if (o.r >= 0)
            throw CLI::ValidationError("--r applies only to --family hn");
        return HeisenbergSpec::even_center(std::size_t(o.m), std::size_t(o.n));
    }
    if (o.family == "hn") {
        if (o.n < 0) throw CLI::ValidationError("--family hn requires --n");
        if (o.m >= 0) throw CLI::ValidationError("--m applies only to --family hmn");
        return HeisenbergSpec::odd_center(std::size_t(o.n));
    }
    throw CLI::ValidationError("--family must be hmn or hn");
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path);
    if (!os) throw std::runtime_error("cannot open output file: " + out_path);
    os << text;
}

std::string describe_module(SuperDim d) {
    return "(" + std::to_string(d.even) + "|" + std::to_string(d.odd) + ")";
}

std::string representation_text(const HeisenbergSpec& spec, const Representation& rep) {
    std::ostringstream os;
    os << spec.str() << "  algebra dim " << spec.dim() << "  module "
       << describe_module(rep.module_dim()) << "\n";
    for (std::size_t i = 0; i < rep.algebra().dim(); ++i) {
        os << rep.algebra().label(i) << " ->";
        bool any = false;
        const SuperMatrix& m = rep.image(i);
        for (std::size_t r = 0; r < m.total(); ++r)
            for (std::size_t c = 0; c < m.total(); ++c)
                if (!m.at(r, c).is_zero()) {
                    os << (any ? " + " : " ");
                    const std::string coeff = m.at(r, c).str();
                    if (coeff != "1") os << coeff << "*";
                    os << "e(" << r + 1 << "," << c + 1 << ")";
                    any = true;
                }
        if (!any) os << " 0";
        os << "\n";
    }
    return os.str();
}

int run_construct(const CommonOpts& o) {
    const HeisenbergSpec spec = spec_from_opts(o);
    spec.ensure_valid();
    if (o.variant != "standard" && o.variant != "flipped")
        throw CLI::ValidationError("--variant must be standard or flipped");
    if (spec.family == Family::odd_center && o.variant == "flipped")
        throw CLI::ValidationError("--variant flipped applies only to --family hmn");
    const std::size_t r = o.r < 0 ? spec.n : std::size_t(o.r);
    if (spec.family == Family::odd_center && r > spec.n)
        throw CLI::ValidationError("--r must satisfy 0 <= r <= n");

    Representation rep = [&] {
        if (spec.family == Family::even_center)
            return o.variant == "flipped" ? build_pi_even_center_flipped(spec.m, spec.n)
                                          : build_pi_even_center(spec.m, spec.n);
        return build_pi_odd_center(spec.n, r);
    }();

    if (o.format == "json") {
        emit(representation_to_json(rep).dump(2) + "\n", o.out);
    } else if (o.format == "latex") {
        GenericLayout layout = [&] {
            if (spec.family == Family::even_center)
                return o.variant == "flipped"
                           ? generic_layout_even_center_flipped(spec.m, spec.n)
                           : generic_layout_even_center(spec.m, spec.n);
            return generic_layout_odd_center(spec.n, r);
        }();
        emit(layout.to_latex(), o.out);
    } else if (o.format == "text") {
        emit(representation_text(spec, rep), o.out);
    } else {
        throw CLI::ValidationError("--format must be json, latex or text");
    }
    return kExitPass;
}

int run_verify(const std::string& path, bool as_json) {
    std::ifstream is(path);
    if (!is) {
        std::cerr << "error: cannot open " << path << "\n";
        return kExitUsage;
    }
    const nlohmann::json j = nlohmann::json::parse(is);
    const Representation rep = representation_from_json(j);

    const AxiomReport axioms = check_axioms(rep.algebra());
    RepReport check;
    bool faithful = false;
    if (axioms.pass()) {
        check = verify_representation(rep);
        if (check.pass()) faithful = is_faithful(rep);
    }
    const bool ok = axioms.pass() && check.pass() && faithful;

    if (as_json) {
        nlohmann::json out{
            {"axioms", {{"pass", axioms.pass()}, {"findings", axioms.findings}}},
            {"representation", {{"pass", check.pass()}, {"violations", check.violations}}},
            {"faithful", faithful},
            {"pass", ok}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "algebra axioms: " << (axioms.pass() ? "pass" : "FAIL") << "\n";
        for (const auto& f : axioms.findings) std::cout << "  " << f << "\n";
        std::cout << "representation invariants: " << (check.pass() ? "pass" : "FAIL") << "\n";
        for (const auto& v : check.violations) std::cout << "  " << v << "\n";
        if (axioms.pass() && check.pass()) {
            if (faithful)
                std::cout << "faithful: yes\n";
            else
                std::cout << "not faithful: z acts trivially\n";
        }
    }
    return ok ? kExitPass : kExitCheckFailed;
}

int run_report(const CommonOpts& o) {
    const HeisenbergSpec spec = spec_from_opts(o);
    spec.ensure_valid();
    const DimensionReport rep = full_report(spec);
    if (o.format == "json") {
        emit(dimension_report_to_json(rep).dump(2) + "\n", o.out);
        return kExitPass;
    }
    std::ostringstream os;
    os << rep.spec.str() << "  dim " << rep.algebra_dim << "\n"
       << "mu=" << rep.mu << " zeta=" << rep.zeta << "\n"
       << "mu0=" << rep.mu0 << " mu1=" << rep.mu1 << " mu01=" << rep.mu01
       << " mu10=" << rep.mu10 << "\n"
       << "superdims";
    for (const auto& d : rep.admissible_superdims) os << " " << describe_module(d);
    os << "\n";
    emit(os.str(), o.out);
    return kExitPass;
}

std::string vector_with_labels(const LieSuperalgebra& g, const GradedVector& v) {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v.at(i).is_zero()) continue;
        os << (any ? " + " : "");
        const std::string coeff = v.at(i).str();
        if (coeff != "1") os << coeff << "*";
        os << g.label(i);
        any = true;
    }
    if (!any) os << "0";
    return os.str();
}

int run_witness(const CommonOpts& o) {
    const HeisenbergSpec spec = spec_from_opts(o);
    spec.ensure_valid();
    std::size_t even_target = spec.family == Family::even_center ? spec.m : spec.n;
    if (spec.family == Family::odd_center && o.r >= 0) {
        if (std::size_t(o.r) > spec.n)
            throw CLI::ValidationError("--r must satisfy 0 <= r <= n");
        even_target = std::size_t(o.r);
    }
    const SuperDim target = spec.family == Family::even_center
                                ? SuperDim{spec.m, spec.n / 2}
                                : SuperDim{even_target, spec.n - even_target};

    const LieSuperalgebra g = make_heisenberg(spec);
    const Subspace witness = abelian_witness(spec, target);
    if (!is_abelian_excluding_center(g, witness) || !(witness.super_dim() == target)) {
        std::cerr << "witness certification failed\n";
        return kExitCheckFailed;
    }
    if (o.format == "json") {
        emit(subspace_to_json(witness).dump(2) + "\n", o.out);
        return kExitPass;
    }
    std::ostringstream os;
    os << spec.str() << "  abelian, z-free, super-dimension " << describe_module(target) << "\n";
    for (const auto& v : witness.basis()) os << "  " << vector_with_labels(g, v) << "\n";
    emit(os.str(), o.out);
    return kExitPass;
}

struct SelftestOpts {
    long max_m = 4;
    long max_n = 5;
    long max_n_odd = 6;
    long isotropic_samples = 1000;
    std::uint64_t seed = 20240817;
    bool inject_corruption = false;
};

int run_selftest(const SelftestOpts& o) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();

    std::vector<HeisenbergSpec> grid;
    for (long m = 0; m <= o.max_m; ++m)
        for (long n = 0; n <= o.max_n; ++n)
            if (m + n >= 1)
                grid.push_back(HeisenbergSpec::even_center(std::size_t(m), std::size_t(n)));
    for (long n = 1; n <= o.max_n_odd; ++n)
        grid.push_back(HeisenbergSpec::odd_center(std::size_t(n)));

    if (grid.empty()) {
        std::cout << "warning: empty grid, nothing to test\n";
        return kExitPass;
    }

    auto fail = [&](const std::string& what) {
        std::cout << "FAIL: " << what << "\n";
        return kExitCheckFailed;
    };

    if (o.inject_corruption) {
        // Negative control: a forged tensor with a super skew-symmetry
        // violation must be caught by the axiom checker.
        LieSuperalgebra good = make_heisenberg(HeisenbergSpec::even_center(1, 1));
        std::vector<StructureEntry> entries = good.structure_entries();
        entries.push_back({1, 0, 2, GaussRational(2)}); // breaks [v1,u1] = -[u1,v1]
        LieSuperalgebra corrupted(good.basis(), good.center_index(), entries);
        if (check_axioms(corrupted).pass())
            return fail("corrupted tensor slipped through the axiom checker");
        return fail("axioms(corrupted h_{1,1}): super skew-symmetry violated (injected)");
    }

    Rng rng(o.seed);
    for (const auto& spec : grid) {
        const LieSuperalgebra g = make_heisenberg(spec);
        if (!check_axioms(g).pass()) return fail("axioms(" + spec.str() + ")");

        std::vector<Representation> reps;
        if (spec.family == Family::even_center) {
            reps.push_back(build_pi_even_center(spec.m, spec.n));
            reps.push_back(build_pi_even_center_flipped(spec.m, spec.n));
        } else {
            for (std::size_t r = 0; r <= spec.n; ++r)
                reps.push_back(build_pi_odd_center(spec.n, r));
        }
        const auto admissible = admissible_superdims(spec);
        for (const auto& rep : reps) {
            if (!verify_representation(rep).pass())
                return fail("representation invariants(" + spec.str() + ")");
            if (!is_faithful(rep)) return fail("faithfulness(" + spec.str() + ")");
            if (rep.module_dim().total() != mu(spec))
                return fail("minimal dimension(" + spec.str() + ")");
            bool listed = false;
            for (const auto& d : admissible) listed = listed || d == rep.module_dim();
            if (!listed) return fail("super-dimension classification(" + spec.str() + ")");
            const Representation flipped = flip_module(rep);
            if (!verify_representation(flipped).pass() || !is_faithful(flipped) ||
                !(flipped.module_dim() == rep.module_dim().flipped()))
                return fail("parity flip(" + spec.str() + ")");
            const RhoAnalysis an = rho_analysis(rep, canonical_v0(rep), zeta(spec));
            if (!an.certified()) return fail("evaluation-map analysis(" + spec.str() + ")");
        }
        if (mu(spec) != spec.dim() - zeta(spec) + 1)
            return fail("dimension arithmetic(" + spec.str() + ")");

        for (const auto& target : admissible_witness_targets(spec)) {
            const Subspace witness = abelian_witness(spec, target);
            if (!is_abelian_excluding_center(g, witness) || !(witness.super_dim() == target))
                return fail("abelian witness(" + spec.str() + ")");
        }

        const BForm b = b_form(g, canonical_complement(g));
        const std::size_t half = (spec.dim() - 1) / 2;
        for (long s = 0; s < o.isotropic_samples; ++s) {
            const IsotropicSample sample = random_isotropic_subspace(b, rng);
            if (!is_isotropic(b, sample.subspace))
                return fail("isotropic sampling(" + spec.str() + ")");
            if (sample.subspace.dim() > half)
                return fail("isotropy bound(" + spec.str() + ")");
            if (spec.family == Family::even_center &&
                (sample.even_dim > spec.m || sample.odd_dim > spec.n / 2))
                return fail("blockwise isotropy bound(" + spec.str() + ")");
        }
    }

    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    std::cout << "selftest pass: " << grid.size() << " algebras in " << secs << " s\n";
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for Heisenberg Lie superalgebras and their minimal"
                 " faithful representations"};
    app.require_subcommand(1);

    CommonOpts opts;
    SelftestOpts st;
    std::string verify_path;
    bool verify_json = false;

    auto add_family_flags = [&](CLI::App* cmd, bool with_variant) {
        cmd->add_option("--family", opts.family, "hmn (even center) or hn (odd center)")
            ->required();
        cmd->add_option("--m", opts.m, "number of u/v pairs (hmn)");
        cmd->add_option("--n", opts.n, "number of odd generators");
        cmd->add_option("--r", opts.r, "shape parameter (hn)");
        if (with_variant)
            cmd->add_option("--variant", opts.variant, "standard or flipped (hmn)");
        cmd->add_option("--format", opts.format, "json, latex or text");
        cmd->add_option("--out", opts.out, "output file (default: stdout)");
    };

    CLI::App* construct =
        app.add_subcommand("construct", "build a minimal faithful representation");
    add_family_flags(construct, true);

    CLI::App* verify = app.add_subcommand("verify", "check a representation file");
    verify->add_option("path", verify_path, "representation JSON file")->required();
    verify->add_flag("--json", verify_json, "machine-readable report");

    CLI::App* report = app.add_subcommand("report", "print the dimension report");
    add_family_flags(report, false);

    CLI::App* witness =
        app.add_subcommand("witness", "print an abelian z-free subalgebra witness");
    add_family_flags(witness, false);

    CLI::App* selftest = app.add_subcommand("selftest", "run the verification grid");
    selftest->add_option("--max-m", st.max_m, "largest m for the even-center grid");
    selftest->add_option("--max-n", st.max_n, "largest n for the even-center grid");
    selftest->add_option("--max-n-odd", st.max_n_odd, "largest n for the odd-center grid");
    selftest->add_option("--isotropic-samples", st.isotropic_samples,
                         "random isotropic subspaces per algebra");
    selftest->add_option("--seed", st.seed, "random seed");
    selftest->add_flag("--inject-corruption", st.inject_corruption,
                       "negative control: corrupt a tensor and expect failure");

    try {
        app.parse(argc, argv);
        if (construct->parsed()) return run_construct(opts);
        if (verify->parsed()) return run_verify(verify_path, verify_json);
        if (report->parsed()) return run_report(opts);
        if (witness->parsed()) return run_witness(opts);
        if (selftest->parsed()) return run_selftest(st);
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
