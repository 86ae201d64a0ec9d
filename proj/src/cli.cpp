#include "cpokit/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "cpokit/classify.hpp"
#include "cpokit/closure.hpp"
#include "cpokit/colimits.hpp"
#include "cpokit/enumerate.hpp"
#include "cpokit/errors.hpp"
#include "cpokit/factorize.hpp"
#include "cpokit/gallery.hpp"
#include "cpokit/quotient.hpp"
#include "cpokit/text_io.hpp"

namespace cpokit::cli {

namespace {

int default_fuel() {
    if (const char* env = std::getenv("CPOKIT_FUEL")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return kDefaultFuel;
}

std::vector<FinPoset> load_posets(const std::vector<std::string>& paths) {
    std::vector<FinPoset> out;
    out.reserve(paths.size());
    for (const auto& p : paths) out.push_back(load_poset_file(p));
    return out;
}

std::string subset_labels(const FinPoset& p, Subset s) {
    std::string out;
    for (int i = 0; i < p.size(); ++i)
        if (subset_has(s, i)) out += (out.empty() ? "" : " ") + p.label(i);
    return out;
}

void print_trace(std::ostream& out, const QuotientChainTrace& t) {
    out << "kappa: " << t.kappa << "\n";
    out << "seed: " << t.seed << "\n";
    out << format_poset(t.a0);
    out << format_poset(t.e0.dst());
    out << format_map(t.e0);
    for (const auto& step : t.steps) {
        out << format_map(step.g);
        out << format_map(step.h);
        out << format_poset(step.step.dst());
        out << format_map(step.step);
        out << format_map(step.induced);
    }
    out << "final_iso: " << t.final_iso.name() << "\n";
    out << "sizes:";
    for (int s : t.sizes) out << ' ' << s;
    out << "\n";
}

Report run_demo(const std::string& name, int fuel, int members) {
    if (name == "generator-2-vs-3") return demo_generator_2_vs_3();
    if (name == "two-step-closure") return demo_two_step_closure(fuel);
    if (name == "ad-family") return demo_ad_family(members);
    if (name == "ad-quotient-step") return demo_ad_quotient_step(members, fuel);
    if (name == "epi-mono-not-iso") return demo_epi_mono_not_iso();
    throw CLI::ValidationError("demo", "unknown demo: " + name);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"cpokit: a toolkit for the category of chain-complete posets"};
    app.require_subcommand(1);

    std::string poset_path, map_path, subset_arg, demo_name;
    std::vector<std::string> poset_paths, map_paths;
    int kappa = 1;
    std::uint64_t seed = kDefaultSeed;
    int fuel = default_fuel();
    int members = 16;

    auto* check = app.add_subcommand("check", "validate a poset file and test chain-completeness");
    check->add_option("poset", poset_path)->required();

    auto* classify_cmd = app.add_subcommand("classify", "classify a cpo map");
    classify_cmd->add_option("--map", map_path)->required();
    classify_cmd->add_option("--posets", poset_paths)->required()->expected(-1);

    auto* closure_cmd = app.add_subcommand("closure", "directed-join closure of a subset");
    closure_cmd->add_option("--poset", poset_path)->required();
    closure_cmd->add_option("--subset", subset_arg)->required();

    auto* coproduct_cmd = app.add_subcommand("coproduct", "coproduct of posets");
    coproduct_cmd->add_option("posets", poset_paths)->required()->expected(-1);

    auto* coeq_cmd = app.add_subcommand("coequalize", "coequalizer of a parallel pair");
    coeq_cmd->add_option("--maps", map_paths)->required()->expected(2);
    coeq_cmd->add_option("--posets", poset_paths)->required()->expected(-1);

    auto* factor_cmd = app.add_subcommand("factor", "epi / strong-mono factorization");
    factor_cmd->add_option("--map", map_path)->required();
    factor_cmd->add_option("--posets", poset_paths)->required()->expected(-1);

    auto* normalize_cmd = app.add_subcommand("normalize", "coequalizer-chain normalization");
    normalize_cmd->add_option("--kappa", kappa)->required()->check(CLI::Range(0, 3));
    normalize_cmd->add_option("--seed", seed);

    auto* census_cmd = app.add_subcommand("census", "extremal quotients of kappa * 3");
    census_cmd->add_option("--kappa", kappa)->required()->check(CLI::Range(0, 3));

    auto* demo_cmd = app.add_subcommand("demo", "run a named construction");
    demo_cmd->add_option("name", demo_name)->required();
    demo_cmd->add_option("--fuel", fuel);
    demo_cmd->add_option("--members", members);

    auto* dot_cmd = app.add_subcommand("dot", "Hasse diagram as DOT");
    dot_cmd->add_option("poset", poset_path)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*check) {
            const FinPoset p = load_poset_file(poset_path);
            const IsCpoReport r = is_cpo(p);
            out << "poset=" << p.name() << " elements=" << p.size()
                << " bottom=" << p.label(p.bottom()) << " valid=true"
                << " cpo=" << (r.is_cpo() ? "true" : "false") << "\n";
            return r.is_cpo() ? 0 : 1;
        }
        if (*classify_cmd) {
            const auto posets = load_posets(poset_paths);
            const FinCpoMap f = load_map_file(map_path, posets);
            out << to_key_value(classify(f)) << "\n";
            return 0;
        }
        if (*closure_cmd) {
            const FinPoset p = load_poset_file(poset_path);
            Subset start = 0;
            std::stringstream ss(subset_arg);
            std::string label;
            while (std::getline(ss, label, ',')) {
                auto idx = p.index_of(label);
                if (!idx) throw MathError("unknown element in subset: " + label);
                start = subset_with(start, *idx);
            }
            const ClosureTrace t = directed_closure(p, start);
            out << "poset=" << p.name() << "\n";
            for (std::size_t k = 0; k < t.stages.size(); ++k)
                out << "stage " << k << ": " << subset_labels(p, t.stages[k]) << "\n";
            for (const auto& w : t.witnesses)
                out << "witness: " << p.label(w.element) << " = join of {"
                    << subset_labels(p, w.directed) << "} at stage " << w.stage << "\n";
            out << "closure: " << subset_labels(p, t.closure()) << "\n";
            out << "stages: " << t.length() << "\n";
            return 0;
        }
        if (*coproduct_cmd) {
            const auto posets = load_posets(poset_paths);
            const Coproduct cp = coproduct(posets);
            out << format_poset(cp.object);
            for (const auto& inj : cp.injections) out << format_map(inj);
            return 0;
        }
        if (*coeq_cmd) {
            const auto posets = load_posets(poset_paths);
            const FinCpoMap f = load_map_file(map_paths[0], posets);
            const FinCpoMap g = load_map_file(map_paths[1], posets);
            const Coequalizer ce = coequalizer(f, g);
            out << format_poset(ce.object);
            out << format_map(ce.q);
            return 0;
        }
        if (*factor_cmd) {
            const auto posets = load_posets(poset_paths);
            const FinCpoMap f = load_map_file(map_path, posets);
            const Factorization fac = epi_strongmono_factorize(f);
            out << format_poset(fac.mid);
            out << format_map(fac.epi_part);
            out << format_map(fac.mono_part);
            out << "epi_part: " << to_key_value(classify(fac.epi_part)) << "\n";
            out << "mono_part: " << to_key_value(classify(fac.mono_part)) << "\n";
            return 0;
        }
        if (*normalize_cmd) {
            FinCpoMap raw = random_extremal_epi(kappa, seed);
            const FinCpoMap e0 = FinCpoMap::make("e0", renamed(raw.src(), "A0"),
                                                 renamed(raw.dst(), "A"), raw.table());
            QuotientChainTrace t = normalize_extremal_epi(e0);
            t.seed = seed;
            print_trace(out, t);
            const int bound = 2 * kappa + 1;
            for (int s : t.sizes)
                if (s > bound) return 1;
            return 0;
        }
        if (*census_cmd) {
            const QuotientCensus c = quotient_census(kappa);
            out << "kappa=" << c.kappa << " count=" << c.count << " max_size=" << c.max_size
                << " bound=" << (2 * kappa + 1) << "\n";
            return c.max_size <= 2 * kappa + 1 ? 0 : 1;
        }
        if (*demo_cmd) {
            const Report r = run_demo(demo_name, fuel, members);
            out << "demo=" << demo_name << "\n" << r.text();
            out << "result=" << (r.ok() ? "pass" : "fail") << "\n";
            return r.ok() ? 0 : 1;
        }
        if (*dot_cmd) {
            out << emit_dot(load_poset_file(poset_path));
            return 0;
        }
    } catch (const CLI::Error& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const MathError& e) {
        err << "check failed: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

}  // namespace cpokit::cli
