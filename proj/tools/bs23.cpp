#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bs23/britton.hpp"
#include "bs23/endo.hpp"
#include "bs23/graph_export.hpp"
#include "bs23/kernel_basis.hpp"
#include "bs23/tree.hpp"
#include "bs23/word.hpp"

namespace {

using namespace bs23;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct Config {
    GroupParams params;
    std::string format = "text";
    unsigned long seed = 1;
    std::size_t siblingCap = 10000;
    std::string wordFile;
};

std::size_t env_or(const char *name, std::size_t fallback) {
    if (const char *v = std::getenv(name))
        return std::strtoull(v, nullptr, 10);
    return fallback;
}

// Collects the input words: each --file line, else the positional.
std::vector<Word> input_words(const Config &cfg, const std::string &arg) {
    std::vector<Word> words;
    if (!cfg.wordFile.empty()) {
        std::ifstream in(cfg.wordFile);
        if (!in)
            throw std::runtime_error("cannot open " + cfg.wordFile);
        std::string line;
        while (std::getline(in, line))
            if (!line.empty())
                words.push_back(Word::parse(line));
    } else {
        words.push_back(Word::parse(arg));
    }
    return words;
}

void print_report(const Report &r, const Config &cfg) {
    if (cfg.format == "json") {
        std::cout << r.to_json().dump(2) << "\n";
        return;
    }
    for (const auto &c : r.checks)
        std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.name
                  << (c.witness.empty() ? "" : "  [" + c.witness + "]")
                  << "\n";
}

int cmd_reduce(const Config &cfg, const std::string &arg) {
    for (const auto &w : input_words(cfg, arg)) {
        const BrittonWitness bw = britton_reduce(w, cfg.params);
        if (cfg.format == "json") {
            nlohmann::json j = {{"input", w.str()},
                                {"reduced", bw.reduced.str()},
                                {"trivial", bw.trivial()},
                                {"trace", bw.trace_to_json()}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << bw.reduced.str() << "\n";
        }
    }
    return kExitTrue;
}

int cmd_nf(const Config &cfg, const std::string &arg) {
    for (const auto &w : input_words(cfg, arg)) {
        const NormalForm nf = normal_form(w, cfg.params);
        if (cfg.format == "json")
            std::cout << nf.to_json().dump(2) << "\n";
        else
            std::cout << nf.str() << "\n";
    }
    return kExitTrue;
}

int cmd_equal(const Config &cfg, const std::string &lhs,
              const std::string &rhs) {
    const bool eq =
        words_equal(Word::parse(lhs), Word::parse(rhs), cfg.params);
    std::cout << (eq ? "true" : "false") << "\n";
    return eq ? kExitTrue : kExitFalse;
}

int cmd_trivial(const Config &cfg, const std::string &arg) {
    bool all = true;
    for (const auto &w : input_words(cfg, arg)) {
        const bool t = is_trivial(w, cfg.params);
        all = all && t;
        std::cout << (t ? "true" : "false") << "\n";
    }
    return all ? kExitTrue : kExitFalse;
}

int cmd_kernel(const Config &cfg, const std::string &arg, long power,
               bool prime) {
    const EndoSpec e =
        prime ? EndoSpec::phi_prime(power) : EndoSpec::phi(power);
    bool all = true;
    for (const auto &w : input_words(cfg, arg)) {
        const bool in = in_kernel(w, e, cfg.params);
        all = all && in;
        std::cout << (in ? "true" : "false") << "\n";
    }
    return all ? kExitTrue : kExitFalse;
}

int cmd_decompose(const Config &cfg, const std::string &arg) {
    for (const auto &w : input_words(cfg, arg)) {
        const Decomposition dec = decompose(w, cfg.siblingCap, cfg.params);
        if (cfg.format == "json") {
            std::cout << dec.to_json().dump(2) << "\n";
        } else {
            for (const auto &f : dec.factors)
                std::cout << f.conjugator.str() << " | i=" << f.offset
                          << " | j=" << f.sign << "\n";
            std::cout << "certified: " << (dec.certified ? "true" : "false")
                      << "\n";
        }
        if (!dec.certified)
            return kExitFalse;
    }
    return kExitTrue;
}

int cmd_classify(const Config &cfg, const std::string &arg) {
    for (const auto &w : input_words(cfg, arg)) {
        const TreePath p = project_to_tree(w, cfg.params);
        const PathClass pc = classify_steps(p.geodesic);
        if (cfg.format == "json") {
            nlohmann::json j = pc.to_json();
            j["path"] = p.to_json();
            j["goodRepresentative"] = good_representative(p.geodesic).str();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "tips=" << pc.tips() << " valleys=" << pc.valleys()
                      << " c=" << pc.c()
                      << " swiss=" << (pc.swiss ? "true" : "false")
                      << " endEssential="
                      << (pc.endEssential ? "true" : "false")
                      << " backtracking="
                      << (p.backtracking ? "true" : "false") << "\n";
        }
    }
    return kExitTrue;
}

int cmd_siblings(const Config &cfg, const std::string &arg) {
    for (const auto &w : input_words(cfg, arg)) {
        const SiblingComponent comp =
            sibling_component(w, cfg.siblingCap, cfg.params);
        if (comp.truncated)
            return kExitCap;
        if (cfg.format == "json") {
            nlohmann::json ms = nlohmann::json::array();
            for (const auto &m : comp.members)
                ms.push_back(m.str());
            nlohmann::json j = {{"members", std::move(ms)},
                                {"canonical", comp.canonical.str()},
                                {"truncated", comp.truncated}};
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto &m : comp.members)
                std::cout << (m == comp.canonical ? "* " : "  ") << m.str()
                          << "\n";
        }
    }
    return kExitTrue;
}

int cmd_basis(const Config &cfg, int depth) {
    const auto basis = basis_up_to(depth, cfg.siblingCap, cfg.params);
    if (cfg.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto &f : basis)
            arr.push_back(f.to_json());
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto &f : basis)
            std::cout << f.conjugator.str() << " | i=" << f.offset
                      << " | j=" << f.sign << "\n";
    }
    return kExitTrue;
}

Report homomorphism_probe(const Config &cfg, int samples) {
    std::mt19937_64 rng(cfg.seed);
    Report r;
    int bad = 0;
    for (const EndoSpec &e : {EndoSpec::phi(), EndoSpec::phi_prime()}) {
        const Word relator = Word::b() * Word::a(cfg.params.n) *
                             Word::b(-1) * Word::a(-cfg.params.m);
        r.checks.push_back(Check{"relator maps to identity",
                                 is_trivial(apply_endo(relator, e),
                                            cfg.params),
                                 relator.str()});
        for (int i = 0; i < samples; ++i) {
            const Word u = random_word(rng, 12, 5);
            const Word v = random_word(rng, 12, 5);
            if (!words_equal(apply_endo(u * v, e),
                             apply_endo(u, e) * apply_endo(v, e),
                             cfg.params))
                ++bad;
        }
    }
    r.checks.push_back(Check{"images multiply homomorphically", bad == 0,
                             std::to_string(bad) + " failures"});
    return r;
}

int cmd_probe(const Config &cfg, const std::string &which) {
    Report r;
    if (which == "freeness")
        r = freeness_probe(1000, 6, 4, cfg.seed, 8, cfg.params);
    else if (which == "samekernel")
        r = same_kernel_probe(500, 30, cfg.seed, cfg.params);
    else
        r = homomorphism_probe(cfg, 250);
    print_report(r, cfg);
    return r.all_pass() ? kExitTrue : kExitFalse;
}

int cmd_export(const Config &cfg, const std::string &what, int radius) {
    GraphDoc doc;
    if (what == "cayley")
        doc = cayley_ball(radius, cfg.params);
    else if (what == "tree")
        doc = tree_ball(radius, cfg.params);
    else if (what == "forest")
        doc = height_forest_doc(radius, cfg.params);
    else
        doc = quotient_ball(radius, cfg.params);
    if (cfg.format == "dot")
        std::cout << emit_dot(doc);
    else if (cfg.format == "json")
        std::cout << emit_json(doc);
    else
        std::cout << emit_csv(doc);
    return kExitTrue;
}

int cmd_check(const Config &cfg, const std::string &which) {
    if (which == "corollary") {
        const Report r = check_corollary_identities(cfg.params);
        print_report(r, cfg);
        return r.all_pass() ? kExitTrue : kExitFalse;
    }
    if (which == "tietze") {
        Report r;
        auto add = [&](const std::string &name, const Word &lambda,
                       const Word &mu, bool expected) {
            const bool holds = tietze_relator_check(lambda, mu, cfg.params);
            r.checks.push_back(Check{name, holds == expected,
                                     holds ? "holds" : "fails"});
        };
        add("relator for (a^2, b)", Word::a(2), Word::b(), true);
        add("relator for (a^3, b)", Word::a(3), Word::b(), true);
        add("relator refuted for (a, b)", Word::a(), Word::b(), false);
        print_report(r, cfg);
        return r.all_pass() ? kExitTrue : kExitFalse;
    }
    // limit: [b^m a b^-m, b^k a b^-k] falls into Ker(phi^N)
    Report r;
    for (long m = 1; m <= 3; ++m) {
        for (long k = m + 1; k <= 3; ++k) {
            const auto n = limit_commutator_order(m, k, 6, cfg.params);
            r.checks.push_back(
                Check{"limit order (m=" + std::to_string(m) +
                          ", k=" + std::to_string(k) + ")",
                      n.has_value(),
                      n ? "N=" + std::to_string(*n) : "none <= 6"});
        }
    }
    print_report(r, cfg);
    return r.all_pass() ? kExitTrue : kExitFalse;
}

} // namespace

int main(int argc, char **argv) {
    Config cfg;
    cfg.siblingCap = env_or("BS23_SIBLING_CAP", cfg.siblingCap);

    CLI::App app{"exact computations in the Baumslag-Solitar group BS(2,3)"};
    app.require_subcommand(1);
    app.fallthrough(); // accept global options after the subcommand
    app.add_option("--n", cfg.params.n, "presentation parameter n");
    app.add_option("--m", cfg.params.m, "presentation parameter m");
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--seed", cfg.seed, "seed for randomized probes");
    app.add_option("--sibling-cap", cfg.siblingCap,
                   "sibling component exploration cap");
    app.add_option("--file", cfg.wordFile, "read words, one per line");

    std::string w1, w2, which;
    long power = 1;
    bool prime = false;
    int depth = 2, radius = 2;

    auto *reduce = app.add_subcommand("reduce", "Britton-reduce a word");
    reduce->add_option("word", w1);
    auto *nf = app.add_subcommand("nf", "normal form of a word");
    nf->add_option("word", w1);
    auto *equal = app.add_subcommand("equal", "decide equality of two words");
    equal->add_option("lhs", w1)->required();
    equal->add_option("rhs", w2)->required();
    auto *trivial = app.add_subcommand("trivial", "decide triviality");
    trivial->add_option("word", w1);
    auto *kernel = app.add_subcommand("kernel", "Ker(phi^n) membership");
    kernel->add_option("word", w1);
    kernel->add_option("--power", power, "power of the epimorphism");
    kernel->add_flag("--prime", prime, "use phi' (a -> a^3)");
    auto *dec = app.add_subcommand("decompose",
                                   "free-basis decomposition in Ker(phi)");
    dec->add_option("word", w1);
    auto *classify = app.add_subcommand("classify", "tree path taxonomy");
    classify->add_option("word", w1);
    auto *siblings = app.add_subcommand("siblings", "sibling component");
    siblings->add_option("word", w1);
    auto *basis = app.add_subcommand("basis", "enumerate basis elements");
    basis->add_option("--depth", depth, "maximal conjugator path length");
    auto *probe = app.add_subcommand("probe", "randomized verification");
    probe->add_option("kind", which)
        ->required()
        ->check(CLI::IsMember({"freeness", "samekernel", "homomorphism"}));
    auto *exportCmd = app.add_subcommand("export", "emit graph documents");
    std::string exportWhat;
    exportCmd->add_option("graph", exportWhat)
        ->required()
        ->check(CLI::IsMember({"cayley", "tree", "forest", "quotient"}));
    exportCmd->add_option("--radius", radius, "ball radius");
    auto *check = app.add_subcommand("check", "verify printed identities");
    std::string checkWhat;
    check->add_option("kind", checkWhat)
        ->required()
        ->check(CLI::IsMember({"corollary", "tietze", "limit"}));

    for (auto *sub : app.get_subcommands({}))
        sub->fallthrough(); // accept global options after the subcommand

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (reduce->parsed())
            return cmd_reduce(cfg, w1);
        if (nf->parsed())
            return cmd_nf(cfg, w1);
        if (equal->parsed())
            return cmd_equal(cfg, w1, w2);
        if (trivial->parsed())
            return cmd_trivial(cfg, w1);
        if (kernel->parsed())
            return cmd_kernel(cfg, w1, power, prime);
        if (dec->parsed())
            return cmd_decompose(cfg, w1);
        if (classify->parsed())
            return cmd_classify(cfg, w1);
        if (siblings->parsed())
            return cmd_siblings(cfg, w1);
        if (basis->parsed())
            return cmd_basis(cfg, depth);
        if (probe->parsed())
            return cmd_probe(cfg, which);
        if (exportCmd->parsed())
            return cmd_export(cfg, exportWhat, radius);
        if (check->parsed())
            return cmd_check(cfg, checkWhat);
        return kExitUsage;
    } catch (const ParseError &e) {
        std::cerr << "word parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NonKernel &e) {
        std::cerr << e.what() << "\n";
        return kExitFalse;
    } catch (const SiblingCapExceeded &e) {
        std::cerr << e.what() << "\n";
        return kExitCap;
    } catch (const std::invalid_argument &e) {
        std::cerr << e.what() << "\n";
        return std::string(e.what()).find("cap") != std::string::npos
                   ? kExitCap
                   : kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
}
