// Command-line front end: every subcommand reads the shared text formats
// (graph / relation / poset), writes results to stdout and diagnostics to
// stderr. Exit codes: 0 computed, 1 negative answer to a decision query,
// 2 input error, 3 search budget exhausted.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "grel/cores.hpp"
#include "grel/embed.hpp"
#include "grel/enumerate.hpp"
#include "grel/io.hpp"
#include "grel/parallel.hpp"

using namespace grel;

namespace {

constexpr int kExitComputed = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

Graph load_graph(const std::string& path) {
    if (path == "-") return read_graph(std::cin);
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_graph(in);
}

Relation load_relation(const std::string& path) {
    if (path == "-") return read_relation(std::cin);
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_relation(in);
}

Poset load_poset(const std::string& path) {
    if (path == "-") return read_poset(std::cin);
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_poset(in);
}

Comparator comparator_from_name(const std::string& name) {
    if (name == "relation") return Comparator::relation(false);
    if (name == "relation-full") return Comparator::relation(true);
    auto c = hom_constraint_from_name(name);
    if (!c) throw InvalidParameterError("unknown comparator '" + name + "'");
    return Comparator::hom(*c);
}

std::vector<Graph> build_images(const std::string& target, const Poset& poset, int d) {
    if (target == "dicycles") return embed_into_dicycles(poset);
    if (target == "sunlets") return embed_into_sunlet_gadgets(poset);
    if (target == "linegraphs") {
        // element x becomes the union of L(G_{p,d}) over the U(x) products,
        // realizing the divisibility-set order
        LayeredEmbedding layered = layered_embedding(poset);
        std::vector<Graph> images;
        for (int x = 0; x < poset.size(); ++x) {
            std::vector<int> products;
            for (const auto& s : layered.families[x]) {
                long long prod = 1;
                for (int q : s) prod *= q;
                if (prod > 60)
                    throw BudgetError("line-graph embedding: cycle product " +
                                      std::to_string(prod) + " exceeds the size guard");
                products.push_back((int)prod);
            }
            images.push_back(embed_into_line_graphs(products, d));
        }
        return images;
    }
    throw InvalidParameterError("unknown target '" + target + "'");
}

HomConstraint default_comparator(const std::string& target) {
    if (target == "sunlets") return HomConstraint::LocallyInjective;
    return HomConstraint::Plain;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph relations, cores and constrained homomorphism orders"};
    app.require_subcommand(1);

    uint64_t seed = 0x5eed;
    uint64_t max_nodes = kDefaultNodeBudget;
    int max_n = 4;
    int threads = 0;
    app.add_option("--seed", seed, "RNG seed (reserved; searches are deterministic)");
    app.add_option("--max-nodes", max_nodes, "search tree node budget");
    app.add_option("--max-n", max_n, "enumeration vertex cap");
    app.add_option("--threads", threads, "OpenMP thread count (0 = default)");

    auto* cmd_generate = app.add_subcommand("generate", "emit a named family member");
    std::string family_name;
    int family_k = 1;
    cmd_generate->add_option("--family", family_name, "family name")->required();
    cmd_generate->add_option("--k", family_k, "family parameter")->required();

    auto* cmd_apply = app.add_subcommand("apply", "apply a relation to a graph");
    std::string apply_graph, apply_rel;
    bool apply_weak_flag = false, apply_strong_flag = false, apply_weighted_flag = false;
    cmd_apply->add_option("graph", apply_graph)->required();
    cmd_apply->add_option("relation", apply_rel)->required();
    cmd_apply->add_flag("--strong", apply_strong_flag, "strong composition (default)");
    cmd_apply->add_flag("--weak", apply_weak_flag, "weak composition");
    cmd_apply->add_flag("--weighted", apply_weighted_flag,
                        "weighted composition of the 0/1 adjacency weights");

    std::string arg_graph = "-";
    auto* cmd_rcore = app.add_subcommand("rcore", "R-core of a graph");
    cmd_rcore->add_option("graph", arg_graph);
    auto* cmd_cocore = app.add_subcommand("cocore", "cocore of a graph");
    cmd_cocore->add_option("graph", arg_graph);
    auto* cmd_core = app.add_subcommand("core", "graph core by retraction search");
    cmd_core->add_option("graph", arg_graph);
    auto* cmd_pd = app.add_subcommand("pd", "point-determining quotient");
    cmd_pd->add_option("graph", arg_graph);
    auto* cmd_drm = app.add_subcommand("drm", "degree refinement matrix");
    cmd_drm->add_option("graph", arg_graph);
    auto* cmd_props = app.add_subcommand("props", "structural property flags");
    cmd_props->add_option("graph", arg_graph);

    auto* cmd_hom = app.add_subcommand("hom", "search a constrained homomorphism");
    std::string hom_g, hom_h, hom_constraint = "plain";
    cmd_hom->add_option("pattern", hom_g)->required();
    cmd_hom->add_option("target", hom_h)->required();
    cmd_hom->add_option("--constraint", hom_constraint,
                        "plain|mono|embedding|full|vs|es|surjective|li|ls|lb");

    auto* cmd_findrel = app.add_subcommand("find-relation", "search a relation g * R = h");
    std::string rel_g, rel_h;
    bool rel_full = false;
    cmd_findrel->add_option("source", rel_g)->required();
    cmd_findrel->add_option("target", rel_h)->required();
    cmd_findrel->add_flag("--full-domain", rel_full, "require a full domain");

    auto* cmd_checkrel = app.add_subcommand("check-rel", "verify g * R = h");
    std::string check_g, check_r, check_h;
    bool check_weak = false;
    cmd_checkrel->add_option("source", check_g)->required();
    cmd_checkrel->add_option("relation", check_r)->required();
    cmd_checkrel->add_option("target", check_h)->required();
    cmd_checkrel->add_flag("--weak", check_weak, "check the weak composition instead");

    auto* cmd_embed = app.add_subcommand("embed", "poset into a homomorphism order");
    std::string embed_target, embed_poset = "-";
    int embed_d = 3;
    cmd_embed->add_option("--target", embed_target, "dicycles|sunlets|linegraphs")
        ->required();
    cmd_embed->add_option("--d", embed_d, "line-graph interval degree");
    cmd_embed->add_option("poset", embed_poset);

    auto* cmd_verify = app.add_subcommand("verify-embedding", "pairwise comparator check");
    std::string verify_target, verify_poset = "-", verify_comparator;
    int verify_d = 3;
    cmd_verify->add_option("--target", verify_target, "dicycles|sunlets|linegraphs")
        ->required();
    cmd_verify->add_option("--comparator", verify_comparator,
                           "hom constraint (default depends on target)");
    cmd_verify->add_option("--d", verify_d, "line-graph interval degree");
    cmd_verify->add_option("poset", verify_poset);

    bool spec_directed = false, spec_loops = false;
    auto* cmd_enum = app.add_subcommand("enumerate", "graphs up to isomorphism");
    cmd_enum->add_flag("--directed", spec_directed);
    cmd_enum->add_flag("--loops", spec_loops);
    auto* cmd_gaps = app.add_subcommand("gaps", "universe-relative gaps of an order");
    std::string gaps_comparator = "plain";
    cmd_gaps->add_flag("--directed", spec_directed);
    cmd_gaps->add_flag("--loops", spec_loops);
    cmd_gaps->add_option("--comparator", gaps_comparator);

    auto* cmd_duality = app.add_subcommand("duality", "construct and verify an F-set");
    std::string duality_comparator = "embedding";
    std::vector<std::string> duality_dset;
    cmd_duality->add_option("--comparator", duality_comparator, "embedding|mono|full");
    cmd_duality->add_option("dset", duality_dset, "graph files of the D-side")->required();

    auto* cmd_reduce = app.add_subcommand("reduce", "instance transformations");
    std::string reduce_which, reduce_g, reduce_h;
    cmd_reduce->add_option("--which", reduce_which, "hom2fulrel|fulrel2surhom")->required();
    cmd_reduce->add_option("left", reduce_g)->required();
    cmd_reduce->add_option("right", reduce_h)->required();

    for (CLI::App* sub :
         {cmd_generate, cmd_apply, cmd_rcore, cmd_cocore, cmd_core, cmd_pd, cmd_drm,
          cmd_props, cmd_hom, cmd_findrel, cmd_checkrel, cmd_embed, cmd_verify, cmd_enum,
          cmd_gaps, cmd_duality, cmd_reduce})
        sub->fallthrough();  // global flags may follow the subcommand

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    set_thread_count(threads);
    (void)seed;  // tie-breaking is index-deterministic; flag kept for reproducible runs

    try {
        if (*cmd_generate) {
            auto family = family_from_name(family_name);
            if (!family) throw InvalidParameterError("unknown family '" + family_name + "'");
            write_graph(std::cout, generate(*family, family_k));
            return kExitComputed;
        }

        if (*cmd_apply) {
            Graph g = load_graph(apply_graph);
            Relation r = load_relation(apply_rel);
            if (apply_weighted_flag) {
                WeightMatrix w(g.n(), std::vector<long long>(g.n(), 0));
                for (int u = 0; u < g.n(); ++u)
                    for (int v = 0; v < g.n(); ++v)
                        if (g.has_edge(u, v)) w[u][v] = 1;
                WeightMatrix out = apply_weighted(w, r);
                std::cout << "weights " << out.size() << "\n";
                for (const auto& row : out) {
                    for (size_t j = 0; j < row.size(); ++j)
                        std::cout << row[j] << (j + 1 < row.size() ? ' ' : '\n');
                    if (row.empty()) std::cout << "\n";
                }
            } else if (apply_weak_flag) {
                write_graph(std::cout, apply_weak(g, r));
            } else {
                write_graph(std::cout, apply_strong(g, r));
            }
            return kExitComputed;
        }

        if (*cmd_rcore) {
            write_graph(std::cout, r_core(load_graph(arg_graph)));
            return kExitComputed;
        }
        if (*cmd_cocore) {
            write_graph(std::cout, cocore(load_graph(arg_graph)));
            return kExitComputed;
        }
        if (*cmd_core) {
            write_graph(std::cout, graph_core(load_graph(arg_graph), max_nodes));
            return kExitComputed;
        }
        if (*cmd_pd) {
            PdQuotient q = pd_quotient(load_graph(arg_graph));
            write_graph(std::cout, q.quotient);
            for (size_t i = 0; i < q.classes.blocks.size(); ++i) {
                std::cout << "# class " << i << ":";
                for (int v : q.classes.blocks[i]) std::cout << " " << v;
                std::cout << "\n";
            }
            return kExitComputed;
        }
        if (*cmd_drm) {
            Drm d = drm(load_graph(arg_graph));
            std::cout << "blocks " << d.blocks.size() << "\n";
            for (const auto& block : d.blocks)
                for (size_t j = 0; j < block.size(); ++j)
                    std::cout << block[j] << (j + 1 < block.size() ? ' ' : '\n');
            std::cout << "matrix\n";
            for (const auto& row : d.matrix)
                for (size_t j = 0; j < row.size(); ++j)
                    std::cout << row[j] << (j + 1 < row.size() ? ' ' : '\n');
            return kExitComputed;
        }
        if (*cmd_props) {
            Graph g = load_graph(arg_graph);
            std::cout << "point-determining: " << (is_point_determining(g) ? "yes" : "no")
                      << "\n";
            if (!g.directed()) {
                std::cout << "property-N: " << (has_property_N(g) ? "yes" : "no") << "\n";
                std::cout << "property-N*: " << (has_property_Nstar(g) ? "yes" : "no")
                          << "\n";
                std::cout << "is-r-core: " << (r_core(g) == g ? "yes" : "no") << "\n";
                std::cout << "is-cocore: " << (cocore(g) == g ? "yes" : "no") << "\n";
            }
            std::cout << "is-core: " << (is_core(g, max_nodes) ? "yes" : "no") << "\n";
            return kExitComputed;
        }

        if (*cmd_hom) {
            auto constraint = hom_constraint_from_name(hom_constraint);
            if (!constraint)
                throw InvalidParameterError("unknown constraint '" + hom_constraint + "'");
            Graph g = load_graph(hom_g), h = load_graph(hom_h);
            HomSearch s = find_hom(g, h, *constraint, max_nodes);
            if (s.outcome == Outcome::Budget) {
                std::cerr << "budget exhausted after " << s.nodes << " nodes\n";
                return kExitBudget;
            }
            if (s.outcome == Outcome::None) {
                std::cout << "NONE\n";
                return kExitNegative;
            }
            for (int v = 0; v < g.n(); ++v)
                std::cout << v << " -> " << (*s.witness)[v] << "\n";
            return kExitComputed;
        }

        if (*cmd_findrel) {
            Graph g = load_graph(rel_g), h = load_graph(rel_h);
            RelSearch s = find_relation(g, h, rel_full, max_nodes);
            if (s.outcome == Outcome::Budget) {
                std::cerr << "budget exhausted after " << s.nodes << " nodes\n";
                return kExitBudget;
            }
            if (s.outcome == Outcome::None) {
                std::cout << "NONE\n";
                return kExitNegative;
            }
            write_relation(std::cout, *s.witness);
            return kExitComputed;
        }

        if (*cmd_checkrel) {
            Graph g = load_graph(check_g), h = load_graph(check_h);
            Relation r = load_relation(check_r);
            Graph result = check_weak ? apply_weak(g, r) : apply_strong(g, r);
            bool equal = result == h;
            std::cout << (equal ? "EQUAL" : "DIFFERENT") << "\n";
            RelationFacts facts = predicates(r);
            std::cout << "full-domain: " << (facts.full_domain ? "yes" : "no") << "\n";
            std::cout << "functional: " << (facts.functional ? "yes" : "no") << "\n";
            std::cout << "injective: " << (facts.injective ? "yes" : "no") << "\n";
            return equal ? kExitComputed : kExitNegative;
        }

        if (*cmd_embed) {
            Poset poset = load_poset(embed_poset);
            auto images = build_images(embed_target, poset, embed_d);
            for (int x = 0; x < poset.size(); ++x) {
                std::cout << "# element " << poset.label(x) << "\n";
                write_graph(std::cout, images[x]);
            }
            return kExitComputed;
        }

        if (*cmd_verify) {
            Poset poset = load_poset(verify_poset);
            auto images = build_images(verify_target, poset, verify_d);
            HomConstraint cmp = default_comparator(verify_target);
            if (!verify_comparator.empty()) {
                auto parsed = hom_constraint_from_name(verify_comparator);
                if (!parsed)
                    throw InvalidParameterError("unknown comparator '" + verify_comparator +
                                                "'");
                cmp = *parsed;
            }
            EmbeddingReport report = verify_embedding(images, poset, cmp, max_nodes);
            std::cout << "cells " << report.cells << "\n";
            std::cout << "mismatches " << report.mismatches.size() << "\n";
            for (const auto& cell : report.mismatches)
                std::cout << "mismatch " << poset.label(cell.i) << " " << poset.label(cell.j)
                          << " expected " << (cell.expected ? "hom" : "none") << "\n";
            if (!report.budget_cells.empty()) {
                std::cerr << report.budget_cells.size() << " cells hit the node budget\n";
                return kExitBudget;
            }
            return report.mismatches.empty() ? kExitComputed : kExitNegative;
        }

        if (*cmd_enum) {
            Universe u = enumerate_universe({spec_directed, spec_loops, max_n});
            std::cout << "count " << u.graphs.size() << "\n";
            for (size_t i = 0; i < u.graphs.size(); ++i) {
                std::cout << "# graph " << i << "\n";
                write_graph(std::cout, u.graphs[i]);
            }
            return kExitComputed;
        }

        if (*cmd_gaps) {
            Universe u = enumerate_universe({spec_directed, spec_loops, max_n});
            GapReport report = find_gaps(u, comparator_from_name(gaps_comparator), max_nodes);
            std::cout << "# universe-relative gaps; the full order may contain elements "
                         "between a reported pair\n";
            std::cout << "count " << report.gaps.size() << "\n";
            for (auto [lo, hi] : report.gaps) std::cout << "gap " << lo << " " << hi << "\n";
            for (size_t i = 0; i < u.graphs.size(); ++i) {
                std::cout << "# graph " << i << "\n";
                write_graph(std::cout, u.graphs[i]);
            }
            return kExitComputed;
        }

        if (*cmd_duality) {
            std::vector<Graph> d_set;
            for (const auto& path : duality_dset) d_set.push_back(load_graph(path));
            std::vector<Graph> f_set;
            Comparator cmp = comparator_from_name(duality_comparator);
            if (duality_comparator == "full")
                f_set = duality_for_full_homs(d_set, max_nodes);
            else if (duality_comparator == "embedding" || duality_comparator == "mono")
                f_set = duality_for_embeddings(d_set, duality_comparator == "mono", max_nodes);
            else
                throw InvalidParameterError("duality comparator must be embedding|mono|full");
            std::cout << "f-set " << f_set.size() << "\n";
            for (size_t i = 0; i < f_set.size(); ++i) {
                std::cout << "# f " << i << "\n";
                write_graph(std::cout, f_set[i]);
            }
            UniverseSpec uspec{d_set.front().directed(), false, max_n};
            Universe u = enumerate_universe(uspec);
            DualityReport report = verify_duality({f_set, d_set, cmp}, u, max_nodes);
            std::cout << "checked " << report.checked << "\n";
            std::cout << "violations " << report.violations.size() << "\n";
            return report.ok() ? kExitComputed : kExitNegative;
        }

        if (*cmd_reduce) {
            Graph g = load_graph(reduce_g), h = load_graph(reduce_h);
            if (reduce_which == "hom2fulrel")
                write_graph(std::cout, reduce_hom_to_fulrel(g, h));
            else if (reduce_which == "fulrel2surhom")
                write_graph(std::cout, reduce_fulrel_to_surhom(g, h));
            else
                throw InvalidParameterError("--which must be hom2fulrel or fulrel2surhom");
            return kExitComputed;
        }
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }

    return kExitInput;
}
