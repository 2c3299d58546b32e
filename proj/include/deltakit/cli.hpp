#pragma once

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "deltakit/instance.hpp"

namespace deltakit {
namespace cli {

// Exit codes: 0 success, 1 infeasible / not found, 2 usage or validation
// error, 3 randomized failure (retry with a fresh seed).
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotFound = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRandomFailure = 3;

namespace detail_cli {

inline json label_list(const LabelSet& s) {
    json arr = json::array();
    for (const Label& l : sorted_set(s)) arr.push_back(l);
    return arr;
}

inline WeightMap parse_weight_spec(const std::string& spec) {
    WeightMap w;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos || colon == 0)
            throw ValidationError("weights: expected label:integer, got '" + item + "'");
        try {
            w.w[item.substr(0, colon)] = std::stoll(item.substr(colon + 1));
        } catch (const std::exception&) {
            throw ValidationError("weights: invalid integer in '" + item + "'");
        }
    }
    return w;
}

inline PairPartition parse_pair_spec(const std::string& spec) {
    PairPartition pi;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == item.size())
            throw ValidationError("pairs: expected label:label, got '" + item + "'");
        pi.emplace_back(item.substr(0, colon), item.substr(colon + 1));
    }
    return pi;
}

inline std::vector<int> parse_size_spec(const std::string& spec) {
    std::vector<int> out;
    if (spec.empty()) return out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ValidationError("sizes: invalid integer '" + item + "'");
        }
        if (out.back() < 1) throw ValidationError("sizes: values must be positive");
    }
    return out;
}

struct CommandContext {
    std::uint64_t seed = 0;
    double eps = 0;
    Rng rng;
    bool reduce = false;
    bool timing = false;
    std::chrono::steady_clock::time_point start;

    explicit CommandContext(std::uint64_t s, double e, bool red, bool tim)
        : seed(s), eps(e), rng(s), reduce(red), timing(tim), start(std::chrono::steady_clock::now()) {}

    json envelope(const std::string& command) const {
        json j;
        j["command"] = command;
        j["seed"] = seed;
        j["eps"] = eps;
        return j;
    }

    void finish(json& j, std::ostream& out) {
        if (timing) {
            auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
            j["timing_ms"] = ms.count();
        }
        out << j.dump(2) << "\n";
    }
};

inline void run_bench(CommandContext& ctx, const std::vector<int>& sizes, std::ostream& out) {
    out << "op,n,ms\n";
    auto time_ms = [](auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    };
    for (int n : sizes) {
        Labels ls;
        for (int i = 0; i < n; ++i) ls.push_back("e" + std::to_string(i));
        SkewMatrix a = random_skew(ls, ctx.rng, 1.0);
        out << "pfaffian," << n << "," << time_ms([&] { pfaffian(a); }) << "\n";
        out << "rank," << n << "," << time_ms([&] { rank(a); }) << "\n";
        ContractionRep d1(random_skew(ls, ctx.rng, 1.0), {});
        ContractionRep d2(random_skew(ls, ctx.rng, 1.0), {});
        out << "deltasum," << n << "," << time_ms([&] { delta_sum(d1, d2, ctx.rng, ctx.eps); }) << "\n";
        if (n % 2 == 0) {
            PairPartition pi;
            for (int i = 0; i < n; i += 2) pi.emplace_back(ls[i], ls[i + 1]);
            out << "parity," << n << "," << time_ms([&] { parity_value(d1, pi, ctx.rng, ctx.eps); }) << "\n";
        }
    }
}

} // namespace detail_cli

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"deltakit: exact linear delta-matroid toolkit over GF(p)"};
    app.fallthrough();

    std::uint64_t seed = 0;
    bool seed_given = false;
    double eps = std::ldexp(1.0, -20);
    std::uint64_t prime_flag = 0;
    bool reduce = false, timing = false;
    app.add_option("--seed", seed, "RNG seed (default: from OS entropy, echoed in the output)")
        ->each([&](const std::string&) { seed_given = true; });
    app.add_option("--eps", eps, "error bound for randomized constructions (default 2^-20)");
    app.add_option("--prime", prime_flag, "field modulus (prime, at least 2^31)");
    app.add_flag("--reduce", reduce, "shrink the contraction set of emitted representations");
    app.add_flag("--timing", timing, "include timing_ms in the output");

    std::string file_a, file_b, to_kind, part = "elementary", weight_spec, pair_spec, size_spec;

    CLI::App* c_axioms = app.add_subcommand("check-axioms", "verify the symmetric exchange axiom by enumeration");
    c_axioms->add_option("file", file_a)->required();

    CLI::App* c_convert = app.add_subcommand("convert", "convert between twist and contraction representations");
    c_convert->add_option("file", file_a)->required();
    c_convert->add_option("--to", to_kind, "target representation: twist or contraction")->required();

    CLI::App* c_union = app.add_subcommand("union", "delta-matroid union of two instances");
    c_union->add_option("file_a", file_a)->required();
    c_union->add_option("file_b", file_b)->required();

    CLI::App* c_dsum = app.add_subcommand("deltasum", "delta-sum of two instances");
    c_dsum->add_option("file_a", file_a)->required();
    c_dsum->add_option("file_b", file_b)->required();

    CLI::App* c_project = app.add_subcommand("project", "normalize or slice a projected representation");
    c_project->add_option("file", file_a)->required();
    c_project->add_option("--part", part, "elementary (default), even, or odd");

    CLI::App* c_maxw = app.add_subcommand("maxweight", "max-weight feasible set");
    c_maxw->add_option("file", file_a)->required();
    c_maxw->add_option("--weights", weight_spec, "label:weight,... (overrides the instance weights)");

    CLI::App* c_cover = app.add_subcommand("cover", "disjoint pair maximizing |F1 + F2|");
    c_cover->add_option("file_a", file_a)->required();
    c_cover->add_option("file_b", file_b)->required();

    CLI::App* c_dcover = app.add_subcommand("deltacover", "pair maximizing |F1 symdiff F2|");
    c_dcover->add_option("file_a", file_a)->required();
    c_dcover->add_option("file_b", file_b)->required();

    CLI::App* c_isect = app.add_subcommand("intersect", "common feasible set");
    c_isect->add_option("file_a", file_a)->required();
    c_isect->add_option("file_b", file_b)->required();

    CLI::App* c_part = app.add_subcommand("partition", "split the ground set into feasible halves");
    c_part->add_option("file_a", file_a)->required();
    c_part->add_option("file_b", file_b)->required();

    CLI::App* c_parity = app.add_subcommand("parity", "feasible set minimizing broken pairs");
    c_parity->add_option("file", file_a)->required();
    c_parity->add_option("--pairs", pair_spec, "label:label,... (overrides the instance pairs)");

    CLI::App* c_wisect = app.add_subcommand("wintersect", "max-weight common feasible set");
    c_wisect->add_option("file_a", file_a)->required();
    c_wisect->add_option("file_b", file_b)->required();
    c_wisect->add_option("--weights", weight_spec, "label:weight,... with positive integer weights");

    CLI::App* c_bench = app.add_subcommand("bench", "time the core kernels on random instances (CSV)");
    c_bench->add_option("--sizes", size_spec, "comma-separated instance sizes");

    app.require_subcommand(0, 1);

    std::vector<const char*> argv;
    argv.push_back("deltakit");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help() << "\n";
            return kExitOk;
        }
        err << "error: " << e.what() << "\n" << app.help() << "\n";
        return kExitUsage;
    }
    if (app.get_subcommands().empty()) {
        err << app.help() << "\n";
        return kExitUsage;
    }

    // Modulus: --prime beats DELTAKIT_PRIME beats the default.
    std::uint64_t prime = kMersenne61;
    if (const char* env = std::getenv("DELTAKIT_PRIME"); env && prime_flag == 0) {
        try {
            prime = std::stoull(env);
        } catch (const std::exception&) {
            err << "error: DELTAKIT_PRIME is not an integer\n";
            return kExitUsage;
        }
    }
    if (prime_flag != 0) prime = prime_flag;
    if (prime < (std::uint64_t{1} << 31) || !is_prime_u64(prime)) {
        err << "error: modulus must be a prime of at least 2^31\n";
        return kExitUsage;
    }
    struct PrimeRestore {
        std::uint64_t saved = field_prime();
        ~PrimeRestore() { set_field_prime(saved); }
    } prime_restore;
    set_field_prime(prime);

    if (!seed_given) seed = (static_cast<std::uint64_t>(std::random_device{}()) << 32) ^ std::random_device{}();
    detail_cli::CommandContext ctx(seed, eps, reduce, timing);

    auto load = [&](const std::string& path) { return parse_instance(path, ctx.rng, ctx.eps); };
    auto emit_rep = [&](const char* command, const ProjectedRep& rep) {
        json j = ctx.envelope(command);
        json ser = serialize(ctx.reduce ? ProjectedRep(reduce_contraction_set(rep.inner), rep.project) : rep);
        j.update(ser);
        ctx.finish(j, out);
        return kExitOk;
    };

    try {
        if (*c_axioms) {
            Instance inst = load(file_a);
            oracle::FeasibleFamily fam = oracle::enumerate_family(inst.rep);
            auto cex = oracle::check_symmetric_exchange(fam);
            json j = ctx.envelope("check-axioms");
            j["value"] = !cex.has_value();
            json fams = json::array();
            for (std::uint32_t m : fam.sets) fams.push_back(detail_cli::label_list(fam.labels_of(m)));
            j["family"] = fams;
            ctx.finish(j, out);
            if (cex) {
                err << "symmetric exchange fails: F1=" << detail_cli::label_list(fam.labels_of(cex->f1)).dump()
                    << " F2=" << detail_cli::label_list(fam.labels_of(cex->f2)).dump() << " x=" << fam.ground[cex->x]
                    << "\n";
                return kExitNotFound;
            }
            return kExitOk;
        }
        if (*c_convert) {
            Instance inst = load(file_a);
            if (!inst.rep.is_linear()) {
                err << "error: cannot convert a projected representation\n";
                return kExitUsage;
            }
            ContractionRep c = ctx.reduce ? reduce_contraction_set(inst.rep.inner) : inst.rep.inner;
            json j = ctx.envelope("convert");
            if (to_kind == "contraction") {
                j.update(serialize(c));
            } else if (to_kind == "twist") {
                j.update(serialize(contraction_to_twist(c)));
            } else {
                err << "error: --to must be twist or contraction\n";
                return kExitUsage;
            }
            ctx.finish(j, out);
            return kExitOk;
        }
        if (*c_union) {
            Instance a = load(file_a), b = load(file_b);
            return emit_rep("union", dm_union(a.rep, b.rep, ctx.rng, ctx.eps));
        }
        if (*c_dsum) {
            Instance a = load(file_a), b = load(file_b);
            return emit_rep("deltasum", delta_sum(a.rep, b.rep, ctx.rng, ctx.eps));
        }
        if (*c_project) {
            Instance inst = load(file_a);
            if (part == "elementary") return emit_rep("project", elementary_projection(inst.rep, ctx.rng, ctx.eps));
            if (part == "even") return emit_rep("project", as_projected(even_part(inst.rep, ctx.rng, ctx.eps)));
            if (part == "odd") return emit_rep("project", as_projected(odd_part(inst.rep, ctx.rng, ctx.eps)));
            err << "error: --part must be elementary, even, or odd\n";
            return kExitUsage;
        }
        if (*c_maxw) {
            Instance inst = load(file_a);
            WeightMap w = !weight_spec.empty() ? detail_cli::parse_weight_spec(weight_spec)
                          : inst.weights       ? *inst.weights
                                                : WeightMap{};
            if (w.w.empty() && !inst.rep.ground().empty()) {
                err << "error: maxweight needs --weights or an instance `weights` key\n";
                return kExitUsage;
            }
            MaxWeightResult r = max_weight_feasible(inst.rep, w);
            json j = ctx.envelope("maxweight");
            j["value"] = r.weight;
            j["witness"] = detail_cli::label_list(r.set);
            ctx.finish(j, out);
            return kExitOk;
        }
        if (*c_cover || *c_dcover) {
            Instance a = load(file_a), b = load(file_b);
            CoverWitness cw = *c_cover ? search_covering(a.rep, b.rep, ctx.rng, ctx.eps)
                                       : search_delta_covering(a.rep, b.rep, ctx.rng, ctx.eps);
            json j = ctx.envelope(*c_cover ? "cover" : "deltacover");
            j["value"] = cw.value;
            j["witnesses"] = json::array({detail_cli::label_list(cw.f1), detail_cli::label_list(cw.f2)});
            ctx.finish(j, out);
            return kExitOk;
        }
        if (*c_isect) {
            Instance a = load(file_a), b = load(file_b);
            auto common = search_intersection(a.rep, b.rep, ctx.rng);
            if (!common) {
                err << "no common feasible set found (randomized)\n";
                return kExitNotFound;
            }
            json j = ctx.envelope("intersect");
            j["value"] = static_cast<long long>(common->size());
            j["witness"] = detail_cli::label_list(*common);
            ctx.finish(j, out);
            return kExitOk;
        }
        if (*c_part) {
            Instance a = load(file_a), b = load(file_b);
            auto split = search_partition(a.rep, b.rep, ctx.rng);
            if (!split) {
                err << "no feasible partition found (randomized)\n";
                return kExitNotFound;
            }
            json j = ctx.envelope("partition");
            j["witnesses"] = json::array({detail_cli::label_list(split->first), detail_cli::label_list(split->second)});
            ctx.finish(j, out);
            return kExitOk;
        }
        if (*c_parity) {
            Instance inst = load(file_a);
            PairPartition pi = !pair_spec.empty() ? detail_cli::parse_pair_spec(pair_spec)
                               : inst.pairs       ? *inst.pairs
                                                   : PairPartition{};
            ParityWitness w = search_parity(inst.rep, pi, ctx.rng, ctx.eps);
            json j = ctx.envelope("parity");
            j["value"] = w.broken;
            j["witness"] = detail_cli::label_list(w.f);
            ctx.finish(j, out);
            return kExitOk;
        }
        if (*c_wisect) {
            Instance a = load(file_a), b = load(file_b);
            WeightMap w = !weight_spec.empty() ? detail_cli::parse_weight_spec(weight_spec)
                          : a.weights          ? *a.weights
                                                : WeightMap::ones(a.rep.ground());
            auto value = weighted_intersection_value(a.rep, b.rep, w, ctx.rng);
            if (!value) {
                err << "no common feasible set found (randomized)\n";
                return kExitNotFound;
            }
            auto witness = weighted_intersection_search(a.rep, b.rep, w, ctx.rng);
            json j = ctx.envelope("wintersect");
            j["value"] = *value;
            j["witness"] = detail_cli::label_list(witness.value());
            ctx.finish(j, out);
            return kExitOk;
        }
        if (*c_bench) {
            detail_cli::run_bench(ctx, detail_cli::parse_size_spec(size_spec), out);
            return kExitOk;
        }
    } catch (const RandomizationFailure& e) {
        err << "randomized failure: " << e.what() << " (retry with a fresh --seed)\n";
        return kExitRandomFailure;
    } catch (const EmptyDeltaMatroid& e) {
        err << "construction produced no representable family: " << e.what() << "\n";
        return kExitRandomFailure;
    } catch (const InfeasibleMinor& e) {
        err << "infeasible: " << e.what() << "\n";
        return kExitNotFound;
    } catch (const EmptySlice& e) {
        err << "infeasible: " << e.what() << "\n";
        return kExitNotFound;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << app.help() << "\n";
    return kExitUsage;
}

} // namespace cli
} // namespace deltakit
