#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lextri/canonical.hpp"
#include "lextri/equivelar.hpp"
#include "lextri/homology.hpp"
#include "lextri/io.hpp"
#include "lextri/topology.hpp"

using namespace lextri;

namespace {

struct EnumerateArgs {
    int dim = 2;
    int n = 0;
    int degree = 0;
    int slice = 0;
    int of = 1;
    int jobs = 1;
    int relabel_period = 1;
    int partition_depth = 2;
    bool progress = false;
    std::string output;
};

EnumerationConfig to_config(const EnumerateArgs& a) {
    EnumerationConfig cfg;
    cfg.dim = a.dim;
    cfg.n = a.n;
    cfg.degree_constraint = a.degree;
    cfg.slice_index = a.slice;
    cfg.slice_count = a.of;
    cfg.relabel_period = a.relabel_period;
    cfg.partition_depth = a.partition_depth;
    cfg.progress = a.progress;
    return cfg;
}

void print_stats(std::ostream& os, const EnumerationStats& st) {
    os << "emitted " << st.emitted << " (nodes " << st.nodes << ", discarded "
       << st.discarded << ", pruned: degree " << st.pruned_degree << ", link "
       << st.pruned_link << ", relabeling " << st.pruned_relabel;
    if (st.pruned_constraint) os << ", constraint " << st.pruned_constraint;
    os << ")\n";
}

int run_enumerate(const EnumerateArgs& args) {
    if (args.jobs > 1) {
        if (args.output.empty())
            throw CLI::ValidationError("--jobs needs --output as the file base");
        if (args.of > 1)
            throw CLI::ValidationError("--jobs and --slice/--of are exclusive");
        std::vector<std::thread> workers;
        std::vector<ManifestEntry> manifest(args.jobs);
        std::vector<std::string> errors(args.jobs);
        for (int j = 0; j < args.jobs; ++j) {
            workers.emplace_back([&, j] {
                try {
                    EnumerateArgs mine = args;
                    mine.slice = j;
                    mine.of = args.jobs;
                    std::ofstream out(args.output + ".part" + std::to_string(j));
                    ManifestEntry e;
                    e.slice = j;
                    e.slice_count = args.jobs;
                    enumerate(to_config(mine), [&](const Triangulation& t) {
                        std::string rec = serialize(t);
                        out << rec << '\n';
                        ++e.count;
                        e.last_record = std::move(rec);
                    });
                    manifest[j] = std::move(e);
                } catch (const std::exception& ex) {
                    errors[j] = ex.what();
                }
            });
        }
        for (auto& w : workers) w.join();
        for (const auto& err : errors)
            if (!err.empty()) throw std::runtime_error(err);
        std::ofstream mf(args.output + ".manifest");
        mf << render_manifest(manifest);
        std::uint64_t total = 0;
        for (const auto& e : manifest) total += e.count;
        std::cerr << "lextri: " << total << " triangulations across " << args.jobs
                  << " slices; manifest " << args.output << ".manifest\n";
        return 0;
    }
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!args.output.empty()) {
        file.open(args.output);
        if (!file) throw std::runtime_error("cannot write " + args.output);
        out = &file;
    }
    EnumerationStats st;
    enumerate(to_config(args),
              [&](const Triangulation& t) { *out << serialize(t) << '\n'; }, nullptr,
              &st);
    std::cerr << "lextri: ";
    print_stats(std::cerr, st);
    return 0;
}

std::string classify_label(const Triangulation& t, char* orientable) {
    if (t.dim == 2) {
        SurfaceType s = classify_surface(t.facets);
        *orientable = s.orientable ? '+' : '-';
        return std::to_string(s.genus);
    }
    Manifold3 m = classify_3manifold(t.facets);
    *orientable = (m == Manifold3::S2twS1) ? '-' : '+';
    return manifold3_name(m);
}

int run_count(const EnumerateArgs& args, bool classify) {
    EnumerationStats st;
    if (!classify) {
        std::uint64_t n = count_triangulations(to_config(args), &st);
        std::cout << n << '\n';
        std::cerr << "lextri: ";
        print_stats(std::cerr, st);
        return 0;
    }
    std::map<std::pair<char, std::string>, std::uint64_t> by_class;
    std::uint64_t total = 0;
    enumerate(to_config(args), [&](const Triangulation& t) {
        char ori;
        std::string label = classify_label(t, &ori);
        ++by_class[{ori, label}];
        ++total;
    }, nullptr, &st);
    std::vector<CountRow> rows;
    for (const auto& [k, c] : by_class)
        rows.push_back(CountRow{args.n, args.dim, k.first, k.second, c});
    std::cout << render_count_table(rows);
    std::cerr << "lextri: total " << total << "; ";
    print_stats(std::cerr, st);
    return 0;
}

std::vector<std::string> input_lines(const std::string& path) {
    if (path.empty() || path == "-") {
        std::vector<std::string> lines;
        std::string l;
        while (std::getline(std::cin, l)) lines.push_back(l);
        return lines;
    }
    return read_lines(path);
}

int run_classify(const std::string& input, bool table) {
    std::map<std::tuple<int, int, char, std::string>, std::uint64_t> agg;
    for (const std::string& line : input_lines(input)) {
        if (line.empty()) continue;
        Triangulation t = parse_triangulation(line, ParseMode::verified);
        char ori;
        std::string label = classify_label(t, &ori);
        if (table) {
            ++agg[{t.n, t.dim, ori, label}];
        } else {
            std::cout << line << '\t' << t.dim << '\t' << t.n << '\t'
                      << euler_characteristic(t.dim, t.facets) << '\t' << ori << '\t'
                      << label << '\n';
        }
    }
    if (table) {
        std::vector<CountRow> rows;
        for (const auto& [k, c] : agg)
            rows.push_back(
                CountRow{std::get<0>(k), std::get<1>(k), std::get<2>(k), std::get<3>(k), c});
        std::cout << render_count_table(rows);
    }
    return 0;
}

int run_verify(const std::string& input) {
    std::uint64_t ok = 0, bad = 0;
    std::uint64_t lineno = 0;
    for (const std::string& line : input_lines(input)) {
        ++lineno;
        if (line.empty()) continue;
        VerifyReport r = verify_triangulation(line);
        std::cout << lineno << ": ";
        if (!r.parses) {
            std::cout << "invalid: " << r.error << '\n';
            ++bad;
        } else if (!r.closed) {
            std::cout << "invalid: not a closed complex\n";
            ++bad;
        } else if (!r.links_ok) {
            std::cout << "invalid: a vertex link is not a sphere\n";
            ++bad;
        } else if (!r.connected) {
            std::cout << "invalid: not connected\n";
            ++bad;
        } else if (!r.contiguous) {
            std::cout << "invalid: labels not contiguous\n";
            ++bad;
        } else {
            std::cout << (r.canonical ? "ok" : "ok (not canonical)") << '\n';
            ++ok;
        }
    }
    std::cerr << "lextri: " << ok << " valid, " << bad << " invalid\n";
    return 0;
}

int run_equivelar(int chi, bool triples, int nmax) {
    if (triples) {
        for (const TypeTriple& t : admissible_triples(chi))
            std::cout << t.p << ' ' << t.q << ' ' << t.n << '\n';
        return 0;
    }
    if (chi == 0) {
        if (nmax < 7)
            throw CLI::ValidationError("chi 0 is the family (n, 6): give --nmax >= 7");
        for (auto [n, q] : torus_like_pairs(7, nmax)) std::cout << n << ' ' << q << '\n';
        return 0;
    }
    for (auto [n, q] : admissible_pairs(chi)) std::cout << n << ' ' << q << '\n';
    return 0;
}

int run_trace(const EnumerateArgs& args) {
    TraceObserver tracer(std::cout);
    EnumerationStats st;
    enumerate(to_config(args), [](const Triangulation&) {}, &tracer, &st);
    std::cerr << "lextri: ";
    print_stats(std::cerr, st);
    return 0;
}

int run_merge(const std::string& base, const std::string& output) {
    auto manifest = parse_manifest(read_lines(base + ".manifest"));
    if (manifest.empty()) throw std::runtime_error("empty manifest");
    std::vector<std::pair<std::vector<facet_t>, std::string>> records;
    for (const auto& e : manifest) {
        auto lines = read_lines(base + ".part" + std::to_string(e.slice));
        std::uint64_t count = 0;
        std::string last;
        for (const auto& line : lines) {
            if (line.empty()) continue;
            Triangulation t = parse_triangulation(line, ParseMode::raw);
            records.push_back({t.facets, line});
            ++count;
            last = line;
        }
        if (count != e.count || last != e.last_record)
            throw std::runtime_error("slice " + std::to_string(e.slice) +
                                     " does not match its manifest entry");
    }
    std::sort(records.begin(), records.end());
    for (std::size_t i = 1; i < records.size(); ++i)
        if (records[i].first == records[i - 1].first)
            throw std::runtime_error("duplicate record across slices");
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!output.empty()) {
        file.open(output);
        if (!file) throw std::runtime_error("cannot write " + output);
        out = &file;
    }
    for (const auto& [key, line] : records) *out << line << '\n';
    std::cerr << "lextri: merged " << records.size() << " records from "
              << manifest.size() << " slices\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lexicographic enumeration of triangulated surfaces and 3-manifolds"};
    app.require_subcommand(1);

    EnumerateArgs eargs;
    bool count_classify = false;
    std::string input, output, base;
    bool table = false;
    int chi = 0;
    bool triples = false;
    int nmax = 0;

    auto add_common = [&](CLI::App* sub, bool with_output) {
        sub->add_option("--dim", eargs.dim, "dimension (2 or 3)")->required();
        sub->add_option("-n,--n", eargs.n, "number of vertices")->required();
        sub->add_option("--degree", eargs.degree,
                        "restrict to vertex degree q everywhere (dim 2)");
        sub->add_option("--relabel-period", eargs.relabel_period,
                        "run the relabeling prune every j-th insertion (0: only "
                        "at completions)");
        sub->add_flag("--progress", eargs.progress, "stderr heartbeat per 1e6 nodes");
        if (with_output) {
            sub->add_option("--slice", eargs.slice, "process one subtree slice");
            sub->add_option("--of", eargs.of, "total slices");
            sub->add_option("--partition-depth", eargs.partition_depth,
                            "slicing depth beyond the initial star");
            sub->add_option("--jobs", eargs.jobs,
                            "enumerate slices in parallel threads; writes "
                            "<output>.part<i> plus <output>.manifest");
            sub->add_option("-o,--output", eargs.output, "write records here");
        }
    };

    CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "stream all triangulations");
    add_common(enumerate_cmd, true);

    CLI::App* count_cmd = app.add_subcommand("count", "count triangulations");
    add_common(count_cmd, false);
    count_cmd->add_flag("--classify", count_classify, "aggregate by topological type");

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "classify records from a file or stdin");
    classify_cmd->add_option("input", input, "records file ('-' for stdin)");
    classify_cmd->add_flag("--table", table, "print an aggregated count table");

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "validate records from a file or stdin");
    verify_cmd->add_option("input", input, "records file ('-' for stdin)");

    CLI::App* equivelar_cmd =
        app.add_subcommand("equivelar", "admissible equivelar types for a given chi");
    equivelar_cmd->add_option("--chi", chi, "Euler characteristic")->required();
    equivelar_cmd->add_flag("--triples", triples, "list (p,q,n) map types");
    equivelar_cmd->add_option("--nmax", nmax, "materialize the chi=0 family up to n");

    CLI::App* trace_cmd = app.add_subcommand("trace", "print the search tree");
    add_common(trace_cmd, false);

    CLI::App* merge_cmd = app.add_subcommand("merge", "merge sliced outputs");
    merge_cmd->add_option("--base", base, "file base used with --jobs")->required();
    merge_cmd->add_option("-o,--output", output, "write merged records here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(enumerate_cmd)) return run_enumerate(eargs);
        if (app.got_subcommand(count_cmd)) return run_count(eargs, count_classify);
        if (app.got_subcommand(classify_cmd)) return run_classify(input, table);
        if (app.got_subcommand(verify_cmd)) return run_verify(input);
        if (app.got_subcommand(equivelar_cmd)) return run_equivelar(chi, triples, nmax);
        if (app.got_subcommand(trace_cmd)) return run_trace(eargs);
        if (app.got_subcommand(merge_cmd)) return run_merge(base, output);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "lextri: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "lextri: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
