#include <colemb/cli.hh>
#include <colemb/constructions.hh>
#include <colemb/errors.hh>
#include <colemb/io.hh>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using std::string;
using std::vector;

namespace colemb
{
    namespace
    {
        struct IoError : std::runtime_error
        {
            using std::runtime_error::runtime_error;
        };

        /// Resolves "-" to the process input and anything else to a file.
        class InputSource
        {
        public:
            InputSource(const string & path, std::istream & standard)
            {
                if (path == "-")
                    _stream = &standard;
                else {
                    _file.open(path);
                    if (! _file)
                        throw IoError("cannot open " + path);
                    _stream = &_file;
                }
            }

            auto stream() -> std::istream & { return *_stream; }

        private:
            std::ifstream _file;
            std::istream * _stream = nullptr;
        };

        struct Context
        {
            std::istream & in;
            std::ostream & out;
            string output = "-";
            bool pretty = false;

            auto emit(const Json & value) -> void
            {
                auto text = value.dump(pretty ? 2 : -1);
                write([&](std::ostream & s) { s << text << '\n'; });
            }

            auto write(const std::function<void(std::ostream &)> & body) -> void
            {
                if (output == "-") {
                    body(out);
                    return;
                }
                std::ofstream file(output);
                if (! file)
                    throw IoError("cannot write " + output);
                body(file);
                if (! file)
                    throw IoError("write to " + output + " failed");
            }
        };

        auto default_seed() -> std::uint64_t
        {
            if (auto env = std::getenv("COLEMB_SEED")) {
                try {
                    return std::stoull(env);
                }
                catch (const std::logic_error &) {
                    throw Error(ErrorCode::invalid_argument, string("COLEMB_SEED is not an unsigned integer: ") + env);
                }
            }
            std::random_device device;
            return (static_cast<std::uint64_t>(device()) << 32) ^ device();
        }

        auto read_host_from(const string & path, std::istream & in) -> ColoredHost
        {
            InputSource source(path, in);
            return read_host(source.stream());
        }

        auto read_json_from(const string & path, std::istream & in, const string & what) -> Json
        {
            InputSource source(path, in);
            return parse_json(source.stream(), what);
        }

        auto exit_for(ErrorCode code) -> int
        {
            switch (code) {
            case ErrorCode::invalid_argument: return exit_code::usage;
            case ErrorCode::parse_error: return exit_code::io;
            default: return exit_code::domain;
            }
        }

        auto parse_list(const string & text) -> vector<int>
        {
            vector<int> values;
            std::istringstream cells(text);
            string cell;
            while (std::getline(cells, cell, ',')) {
                try {
                    values.push_back(std::stoi(cell));
                }
                catch (const std::logic_error &) {
                    throw Error(ErrorCode::invalid_argument, "bad integer list \"" + text + "\"");
                }
            }
            return values;
        }

        const std::map<string, EventMode> mode_names{{"proper", EventMode::proper}, {"rainbow", EventMode::rainbow}};
        const std::map<string, BoundType> bound_names{{"local", BoundType::local}, {"global", BoundType::global}};
        const std::map<string, HostKind> kind_names{
            {"multipartite", HostKind::multipartite}, {"hypergraph", HostKind::hypergraph}};
        const std::map<string, ScanOrder> scan_names{
            {"firstFound", ScanOrder::first_found}, {"random", ScanOrder::random}};
        const std::map<string, Theorem> theorem_names{{"proper", Theorem::proper}, {"rainbow", Theorem::rainbow},
            {"hyperProper", Theorem::hyper_proper}, {"hyperRainbow", Theorem::hyper_rainbow}};

        auto add_output(CLI::App * sub, Context & ctx) -> void
        {
            sub->add_option("-o,--output", ctx.output, "Output file, - for stdout");
        }
    }

    auto run_cli(int argc, const char * const * argv, std::istream & in, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Bounded edge-colorings, local lemma certificates and colored embeddings"};
        app.require_subcommand(1);
        app.fallthrough();
        Context ctx{in, out};
        app.add_flag("--pretty", ctx.pretty, "Indent JSON output");

        // gen-host
        auto gen = app.add_subcommand("gen-host", "Generate a colored complete host");
        HostKind gen_kind = HostKind::multipartite;
        int gen_m = 2, gen_n = 4, gen_r = 3, gen_k = 1;
        string gen_coloring = "random", gen_format = "json";
        BoundType gen_bound = BoundType::global;
        std::optional<std::uint64_t> gen_seed;
        gen->add_option("--kind", gen_kind, "multipartite or hypergraph")
            ->transform(CLI::CheckedTransformer(kind_names));
        gen->add_option("--m", gen_m, "Number of parts");
        gen->add_option("--n", gen_n, "Part size (multipartite) or vertex count (hypergraph)");
        gen->add_option("--r", gen_r, "Hypergraph uniformity");
        gen->add_option("--coloring", gen_coloring, "random, mono, rainbow or latin-cyclic")
            ->check(CLI::IsMember({"random", "mono", "rainbow", "latin-cyclic"}));
        gen->add_option("--k", gen_k, "Target bound for random colorings")->check(CLI::PositiveNumber);
        gen->add_option("--bound", gen_bound, "local or global")->transform(CLI::CheckedTransformer(bound_names));
        gen->add_option("--seed", gen_seed, "Random seed");
        gen->add_option("--format", gen_format, "json or text")->check(CLI::IsMember({"json", "text"}));
        add_output(gen, ctx);

        // measure
        auto measure = app.add_subcommand("measure", "Measure local and global boundedness of a host coloring");
        string measure_host = "-", measure_pattern;
        measure->add_option("--host", measure_host, "Host file, - for stdin");
        measure->add_option("--pattern", measure_pattern, "Report the degree profile of this pattern instead");
        add_output(measure, ctx);

        // certify
        auto cert = app.add_subcommand("certify", "Evaluate the lopsided local lemma certificate");
        EventFamilySpec spec;
        cert->add_option("--mode", spec.mode)->transform(CLI::CheckedTransformer(mode_names));
        cert->add_option("--bound", spec.bound)->transform(CLI::CheckedTransformer(bound_names));
        cert->add_option("--host-kind", spec.host)->transform(CLI::CheckedTransformer(kind_names));
        cert->add_option("--m", spec.m);
        cert->add_option("--n", spec.n)->required();
        cert->add_option("--r", spec.r);
        cert->add_option("--ell", spec.ell);
        cert->add_option("--delta", spec.delta, "Maximum degree (graphs) or 1-degree (hypergraphs)")->required();
        cert->add_option("--delta-ell", spec.delta_ell, "Maximum ell-degree (hypergraphs)");
        cert->add_option("--k", spec.k)->required();
        add_output(cert, ctx);

        // threshold
        auto thresh = app.add_subcommand("threshold", "Largest bound k covered by a theorem");
        Theorem theorem = Theorem::proper;
        ThresholdInput threshold_input;
        thresh->add_option("--theorem", theorem)->transform(CLI::CheckedTransformer(theorem_names))->required();
        thresh->add_option("--n", threshold_input.n)->required();
        thresh->add_option("--delta", threshold_input.delta)->required();
        thresh->add_option("--r", threshold_input.r);
        thresh->add_option("--ell", threshold_input.ell);
        thresh->add_option("--delta-ell", threshold_input.delta_ell);
        add_output(thresh, ctx);

        // embed
        auto emb = app.add_subcommand("embed", "Search for a colored copy by swap resampling");
        string emb_host = "-", emb_pattern, emb_transcript;
        EmbedConfig config;
        std::optional<std::uint64_t> emb_seed;
        emb->add_option("--host", emb_host);
        emb->add_option("--pattern", emb_pattern)->required();
        emb->add_option("--mode", config.mode)->transform(CLI::CheckedTransformer(mode_names));
        emb->add_option("--max-resamples", config.max_resamples, "0 selects 100 per event support");
        emb->add_option("--restarts", config.restarts)->check(CLI::PositiveNumber);
        emb->add_option("--seed", emb_seed);
        emb->add_option("--scan-order", config.scan_order)->transform(CLI::CheckedTransformer(scan_names));
        emb->add_flag("--parallel", config.parallel, "Run restarts on several threads");
        emb->add_option("--transcript", emb_transcript, "Write the run transcript to this file");
        add_output(emb, ctx);

        // oracle
        auto orc = app.add_subcommand("oracle", "Decide existence of a colored copy exhaustively");
        string orc_host = "-", orc_pattern;
        EventMode orc_mode = EventMode::proper;
        std::uint64_t orc_limit = 100'000'000;
        orc->add_option("--host", orc_host);
        orc->add_option("--pattern", orc_pattern)->required();
        orc->add_option("--mode", orc_mode)->transform(CLI::CheckedTransformer(mode_names));
        orc->add_option("--limit", orc_limit, "Refuse searches over more injections than this");
        add_output(orc, ctx);

        // verify
        auto ver = app.add_subcommand("verify", "Validate an embedding");
        string ver_host = "-", ver_pattern, ver_embedding;
        EventMode ver_mode = EventMode::proper;
        ver->add_option("--host", ver_host);
        ver->add_option("--pattern", ver_pattern)->required();
        ver->add_option("--embedding", ver_embedding)->required();
        ver->add_option("--mode", ver_mode)->transform(CLI::CheckedTransformer(mode_names));
        add_output(ver, ctx);

        // construct
        auto con = app.add_subcommand("construct", "Generate the extremal constructions");
        con->require_subcommand(1);
        con->fallthrough();
        int con_q = 2, con_m = 2, con_n = 12, con_r = 3, con_ell = 1, con_n1 = 3;
        string con_incidence;
        auto con_plane = con->add_subcommand("plane-pattern", "Projective plane pattern");
        con_plane->add_option("--q", con_q);
        con_plane->add_option("--m", con_m);
        con_plane->add_option("--incidence", con_incidence, "Also write the point-line incidence CSV here");
        auto con_fan = con->add_subcommand("fan-coloring", "Clustered fan coloring of K_{m x n}");
        con_fan->add_option("--q", con_q);
        con_fan->add_option("--m", con_m);
        con_fan->add_option("--n", con_n);
        auto con_first = con->add_subcommand("first-ell", "First-ell-vertices coloring of K_n^(r)");
        con_first->add_option("--n", con_n);
        con_first->add_option("--r", con_r);
        con_first->add_option("--ell", con_ell);
        auto con_design = con->add_subcommand("design", "Design in which every (ell+1)-set lies in one edge");
        con_design->add_option("--r", con_r);
        con_design->add_option("--ell", con_ell);
        con_design->add_option("--m", con_m);
        con_design->add_option("--incidence", con_incidence, "Also write the vertex-edge incidence CSV here");
        auto con_tree = con->add_subcommand("tree", "Two-level tree pattern");
        con_tree->add_option("--r", con_r);
        con_tree->add_option("--n1", con_n1);
        auto con_block = con->add_subcommand("block", "Block multiset coloring of K_n^(r)");
        con_block->add_option("--n", con_n);
        con_block->add_option("--r", con_r);
        for (auto sub : {con_plane, con_fan, con_first, con_design, con_tree, con_block})
            add_output(sub, ctx);

        // verify-negdep
        auto neg = app.add_subcommand("verify-negdep", "Check negative dependency on a tiny injection space");
        string neg_x = "2,2", neg_y = "3,3", neg_events;
        NegDepConfig neg_config;
        std::optional<std::uint64_t> neg_seed;
        neg->add_option("--x-sizes", neg_x, "Comma separated domain part sizes");
        neg->add_option("--y-sizes", neg_y, "Comma separated range part sizes");
        neg->add_option("--events", neg_events, "JSON list of events, each a list of [x, y] pairs");
        neg->add_option("--exhaustive", neg_config.exhaustive_size, "Largest exhaustively checked conditioning set");
        neg->add_option("--samples", neg_config.sampled_subsets, "Sampled larger conditioning sets per event");
        neg->add_option("--limit", neg_config.injection_limit);
        neg->add_option("--seed", neg_seed);
        add_output(neg, ctx);

        // latin
        auto lat = app.add_subcommand("latin", "Latin squares as colorings of K_{n,n}");
        lat->require_subcommand(1);
        lat->fallthrough();
        string lat_input;
        int lat_order = 0;
        bool lat_cyclic = false;
        auto lat_import = lat->add_subcommand("import", "Convert a CSV Latin square into a host");
        lat_import->add_option("--input", lat_input, "CSV file, - for stdin")->required();
        auto lat_trans = lat->add_subcommand("transversal", "Search for a Latin transversal");
        lat_trans->add_option("--input", lat_input, "CSV file, - for stdin");
        lat_trans->add_option("--order", lat_order);
        lat_trans->add_flag("--cyclic", lat_cyclic, "Use the cyclic square of the given order");
        add_output(lat_import, ctx);
        add_output(lat_trans, ctx);

        try {
            app.parse(argc, argv);
        }
        catch (const CLI::ParseError & e) {
            auto code = app.exit(e, out, err);
            return code == 0 ? exit_code::ok : exit_code::usage;
        }

        try {
            if (gen->parsed()) {
                auto shape = gen_kind == HostKind::multipartite ? HostShape::multipartite(gen_m, gen_n)
                                                                : HostShape::hypergraph(gen_n, gen_r);
                shape.validate();
                std::optional<ColoredHost> host;
                std::optional<std::uint64_t> seed;
                if (gen_coloring == "mono")
                    host = monochromatic_coloring(shape);
                else if (gen_coloring == "rainbow")
                    host = rainbow_coloring(shape);
                else if (gen_coloring == "latin-cyclic") {
                    if (shape.kind != HostKind::multipartite || shape.m != 2)
                        throw Error(ErrorCode::invalid_argument, "latin-cyclic needs a multipartite host with m = 2");
                    host = latin_square_to_coloring(cyclic_latin_square(shape.n));
                }
                else {
                    seed = gen_seed ? *gen_seed : default_seed();
                    host = random_bounded_coloring(shape, gen_k, gen_bound, *seed);
                }
                if (gen_format == "text")
                    ctx.write([&](std::ostream & s) { write_host_text(s, *host); });
                else {
                    auto json = host_to_json(*host);
                    if (seed)
                        json["seed"] = *seed;
                    ctx.emit(json);
                }
                return exit_code::ok;
            }

            if (measure->parsed()) {
                if (! measure_pattern.empty()) {
                    auto pattern = pattern_from_json(read_json_from(measure_pattern, in, "pattern"));
                    auto json = profile_to_json(degree_profile(pattern));
                    json["vertices"] = pattern.vertex_count();
                    json["edges"] = pattern.edge_count();
                    ctx.emit(json);
                    return exit_code::ok;
                }
                ctx.emit(boundedness_to_json(measure_boundedness(read_host_from(measure_host, in))));
                return exit_code::ok;
            }

            if (cert->parsed()) {
                if (spec.host == HostKind::hypergraph && spec.delta_ell == 0)
                    spec.delta_ell = spec.delta;
                auto certificate = certify(spec);
                ctx.emit(certificate_to_json(certificate));
                return certificate.passes ? exit_code::ok : exit_code::negative;
            }

            if (thresh->parsed()) {
                if (threshold_input.delta_ell == 0)
                    threshold_input.delta_ell = threshold_input.delta;
                ctx.emit(threshold_k(theorem, threshold_input));
                return exit_code::ok;
            }

            if (emb->parsed()) {
                auto pattern = pattern_from_json(read_json_from(emb_pattern, in, "pattern"));
                auto host = read_host_from(emb_host, in);
                config.seed = emb_seed ? *emb_seed : default_seed();
                config.record_transcript = ! emb_transcript.empty();
                auto result = embed(pattern, host, config);
                if (config.record_transcript) {
                    std::ofstream file(emb_transcript);
                    if (! file)
                        throw IoError("cannot write " + emb_transcript);
                    for (auto & line : result.transcript)
                        file << line << '\n';
                    result.transcript.clear();
                }
                ctx.emit(embed_result_to_json(result));
                return result.success ? exit_code::ok : exit_code::negative;
            }

            if (orc->parsed()) {
                auto pattern = pattern_from_json(read_json_from(orc_pattern, in, "pattern"));
                auto host = read_host_from(orc_host, in);
                auto result = exists_colored_copy(pattern, host, orc_mode, orc_limit);
                Json json;
                json["exists"] = result.exists;
                json["witness"] = result.witness ? embedding_to_json(*result.witness) : Json(nullptr);
                json["nodes"] = result.nodes;
                ctx.emit(json);
                return result.exists ? exit_code::ok : exit_code::negative;
            }

            if (ver->parsed()) {
                auto pattern = pattern_from_json(read_json_from(ver_pattern, in, "pattern"));
                auto embedding = embedding_from_json(read_json_from(ver_embedding, in, "embedding"));
                auto host = read_host_from(ver_host, in);
                auto report = validate(embedding, pattern, host);
                auto json = validation_to_json(report);
                json["valid"] = report.valid(ver_mode);
                ctx.emit(json);
                return report.valid(ver_mode) ? exit_code::ok : exit_code::negative;
            }

            if (con->parsed()) {
                if (con_plane->parsed()) {
                    auto pattern = build_plane_pattern(con_q, con_m);
                    auto json = pattern_to_json(pattern);
                    json["partSizes"] = pattern.part_sizes();
                    json["maxDegree"] = degree_profile(pattern).max_degree();
                    json["q"] = con_q;
                    json["m"] = con_m;
                    if (! con_incidence.empty()) {
                        std::ofstream file(con_incidence);
                        if (! file)
                            throw IoError("cannot write " + con_incidence);
                        write_incidence_csv(file, build_projective_plane(con_q));
                    }
                    ctx.emit(json);
                }
                else if (con_fan->parsed()) {
                    auto fan = build_fan_coloring(con_q, con_m, con_n);
                    auto json = host_to_json(fan.host);
                    json["clustersPerPart"] = fan.clusters_per_part;
                    json["clusterSizes"] = fan.cluster_sizes;
                    json["cluster"] = fan.cluster;
                    ctx.emit(json);
                }
                else if (con_first->parsed())
                    ctx.emit(host_to_json(build_first_ell_coloring(con_n, con_r, con_ell)));
                else if (con_design->parsed()) {
                    auto design = build_design(con_r, con_ell, con_m);
                    if (! con_incidence.empty()) {
                        std::ofstream file(con_incidence);
                        if (! file)
                            throw IoError("cannot write " + con_incidence);
                        write_incidence_csv(file, design);
                    }
                    ctx.emit(design_to_json(design));
                }
                else if (con_tree->parsed())
                    ctx.emit(pattern_to_json(build_tree_pattern(con_r, con_n1)));
                else if (con_block->parsed())
                    ctx.emit(host_to_json(build_block_coloring(con_n, con_r)));
                return exit_code::ok;
            }

            if (neg->parsed()) {
                InjectionSpace space{parse_list(neg_x), parse_list(neg_y)};
                space.validate();
                vector<CanonicalEvent> events;
                if (neg_events.empty())
                    events = all_single_pair_events(space);
                else {
                    auto json = read_json_from(neg_events, in, "events");
                    try {
                        for (auto & event : json)
                            events.push_back({event.get<vector<std::pair<int, int>>>()});
                    }
                    catch (const nlohmann::json::exception & e) {
                        throw Error(ErrorCode::parse_error, string("events: ") + e.what());
                    }
                }
                neg_config.seed = neg_seed ? *neg_seed : default_seed();
                auto report = verify_negative_dependency(space, events, neg_config);
                auto json = negdep_report_to_json(report);
                json["events"] = events.size();
                json["seed"] = neg_config.seed;
                ctx.emit(json);
                return report.ok() ? exit_code::ok : exit_code::negative;
            }

            if (lat->parsed()) {
                LatinSquare square;
                if (! lat_input.empty()) {
                    InputSource source(lat_input, in);
                    square = read_latin_csv(source.stream());
                }
                else if (lat_order > 0 && lat_cyclic)
                    square = cyclic_latin_square(lat_order);
                else
                    throw Error(ErrorCode::invalid_argument, "give --input or --order with --cyclic");
                auto host = latin_square_to_coloring(square);
                if (lat_import->parsed()) {
                    ctx.emit(host_to_json(host));
                    return exit_code::ok;
                }
                int order = static_cast<int>(square.size());
                vector<Edge> matching;
                vector<int> parts(2 * order);
                for (int i = 0; i < order; ++i) {
                    matching.push_back({i, order + i});
                    parts[order + i] = 1;
                }
                Pattern pattern(2 * order, 2, matching, parts);
                auto result = exists_colored_copy(pattern, host, EventMode::rainbow);
                if (! result.exists) {
                    ctx.emit("none");
                    return exit_code::negative;
                }
                Json cells = Json::array();
                for (int i = 0; i < order; ++i) {
                    int column = result.witness->image[order + i] - order;
                    int row = result.witness->image[i];
                    cells.push_back({{"row", row}, {"column", column}, {"symbol", square[row][column]}});
                }
                ctx.emit(Json{{"transversal", cells}});
                return exit_code::ok;
            }
        }
        catch (const Error & e) {
            err << e.what() << '\n';
            return exit_for(e.code());
        }
        catch (const IoError & e) {
            err << "io-error: " << e.what() << '\n';
            return exit_code::io;
        }
        return exit_code::usage;
    }
}
