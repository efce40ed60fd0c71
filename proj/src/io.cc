#include <colemb/errors.hh>
#include <colemb/io.hh>

#include <sstream>

using std::string;
using std::vector;

namespace colemb
{
    namespace
    {
        auto require(const Json & value, const char * key) -> const Json &
        {
            if (! value.is_object() || ! value.contains(key))
                throw Error(ErrorCode::parse_error, string("missing field \"") + key + "\"");
            return value.at(key);
        }

        template <typename T>
        auto get_as(const Json & value, const char * what) -> T
        {
            try {
                return value.get<T>();
            }
            catch (const nlohmann::json::exception & e) {
                throw Error(ErrorCode::parse_error, string(what) + ": " + e.what());
            }
        }

        auto next_content_line(std::istream & in, string & line) -> bool
        {
            while (std::getline(in, line)) {
                auto start = line.find_first_not_of(" \t\r");
                if (start != string::npos)
                    return true;
            }
            return false;
        }
    }

    auto shape_to_json(const HostShape & shape) -> Json
    {
        Json out;
        out["kind"] = shape.kind == HostKind::multipartite ? "multipartite" : "hypergraph";
        out["m"] = shape.m;
        out["n"] = shape.n;
        out["r"] = shape.r;
        return out;
    }

    auto shape_from_json(const Json & value) -> HostShape
    {
        auto kind = get_as<string>(require(value, "kind"), "shape kind");
        HostShape shape;
        if (kind == "multipartite")
            shape = HostShape::multipartite(get_as<int>(require(value, "m"), "m"), get_as<int>(require(value, "n"), "n"));
        else if (kind == "hypergraph")
            shape = HostShape::hypergraph(get_as<int>(require(value, "n"), "n"), get_as<int>(require(value, "r"), "r"));
        else
            throw Error(ErrorCode::parse_error, "unknown host kind \"" + kind + "\"");
        shape.validate();
        return shape;
    }

    auto host_to_json(const ColoredHost & host) -> Json
    {
        Json out;
        out["shape"] = shape_to_json(host.shape());
        out["edges"] = host.edges();
        out["colors"] = host.colors();
        return out;
    }

    auto host_from_json(const Json & value) -> ColoredHost
    {
        auto shape = shape_from_json(require(value, "shape"));
        auto edges = get_as<vector<Edge>>(require(value, "edges"), "edges");
        auto colors = get_as<vector<std::int64_t>>(require(value, "colors"), "colors");
        if (edges.size() != colors.size())
            throw Error(ErrorCode::parse_error, "edges and colors differ in length");
        return ColoredHost::from_edges(shape, edges, colors);
    }

    auto write_host_text(std::ostream & out, const ColoredHost & host) -> void
    {
        auto & shape = host.shape();
        if (shape.kind == HostKind::multipartite)
            out << "# multipartite " << shape.m << ' ' << shape.n << '\n';
        else
            out << "# hypergraph " << shape.n << ' ' << shape.r << '\n';
        auto colors = host.colors();
        std::size_t i = 0;
        for_each_host_edge(shape, [&](std::span<const int> e) {
            for (auto v : e)
                out << v << ' ';
            out << colors[i++] << '\n';
        });
    }

    auto read_host_text(std::istream & in) -> ColoredHost
    {
        string line;
        if (! next_content_line(in, line))
            throw Error(ErrorCode::parse_error, "empty host text");
        std::istringstream header(line);
        string hash, kind;
        int a = 0, b = 0;
        header >> hash >> kind >> a >> b;
        if (! header || hash != "#")
            throw Error(ErrorCode::parse_error, "host text must start with \"# multipartite m n\" or \"# hypergraph n r\"");
        HostShape shape;
        if (kind == "multipartite")
            shape = HostShape::multipartite(a, b);
        else if (kind == "hypergraph")
            shape = HostShape::hypergraph(a, b);
        else
            throw Error(ErrorCode::parse_error, "unknown host kind \"" + kind + "\"");
        shape.validate();

        int r = shape.uniformity();
        vector<Edge> edges;
        vector<std::int64_t> colors;
        while (next_content_line(in, line)) {
            if (line.find_first_not_of(" \t") != string::npos && line[line.find_first_not_of(" \t")] == '#')
                continue;
            std::istringstream fields(line);
            Edge e(r);
            std::int64_t c;
            for (auto & v : e)
                fields >> v;
            fields >> c;
            string rest;
            if (! fields || (fields >> rest))
                throw Error(ErrorCode::parse_error, "malformed edge line \"" + line + "\"");
            edges.push_back(std::move(e));
            colors.push_back(c);
        }
        return ColoredHost::from_edges(shape, edges, colors);
    }

    auto read_host(std::istream & in) -> ColoredHost
    {
        in >> std::ws;
        if (in.peek() == '{')
            return host_from_json(parse_json(in, "host"));
        return read_host_text(in);
    }

    auto pattern_to_json(const Pattern & pattern) -> Json
    {
        Json out;
        out["vertices"] = pattern.vertex_count();
        out["r"] = pattern.uniformity();
        out["edges"] = pattern.edges();
        if (pattern.has_parts())
            out["parts"] = *pattern.parts();
        return out;
    }

    auto pattern_from_json(const Json & value) -> Pattern
    {
        auto vertices = get_as<int>(require(value, "vertices"), "vertices");
        int r = value.contains("r") ? get_as<int>(value.at("r"), "r") : 2;
        auto edges = get_as<vector<Edge>>(require(value, "edges"), "edges");
        std::optional<vector<int>> parts;
        if (value.contains("parts") && ! value.at("parts").is_null())
            parts = get_as<vector<int>>(value.at("parts"), "parts");
        return Pattern(vertices, r, std::move(edges), std::move(parts));
    }

    auto embedding_to_json(const Embedding & embedding) -> Json { return embedding.image; }

    auto embedding_from_json(const Json & value) -> Embedding
    {
        if (value.is_object())
            return {get_as<vector<int>>(require(value, "embedding"), "embedding")};
        return {get_as<vector<int>>(value, "embedding")};
    }

    auto read_latin_csv(std::istream & in) -> LatinSquare
    {
        LatinSquare square;
        string line;
        while (next_content_line(in, line)) {
            vector<int> row;
            std::istringstream cells(line);
            string cell;
            while (std::getline(cells, cell, ',')) {
                try {
                    std::size_t used = 0;
                    row.push_back(std::stoi(cell, &used));
                    if (cell.find_first_not_of(" \t\r", used) != string::npos)
                        throw std::invalid_argument(cell);
                }
                catch (const std::logic_error &) {
                    throw Error(ErrorCode::parse_error, "bad Latin square cell \"" + cell + "\"");
                }
            }
            square.push_back(std::move(row));
        }
        return square;
    }

    auto write_latin_csv(std::ostream & out, const LatinSquare & square) -> void
    {
        for (auto & row : square) {
            for (std::size_t j = 0; j < row.size(); ++j)
                out << (j ? "," : "") << row[j];
            out << '\n';
        }
    }

    auto parse_json(std::istream & in, const string & what) -> Json
    {
        try {
            return Json::parse(in);
        }
        catch (const nlohmann::json::parse_error & e) {
            throw Error(ErrorCode::parse_error, what + ": " + e.what());
        }
    }

    auto rational_to_json(const Rational & value) -> Json { return to_string(value); }

    auto boundedness_to_json(const BoundednessReport & report) -> Json
    {
        Json out;
        out["kLocal"] = report.k_local;
        out["kGlobal"] = report.k_global;
        out["colorCount"] = report.per_color_sizes.size();
        out["perColorSizes"] = report.per_color_sizes;
        return out;
    }

    auto profile_to_json(const DegreeProfile & profile) -> Json
    {
        Json out;
        out["delta"] = profile.delta;
        out["maxDegree"] = profile.max_degree();
        return out;
    }

    auto certificate_to_json(const LLLCertificate & certificate) -> Json
    {
        Json out;
        out["theorem"] = theorem_name(certificate.theorem);
        out["passes"] = certificate.passes;
        out["perEventProbBound"] = rational_to_json(certificate.per_event_prob_bound);
        out["neighborhoodSumExact"] = rational_to_json(certificate.neighborhood_sum_exact);
        out["neighborhoodSumBound"] = rational_to_json(certificate.neighborhood_sum_bound);
        out["thresholdK"] = certificate.threshold_k;
        Json terms = Json::array();
        for (auto & term : certificate.breakdown)
            terms.push_back({{"class", term.label}, {"countBound", rational_to_json(term.count_bound)},
                {"probability", rational_to_json(term.probability)},
                {"contribution", rational_to_json(term.contribution)}});
        out["breakdown"] = terms;
        return out;
    }

    auto violation_to_json(const Violation & violation) -> Json
    {
        Json out;
        out["kind"] = violation_kind_name(violation.kind);
        out["edges"] = {violation.first_edge, violation.second_edge};
        out["overlap"] = violation.overlap;
        out["support"] = violation.support;
        out["images"] = violation.images;
        out["color"] = violation.color;
        return out;
    }

    auto validation_to_json(const ValidationReport & report) -> Json
    {
        Json out;
        out["injective"] = report.injective;
        out["partRespecting"] = report.part_respecting;
        out["properlyColored"] = report.properly_colored;
        out["rainbow"] = report.rainbow;
        Json structure = Json::array();
        for (auto [u, w] : report.structure_witnesses)
            structure.push_back({{"vertex", u}, {"image", w}});
        out["structureWitnesses"] = structure;
        Json witnesses = Json::array();
        for (auto & v : report.witnesses)
            witnesses.push_back(violation_to_json(v));
        out["witnesses"] = witnesses;
        return out;
    }

    auto embed_result_to_json(const EmbedResult & result) -> Json
    {
        Json out;
        out["success"] = result.success;
        out["seed"] = result.seed;
        if (result.success)
            out["embedding"] = embedding_to_json(result.embedding);
        out["resamples"] = result.resamples;
        out["totalResamples"] = result.total_resamples;
        out["restartsUsed"] = result.restarts_used;
        out["maxResamples"] = result.max_resamples;
        if (result.last_violation)
            out["lastViolation"] = violation_to_json(*result.last_violation);
        if (! result.transcript.empty())
            out["transcript"] = result.transcript;
        return out;
    }

    auto negdep_report_to_json(const NegDepReport & report) -> Json
    {
        Json out;
        out["injections"] = report.injections;
        out["checks"] = report.checks;
        out["skippedNull"] = report.skipped_null;
        out["ok"] = report.ok();
        Json violations = Json::array();
        for (auto & v : report.violations)
            violations.push_back({{"event", v.event}, {"conditioned", v.conditioned},
                {"conditional", rational_to_json(v.conditional)}, {"unconditional", rational_to_json(v.unconditional)}});
        out["violations"] = violations;
        return out;
    }

    auto plane_to_json(const ProjectivePlane & plane) -> Json
    {
        Json out;
        out["q"] = plane.q;
        out["points"] = plane.points;
        out["lineVectors"] = plane.line_vectors;
        out["lines"] = plane.lines;
        return out;
    }

    auto design_to_json(const DesignHypergraph & design) -> Json
    {
        Json out;
        out["vertices"] = design.m;
        out["r"] = design.r;
        out["ell"] = design.ell;
        out["m"] = design.m;
        out["edges"] = design.edges;
        return out;
    }
}
