#pragma once

#include <colemb/certify.hh>
#include <colemb/constructions.hh>
#include <colemb/embedder.hh>
#include <colemb/negdep.hh>
#include <colemb/oracle.hh>

#include <json.hpp>

#include <istream>
#include <ostream>
#include <string>

namespace colemb
{
    using Json = nlohmann::ordered_json;

    auto shape_to_json(const HostShape & shape) -> Json;
    auto shape_from_json(const Json & value) -> HostShape;

    /// {"shape": {...}, "edges": [[v, ...], ...], "colors": [c, ...]} with edges in canonical order.
    auto host_to_json(const ColoredHost & host) -> Json;
    auto host_from_json(const Json & value) -> ColoredHost;

    /// Text format: a header "# multipartite m n" or "# hypergraph n r", then one "v1 ... vr c" line per edge.
    auto write_host_text(std::ostream & out, const ColoredHost & host) -> void;
    auto read_host_text(std::istream & in) -> ColoredHost;
    /// Accepts either format, choosing JSON when the first non-blank character is '{'.
    auto read_host(std::istream & in) -> ColoredHost;

    /// {"vertices": n, "r": r, "edges": [...], "parts": [...]}; "parts" is omitted when absent.
    auto pattern_to_json(const Pattern & pattern) -> Json;
    auto pattern_from_json(const Json & value) -> Pattern;

    /// A bare array, or an object carrying the array under "embedding".
    auto embedding_to_json(const Embedding & embedding) -> Json;
    auto embedding_from_json(const Json & value) -> Embedding;

    auto read_latin_csv(std::istream & in) -> LatinSquare;
    auto write_latin_csv(std::ostream & out, const LatinSquare & square) -> void;

    auto parse_json(std::istream & in, const std::string & what) -> Json;

    auto rational_to_json(const Rational & value) -> Json;
    auto boundedness_to_json(const BoundednessReport & report) -> Json;
    auto profile_to_json(const DegreeProfile & profile) -> Json;
    auto certificate_to_json(const LLLCertificate & certificate) -> Json;
    auto violation_to_json(const Violation & violation) -> Json;
    auto validation_to_json(const ValidationReport & report) -> Json;
    auto embed_result_to_json(const EmbedResult & result) -> Json;
    auto negdep_report_to_json(const NegDepReport & report) -> Json;
    auto plane_to_json(const ProjectivePlane & plane) -> Json;
    auto design_to_json(const DesignHypergraph & design) -> Json;
}
