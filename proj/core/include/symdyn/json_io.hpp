#ifndef SYMDYN_JSON_IO_HPP
#define SYMDYN_JSON_IO_HPP

#include <string>
#include <vector>

#include "symdyn/dynsys.hpp"
#include "symdyn/observe.hpp"
#include "symdyn/recon.hpp"
#include "symdyn/shift.hpp"
#include "symdyn/tsd.hpp"

namespace symdyn::io {

// Every parser accepts exactly what the matching serializer emits, validates
// the documented schema, and throws Error(ParseError) on anything else.
// Serializers emit canonical JSON: sorted keys, two-space indent, trailing
// newline, so identical values always produce identical bytes.

FiniteDynSys parse_system(const std::string& text);
std::string to_json(const FiniteDynSys& sys);

ObservedSystem parse_observed_system(const std::string& text);
std::string to_json(const ObservedSystem& x);

SubshiftPresentation parse_presentation(const std::string& text);
std::string to_json(const SubshiftPresentation& p);

SlidingBlockCode parse_code(const std::string& text);
std::string to_json(const SlidingBlockCode& c);

TsdMorphism parse_tsd_morphism(const std::string& text);
std::string to_json(const TsdMorphism& m);

ObsMorphism parse_obs_morphism(const std::string& text);
std::string to_json(const ObsMorphism& m);

TimeSeriesData parse_tsd(const std::string& text);
std::string to_json(const TimeSeriesData& x);

DynDiagram parse_diagram(const std::string& text);
std::string to_json(const DynDiagram& d);

ReconResult parse_recon_result(const std::string& text);
std::string to_json(const ReconResult& r);

/// Raw symbol stream: one symbol per line, or a single comma-separated line.
std::vector<Symbol> parse_raw_sequence(const std::string& text);

enum class DocKind {
    System,
    ObservedSystem,
    Presentation,
    Code,
    TsdMorphism,
    ObsMorphism,
    Tsd,
    Diagram,
    ReconResult,
};

/// Detects the document kind from its top-level keys.
DocKind detect_kind(const std::string& text);
const char* doc_kind_name(DocKind kind);

/// Parse, reserialize canonically, and reparse; returns the canonical bytes
/// and whether the second pass reproduced them (it always should).
struct RoundtripResult {
    bool stable = false;
    DocKind kind = DocKind::System;
    std::string canonical;
};
RoundtripResult roundtrip(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace symdyn::io

#endif // SYMDYN_JSON_IO_HPP
