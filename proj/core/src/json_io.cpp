#include "symdyn/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "symdyn/error.hpp"

namespace symdyn::io {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw Error(ErrorCode::ParseError, "malformed JSON");
    return doc;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

const json& field(const json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key))
        throw Error(ErrorCode::ParseError, std::string("missing key '") + key + "'");
    return doc.at(key);
}

std::string get_string(const json& v, const char* what) {
    if (!v.is_string()) throw Error(ErrorCode::ParseError, std::string(what) + " must be a string");
    return v.get<std::string>();
}

std::size_t get_count(const json& v, const char* what) {
    if (!v.is_number_unsigned())
        throw Error(ErrorCode::ParseError, std::string(what) + " must be a nonnegative integer");
    return v.get<std::size_t>();
}

std::vector<Symbol> parse_alphabet(const json& arr) {
    if (!arr.is_array()) throw Error(ErrorCode::ParseError, "alphabet must be an array");
    std::vector<Symbol> out;
    for (const auto& v : arr) out.push_back(Symbol::parse(get_string(v, "alphabet entry")));
    return out;
}

json alphabet_to_json(const std::vector<Symbol>& alphabet) {
    json arr = json::array();
    for (const auto& s : alphabet) arr.push_back(s.str());
    return arr;
}

std::map<Word, Symbol> parse_gen(const json& obj) {
    if (!obj.is_object()) throw Error(ErrorCode::ParseError, "gen must be an object");
    std::map<Word, Symbol> gen;
    for (const auto& [k, v] : obj.items())
        gen[Word::parse(k)] = Symbol::parse(get_string(v, "gen value"));
    return gen;
}

json gen_to_json(const std::map<Word, Symbol>& gen) {
    json obj = json::object();
    for (const auto& [w, s] : gen) obj[w.str()] = s.str();
    return obj;
}

json system_to_json(const FiniteDynSys& sys) {
    json doc;
    doc["states"] = json::array();
    for (const auto& [s, _] : sys.step) doc["states"].push_back(s);
    doc["step"] = json::object();
    for (const auto& [s, t] : sys.step) doc["step"][s] = t;
    return doc;
}

FiniteDynSys system_from_json(const json& doc) {
    const json& states = field(doc, "states");
    const json& step = field(doc, "step");
    if (!states.is_array()) throw Error(ErrorCode::ParseError, "states must be an array");
    if (!step.is_object()) throw Error(ErrorCode::ParseError, "step must be an object");
    std::set<StateId> declared;
    for (const auto& v : states) declared.insert(get_string(v, "state"));
    std::map<StateId, StateId> step_map;
    for (const auto& [s, t] : step.items()) {
        if (!declared.count(s))
            throw Error(ErrorCode::ParseError, "step key '" + s + "' not among states");
        step_map[s] = get_string(t, "step value");
    }
    if (step_map.size() != declared.size())
        throw Error(ErrorCode::ParseError, "step must have every state as a key");
    try {
        return make_system(std::move(step_map));
    } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

json observed_to_json(const ObservedSystem& x) {
    json doc;
    doc["system"] = system_to_json(x.sys);
    doc["alphabet"] = alphabet_to_json(x.meas.alphabet);
    doc["phi"] = json::object();
    for (const auto& [s, y] : x.meas.phi) doc["phi"][s] = y.str();
    doc["initial"] = x.initial;
    return doc;
}

ObservedSystem observed_from_json(const json& doc) {
    FiniteDynSys sys = system_from_json(field(doc, "system"));
    Measurement meas;
    meas.alphabet = parse_alphabet(field(doc, "alphabet"));
    const json& phi = field(doc, "phi");
    if (!phi.is_object()) throw Error(ErrorCode::ParseError, "phi must be an object");
    for (const auto& [s, y] : phi.items())
        meas.phi[s] = Symbol::parse(get_string(y, "phi value"));
    const json& initial = field(doc, "initial");
    if (!initial.is_array()) throw Error(ErrorCode::ParseError, "initial must be an array");
    std::vector<StateId> init;
    for (const auto& v : initial) init.push_back(get_string(v, "initial state"));
    return make_observed_system(std::move(sys), std::move(meas), std::move(init));
}

json presentation_to_json(const SubshiftPresentation& p) {
    json doc;
    doc["vertices"] = p.vertices;
    doc["alphabet"] = alphabet_to_json(p.alphabet);
    doc["edges"] = json::array();
    for (const auto& e : p.edges) {
        json edge;
        edge["from"] = e.from;
        edge["label"] = e.label.str();
        edge["to"] = e.to;
        doc["edges"].push_back(edge);
    }
    return doc;
}

SubshiftPresentation presentation_from_json(const json& doc) {
    const json& vertices = field(doc, "vertices");
    if (!vertices.is_array()) throw Error(ErrorCode::ParseError, "vertices must be an array");
    std::vector<VertexId> verts;
    for (const auto& v : vertices) verts.push_back(get_string(v, "vertex"));
    const json& edges = field(doc, "edges");
    if (!edges.is_array()) throw Error(ErrorCode::ParseError, "edges must be an array");
    std::set<PresEdge> edge_set;
    for (const auto& e : edges) {
        PresEdge edge;
        edge.from = get_string(field(e, "from"), "edge.from");
        edge.to = get_string(field(e, "to"), "edge.to");
        edge.label = Symbol::parse(get_string(field(e, "label"), "edge.label"));
        edge_set.insert(std::move(edge));
    }
    return make_presentation(std::move(verts), std::move(edge_set),
                             parse_alphabet(field(doc, "alphabet")));
}

json tsd_to_json(const TimeSeriesData& x) {
    json doc;
    doc["alphabet"] = alphabet_to_json(x.alphabet);
    doc["horizon"] = x.horizon();
    doc["levels"] = json::array();
    for (const auto& level : x.levels) {
        json arr = json::array();
        for (const auto& w : level) arr.push_back(w.str());
        doc["levels"].push_back(arr);
    }
    return doc;
}

TimeSeriesData tsd_from_json(const json& doc) {
    TimeSeriesData x;
    x.alphabet = parse_alphabet(field(doc, "alphabet"));
    std::size_t horizon = get_count(field(doc, "horizon"), "horizon");
    const json& levels = field(doc, "levels");
    if (!levels.is_array() || levels.size() != horizon + 1)
        throw Error(ErrorCode::ParseError, "levels must be an array of horizon+1 entries");
    for (const auto& level : levels) {
        if (!level.is_array()) throw Error(ErrorCode::ParseError, "each level must be an array");
        WordSet set;
        for (const auto& w : level) set.insert(Word::parse(get_string(w, "level word")));
        x.levels.push_back(std::move(set));
    }
    return x;
}

json code_like_to_json(std::size_t width, const char* width_key,
                       const std::vector<Symbol>& src, const std::vector<Symbol>& tgt,
                       const std::map<Word, Symbol>& gen) {
    json doc;
    doc[width_key] = width;
    doc["source_alphabet"] = alphabet_to_json(src);
    doc["target_alphabet"] = alphabet_to_json(tgt);
    doc["gen"] = gen_to_json(gen);
    return doc;
}

} // namespace

FiniteDynSys parse_system(const std::string& text) {
    return system_from_json(parse_json(text));
}

std::string to_json(const FiniteDynSys& sys) { return dump(system_to_json(sys)); }

ObservedSystem parse_observed_system(const std::string& text) {
    return observed_from_json(parse_json(text));
}

std::string to_json(const ObservedSystem& x) { return dump(observed_to_json(x)); }

SubshiftPresentation parse_presentation(const std::string& text) {
    return presentation_from_json(parse_json(text));
}

std::string to_json(const SubshiftPresentation& p) { return dump(presentation_to_json(p)); }

SlidingBlockCode parse_code(const std::string& text) {
    json doc = parse_json(text);
    try {
        return make_code(get_count(field(doc, "window"), "window"),
                         parse_alphabet(field(doc, "source_alphabet")),
                         parse_alphabet(field(doc, "target_alphabet")),
                         parse_gen(field(doc, "gen")));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ParseError) throw;
        throw Error(ErrorCode::ParseError, e.what());
    }
}

std::string to_json(const SlidingBlockCode& c) {
    return dump(code_like_to_json(c.window, "window", c.source_alphabet, c.target_alphabet,
                                  c.gen));
}

TsdMorphism parse_tsd_morphism(const std::string& text) {
    json doc = parse_json(text);
    TsdMorphism m;
    m.jump = get_count(field(doc, "jump"), "jump");
    m.source_alphabet = parse_alphabet(field(doc, "source_alphabet"));
    m.target_alphabet = parse_alphabet(field(doc, "target_alphabet"));
    m.gen = parse_gen(field(doc, "gen"));
    for (const auto& [w, _] : m.gen)
        if (w.size() != m.jump + 1)
            throw Error(ErrorCode::ParseError, "gen key '" + w.str() + "' must have length " +
                                                   std::to_string(m.jump + 1));
    return m;
}

std::string to_json(const TsdMorphism& m) {
    return dump(
        code_like_to_json(m.jump, "jump", m.source_alphabet, m.target_alphabet, m.gen));
}

ObsMorphism parse_obs_morphism(const std::string& text) {
    json doc = parse_json(text);
    ObsMorphism m;
    const json& h = field(doc, "h");
    if (!h.is_object()) throw Error(ErrorCode::ParseError, "h must be an object");
    for (const auto& [s, t] : h.items()) m.h[s] = get_string(t, "h value");
    const json& A = field(doc, "A");
    if (!A.is_object()) throw Error(ErrorCode::ParseError, "A must be an object");
    for (const auto& [s, t] : A.items())
        m.A[Symbol::parse(s)] = Symbol::parse(get_string(t, "A value"));
    return m;
}

std::string to_json(const ObsMorphism& m) {
    json doc;
    doc["h"] = json::object();
    for (const auto& [s, t] : m.h) doc["h"][s] = t;
    doc["A"] = json::object();
    for (const auto& [s, t] : m.A) doc["A"][s.str()] = t.str();
    return dump(doc);
}

TimeSeriesData parse_tsd(const std::string& text) { return tsd_from_json(parse_json(text)); }

std::string to_json(const TimeSeriesData& x) { return dump(tsd_to_json(x)); }

DynDiagram parse_diagram(const std::string& text) {
    json doc = parse_json(text);
    DynDiagram d;
    const json& nodes = field(doc, "nodes");
    if (!nodes.is_array()) throw Error(ErrorCode::ParseError, "nodes must be an array");
    for (const auto& n : nodes) d.nodes.push_back(system_from_json(n));
    const json& arrows = field(doc, "arrows");
    if (!arrows.is_array()) throw Error(ErrorCode::ParseError, "arrows must be an array");
    for (const auto& a : arrows) {
        DiagramArrow arrow;
        arrow.from = get_count(field(a, "from"), "arrow.from");
        arrow.to = get_count(field(a, "to"), "arrow.to");
        const json& map = field(a, "map");
        if (!map.is_object()) throw Error(ErrorCode::ParseError, "arrow.map must be an object");
        for (const auto& [s, t] : map.items()) arrow.map[s] = get_string(t, "arrow.map value");
        d.arrows.push_back(std::move(arrow));
    }
    return d;
}

std::string to_json(const DynDiagram& d) {
    json doc;
    doc["nodes"] = json::array();
    for (const auto& n : d.nodes) doc["nodes"].push_back(system_to_json(n));
    doc["arrows"] = json::array();
    for (const auto& a : d.arrows) {
        json arrow;
        arrow["from"] = a.from;
        arrow["map"] = json::object();
        for (const auto& [s, t] : a.map) arrow["map"][s] = t;
        arrow["to"] = a.to;
        doc["arrows"].push_back(arrow);
    }
    return dump(doc);
}

ReconResult parse_recon_result(const std::string& text) {
    json doc = parse_json(text);
    ReconResult r;
    r.order = get_count(field(doc, "order"), "order");
    r.presentation = presentation_from_json(field(doc, "presentation"));
    const json& sys = field(doc, "system");
    if (!sys.is_null()) r.system = observed_from_json(sys);
    const json& words = field(doc, "state_words");
    if (!words.is_object()) throw Error(ErrorCode::ParseError, "state_words must be an object");
    for (const auto& [s, w] : words.items())
        r.state_words[s] = Word::parse(get_string(w, "state word"));
    r.empty_data = r.presentation.empty();
    return r;
}

std::string to_json(const ReconResult& r) {
    json doc;
    doc["order"] = r.order;
    doc["presentation"] = presentation_to_json(r.presentation);
    doc["system"] = r.system ? observed_to_json(*r.system) : json(nullptr);
    doc["state_words"] = json::object();
    for (const auto& [s, w] : r.state_words) doc["state_words"][s] = w.str();
    return dump(doc);
}

std::vector<Symbol> parse_raw_sequence(const std::string& text) {
    std::vector<std::string> tokens;
    std::string line;
    std::istringstream in(text);
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    if (lines.size() == 1 && lines[0].find(',') != std::string::npos) {
        std::istringstream fields(lines[0]);
        std::string tok;
        while (std::getline(fields, tok, ',')) tokens.push_back(tok);
    } else {
        tokens = lines;
    }
    std::vector<Symbol> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.push_back(Symbol::parse(t));
    return out;
}

DocKind detect_kind(const std::string& text) {
    json doc = parse_json(text);
    if (!doc.is_object()) throw Error(ErrorCode::ParseError, "expected a JSON object");
    auto has = [&](const char* k) { return doc.contains(k); };
    if (has("order") && has("presentation")) return DocKind::ReconResult;
    if (has("nodes") && has("arrows")) return DocKind::Diagram;
    if (has("levels") && has("horizon")) return DocKind::Tsd;
    if (has("window") && has("gen")) return DocKind::Code;
    if (has("jump") && has("gen")) return DocKind::TsdMorphism;
    if (has("h") && has("A")) return DocKind::ObsMorphism;
    if (has("vertices") && has("edges")) return DocKind::Presentation;
    if (has("system") && has("phi")) return DocKind::ObservedSystem;
    if (has("states") && has("step")) return DocKind::System;
    throw Error(ErrorCode::ParseError, "unrecognized document shape");
}

const char* doc_kind_name(DocKind kind) {
    switch (kind) {
        case DocKind::System: return "system";
        case DocKind::ObservedSystem: return "observed-system";
        case DocKind::Presentation: return "presentation";
        case DocKind::Code: return "code";
        case DocKind::TsdMorphism: return "tsd-morphism";
        case DocKind::ObsMorphism: return "obs-morphism";
        case DocKind::Tsd: return "tsd";
        case DocKind::Diagram: return "diagram";
        case DocKind::ReconResult: return "recon-result";
    }
    return "unknown";
}

RoundtripResult roundtrip(const std::string& text) {
    RoundtripResult res;
    res.kind = detect_kind(text);
    auto canon = [&](const std::string& t) -> std::string {
        switch (res.kind) {
            case DocKind::System: return to_json(parse_system(t));
            case DocKind::ObservedSystem: return to_json(parse_observed_system(t));
            case DocKind::Presentation: return to_json(parse_presentation(t));
            case DocKind::Code: return to_json(parse_code(t));
            case DocKind::TsdMorphism: return to_json(parse_tsd_morphism(t));
            case DocKind::ObsMorphism: return to_json(parse_obs_morphism(t));
            case DocKind::Tsd: return to_json(parse_tsd(t));
            case DocKind::Diagram: return to_json(parse_diagram(t));
            case DocKind::ReconResult: return to_json(parse_recon_result(t));
        }
        throw Error(ErrorCode::ParseError, "unrecognized document shape");
    };
    res.canonical = canon(text);
    res.stable = (canon(res.canonical) == res.canonical);
    return res;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
    out << content;
}

} // namespace symdyn::io
