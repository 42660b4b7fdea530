#include "intervar/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace intervar {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kModuleSchema = "intervar/module/1";
constexpr const char* kWindowsSchema = "intervar/windows/1";
constexpr const char* kDistanceSchema = "intervar/distance/1";
constexpr const char* kVarietySchema = "intervar/variety/1";
constexpr const char* kClassSchema = "intervar/class/1";
constexpr const char* kProgressionSchema = "intervar/progression/1";
constexpr const char* kVerifySchema = "intervar/verify/1";

[[noreturn]] void fail(const std::string& message) {
    throw std::invalid_argument(message);
}

Json parse_text(const std::string& text) {
    Json doc = Json::parse(text, nullptr, false);
    if (doc.is_discarded()) fail("malformed JSON input");
    return doc;
}

void expect_schema(const Json& doc, const char* schema) {
    if (!doc.is_object()) fail("expected a JSON object");
    if (doc.contains("schema") && doc["schema"] != schema) {
        fail("unsupported schema: expected \"" + std::string(schema) + "\"");
    }
}

Rational rational_field(const Json& value, const std::string& what) {
    if (!value.is_string()) fail(what + " must be a rational string");
    try {
        return Rational::parse(value.get<std::string>());
    } catch (const std::exception& e) {
        fail(what + ": " + e.what());
    }
}

Json window_json(const HomWindow& w) {
    Json out;
    if (w.is_empty()) {
        out["kind"] = "empty";
    } else {
        out["kind"] = "window";
        out["lo"] = w.lo().str();
        out["hi"] = w.hi().str();
    }
    return out;
}

Json module_json(const PersistenceModule& module) {
    Json out;
    out["schema"] = kModuleSchema;
    out["name"] = module.name;
    out["intervals"] = Json::array();
    for (const IntervalModule& s : module.summands) {
        Json entry;
        entry["birth"] = s.birth().str();
        entry["death"] = s.death().str();
        out["intervals"].push_back(std::move(entry));
    }
    return out;
}

PersistenceModule module_from_json(const Json& doc) {
    expect_schema(doc, kModuleSchema);
    PersistenceModule out;
    if (!doc.contains("name") || !doc["name"].is_string()) fail("module needs a string \"name\"");
    out.name = doc["name"].get<std::string>();
    if (!doc.contains("intervals") || !doc["intervals"].is_array()) {
        fail("module needs an \"intervals\" array");
    }
    for (const Json& entry : doc["intervals"]) {
        if (!entry.is_object() || !entry.contains("birth") || !entry.contains("death")) {
            fail("each interval needs \"birth\" and \"death\"");
        }
        const Rational birth = rational_field(entry["birth"], "birth");
        const Rational death = rational_field(entry["death"], "death");
        if (!(birth < death)) {
            fail("degenerate interval [" + birth.str() + ", " + death.str() + ")");
        }
        out.summands.emplace_back(birth, death);
    }
    return out;
}

Variable parse_variable(const std::string& name) {
    // "k[row][col]" / "l[row][col]", 1-based.
    const auto malformed = [&]() { fail("malformed variable name \"" + name + "\""); };
    if (name.size() < 7 || (name[0] != 'k' && name[0] != 'l') || name[1] != '[') malformed();
    std::size_t pos = 2;
    const auto read_index = [&]() -> int {
        std::size_t close = name.find(']', pos);
        if (close == std::string::npos || close == pos) malformed();
        int value = 0;
        for (std::size_t i = pos; i < close; ++i) {
            if (!std::isdigit(static_cast<unsigned char>(name[i]))) malformed();
            value = value * 10 + (name[i] - '0');
        }
        pos = close + 1;
        return value;
    };
    const int row = read_index();
    if (pos >= name.size() || name[pos] != '[') malformed();
    ++pos;
    const int col = read_index();
    if (pos != name.size() || row < 1 || col < 1) malformed();
    return Variable{name[0] == 'k' ? VarFamily::K : VarFamily::L, row, col};
}

Json polynomial_json(const Polynomial& p) {
    Json out;
    out["terms"] = Json::array();
    for (const auto& [vars, coeff] : p.terms()) {
        Json term;
        term["coeff"] = coeff.str();
        term["vars"] = Json::array();
        for (const Variable& v : vars) term["vars"].push_back(var_name(v));
        out["terms"].push_back(std::move(term));
    }
    out["text"] = p.str();
    return out;
}

Polynomial polynomial_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array()) {
        fail("generator needs a \"terms\" array");
    }
    std::vector<Polynomial::RawTerm> raw;
    for (const Json& term : doc["terms"]) {
        if (!term.is_object() || !term.contains("coeff") || !term.contains("vars")) {
            fail("each term needs \"coeff\" and \"vars\"");
        }
        Monomial vars;
        for (const Json& v : term["vars"]) {
            if (!v.is_string()) fail("variable names must be strings");
            vars.push_back(parse_variable(v.get<std::string>()));
        }
        raw.emplace_back(std::move(vars), rational_field(term["coeff"], "coeff"));
    }
    return Polynomial::from_terms(raw);
}

Json assignment_json(const ScalarAssignment& a) {
    Json out;
    out["k"] = Json::array();
    for (const auto& [pos, value] : a.k_values) {
        Json entry;
        entry["row"] = pos.first;
        entry["col"] = pos.second;
        entry["value"] = value.str();
        out["k"].push_back(std::move(entry));
    }
    out["l"] = Json::array();
    for (const auto& [pos, value] : a.l_values) {
        Json entry;
        entry["row"] = pos.first;
        entry["col"] = pos.second;
        entry["value"] = value.str();
        out["l"].push_back(std::move(entry));
    }
    return out;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

const char* status_name(StatusHint status) {
    switch (status) {
        case StatusHint::ProvablyEmpty: return "ProvablyEmpty";
        case StatusHint::WitnessFound: return "WitnessFound";
        case StatusHint::Unknown: return "Unknown";
    }
    return "?";
}

PersistenceModule parse_module_json(const std::string& text) {
    return module_from_json(parse_text(text));
}

std::string render_module_json(const PersistenceModule& module) {
    return dump(module_json(module));
}

std::string render_windows_json(const PersistenceModule& m_module,
                                const PersistenceModule& n_module) {
    Json out;
    out["schema"] = kWindowsSchema;
    out["m"] = m_module.name;
    out["n"] = n_module.name;
    const auto table = [](const std::vector<IntervalModule>& srcs,
                          const char* src_label,
                          const std::vector<IntervalModule>& dsts,
                          const char* dst_label) {
        Json rows = Json::array();
        for (std::size_t s = 0; s < srcs.size(); ++s) {
            for (std::size_t d = 0; d < dsts.size(); ++d) {
                Json row;
                row["src"] = std::string(src_label) + "[" + std::to_string(s + 1) + "]";
                row["dst"] = std::string(dst_label) + "[" + std::to_string(d + 1) + "]";
                row["window"] = window_json(hom_window(srcs[s], dsts[d]));
                rows.push_back(std::move(row));
            }
        }
        return rows;
    };
    out["m_to_n"] = table(m_module.summands, "M", n_module.summands, "N");
    out["n_to_m"] = table(n_module.summands, "N", m_module.summands, "M");
    out["m_to_m"] = table(m_module.summands, "M", m_module.summands, "M");
    out["n_to_n"] = table(n_module.summands, "N", n_module.summands, "N");
    return dump(out);
}

std::string render_distance_json(const HomLifeSummary& life) {
    Json out;
    out["schema"] = kDistanceSchema;
    out["mode"] = "interval-pair";
    out["distance"] = life.distance.str();
    out["m1"] = life.m1.str();
    out["m2"] = life.m2.str();
    out["sigma"] = life.sigma.str();
    out["sigma_prime"] = life.sigma_prime.str();
    out["tau"] = life.tau.str();
    out["tau_prime"] = life.tau_prime.str();
    return dump(out);
}

std::string render_distance_json(const MatchingResult& result) {
    Json out;
    out["schema"] = kDistanceSchema;
    out["mode"] = "matching";
    out["distance"] = result.distance.str();
    out["matching"] = Json::array();
    for (const auto& [mi, nj] : result.matching) {
        out["matching"].push_back(Json::array({mi, nj}));
    }
    out["unmatched_m"] = result.unmatched_m;
    out["unmatched_n"] = result.unmatched_n;
    return dump(out);
}

std::string render_variety_json(const VarietyPresentation& presentation,
                                const std::optional<ProbeAnnotation>& probe) {
    Json out;
    out["schema"] = kVarietySchema;
    out["m_module"] = module_json(presentation.m_module);
    out["n_module"] = module_json(presentation.n_module);
    out["m"] = presentation.m;
    out["n"] = presentation.n;
    out["epsilon"] = presentation.epsilon.str();
    out["forced_zero"] = Json::array();
    for (const Variable& v : presentation.forced_zero) out["forced_zero"].push_back(var_name(v));
    out["free"] = Json::array();
    for (int i = 1; i <= presentation.n; ++i) {
        for (int j = 1; j <= presentation.m; ++j) {
            if (!presentation.is_forced_zero(k_var(i, j))) out["free"].push_back(var_name(k_var(i, j)));
        }
    }
    for (int j = 1; j <= presentation.m; ++j) {
        for (int i = 1; i <= presentation.n; ++i) {
            if (!presentation.is_forced_zero(l_var(j, i))) out["free"].push_back(var_name(l_var(j, i)));
        }
    }
    out["active_m"] = Json::array();
    for (const auto& [row, col] : presentation.active_m) {
        out["active_m"].push_back(Json::array({row, col}));
    }
    out["active_n"] = Json::array();
    for (const auto& [row, col] : presentation.active_n) {
        out["active_n"].push_back(Json::array({row, col}));
    }
    out["generators"] = Json::array();
    for (const Polynomial& g : presentation.generators) {
        out["generators"].push_back(polynomial_json(g));
    }
    out["status"] = status_name(presentation.status_hint);
    if (probe.has_value()) {
        Json probe_json;
        probe_json["budget"] = probe->budget;
        probe_json["seed"] = probe->seed;
        probe_json["result"] =
            probe->result.witness_found ? "witness_found" : "no_witness_in_budget";
        if (probe->result.witness_found) {
            probe_json["witness"] = assignment_json(probe->result.witness);
        }
        out["probe"] = std::move(probe_json);
    }
    return dump(out);
}

VarietyPresentation parse_variety_json(const std::string& text) {
    const Json doc = parse_text(text);
    expect_schema(doc, kVarietySchema);
    VarietyPresentation p;
    if (!doc.contains("m_module") || !doc.contains("n_module")) {
        fail("variety needs \"m_module\" and \"n_module\"");
    }
    p.m_module = module_from_json(doc["m_module"]);
    p.n_module = module_from_json(doc["n_module"]);
    if (!doc.contains("m") || !doc.contains("n") || !doc["m"].is_number_integer() ||
        !doc["n"].is_number_integer()) {
        fail("variety needs integer \"m\" and \"n\"");
    }
    p.m = doc["m"].get<int>();
    p.n = doc["n"].get<int>();
    if (p.m != static_cast<int>(p.m_module.summands.size()) ||
        p.n != static_cast<int>(p.n_module.summands.size())) {
        fail("summand counts do not match \"m\"/\"n\"");
    }
    if (!doc.contains("epsilon")) fail("variety needs \"epsilon\"");
    p.epsilon = rational_field(doc["epsilon"], "epsilon");
    for (const Json& v : doc.value("forced_zero", Json::array())) {
        if (!v.is_string()) fail("forced_zero entries must be variable names");
        p.forced_zero.push_back(parse_variable(v.get<std::string>()));
    }
    const auto read_active = [&](const char* key, std::vector<std::pair<int, int>>& sink) {
        for (const Json& entry : doc.value(key, Json::array())) {
            if (!entry.is_array() || entry.size() != 2) fail("active entries must be [row, col]");
            sink.emplace_back(entry[0].get<int>(), entry[1].get<int>());
        }
    };
    read_active("active_m", p.active_m);
    read_active("active_n", p.active_n);
    for (const Json& g : doc.value("generators", Json::array())) {
        p.generators.push_back(polynomial_from_json(g));
    }
    const std::string status = doc.value("status", "Unknown");
    if (status == "ProvablyEmpty") {
        p.status_hint = StatusHint::ProvablyEmpty;
    } else if (status == "WitnessFound") {
        p.status_hint = StatusHint::WitnessFound;
    } else if (status == "Unknown") {
        p.status_hint = StatusHint::Unknown;
    } else {
        fail("unknown status \"" + status + "\"");
    }
    return p;
}

std::string render_class_json(const Rational& epsilon, VarietyClass cls) {
    Json out;
    out["schema"] = kClassSchema;
    out["epsilon"] = epsilon.str();
    out["class"] = class_name(cls);
    return dump(out);
}

std::string render_progression_json(const std::string& m_name, const std::string& n_name,
                                    const Progression& prog) {
    Json out;
    out["schema"] = kProgressionSchema;
    out["m"] = m_name;
    out["n"] = n_name;
    out["breakpoints"] = Json::array();
    for (const Rational& b : prog.breakpoints) out["breakpoints"].push_back(b.str());
    out["segments"] = Json::array();
    for (const Progression::Segment& seg : prog.segments) {
        Json entry;
        entry["start"] = seg.start.str();
        entry["class"] = class_name(seg.cls);
        out["segments"].push_back(std::move(entry));
    }
    return dump(out);
}

std::string render_progression_text(const std::string& m_name, const std::string& n_name,
                                    const Progression& prog) {
    // One fixed-width cell per segment (the axis is not to scale):
    //   0          1          6          7
    //   |----------|----------|----------|--->
    //    Empty      Origin     LAxis      Origin
    std::size_t cell = 11;
    for (const Progression::Segment& seg : prog.segments) {
        cell = std::max(cell, seg.start.str().size() + 2);
    }
    std::string ticks;
    std::string axis;
    std::string labels;
    for (const Progression::Segment& seg : prog.segments) {
        std::string tick = seg.start.str();
        tick.resize(cell, ' ');
        ticks += tick;
        std::string bar = "|";
        bar.resize(cell, '-');
        axis += bar;
        std::string label = " ";
        label += class_name(seg.cls);
        label.resize(cell, ' ');
        labels += label;
    }
    axis += "--->";
    std::ostringstream out;
    out << "progression of interleaving varieties for M=" << m_name << ", N=" << n_name << "\n";
    out << ticks << "\n" << axis << "\n" << labels << "\n";
    out << "breakpoints:";
    if (prog.breakpoints.empty()) out << " none";
    for (const Rational& b : prog.breakpoints) out << ' ' << b.str();
    out << "\n";
    return out.str();
}

std::string render_verify_json(std::uint64_t seed, const TheoremReport& theorem,
                               const AgreementReport& agreement,
                               const std::vector<Erratum>& errata) {
    Json out;
    out["schema"] = kVerifySchema;
    out["seed"] = seed;
    Json theorem_json;
    theorem_json["samples"] = theorem.samples;
    theorem_json["discrepancies"] = Json::array();
    for (const TheoremDiscrepancy& d : theorem.discrepancies) {
        Json entry;
        entry["sample"] = d.sample_index;
        std::ostringstream m_text, n_text;
        m_text << d.m;
        n_text << d.n;
        entry["m"] = m_text.str();
        entry["n"] = n_text.str();
        entry["detail"] = d.detail;
        theorem_json["discrepancies"].push_back(std::move(entry));
    }
    out["theorem"] = std::move(theorem_json);
    Json agreement_json;
    agreement_json["pairs"] = agreement.pairs;
    agreement_json["points_checked"] = agreement.points_checked;
    agreement_json["disagreements"] = Json::array();
    for (const AgreementDisagreement& d : agreement.disagreements) {
        Json entry;
        entry["pair"] = d.pair_index;
        std::ostringstream m_text, n_text;
        m_text << d.m;
        n_text << d.n;
        entry["m"] = m_text.str();
        entry["n"] = n_text.str();
        entry["epsilon"] = d.point.str();
        entry["classifier"] = class_name(d.classifier_class);
        entry["oracle"] = class_name(d.oracle_class);
        agreement_json["disagreements"].push_back(std::move(entry));
    }
    out["oracle_agreement"] = std::move(agreement_json);
    out["errata"] = Json::array();
    for (const Erratum& e : errata) {
        Json entry;
        entry["id"] = e.id;
        entry["m"] = e.m_interval;
        entry["n"] = e.n_interval;
        entry["reference_ticks"] = Json::array();
        for (const Rational& t : e.reference_ticks) entry["reference_ticks"].push_back(t.str());
        entry["computed_breakpoints"] = Json::array();
        for (const Rational& b : e.computed_breakpoints) {
            entry["computed_breakpoints"].push_back(b.str());
        }
        entry["note"] = e.note;
        out["errata"].push_back(std::move(entry));
    }
    out["ok"] = theorem.ok() && agreement.ok();
    return dump(out);
}

}  // namespace intervar
