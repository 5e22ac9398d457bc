#include "cuspidal/io.hpp"

#include <sstream>

namespace cusp {

using nlohmann::json;

Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "md" || s == "markdown") return Format::md;
    throw ValidationError("unknown format '" + s + "' (json, csv, md)");
}

json big_to_json(const BigInt& v) {
    if (v >= INT64_MIN && v <= INT64_MAX) return static_cast<int64_t>(v);
    return v.str();
}

BigInt big_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(j.get<int64_t>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw ValidationError("expected an integer or a decimal string");
}

namespace {

json mult_side(int64_t d, const MultiplicitySeq& m) { return {{"degree", d}, {"mult", format_mult(m)}}; }

json step_to_json(const ReductionStep& s) {
    json params = json::object();
    if (s.rule == Rule::Lemma211) params = {{"k", s.x}, {"n", s.y}};
    if (s.rule == Rule::Lemma212) params = {{"a", s.x}, {"s", s.y}};
    return {{"from", mult_side(s.from_degree, s.from_mult)},
            {"to", mult_side(s.to_degree, s.to_mult)},
            {"rule", to_string(s.rule)},
            {"params", params}};
}

Rule rule_from(const std::string& s) {
    if (s == "lemma211") return Rule::Lemma211;
    if (s == "lemma212") return Rule::Lemma212;
    if (s == "base") return Rule::Base;
    throw ValidationError("unknown rule '" + s + "'");
}

ReductionStep step_from_json(const json& j) {
    ReductionStep s;
    s.from_degree = j.at("from").at("degree").get<int64_t>();
    s.from_mult = parse_mult(j.at("from").at("mult").get<std::string>());
    s.to_degree = j.at("to").at("degree").get<int64_t>();
    s.to_mult = parse_mult(j.at("to").at("mult").get<std::string>());
    s.rule = rule_from(j.at("rule").get<std::string>());
    const auto& p = j.at("params");
    if (s.rule == Rule::Lemma211) {
        s.x = p.at("k").get<int64_t>();
        s.y = p.at("n").get<int64_t>();
    } else if (s.rule == Rule::Lemma212) {
        s.x = p.at("a").get<int64_t>();
        s.y = p.at("s").get<int64_t>();
    }
    return s;
}

Existence existence_from(const std::string& s) {
    for (auto e : {Existence::proved_base, Existence::proved_reduction, Existence::proved_lemma212,
                   Existence::proved_family, Existence::candidate})
        if (to_string(e) == s) return e;
    throw ValidationError("unknown existence status '" + s + "'");
}

Kodaira kodaira_from(const std::string& s) {
    for (auto k : {Kodaira::minus_infinity, Kodaira::one, Kodaira::two})
        if (to_string(k) == s) return k;
    throw ValidationError("unknown Kodaira dimension '" + s + "'");
}

BLResult::Status bl_status_from(const std::string& s) {
    for (auto st : {BLResult::Status::pass, BLResult::Status::fail, BLResult::Status::not_evaluated})
        if (to_string(st) == s) return st;
    throw ValidationError("unknown B-L status '" + s + "'");
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string md_cell(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += '\\';
        out += c;
    }
    return out.empty() ? " " : out;
}

std::string join_ints(const std::vector<int64_t>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

std::string format_bl(const std::optional<BLResult>& bl) {
    if (!bl) return "";
    std::string s = to_string(bl->status);
    if (bl->failing_j) s += " j=" + std::to_string(*bl->failing_j);
    if (!bl->method.empty()) s += " (" + bl->method + ")";
    return s;
}

}  // namespace

json record_to_json(const CurveRecord& r) {
    json j;
    j["degree"] = r.degree;
    j["newton_pairs"] = json::array();
    for (const auto& p : r.newton) j["newton_pairs"].push_back({p.p, p.q});
    j["puiseux_pairs"] = json::array();
    for (const auto& p : r.puiseux) j["puiseux_pairs"].push_back({p.P, p.Q});
    j["multiplicity_sequence"] = format_mult(r.mult);
    j["delta"] = big_to_json(r.delta);
    j["semigroup_generators"] = r.semigroup_generators;
    j["lct"] = {{"num", big_to_json(boost::multiprecision::numerator(r.lct))},
                {"den", big_to_json(boost::multiprecision::denominator(r.lct))},
                {"text", rational_str(r.lct)}};
    j["self_intersection"] = r.self_intersection;
    if (r.family)
        j["family"] = {{"kind", kind_name(r.family->kind)},
                       {"params", r.family->params},
                       {"description", describe(*r.family)}};
    else
        j["family"] = nullptr;
    j["kodaira"] = r.kodaira ? json(to_string(*r.kodaira)) : json(nullptr);
    j["existence"] = to_string(r.existence);
    j["reduction_chain"] = json::array();
    for (const auto& s : r.reduction_chain) j["reduction_chain"].push_back(step_to_json(s));
    if (r.bl)
        j["bl_check"] = {{"status", to_string(r.bl->status)},
                         {"failing_j", r.bl->failing_j ? json(*r.bl->failing_j) : json(nullptr)},
                         {"method", r.bl->method}};
    else
        j["bl_check"] = nullptr;
    return j;
}

CurveRecord record_from_json(const json& j) {
    CurveRecord r;
    r.degree = j.at("degree").get<int64_t>();
    for (const auto& p : j.at("newton_pairs")) r.newton.push_back({p.at(0).get<int64_t>(), p.at(1).get<int64_t>()});
    for (const auto& p : j.at("puiseux_pairs")) r.puiseux.push_back({p.at(0).get<int64_t>(), p.at(1).get<int64_t>()});
    r.mult = parse_mult(j.at("multiplicity_sequence").get<std::string>());
    r.delta = big_from_json(j.at("delta"));
    r.semigroup_generators = j.at("semigroup_generators").get<std::vector<int64_t>>();
    r.lct = Rational(big_from_json(j.at("lct").at("num")), big_from_json(j.at("lct").at("den")));
    r.self_intersection = j.at("self_intersection").get<int64_t>();
    if (const auto& f = j.at("family"); !f.is_null()) {
        auto kind = kind_from_name(f.at("kind").get<std::string>());
        if (!kind) throw ValidationError("unknown family kind '" + f.at("kind").get<std::string>() + "'");
        r.family = FamilySpec{*kind, f.at("params").get<std::vector<int64_t>>()};
    }
    if (const auto& k = j.at("kodaira"); !k.is_null()) r.kodaira = kodaira_from(k.get<std::string>());
    r.existence = existence_from(j.at("existence").get<std::string>());
    for (const auto& s : j.at("reduction_chain")) r.reduction_chain.push_back(step_from_json(s));
    if (const auto& b = j.at("bl_check"); !b.is_null()) {
        BLResult bl;
        bl.status = bl_status_from(b.at("status").get<std::string>());
        if (!b.at("failing_j").is_null()) bl.failing_j = b.at("failing_j").get<int64_t>();
        bl.method = b.at("method").get<std::string>();
        r.bl = bl;
    }
    return r;
}

std::string to_json(const OutputDocument& doc) {
    json j;
    j["tool"] = kToolVersion;
    j["command"] = doc.command;
    j["mode"] = doc.mode;
    if (doc.elapsed_ms >= 0) j["elapsed_ms"] = doc.elapsed_ms;
    j["count"] = doc.records.size();
    j["records"] = json::array();
    for (const auto& r : doc.records) j["records"].push_back(record_to_json(r));
    if (!doc.extra.is_null()) j["extra"] = doc.extra;
    return j.dump(2) + "\n";
}

OutputDocument document_from_json(const std::string& text) {
    const json j = json::parse(text);
    OutputDocument doc;
    doc.command = j.value("command", "");
    doc.mode = j.value("mode", "");
    doc.elapsed_ms = j.value("elapsed_ms", -1.0);
    for (const auto& r : j.at("records")) doc.records.push_back(record_from_json(r));
    if (j.contains("extra")) doc.extra = j.at("extra");
    return doc;
}

std::string format_chain(const std::vector<ReductionStep>& chain) {
    std::string s;
    for (size_t i = 0; i < chain.size(); ++i) {
        const auto& st = chain[i];
        if (i) s += "; ";
        switch (st.rule) {
            case Rule::Lemma211:
                s += std::to_string(st.from_degree) + " -> " + std::to_string(st.to_degree) + " [lemma211 k=" +
                     std::to_string(st.x) + " n=" + std::to_string(st.y) + "]";
                break;
            case Rule::Lemma212:
                s += std::to_string(st.from_degree) + " [lemma212 a=" + std::to_string(st.x) +
                     " s=" + std::to_string(st.y) + "]";
                break;
            case Rule::Base:
                s += std::to_string(st.from_degree) + " (" + format_mult(st.from_mult) + ") [base]";
                break;
        }
    }
    return s;
}

std::vector<std::string> flat_columns() {
    return {"degree", "newton_pairs", "puiseux_pairs", "multiplicity_sequence", "delta", "semigroup_generators",
            "lct",    "self_intersection", "family", "kodaira", "existence", "reduction_chain", "bl_check"};
}

std::vector<std::string> flat_row(const CurveRecord& r) {
    return {std::to_string(r.degree),
            format_pairs(r.newton),
            format_puiseux(r.puiseux),
            format_mult(r.mult),
            r.delta.str(),
            join_ints(r.semigroup_generators),
            rational_str(r.lct),
            std::to_string(r.self_intersection),
            r.family ? describe(*r.family) : "",
            r.kodaira ? to_string(*r.kodaira) : "",
            to_string(r.existence),
            format_chain(r.reduction_chain),
            format_bl(r.bl)};
}

std::string to_csv(const OutputDocument& doc) {
    std::ostringstream os;
    const auto cols = flat_columns();
    for (size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << "\n";
    for (const auto& r : doc.records) {
        const auto row = flat_row(r);
        for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
        os << "\n";
    }
    return os.str();
}

std::string to_markdown(const OutputDocument& doc) {
    std::ostringstream os;
    const auto cols = flat_columns();
    os << "|";
    for (const auto& c : cols) os << " " << c << " |";
    os << "\n|";
    for (size_t i = 0; i < cols.size(); ++i) os << " --- |";
    os << "\n";
    for (const auto& r : doc.records) {
        os << "|";
        for (const auto& cell : flat_row(r)) os << " " << md_cell(cell) << " |";
        os << "\n";
    }
    return os.str();
}

std::string render(const OutputDocument& doc, Format f) {
    switch (f) {
        case Format::json: return to_json(doc);
        case Format::csv: return to_csv(doc);
        case Format::md: return to_markdown(doc);
    }
    return "";
}

const json& record_schema() {
    static const json schema = json::parse(R"JSON({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "CurveRecord",
  "type": "object",
  "required": ["degree", "newton_pairs", "puiseux_pairs", "multiplicity_sequence", "delta",
               "semigroup_generators", "lct", "self_intersection", "family", "kodaira",
               "existence", "reduction_chain", "bl_check"],
  "properties": {
    "degree": {"type": "integer"},
    "newton_pairs": {"type": "array", "items": {"type": "array", "minItems": 2, "maxItems": 2, "items": {"type": "integer"}}},
    "puiseux_pairs": {"type": "array", "items": {"type": "array", "minItems": 2, "maxItems": 2, "items": {"type": "integer"}}},
    "multiplicity_sequence": {"type": "string"},
    "delta": {"type": ["integer", "string"]},
    "semigroup_generators": {"type": "array", "items": {"type": "integer"}},
    "lct": {"type": "object", "required": ["num", "den"],
            "properties": {"num": {"type": ["integer", "string"]}, "den": {"type": ["integer", "string"]},
                           "text": {"type": "string"}}},
    "self_intersection": {"type": "integer"},
    "family": {"type": ["object", "null"], "required": ["kind", "params"],
               "properties": {"kind": {"type": "string"}, "params": {"type": "array", "items": {"type": "integer"}},
                              "description": {"type": "string"}}},
    "kodaira": {"type": ["string", "null"], "enum": ["-inf", "1", "2", null]},
    "existence": {"type": "string",
                  "enum": ["proved-base", "proved-reduction", "proved-lemma212", "proved-family", "candidate"]},
    "reduction_chain": {"type": "array", "items": {"type": "object", "required": ["from", "to", "rule", "params"],
        "properties": {"rule": {"type": "string", "enum": ["lemma211", "lemma212", "base"]},
                       "from": {"type": "object", "required": ["degree", "mult"]},
                       "to": {"type": "object", "required": ["degree", "mult"]},
                       "params": {"type": "object"}}}},
    "bl_check": {"type": ["object", "null"], "required": ["status", "failing_j", "method"],
                 "properties": {"status": {"type": "string", "enum": ["pass", "fail", "not-evaluated"]},
                                "failing_j": {"type": ["integer", "null"]}, "method": {"type": "string"}}}
  }
})JSON");
    return schema;
}

namespace {

bool type_matches(const json& v, const std::string& t) {
    if (t == "integer") return v.is_number_integer();
    if (t == "string") return v.is_string();
    if (t == "array") return v.is_array();
    if (t == "object") return v.is_object();
    if (t == "null") return v.is_null();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    return false;
}

// The subset of JSON Schema the record schema uses: type, required,
// properties, items, minItems, maxItems, enum.
std::string check(const json& v, const json& s, const std::string& path) {
    if (s.contains("type")) {
        bool ok = false;
        if (s["type"].is_string())
            ok = type_matches(v, s["type"]);
        else
            for (const auto& t : s["type"]) ok = ok || type_matches(v, t);
        if (!ok) return path + ": wrong type";
    }
    if (s.contains("enum")) {
        bool ok = false;
        for (const auto& e : s["enum"]) ok = ok || e == v;
        if (!ok) return path + ": value not in enum";
    }
    if (v.is_object()) {
        if (s.contains("required"))
            for (const auto& k : s["required"])
                if (!v.contains(k.get<std::string>())) return path + ": missing " + k.get<std::string>();
        if (s.contains("properties"))
            for (const auto& [k, sub] : s["properties"].items())
                if (v.contains(k))
                    if (auto e = check(v[k], sub, path + "." + k); !e.empty()) return e;
    }
    if (v.is_array()) {
        if (s.contains("minItems") && v.size() < s["minItems"].get<size_t>()) return path + ": too few items";
        if (s.contains("maxItems") && v.size() > s["maxItems"].get<size_t>()) return path + ": too many items";
    }
    if (v.is_array() && s.contains("items"))
        for (size_t i = 0; i < v.size(); ++i)
            if (auto e = check(v[i], s["items"], path + "[" + std::to_string(i) + "]"); !e.empty()) return e;
    return "";
}

}  // namespace

std::string validate_record_json(const json& j) { return check(j, record_schema(), "$"); }

}  // namespace cusp
