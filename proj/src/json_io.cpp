#include "gac/json_io.hpp"

#include <cctype>

#include "gac/error.hpp"

namespace gac {

namespace {

std::string trim(std::string_view text) {
    std::size_t b = 0;
    std::size_t e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    return std::string(text.substr(b, e - b));
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        out.push_back(text.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

unsigned parse_unsigned(const std::string& text) {
    const std::string t = trim(text);
    if (t.empty() || t.size() > 6) throw Error("parse", "expected a small integer, got '" + t + "'");
    unsigned value = 0;
    for (char ch : t) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw Error("parse", "expected an integer, got '" + t + "'");
        value = value * 10 + static_cast<unsigned>(ch - '0');
    }
    return value;
}

Flavor flavor_from(const std::string& text) {
    if (text == "plain") return Flavor::plain;
    if (text == "modified") return Flavor::modified;
    throw Error("parse", "unknown flavor '" + text + "'");
}

json parse_json_text(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error("parse", e.what());
    }
}

}  // namespace

json to_json(const FieldSpec& spec) {
    return {{"p", spec.p()}, {"k", spec.k()}, {"modulus", spec.modulus_string()}};
}

json to_json(const MatFq& m) {
    json entries = json::array();
    for (Code c : m.entries()) entries.push_back(c);
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

json to_json(const Partition& p) { return p.parts(); }

json to_json(const GLType& lambda) {
    json out = json::object();
    for (const auto& [f, parts] : lambda.entries()) out[f.to_string()] = parts.parts();
    return out;
}

json to_json(const GAType& pair) {
    return {{"base", to_json(pair.base)},
            {"k", pair.k},
            {"flavor", pair.flavor == Flavor::plain ? "plain" : "modified"}};
}

json to_json(const ClassIndex& index) {
    if (index.group.kind == GroupKind::GA) return to_json(std::get<GAType>(index.label));
    return to_json(std::get<GLType>(index.label));
}

json to_json(const StructConstReport& report) {
    return {{"group", report.a.group.kind == GroupKind::GA ? "GA" : "GL"},
            {"n", report.n},
            {"q", report.q},
            {"a", to_json(report.a)},
            {"b", to_json(report.b)},
            {"c", to_json(report.c)},
            {"value", report.value},
            {"method", report.method == ScanMethod::pair_scan ? "pair-scan" : "class-scan"},
            {"scanned", report.scanned},
            {"graded", report.graded},
            {"elapsed", report.elapsed.count()}};
}

json to_json(const MultiplicationTable& table) {
    json classes = json::array();
    for (std::size_t i = 0; i < table.rank(); ++i) {
        classes.push_back({{"index", i},
                           {"label", to_json(table.classes[i])},
                           {"degree", table.classes[i].degree()},
                           {"size", table.sizes[i]},
                           {"representative", to_json(table.reps[i])}});
    }
    json products = json::array();
    for (std::size_t a = 0; a < table.rank(); ++a) {
        for (std::size_t b = 0; b < table.rank(); ++b) {
            json terms = json::object();
            for (std::size_t c = 0; c < table.rank(); ++c) {
                if (table.at(a, b, c) != 0) terms[std::to_string(c)] = table.at(a, b, c);
            }
            products.push_back({{"a", a}, {"b", b}, {"terms", terms}});
        }
    }
    return {{"schema_version", kTableSchemaVersion},
            {"group", table.group.kind == GroupKind::GA ? "GA" : "GL"},
            {"n", table.group.n},
            {"q", table.group.spec.q()},
            {"field", to_json(table.group.spec)},
            {"classes", classes},
            {"products", products}};
}

json to_json(const CheckReport& report) {
    return {{"id", report.id},          {"params", report.params},         {"expected", report.expected},
            {"observed", report.observed}, {"status", to_string(report.status)}, {"note", report.note},
            {"elapsed", report.elapsed.count()}};
}

json classification_json(const GroupId& gid, const MatFq& a) {
    require_member(gid, a);
    json out = {{"group", gid.kind == GroupKind::GA ? "GA" : "GL"}, {"n", gid.n}, {"q", gid.spec.q()}};
    if (gid.kind == GroupKind::GA) {
        out["type"] = to_json(type_of_ga(a, Flavor::plain));
        out["modified"] = to_json(type_of_ga(a, Flavor::modified));
        out["reflection_length"] = reflection_length(a);
        out["length"] = affine_length(a);
        out["ll_a"] = affine_reflection_length(a);
    } else {
        const GLType t = type_of_gl(a);
        out["type"] = to_json(t);
        out["modified"] = to_json(modify_type(t));
        out["length"] = reflection_length(a);
    }
    return out;
}

MatFq matrix_from_json(const FieldSpec& spec, const json& doc) {
    try {
        if (doc.is_array()) {
            const std::size_t rows = doc.size();
            const std::size_t cols = rows == 0 ? 0 : doc.front().size();
            std::vector<Code> entries;
            for (const auto& row : doc) {
                if (!row.is_array() || row.size() != cols) throw Error("parse", "ragged matrix rows");
                for (const auto& x : row) {
                    const unsigned v = x.get<unsigned>();
                    if (v >= spec.q()) throw Error("parse", std::to_string(v) + " is not an element code");
                    entries.push_back(static_cast<Code>(v));
                }
            }
            return MatFq(spec, rows, cols, std::move(entries));
        }
        const std::size_t rows = doc.at("rows").get<std::size_t>();
        const std::size_t cols = doc.at("cols").get<std::size_t>();
        std::vector<Code> entries;
        for (const auto& x : doc.at("entries")) {
            const unsigned v = x.get<unsigned>();
            if (v >= spec.q()) throw Error("parse", std::to_string(v) + " is not an element code");
            entries.push_back(static_cast<Code>(v));
        }
        if (entries.size() != rows * cols) throw Error("parse", "entry count does not match the shape");
        return MatFq(spec, rows, cols, std::move(entries));
    } catch (const json::exception& e) {
        throw Error("parse", e.what());
    }
}

GLType gl_type_from_json(const FieldSpec& spec, const json& doc) {
    if (!doc.is_object()) throw Error("parse", "type must be a JSON object");
    GLType out(spec);
    try {
        for (const auto& [key, value] : doc.items()) {
            const PolyFq f = parse_poly(spec, key);
            out.set(f, out.at(f).union_with(Partition(value.get<std::vector<unsigned>>())));
        }
    } catch (const json::exception& e) {
        throw Error("parse", e.what());
    }
    return out;
}

GAType ga_type_from_json(const FieldSpec& spec, const json& doc) {
    try {
        GAType out{gl_type_from_json(spec, doc.at("base")), doc.at("k").get<unsigned>(),
                   flavor_from(doc.value("flavor", std::string("modified")))};
        if (!is_valid_pair(out)) throw Error("invalid-shift", out.to_string() + " is not a valid pair");
        return out;
    } catch (const json::exception& e) {
        throw Error("parse", e.what());
    }
}

MultiplicationTable table_from_json(const json& doc) {
    try {
        if (doc.at("schema_version").get<int>() != kTableSchemaVersion) {
            throw Error("parse", "unsupported table schema version");
        }
        const FieldSpec spec = field_make(doc.at("field").at("p").get<std::uint32_t>(),
                                          doc.at("field").at("k").get<std::uint32_t>());
        const std::string group = doc.at("group").get<std::string>();
        const GroupId gid{group == "GA" ? GroupKind::GA : GroupKind::GL, doc.at("n").get<std::size_t>(), spec};
        MultiplicationTable table{gid, {}, {}, {}, {}};
        for (const auto& entry : doc.at("classes")) {
            if (gid.kind == GroupKind::GA) {
                table.classes.push_back({gid, ga_type_from_json(spec, entry.at("label"))});
            } else {
                table.classes.push_back({gid, gl_type_from_json(spec, entry.at("label"))});
            }
            table.sizes.push_back(entry.at("size").get<std::uint64_t>());
            table.reps.push_back(matrix_from_json(spec, entry.at("representative")));
        }
        const std::size_t r = table.rank();
        table.coeff.assign(r * r * r, 0);
        for (const auto& product : doc.at("products")) {
            const std::size_t a = product.at("a").get<std::size_t>();
            const std::size_t b = product.at("b").get<std::size_t>();
            for (const auto& [c, value] : product.at("terms").items()) {
                table.coeff[(a * r + b) * r + parse_unsigned(c)] = value.get<std::uint64_t>();
            }
        }
        return table;
    } catch (const json::exception& e) {
        throw Error("parse", e.what());
    }
}

GLType parse_gl_type(const FieldSpec& spec, std::string_view text) {
    const std::string t = trim(text);
    if (t.empty() || t == "empty" || t == "{}") return GLType(spec);
    if (t.front() == '{') return gl_type_from_json(spec, parse_json_text(t));
    GLType out(spec);
    for (const auto& item : split(t, ',')) {
        const std::size_t colon = item.find(':');
        if (colon == std::string::npos) throw Error("parse", "expected part:poly, got '" + item + "'");
        const unsigned part = parse_unsigned(item.substr(0, colon));
        if (part == 0) throw Error("parse", "parts must be positive");
        const PolyFq f = parse_poly(spec, item.substr(colon + 1)).monic();
        out.set(f, out.at(f).union_with(Partition({part})));
    }
    return out;
}

GAType parse_ga_type(const FieldSpec& spec, std::string_view text, Flavor flavor) {
    const std::string t = trim(text);
    if (!t.empty() && t.front() == '{') {
        const json doc = parse_json_text(t);
        if (doc.contains("base")) return ga_type_from_json(spec, doc);
    }
    const std::size_t at = t.rfind('@');
    GAType out{parse_gl_type(spec, at == std::string::npos ? t : t.substr(0, at)),
               at == std::string::npos ? 0U : parse_unsigned(t.substr(at + 1)), flavor};
    if (!is_valid_pair(out)) throw Error("invalid-shift", out.to_string() + " is not a valid pair");
    return out;
}

std::string table_to_csv(const MultiplicationTable& table) {
    std::string out = "a,b,c,coefficient\n";
    for (std::size_t a = 0; a < table.rank(); ++a) {
        for (std::size_t b = 0; b < table.rank(); ++b) {
            for (std::size_t c = 0; c < table.rank(); ++c) {
                if (table.at(a, b, c) == 0) continue;
                out += std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
                       std::to_string(table.at(a, b, c)) + "\n";
            }
        }
    }
    return out;
}

}  // namespace gac
