#include "supell/dataset.hpp"

#include "json.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace supell {

using json = nlohmann::ordered_json;

const FamilyRecord* Dataset::find(RowKey key) const {
    auto it = std::lower_bound(records.begin(), records.end(), key,
                               [](const FamilyRecord& r, const RowKey& k) { return r.key < k; });
    if (it != records.end() && it->key == key) return &*it;
    // unsorted input (possible from an external document)
    for (const auto& r : records) {
        if (r.key == key) return &r;
    }
    return nullptr;
}

std::vector<const FamilyRecord*> Dataset::rows_of_genus(int genus) const {
    std::vector<const FamilyRecord*> out;
    for (const auto& r : records) {
        if (r.key.genus == genus) out.push_back(&r);
    }
    return out;
}

std::vector<int> Dataset::genera() const {
    std::set<int> s;
    for (const auto& r : records) s.insert(r.key.genus);
    return {s.begin(), s.end()};
}

const SignatureErratum* Dataset::signature_erratum(RowKey key) const {
    for (const auto& e : signature_errata) {
        if (e.key == key) return &e;
    }
    return nullptr;
}

const EquationErratum* Dataset::equation_erratum(RowKey key) const {
    for (const auto& e : equation_errata) {
        if (e.key == key) return &e;
    }
    return nullptr;
}

Signature Dataset::effective_signature(const FamilyRecord& rec) const {
    if (const auto* e = signature_erratum(rec.key); e && e->outcome.repaired) return *e->outcome.repaired;
    return rec.signature;
}

const EquationTemplate& Dataset::effective_equation(const FamilyRecord& rec) const {
    if (const auto* e = equation_erratum(rec.key)) return e->corrected;
    return rec.equation;
}

std::vector<SignatureErratum> compute_signature_errata(const std::vector<FamilyRecord>& records,
                                                       const std::vector<EquationErratum>& equation_errata) {
    std::vector<SignatureErratum> out;
    for (const auto& rec : records) {
        auto outcome = complete_signature(rec.key.genus, rec.group_order(), rec.signature);
        if (outcome.status == RepairStatus::consistent) continue;
        if (outcome.status == RepairStatus::unrepairable) {
            const EquationTemplate* eq = &rec.equation;
            for (const auto& e : equation_errata) {
                if (e.key == rec.key) eq = &e.corrected;
            }
            std::optional<Signature> derived;
            try {
                derived = equation_signature(rec.level, rec.reduced, *eq);
            } catch (const std::exception&) {
            }
            if (derived) {
                try {
                    if (quotient_genus(rec.key.genus, rec.group_order(), *derived) == 0) {
                        outcome.status = RepairStatus::reconstructed;
                        outcome.repaired = derived;
                        outcome.changed_entry = "read off the equation";
                        outcome.candidates = {*derived};
                    }
                } catch (const InconsistentSignature&) {
                }
            }
        }
        out.push_back({rec.key, std::move(outcome)});
    }
    return out;
}

Dataset load_embedded() {
    Dataset ds;
    ds.records = embedded_records();
    std::sort(ds.records.begin(), ds.records.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
    ds.equation_errata = embedded_equation_errata();
    ds.signature_errata = compute_signature_errata(ds.records, ds.equation_errata);
    ds.named_curves = embedded_named_curves();
    return ds;
}

const std::map<int, int>& expected_row_counts() {
    static const std::map<int, int> counts{{3, 5}, {4, 9}, {5, 20}, {6, 36}, {7, 27}, {8, 22}, {9, 50}, {10, 55}};
    return counts;
}

std::optional<std::map<int, int>> stated_level_counts(int genus) {
    if (genus == 10) return std::map<int, int>{{2, 18}, {3, 18}, {5, 4}};
    return std::nullopt;
}

std::vector<std::string> integrity_issues(const Dataset& ds) {
    std::vector<std::string> issues;
    std::set<RowKey> seen;
    for (std::size_t i = 0; i < ds.records.size(); ++i) {
        const auto& r = ds.records[i];
        const auto name = to_string(r.key);
        if (!seen.insert(r.key).second) issues.push_back(name + ": duplicate row");
        if (i > 0 && !(ds.records[i - 1].key < r.key)) issues.push_back(name + ": rows out of order");
        if (r.m) {
            const auto kind = r.reduced.kind();
            const bool rotational = kind == ReducedKind::cyclic || kind == ReducedKind::dihedral || kind == ReducedKind::trivial;
            const int want = rotational ? r.reduced.m() : 0;
            if (*r.m != want) {
                issues.push_back(name + ": m column " + std::to_string(*r.m) + " disagrees with " + r.reduced.name());
            }
        }
    }
    for (int g : ds.genera()) {
        auto rows = ds.rows_of_genus(g);
        std::set<int> nrs;
        for (const auto* r : rows) nrs.insert(r->key.nr);
        if (!nrs.empty() && (*nrs.begin() != 1 || *nrs.rbegin() != static_cast<int>(nrs.size()))) {
            issues.push_back("genus " + std::to_string(g) + ": Nr values are not contiguous from 1");
        }
    }
    for (const auto& e : ds.signature_errata) {
        if (!ds.find(e.key)) issues.push_back(to_string(e.key) + ": signature erratum for a missing row");
    }
    for (const auto& e : ds.equation_errata) {
        if (!ds.find(e.key)) issues.push_back(to_string(e.key) + ": equation erratum for a missing row");
    }
    return issues;
}

std::vector<std::pair<RowKey, std::string>> label_order_mismatches(const Dataset& ds) {
    std::vector<std::pair<RowKey, std::string>> out;
    for (const auto& r : ds.records) {
        if (r.group && r.group->recognized && r.group->order != r.group_order()) {
            out.emplace_back(r.key, "label " + r.group->text + " has order " + std::to_string(r.group->order) +
                                        " but n*|reduced| = " + std::to_string(r.group_order()));
        }
    }
    return out;
}

std::map<int, int> count_by_level(const Dataset& ds, int genus) {
    std::map<int, int> tally;
    for (const auto* r : ds.rows_of_genus(genus)) ++tally[r->level];
    return tally;
}

// ---- JSON ----

namespace {

json quad_to_json(const QuadExt& q) {
    if (q.is_rational()) return to_string(q.rational_part());
    return json{{"a", to_string(q.rational_part())}, {"b", to_string(q.radical_part())}, {"d", q.radicand()}};
}

QuadExt quad_from_json(const json& j) {
    if (j.is_string()) return QuadExt(parse_rational(j.get<std::string>()));
    if (j.is_number_integer()) return QuadExt(j.get<long>());
    return QuadExt(parse_rational(j.at("a").get<std::string>()), parse_rational(j.at("b").get<std::string>()),
                   j.at("d").get<long>());
}

json template_to_json(const EquationTemplate& t) {
    json factors = json::array();
    for (const auto& f : t.factors) {
        json jf = json::array();
        for (const auto& term : f) {
            json c;
            switch (term.coeff.kind) {
                case Coefficient::Kind::fixed:
                    c["kind"] = "fixed";
                    c["value"] = quad_to_json(term.coeff.value);
                    break;
                case Coefficient::Kind::param:
                    c["kind"] = "param";
                    c["index"] = term.coeff.index;
                    break;
                case Coefficient::Kind::scaled:
                    c["kind"] = "scaled";
                    c["scale"] = to_string(term.coeff.scale);
                    c["index"] = term.coeff.index;
                    break;
            }
            jf.push_back(json{{"e", term.exponent}, {"c", c}});
        }
        factors.push_back(jf);
    }
    return json{{"factors", factors}, {"radicand", t.radicand}, {"text", render(t)}};
}

EquationTemplate template_from_json(const json& j) {
    EquationTemplate t;
    t.radicand = j.value("radicand", 1L);
    for (const auto& jf : j.at("factors")) {
        Factor f;
        for (const auto& jt : jf) {
            Term term;
            term.exponent = jt.at("e").get<int>();
            if (term.exponent < 0) throw SchemaError("negative exponent");
            const auto& c = jt.at("c");
            const auto kind = c.at("kind").get<std::string>();
            if (kind == "fixed") {
                term.coeff = Coefficient::fixed(quad_from_json(c.at("value")));
            } else if (kind == "param") {
                term.coeff = Coefficient::param(c.at("index").get<int>());
            } else if (kind == "scaled") {
                term.coeff = Coefficient::scaled(parse_rational(c.at("scale").get<std::string>()), c.at("index").get<int>());
            } else {
                throw SchemaError("unknown coefficient kind '" + kind + "'");
            }
            f.push_back(std::move(term));
        }
        if (f.empty()) throw SchemaError("empty factor");
        t.factors.push_back(std::move(f));
    }
    if (t.factors.empty()) throw SchemaError("equation has no factors");
    return t;
}

json key_fields(const RowKey& k) { return json{{"genus", k.genus}, {"nr", k.nr}}; }

json outcome_to_json(const SignatureErratum& e) {
    json j = key_fields(e.key);
    const auto& o = e.outcome;
    j["status"] = std::string(to_string(o.status));
    j["printed"] = o.printed.to_string();
    j["repaired"] = o.repaired ? json(o.repaired->to_string()) : json(nullptr);
    j["changed_entry"] = o.changed_entry;
    json cands = json::array();
    for (const auto& c : o.candidates) cands.push_back(c.to_string());
    j["candidates"] = cands;
    j["ambiguous"] = o.ambiguous();
    return j;
}

template <typename T>
T required(const json& obj, const char* field, const std::string& where) {
    if (!obj.contains(field)) throw SchemaError(where + ": missing field '" + field + "'");
    try {
        return obj.at(field).get<T>();
    } catch (const json::exception&) {
        throw SchemaError(where + ": field '" + field + "' has the wrong type");
    }
}

RowKey read_key(const json& j, const std::string& what) {
    if (!j.is_object()) throw SchemaError(what + " entry is not an object");
    return {required<int>(j, "genus", what), required<int>(j, "nr", what)};
}

FamilyRecord record_from_json(const json& j) {
    FamilyRecord r;
    r.key = read_key(j, "record");
    const auto where = to_string(r.key);
    try {
        r.reduced = ReducedGroup::parse(required<std::string>(j, "reduced", where));
        r.level = required<int>(j, "n", where);
        if (r.level < 2) throw SchemaError("level n must be at least 2");
        if (j.contains("group") && !j.at("group").is_null()) {
            r.group = parse_group_label(j.at("group").get<std::string>(), r.group_order());
        }
        if (j.contains("m") && !j.at("m").is_null()) r.m = j.at("m").get<int>();
        r.signature = Signature::parse(required<std::string>(j, "signature", where));
        r.delta = required<int>(j, "delta", where);
        r.blue = required<bool>(j, "blue", where);
        if (!j.contains("equation")) throw SchemaError("missing field 'equation'");
        r.equation = template_from_json(j.at("equation"));
    } catch (const SchemaError& e) {
        const std::string msg = e.what();
        if (msg.rfind(where, 0) == 0) throw;
        throw SchemaError(where + ": " + msg);
    } catch (const std::exception& e) {
        throw SchemaError(where + ": " + e.what());
    }
    return r;
}

}  // namespace

std::string to_json(const Dataset& ds) {
    json doc;
    doc["schema"] = "v1";
    json recs = json::array();
    for (const auto& r : ds.records) {
        json j = key_fields(r.key);
        j["reduced"] = r.reduced.name();
        j["group"] = r.group ? json(r.group->text) : json(nullptr);
        j["order"] = r.group_order();
        j["n"] = r.level;
        j["m"] = r.m ? json(*r.m) : json(nullptr);
        j["signature"] = r.signature.to_string();
        j["delta"] = r.delta;
        j["blue"] = r.blue;
        j["equation"] = template_to_json(r.equation);
        recs.push_back(j);
    }
    doc["records"] = recs;
    json sig = json::array();
    for (const auto& e : ds.signature_errata) sig.push_back(outcome_to_json(e));
    doc["signature_errata"] = sig;
    json eq = json::array();
    for (const auto& e : ds.equation_errata) {
        json j = key_fields(e.key);
        j["corrected"] = template_to_json(e.corrected);
        j["note"] = e.note;
        eq.push_back(j);
    }
    doc["equation_errata"] = eq;
    json named = json::array();
    for (const auto& c : ds.named_curves) {
        named.push_back(json{{"genus", c.genus}, {"n", c.level}, {"group", c.group}, {"equation", template_to_json(c.equation)}});
    }
    doc["named_curves"] = named;
    return doc.dump(2) + "\n";
}

Dataset from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("document is not an object");
    if (doc.value("schema", std::string()) != "v1") throw SchemaError("unsupported or missing schema version (expected \"v1\")");
    if (!doc.contains("records") || !doc.at("records").is_array()) throw SchemaError("missing 'records' array");

    Dataset ds;
    for (const auto& j : doc.at("records")) ds.records.push_back(record_from_json(j));

    if (doc.contains("equation_errata")) {
        for (const auto& j : doc.at("equation_errata")) {
            EquationErratum e;
            e.key = read_key(j, "equation erratum");
            const auto where = to_string(e.key);
            if (!j.contains("corrected")) throw SchemaError(where + ": missing field 'corrected'");
            try {
                e.corrected = template_from_json(j.at("corrected"));
            } catch (const std::exception& ex) {
                throw SchemaError(where + ": " + ex.what());
            }
            e.note = j.value("note", std::string());
            ds.equation_errata.push_back(std::move(e));
        }
    }

    if (doc.contains("signature_errata")) {
        for (const auto& j : doc.at("signature_errata")) {
            SignatureErratum e;
            e.key = read_key(j, "signature erratum");
            const auto where = to_string(e.key);
            try {
                auto& o = e.outcome;
                o.status = parse_repair_status(required<std::string>(j, "status", where));
                o.printed = Signature::parse(required<std::string>(j, "printed", where));
                if (j.contains("repaired") && !j.at("repaired").is_null()) {
                    o.repaired = Signature::parse(j.at("repaired").get<std::string>());
                }
                o.changed_entry = j.value("changed_entry", std::string());
                if (j.contains("candidates")) {
                    for (const auto& c : j.at("candidates")) o.candidates.push_back(Signature::parse(c.get<std::string>()));
                }
            } catch (const SchemaError&) {
                throw;
            } catch (const std::exception& ex) {
                throw SchemaError(where + ": " + ex.what());
            }
            ds.signature_errata.push_back(std::move(e));
        }
    } else {
        ds.signature_errata = compute_signature_errata(ds.records, ds.equation_errata);
    }

    if (doc.contains("named_curves")) {
        for (const auto& j : doc.at("named_curves")) {
            NamedCurve c;
            c.genus = required<int>(j, "genus", "named curve");
            c.level = required<int>(j, "n", "named curve");
            c.group = j.value("group", std::string());
            c.equation = template_from_json(j.at("equation"));
            ds.named_curves.push_back(std::move(c));
        }
    }
    return ds;
}

// ---- CSV ----

namespace {

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::string export_csv(const Dataset& ds, std::optional<int> genus) {
    std::ostringstream out;
    out << "genus,Nr,reduced_group,full_group,order,n,m,signature,delta,blue,equation\r\n";
    for (const auto& r : ds.records) {
        if (genus && r.key.genus != *genus) continue;
        out << r.key.genus << ',' << r.key.nr << ',' << csv_cell(r.reduced.name()) << ','
            << csv_cell(r.group ? r.group->text : std::string()) << ',' << r.group_order() << ',' << r.level << ','
            << (r.m ? std::to_string(*r.m) : std::string()) << ',' << csv_cell(r.signature.to_string()) << ','
            << r.delta << ',' << (r.blue ? "true" : "false") << ',' << csv_cell(render(r.equation)) << "\r\n";
    }
    return out.str();
}

}  // namespace supell
