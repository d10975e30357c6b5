#include "supell/classify.hpp"

#include "json.hpp"

#include <map>
#include <stdexcept>

namespace supell {

std::string_view to_string(Reason r) {
    switch (r) {
        case Reason::unique_subgroup: return "unique_subgroup";
        case Reason::odd_signature: return "odd_signature";
        case Reason::quasiplatonic: return "quasiplatonic";
    }
    return "unique_subgroup";
}

std::string theorem_citation(const Classification& c) {
    if (!c.reason) return "no sufficient criterion applies; definability over the field of moduli is open";
    switch (*c.reason) {
        case Reason::unique_subgroup:
            return "reduced automorphism group is neither trivial nor cyclic, so the curve is definable over its field of moduli";
        case Reason::odd_signature:
            return "odd signature: some cone order of X/Aut(X) occurs an odd number of times, so the curve is definable over its field of moduli";
        case Reason::quasiplatonic:
            return "moduli dimension 0 (quasiplatonic): every curve in the family is defined over its field of moduli";
    }
    return {};
}

std::string describe(const Classification& c) {
    if (!c.definable) return "possibly not definable";
    switch (*c.reason) {
        case Reason::unique_subgroup: return "definable (unique subgroup)";
        case Reason::odd_signature: return "definable (odd signature)";
        case Reason::quasiplatonic: return "definable (quasiplatonic)";
    }
    return "definable";
}

std::string to_json(const Classification& c) {
    nlohmann::ordered_json j;
    j["verdict"] = c.definable ? "definable" : "possibly_not_definable";
    j["reason"] = c.reason ? nlohmann::ordered_json(std::string(to_string(*c.reason))) : nlohmann::ordered_json(nullptr);
    j["theorem"] = theorem_citation(c);
    return j.dump();
}

Classification classify(int genus, int level, const ReducedGroup& reduced, const Signature& signature) {
    const int g0 = quotient_genus(genus, full_group_order(level, reduced), signature);
    if (!is_cyclic_or_trivial(reduced)) return Classification::by(Reason::unique_subgroup);
    if (is_odd_signature(signature)) return Classification::by(Reason::odd_signature);
    if (moduli_dimension(g0, signature.size()) == 0) return Classification::by(Reason::quasiplatonic);
    return Classification::possibly_not();
}

Classification classify(const Dataset& ds, const FamilyRecord& rec) {
    return classify(rec.key.genus, rec.level, rec.reduced, ds.effective_signature(rec));
}

GenusReport classify_genus(int genus, const Dataset& ds) {
    GenusReport rep;
    rep.genus = genus;
    for (const auto* rec : ds.rows_of_genus(genus)) {
        RowVerdict v{rec->key, classify(ds, *rec), rec->blue};
        if (!v.verdict.definable) rep.possibly_not.insert(rec->key.nr);
        if (!v.verdict.definable && !rec->blue) rep.unexpected_possibly_not.insert(rec->key.nr);
        if (v.verdict.definable && rec->blue) rep.missing_possibly_not.insert(rec->key.nr);
        rep.rows.push_back(v);
    }
    return rep;
}

std::set<int> expected_blue(int genus) {
    static const std::map<int, std::set<int>> sets{
        {3, {1, 2}},
        {4, {1, 3, 5}},
        {5, {1, 2, 6}},
        {6, {9, 10, 13, 15}},
        {7, {1, 2, 11}},
        {8, {2, 6, 7, 8}},
        {9, {1, 3, 4, 14, 16, 20}},
        {10, {2, 3, 16, 17, 19, 20, 23}},
    };
    auto it = sets.find(genus);
    if (it == sets.end()) throw std::out_of_range("no table for genus " + std::to_string(genus));
    return it->second;
}

}  // namespace supell
