#include "ontoalign/ontology.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "ontoalign/errors.hpp"

namespace ontoalign {

using ordered_json = nlohmann::ordered_json;

int OntologyDoc::concept_index(const std::string& id) const {
    for (size_t i = 0; i < concepts.size(); ++i) {
        if (concepts[i].id == id) return static_cast<int>(i);
    }
    return -1;
}

namespace {

void validate(const OntologyDoc& doc) {
    std::unordered_set<std::string> ids;
    for (const auto& c : doc.concepts) {
        if (c.id.empty()) throw ValidationError("concept with empty id");
        if (!ids.insert(c.id).second) throw ValidationError("duplicate concept id: " + c.id);
        std::set<std::string> attrs(c.attributes.begin(), c.attributes.end());
        if (attrs.size() != c.attributes.size())
            throw ValidationError("duplicate attribute on concept " + c.id);
    }

    std::set<std::pair<std::string, std::string>> seen_pairs;
    for (const auto& [child, parent] : doc.subclass) {
        if (!ids.count(child)) throw ValidationError("subclass child not defined: " + child);
        if (!ids.count(parent)) throw ValidationError("subclass parent not defined: " + parent);
        if (child == parent) throw ValidationError("subclass self-loop on " + child);
        if (!seen_pairs.insert({child, parent}).second)
            throw ValidationError("duplicate subclass pair (" + child + ", " + parent + ")");
    }

    for (const auto& p : doc.properties) {
        if (!ids.count(p.domain))
            throw ValidationError("property '" + p.label + "' domain not defined: " + p.domain);
        // range may be a datatype tag; only concept-id ranges are checked by use
    }

    // Kahn's algorithm on child -> parent edges; leftovers mean a cycle.
    std::unordered_map<std::string, int> out_deg;
    std::unordered_map<std::string, std::vector<std::string>> rev;
    for (const auto& c : doc.concepts) out_deg[c.id] = 0;
    for (const auto& [child, parent] : doc.subclass) {
        ++out_deg[child];
        rev[parent].push_back(child);
    }
    std::vector<std::string> queue;
    for (const auto& [id, d] : out_deg)
        if (d == 0) queue.push_back(id);
    size_t removed = 0;
    while (!queue.empty()) {
        std::string id = queue.back();
        queue.pop_back();
        ++removed;
        for (const auto& child : rev[id])
            if (--out_deg[child] == 0) queue.push_back(child);
    }
    if (removed != doc.concepts.size()) throw ValidationError("subclass relation has a cycle");
}

}  // namespace

OntologyDoc parse_ontology(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), static_cast<long>(e.byte));
    }

    OntologyDoc doc;
    try {
        if (!j.is_object()) throw ParseError("top level must be an object");
        for (const auto& jc : j.at("concepts")) {
            Concept c;
            c.id = jc.at("id").get<std::string>();
            c.label = jc.at("label").get<std::string>();
            for (const auto& a : jc.at("attributes")) c.attributes.push_back(a.get<std::string>());
            doc.concepts.push_back(std::move(c));
        }
        for (const auto& js : j.at("subclass")) {
            if (!js.is_array() || js.size() != 2)
                throw ParseError("subclass entries must be [child, parent] pairs");
            doc.subclass.emplace_back(js[0].get<std::string>(), js[1].get<std::string>());
        }
        for (const auto& jp : j.at("properties")) {
            doc.properties.push_back({jp.at("label").get<std::string>(),
                                      jp.at("domain").get<std::string>(),
                                      jp.at("range").get<std::string>()});
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }

    validate(doc);
    return doc;
}

std::string write_ontology(const OntologyDoc& doc) {
    ordered_json j;
    j["concepts"] = ordered_json::array();
    for (const auto& c : doc.concepts) {
        ordered_json jc;
        jc["id"] = c.id;
        jc["label"] = c.label;
        jc["attributes"] = c.attributes;
        j["concepts"].push_back(std::move(jc));
    }
    j["subclass"] = ordered_json::array();
    for (const auto& [child, parent] : doc.subclass)
        j["subclass"].push_back(ordered_json::array({child, parent}));
    j["properties"] = ordered_json::array();
    for (const auto& p : doc.properties) {
        ordered_json jp;
        jp["label"] = p.label;
        jp["domain"] = p.domain;
        jp["range"] = p.range;
        j["properties"].push_back(std::move(jp));
    }
    return j.dump();
}

namespace {

std::string sha256_hex(const std::string& key, const std::string& value) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    EVP_DigestUpdate(ctx, key.data(), key.size());
    static const unsigned char sep = 0x00;
    EVP_DigestUpdate(ctx, &sep, 1);
    EVP_DigestUpdate(ctx, value.data(), value.size());
    EVP_DigestFinal_ex(ctx, digest, &len);
    EVP_MD_CTX_free(ctx);

    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0x0f]);
    }
    return out;
}

}  // namespace

OntologyDoc encrypt_labels(const OntologyDoc& doc, const std::string& key) {
    if (key.empty()) throw ConfigError("encryption key must be nonempty");

    OntologyDoc out = doc;
    for (auto& c : out.concepts) {
        c.label = sha256_hex(key, c.label);
        for (auto& a : c.attributes) a = sha256_hex(key, a);
    }
    for (auto& p : out.properties) p.label = sha256_hex(key, p.label);
    return out;
}

}  // namespace ontoalign
