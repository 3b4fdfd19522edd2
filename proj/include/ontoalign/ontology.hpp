#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ontoalign {

struct Concept {
    std::string id;
    std::string label;                    // opaque; may be ciphertext
    std::vector<std::string> attributes;  // ordered, no duplicates

    bool operator==(const Concept&) const = default;
};

struct PropertyAssertion {
    std::string label;
    std::string domain;  // concept id
    std::string range;   // concept id or datatype tag

    bool operator==(const PropertyAssertion&) const = default;
};

// Parsed canonical ontology. Concept order defines matrix row/column order
// everywhere downstream.
struct OntologyDoc {
    std::vector<Concept> concepts;
    std::vector<std::pair<std::string, std::string>> subclass;  // (child, parent)
    std::vector<PropertyAssertion> properties;

    bool operator==(const OntologyDoc&) const = default;

    // Index of a concept id, or -1.
    int concept_index(const std::string& id) const;
};

// Parse the canonical JSON format and validate every invariant
// (unique ids, resolvable references, acyclic subclass relation).
// Throws ParseError / ValidationError.
OntologyDoc parse_ontology(const std::string& text);

// Deterministic serialization; parse_ontology(write_ontology(d)) == d.
std::string write_ontology(const OntologyDoc& doc);

// Replace every concept label, attribute string, and property label with
// hex(SHA-256(key || 0x00 || original)). Ids and structure are untouched;
// equal plaintexts map to equal ciphertexts. Throws ConfigError on empty key.
OntologyDoc encrypt_labels(const OntologyDoc& doc, const std::string& key);

}  // namespace ontoalign
