#pragma once

#include "ontomesh/probability.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ontomesh {

enum class DocumentKind { tree, mesh, probability, directed, corpus, prerequisites };

std::string_view to_string(DocumentKind kind);
std::optional<DocumentKind> parse_kind(std::string_view text);

struct DocumentLink {
    NodeId from;
    NodeId to;
    std::optional<int> order_rank;   // tree/corpus kinds: sibling position
    std::optional<Rational> weight;  // probability/directed kinds

    bool operator==(const DocumentLink&) const = default;
};

struct DocumentEntry {
    std::string expert;
    std::vector<DocumentLink> links;

    bool operator==(const DocumentEntry&) const = default;
};

// One parsed document. All kinds share the same schema; `kind`
// discriminates which fields are meaningful. Instances are normalized:
// nodes sorted, links in canonical order, sibling ranks rewritten 1..k,
// corpus entries sorted by expert label.
struct OntologyDocument {
    std::string format_version = "1";
    DocumentKind kind = DocumentKind::tree;
    std::vector<NodeId> nodes;
    std::vector<DocumentLink> links;       // all kinds except corpus/prerequisites
    std::vector<DocumentEntry> entries;    // corpus
    std::vector<PrerequisitePair> pairs;   // prerequisites

    bool operator==(const OntologyDocument&) const = default;

    // Typed views. Each enforces the module-level invariants of its kind and
    // throws (DomainError) when called on the wrong kind.
    OrderedTree to_tree() const;
    MeshOntology to_mesh() const;
    ProbabilityMatrix to_probability() const;
    DirectedProbabilityMatrix to_directed() const;
    ExpertCorpus to_corpus() const;
    PrerequisiteRelation to_prerequisites() const;

    static OntologyDocument from_tree(const OrderedTree& tree);
    static OntologyDocument from_mesh(const MeshOntology& mesh);
    static OntologyDocument from_probability(const ProbabilityMatrix& matrix);
    static OntologyDocument from_directed(const DirectedProbabilityMatrix& matrix);
    static OntologyDocument from_corpus(const ExpertCorpus& corpus);
    static OntologyDocument from_prerequisites(const PrerequisiteRelation& relation);
};

// Strict parse: syntax, schema, and the kind's structural invariants are all
// enforced (a tree document that is not a tree raises InvariantError).
OntologyDocument parse_document(std::string_view text);

// Syntax and schema only; used to report on structurally broken content
// instead of refusing to load it.
OntologyDocument parse_document_lenient(std::string_view text);

std::string serialize_document(const OntologyDocument& doc);

// Matrix text: one row per line, comma-separated rational entries
// (integers, decimals, or p/q); '#' starts a comment.
RationalMatrix parse_matrix_text(std::string_view text);
std::string serialize_matrix_text(const RationalMatrix& matrix);

} // namespace ontomesh
