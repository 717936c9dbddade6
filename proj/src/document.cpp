#include "ontomesh/document.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace ontomesh {

namespace {

// Line-oriented grammar shared by every document kind:
//
//   ontomesh 1
//   kind tree|mesh|probability|directed|corpus|prerequisites
//   nodes <id> <id> ...          (repeatable; ids declared before use)
//   link <from> <to> [order=<int>] [weight=<rational>]
//   pair <before> <after>        (prerequisites only)
//   expert <label>               (corpus only; owns the link lines below it)
//
// '#' starts a comment, blank lines are skipped. Ids use [A-Za-z0-9_.-].

struct Token {
    std::string text;
    std::size_t line;
    std::size_t column;
};

bool valid_ident(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        const auto uc = static_cast<unsigned char>(c);
        if (!std::isalnum(uc) && c != '_' && c != '-' && c != '.') {
            return false;
        }
    }
    return true;
}

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        const std::size_t begin = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        tokens.push_back({std::string(line.substr(begin, i - begin)), line_no, begin + 1});
    }
    return tokens;
}

NodeId checked_id(const Token& token) {
    if (!valid_ident(token.text)) {
        throw SyntaxError("'" + token.text + "' is not a valid id ([A-Za-z0-9_.-])", token.line,
                          token.column);
    }
    return NodeId(token.text);
}

int parse_rank(const Token& token, std::string_view value) {
    int rank = 0;
    const char* begin = value.data();
    const char* end = begin + value.size();
    auto [ptr, ec] = std::from_chars(begin, end, rank);
    if (ec != std::errc{} || ptr != end) {
        throw SyntaxError("'" + std::string(value) + "' is not an integer order rank", token.line,
                          token.column);
    }
    return rank;
}

struct RawLink {
    DocumentLink link;
    std::size_t line;
};

// Canonical sibling order: explicit ranks first (ascending), then file
// order; ranks are rewritten 1..k afterwards.
void normalize_tree_links(std::vector<RawLink>& raw, std::vector<DocumentLink>& out) {
    std::set<std::pair<NodeId, NodeId>> seen;
    for (const RawLink& r : raw) {
        if (!seen.insert({r.link.from, r.link.to}).second) {
            throw SchemaError("duplicate link " + r.link.from.str() + " -> " + r.link.to.str(),
                              r.line);
        }
    }
    std::stable_sort(raw.begin(), raw.end(), [](const RawLink& a, const RawLink& b) {
        if (a.link.from != b.link.from) {
            return a.link.from < b.link.from;
        }
        const int ra = a.link.order_rank.value_or(std::numeric_limits<int>::max());
        const int rb = b.link.order_rank.value_or(std::numeric_limits<int>::max());
        if (ra != rb) {
            return ra < rb;
        }
        return false; // stable: keep appearance order
    });
    out.reserve(raw.size());
    int rank = 0;
    std::optional<NodeId> parent;
    for (RawLink& r : raw) {
        rank = (parent && *parent == r.link.from) ? rank + 1 : 1;
        parent = r.link.from; // copy: the link is moved out just below
        r.link.order_rank = rank;
        out.push_back(std::move(r.link));
    }
}

void normalize_weighted_links(std::vector<RawLink>& raw, bool undirected,
                              std::vector<DocumentLink>& out) {
    std::map<std::pair<NodeId, NodeId>, Rational> weights;
    for (RawLink& r : raw) {
        NodeId a = r.link.from;
        NodeId b = r.link.to;
        if (undirected && b < a) {
            std::swap(a, b);
        }
        auto [it, inserted] = weights.try_emplace({a, b}, *r.link.weight);
        if (!inserted && it->second != *r.link.weight) {
            throw SchemaError("conflicting weights for link " + a.str() + " - " + b.str() + ": " +
                                  format_rational(it->second) + " vs " +
                                  format_rational(*r.link.weight),
                              r.line);
        }
    }
    for (auto& [key, weight] : weights) {
        if (weight == 0) {
            continue; // zero weight means no link
        }
        out.push_back({key.first, key.second, std::nullopt, std::move(weight)});
    }
}

void normalize_mesh_links(std::vector<RawLink>& raw, std::vector<DocumentLink>& out) {
    std::set<std::pair<NodeId, NodeId>> links;
    for (RawLink& r : raw) {
        NodeId a = r.link.from;
        NodeId b = r.link.to;
        if (b < a) {
            std::swap(a, b);
        }
        links.insert({std::move(a), std::move(b)});
    }
    for (const auto& [a, b] : links) {
        out.push_back({a, b, std::nullopt, std::nullopt});
    }
}

// Shared by tree documents and corpus entries: orient parent -> child links
// into an ordered tree, with diagnostics from the undirected reading.
OrderedTree build_tree(const std::vector<NodeId>& nodes, const std::vector<DocumentLink>& links,
                       const std::string& what) {
    std::vector<Link> undirected;
    undirected.reserve(links.size());
    for (const DocumentLink& link : links) {
        undirected.push_back({link.from, link.to});
    }
    const TreeReport report = validate_tree({nodes, undirected});
    if (!report.is_tree) {
        std::string message = what + " does not form a tree: " +
                              std::to_string(report.edge_count) + " distinct links over " +
                              std::to_string(nodes.size()) + " nodes, " +
                              (report.is_connected ? "connected" : "disconnected");
        if (report.cycle_witness) {
            message += ", cycle";
            char sep = ' ';
            for (const NodeId& id : *report.cycle_witness) {
                message += sep + id.str();
                sep = '-';
            }
        }
        throw InvariantError(message);
    }

    std::set<NodeId> as_child;
    for (const DocumentLink& link : links) {
        as_child.insert(link.to);
    }
    std::vector<NodeId> roots;
    for (const NodeId& id : nodes) {
        if (!as_child.contains(id)) {
            roots.push_back(id);
        }
    }
    if (roots.size() != 1) {
        throw InvariantError(what + " must have exactly one parentless root node; found " +
                             std::to_string(roots.size()));
    }

    std::map<NodeId, std::vector<NodeId>> children;
    for (const DocumentLink& link : links) {
        children[link.from].push_back(link.to);
    }
    return OrderedTree(roots.front(), std::move(children));
}

void require_kind(const OntologyDocument& doc, DocumentKind kind, const char* what) {
    if (doc.kind != kind) {
        throw DomainError(std::string("expected a ") + what + " document, got kind '" +
                          std::string(to_string(doc.kind)) + "'");
    }
}

std::size_t node_index(const std::vector<NodeId>& nodes, const NodeId& id) {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), id);
    if (it == nodes.end() || *it != id) {
        throw DomainError("unknown node id '" + id.str() + "'");
    }
    return static_cast<std::size_t>(it - nodes.begin());
}

OntologyDocument parse_impl(std::string_view text, bool strict) {
    OntologyDocument doc;
    bool have_header = false;
    bool have_kind = false;
    std::set<NodeId> declared;
    std::vector<RawLink> raw_links;
    std::vector<std::pair<std::string, std::vector<RawLink>>> raw_entries;
    std::set<std::string> expert_labels;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        const std::vector<Token> tokens = tokenize(line, line_no);
        if (tokens.empty()) {
            continue;
        }

        if (!have_header) {
            if (tokens[0].text != "ontomesh" || tokens.size() != 2) {
                throw SyntaxError("expected header 'ontomesh <version>'", tokens[0].line,
                                  tokens[0].column);
            }
            if (tokens[1].text != "1") {
                throw SchemaError("unsupported format version '" + tokens[1].text + "'", line_no);
            }
            doc.format_version = tokens[1].text;
            have_header = true;
            continue;
        }

        const Token& directive = tokens[0];
        if (directive.text == "kind") {
            if (have_kind) {
                throw SchemaError("duplicate 'kind' line", line_no);
            }
            if (tokens.size() != 2) {
                throw SyntaxError("expected 'kind <kind>'", directive.line, directive.column);
            }
            auto kind = parse_kind(tokens[1].text);
            if (!kind) {
                throw SchemaError("unknown document kind '" + tokens[1].text + "'", line_no);
            }
            doc.kind = *kind;
            have_kind = true;
        } else if (directive.text == "nodes") {
            if (tokens.size() < 2) {
                throw SyntaxError("'nodes' line needs at least one id", directive.line,
                                  directive.column);
            }
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                NodeId id = checked_id(tokens[i]);
                if (!declared.insert(id).second) {
                    throw SchemaError("duplicate node id '" + id.str() + "'", line_no);
                }
                doc.nodes.push_back(std::move(id));
            }
        } else if (directive.text == "link") {
            if (!have_kind) {
                throw SchemaError("'link' line before 'kind'", line_no);
            }
            if (doc.kind == DocumentKind::prerequisites) {
                throw SchemaError("prerequisites documents take 'pair' lines, not links",
                                  line_no);
            }
            if (tokens.size() < 3) {
                throw SyntaxError("expected 'link <from> <to> [order=..] [weight=..]'",
                                  directive.line, directive.column);
            }
            DocumentLink link{checked_id(tokens[1]), checked_id(tokens[2]), std::nullopt,
                              std::nullopt};
            for (const NodeId* id : {&link.from, &link.to}) {
                if (!declared.contains(*id)) {
                    throw SchemaError("link references undeclared node '" + id->str() + "'",
                                      line_no);
                }
            }
            for (std::size_t i = 3; i < tokens.size(); ++i) {
                const Token& option = tokens[i];
                const auto equals = option.text.find('=');
                if (equals == std::string::npos) {
                    throw SyntaxError("expected key=value, got '" + option.text + "'",
                                      option.line, option.column);
                }
                const std::string key = option.text.substr(0, equals);
                const std::string value = option.text.substr(equals + 1);
                if (key == "order") {
                    if (link.order_rank) {
                        throw SyntaxError("duplicate order= option", option.line, option.column);
                    }
                    link.order_rank = parse_rank(option, value);
                } else if (key == "weight") {
                    if (link.weight) {
                        throw SyntaxError("duplicate weight= option", option.line, option.column);
                    }
                    auto weight = try_parse_rational(value);
                    if (!weight) {
                        throw SyntaxError("'" + value + "' is not a rational literal",
                                          option.line, option.column);
                    }
                    link.weight = std::move(*weight);
                } else {
                    throw SyntaxError("unknown link option '" + key + "'", option.line,
                                      option.column);
                }
            }

            const bool weighted_kind = doc.kind == DocumentKind::probability ||
                                       doc.kind == DocumentKind::directed;
            if (weighted_kind && !link.weight) {
                throw SchemaError("links in " + std::string(to_string(doc.kind)) +
                                      " documents need weight=",
                                  line_no);
            }
            if (!weighted_kind && link.weight) {
                throw SchemaError("links in " + std::string(to_string(doc.kind)) +
                                      " documents do not take weight=",
                                  line_no);
            }
            const bool ranked_kind =
                doc.kind == DocumentKind::tree || doc.kind == DocumentKind::corpus;
            if (!ranked_kind && link.order_rank) {
                throw SchemaError("links in " + std::string(to_string(doc.kind)) +
                                      " documents do not take order=",
                                  line_no);
            }

            if (doc.kind == DocumentKind::corpus) {
                if (raw_entries.empty()) {
                    throw SchemaError("corpus link before any 'expert' line", line_no);
                }
                raw_entries.back().second.push_back({std::move(link), line_no});
            } else {
                raw_links.push_back({std::move(link), line_no});
            }
        } else if (directive.text == "pair") {
            if (!have_kind || doc.kind != DocumentKind::prerequisites) {
                throw SchemaError("'pair' lines belong to prerequisites documents", line_no);
            }
            if (tokens.size() != 3) {
                throw SyntaxError("expected 'pair <before> <after>'", directive.line,
                                  directive.column);
            }
            PrerequisitePair pair{checked_id(tokens[1]), checked_id(tokens[2])};
            for (const NodeId* id : {&pair.before, &pair.after}) {
                if (!declared.contains(*id)) {
                    throw SchemaError("pair references undeclared node '" + id->str() + "'",
                                      line_no);
                }
            }
            doc.pairs.push_back(std::move(pair));
        } else if (directive.text == "expert") {
            if (!have_kind || doc.kind != DocumentKind::corpus) {
                throw SchemaError("'expert' lines belong to corpus documents", line_no);
            }
            if (tokens.size() != 2) {
                throw SyntaxError("expected 'expert <label>'", directive.line, directive.column);
            }
            if (!valid_ident(tokens[1].text)) {
                throw SyntaxError("'" + tokens[1].text + "' is not a valid expert label",
                                  tokens[1].line, tokens[1].column);
            }
            if (!expert_labels.insert(tokens[1].text).second) {
                throw SchemaError("duplicate expert label '" + tokens[1].text + "'", line_no);
            }
            raw_entries.emplace_back(tokens[1].text, std::vector<RawLink>{});
        } else {
            throw SyntaxError("unknown directive '" + directive.text + "'", directive.line,
                              directive.column);
        }
    }

    if (!have_header) {
        throw SchemaError("missing 'ontomesh <version>' header");
    }
    if (!have_kind) {
        throw SchemaError("missing 'kind' line");
    }
    if (doc.nodes.empty()) {
        throw SchemaError("document declares no nodes");
    }
    std::sort(doc.nodes.begin(), doc.nodes.end());

    switch (doc.kind) {
    case DocumentKind::tree:
        normalize_tree_links(raw_links, doc.links);
        break;
    case DocumentKind::mesh:
        normalize_mesh_links(raw_links, doc.links);
        break;
    case DocumentKind::probability:
        normalize_weighted_links(raw_links, /*undirected=*/true, doc.links);
        break;
    case DocumentKind::directed:
        normalize_weighted_links(raw_links, /*undirected=*/false, doc.links);
        break;
    case DocumentKind::corpus:
        std::sort(raw_entries.begin(), raw_entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [label, links] : raw_entries) {
            DocumentEntry entry{label, {}};
            normalize_tree_links(links, entry.links);
            doc.entries.push_back(std::move(entry));
        }
        break;
    case DocumentKind::prerequisites:
        std::sort(doc.pairs.begin(), doc.pairs.end());
        doc.pairs.erase(std::unique(doc.pairs.begin(), doc.pairs.end()), doc.pairs.end());
        break;
    }

    if (strict) {
        switch (doc.kind) {
        case DocumentKind::tree:
            doc.to_tree();
            break;
        case DocumentKind::mesh:
            doc.to_mesh();
            break;
        case DocumentKind::probability:
            doc.to_probability();
            break;
        case DocumentKind::directed:
            doc.to_directed();
            break;
        case DocumentKind::corpus:
            doc.to_corpus();
            break;
        case DocumentKind::prerequisites: {
            if (auto cycle = doc.to_prerequisites().find_cycle()) {
                std::string walk;
                for (const NodeId& id : *cycle) {
                    if (!walk.empty()) {
                        walk += " -> ";
                    }
                    walk += id.str();
                }
                throw InvariantError("prerequisites document is cyclic: " + walk);
            }
            break;
        }
        }
    }
    return doc;
}

} // namespace

std::string_view to_string(DocumentKind kind) {
    switch (kind) {
    case DocumentKind::tree:
        return "tree";
    case DocumentKind::mesh:
        return "mesh";
    case DocumentKind::probability:
        return "probability";
    case DocumentKind::directed:
        return "directed";
    case DocumentKind::corpus:
        return "corpus";
    case DocumentKind::prerequisites:
        return "prerequisites";
    }
    return "?";
}

std::optional<DocumentKind> parse_kind(std::string_view text) {
    for (DocumentKind kind :
         {DocumentKind::tree, DocumentKind::mesh, DocumentKind::probability,
          DocumentKind::directed, DocumentKind::corpus, DocumentKind::prerequisites}) {
        if (text == to_string(kind)) {
            return kind;
        }
    }
    return std::nullopt;
}

OrderedTree OntologyDocument::to_tree() const {
    require_kind(*this, DocumentKind::tree, "tree");
    return build_tree(nodes, links, "tree document");
}

MeshOntology OntologyDocument::to_mesh() const {
    require_kind(*this, DocumentKind::mesh, "mesh");
    std::vector<Link> mesh_links;
    mesh_links.reserve(links.size());
    for (const DocumentLink& link : links) {
        if (link.from == link.to) {
            throw InvariantError("mesh document has a self link on '" + link.from.str() +
                                 "'; the diagonal must stay zero");
        }
        mesh_links.push_back({link.from, link.to});
    }
    return MeshOntology(nodes, mesh_links);
}

ProbabilityMatrix OntologyDocument::to_probability() const {
    require_kind(*this, DocumentKind::probability, "probability");
    RationalMatrix weights(nodes.size());
    for (const DocumentLink& link : links) {
        if (!link.weight) {
            throw DomainError("probability link without a weight");
        }
        const std::size_t i = node_index(nodes, link.from);
        const std::size_t j = node_index(nodes, link.to);
        weights.at(i, j) = *link.weight;
        weights.at(j, i) = *link.weight;
    }
    return ProbabilityMatrix(nodes, std::move(weights));
}

DirectedProbabilityMatrix OntologyDocument::to_directed() const {
    require_kind(*this, DocumentKind::directed, "directed");
    RationalMatrix weights(nodes.size());
    for (const DocumentLink& link : links) {
        if (!link.weight) {
            throw DomainError("directed link without a weight");
        }
        weights.at(node_index(nodes, link.from), node_index(nodes, link.to)) = *link.weight;
    }
    return DirectedProbabilityMatrix(nodes, std::move(weights));
}

ExpertCorpus OntologyDocument::to_corpus() const {
    require_kind(*this, DocumentKind::corpus, "corpus");
    std::vector<ExpertEntry> experts;
    experts.reserve(entries.size());
    for (const DocumentEntry& entry : entries) {
        OrderedTree tree = build_tree(nodes, entry.links, "tree of expert '" + entry.expert + "'");
        experts.push_back({entry.expert, InstanceOntology(std::move(tree), nodes, entry.expert)});
    }
    return ExpertCorpus(nodes, std::move(experts));
}

PrerequisiteRelation OntologyDocument::to_prerequisites() const {
    require_kind(*this, DocumentKind::prerequisites, "prerequisites");
    return PrerequisiteRelation(nodes, pairs);
}

OntologyDocument OntologyDocument::from_tree(const OrderedTree& tree) {
    OntologyDocument doc;
    doc.kind = DocumentKind::tree;
    doc.nodes = tree.nodes();
    for (const NodeId& parent : tree.nodes()) {
        int rank = 0;
        for (const NodeId& child : tree.children_of(parent)) {
            doc.links.push_back({parent, child, ++rank, std::nullopt});
        }
    }
    return doc;
}

OntologyDocument OntologyDocument::from_mesh(const MeshOntology& mesh) {
    OntologyDocument doc;
    doc.kind = DocumentKind::mesh;
    doc.nodes = mesh.nodes();
    for (const Link& link : mesh.adjacency().links()) {
        doc.links.push_back({link.from, link.to, std::nullopt, std::nullopt});
    }
    return doc;
}

OntologyDocument OntologyDocument::from_probability(const ProbabilityMatrix& matrix) {
    OntologyDocument doc;
    doc.kind = DocumentKind::probability;
    doc.nodes = matrix.nodes();
    for (std::size_t i = 0; i < doc.nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < doc.nodes.size(); ++j) {
            if (matrix.weights().at(i, j) != 0) {
                doc.links.push_back(
                    {doc.nodes[i], doc.nodes[j], std::nullopt, matrix.weights().at(i, j)});
            }
        }
    }
    return doc;
}

OntologyDocument OntologyDocument::from_directed(const DirectedProbabilityMatrix& matrix) {
    OntologyDocument doc;
    doc.kind = DocumentKind::directed;
    doc.nodes = matrix.nodes();
    for (std::size_t i = 0; i < doc.nodes.size(); ++i) {
        for (std::size_t j = 0; j < doc.nodes.size(); ++j) {
            if (i != j && matrix.weights().at(i, j) != 0) {
                doc.links.push_back(
                    {doc.nodes[i], doc.nodes[j], std::nullopt, matrix.weights().at(i, j)});
            }
        }
    }
    return doc;
}

OntologyDocument OntologyDocument::from_corpus(const ExpertCorpus& corpus) {
    OntologyDocument doc;
    doc.kind = DocumentKind::corpus;
    doc.nodes = corpus.mesh_nodes();
    for (const ExpertEntry& expert : corpus.entries()) {
        DocumentEntry entry{expert.label, {}};
        for (const NodeId& parent : expert.instance.tree().nodes()) {
            int rank = 0;
            for (const NodeId& child : expert.instance.tree().children_of(parent)) {
                entry.links.push_back({parent, child, ++rank, std::nullopt});
            }
        }
        doc.entries.push_back(std::move(entry));
    }
    std::sort(doc.entries.begin(), doc.entries.end(),
              [](const DocumentEntry& a, const DocumentEntry& b) { return a.expert < b.expert; });
    return doc;
}

OntologyDocument OntologyDocument::from_prerequisites(const PrerequisiteRelation& relation) {
    OntologyDocument doc;
    doc.kind = DocumentKind::prerequisites;
    doc.nodes = relation.nodes();
    doc.pairs = relation.pairs();
    return doc;
}

std::string serialize_document(const OntologyDocument& doc) {
    std::ostringstream out;
    out << "ontomesh " << doc.format_version << "\n";
    out << "kind " << to_string(doc.kind) << "\n";
    out << "nodes";
    for (const NodeId& id : doc.nodes) {
        out << " " << id;
    }
    out << "\n";

    auto write_link = [&](const DocumentLink& link) {
        out << "link " << link.from << " " << link.to;
        if (link.order_rank) {
            out << " order=" << *link.order_rank;
        }
        if (link.weight) {
            out << " weight=" << format_rational(*link.weight);
        }
        out << "\n";
    };

    for (const DocumentLink& link : doc.links) {
        write_link(link);
    }
    for (const DocumentEntry& entry : doc.entries) {
        out << "expert " << entry.expert << "\n";
        for (const DocumentLink& link : entry.links) {
            write_link(link);
        }
    }
    for (const PrerequisitePair& pair : doc.pairs) {
        out << "pair " << pair.before << " " << pair.after << "\n";
    }
    return out.str();
}

OntologyDocument parse_document(std::string_view text) { return parse_impl(text, true); }

OntologyDocument parse_document_lenient(std::string_view text) { return parse_impl(text, false); }

RationalMatrix parse_matrix_text(std::string_view text) {
    std::vector<std::vector<Rational>> rows;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        bool blank = true;
        for (char c : line) {
            if (!std::isspace(static_cast<unsigned char>(c))) {
                blank = false;
                break;
            }
        }
        if (blank) {
            continue;
        }

        std::vector<Rational> row;
        std::size_t cell_start = 0;
        while (cell_start <= line.size()) {
            std::size_t comma = line.find(',', cell_start);
            if (comma == std::string_view::npos) {
                comma = line.size();
            }
            std::string_view cell = line.substr(cell_start, comma - cell_start);
            std::size_t column = cell_start + 1;
            while (!cell.empty() && std::isspace(static_cast<unsigned char>(cell.front()))) {
                cell.remove_prefix(1);
                ++column;
            }
            while (!cell.empty() && std::isspace(static_cast<unsigned char>(cell.back()))) {
                cell.remove_suffix(1);
            }
            auto value = try_parse_rational(cell);
            if (!value) {
                throw SyntaxError("'" + std::string(cell) + "' is not a rational entry", line_no,
                                  column);
            }
            row.push_back(std::move(*value));
            cell_start = comma + 1;
        }
        rows.push_back(std::move(row));
    }

    if (rows.empty()) {
        throw SchemaError("matrix text has no rows");
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) {
            throw SchemaError("matrix must be square: row " + std::to_string(i + 1) + " has " +
                              std::to_string(rows[i].size()) + " entries but there are " +
                              std::to_string(rows.size()) + " rows");
        }
    }

    RationalMatrix matrix(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows.size(); ++j) {
            matrix.at(i, j) = std::move(rows[i][j]);
        }
    }
    return matrix;
}

std::string serialize_matrix_text(const RationalMatrix& matrix) {
    std::ostringstream out;
    for (std::size_t i = 0; i < matrix.dimension(); ++i) {
        for (std::size_t j = 0; j < matrix.dimension(); ++j) {
            if (j != 0) {
                out << ", ";
            }
            out << format_rational(matrix.at(i, j));
        }
        out << "\n";
    }
    return out.str();
}

} // namespace ontomesh
