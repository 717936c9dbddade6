#include "ontomesh/cli.hpp"

#include "ontomesh/document.hpp"
#include "ontomesh/planner.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace ontomesh {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// A document always starts with the "ontomesh" header; anything else is
// treated as matrix text.
bool looks_like_document(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = text.size();
        }
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) {
            line.remove_prefix(1);
        }
        if (line.empty()) {
            continue;
        }
        return line.starts_with("ontomesh");
    }
    return false;
}

RationalMatrix matrix_of(const OntologyDocument& doc) {
    switch (doc.kind) {
    case DocumentKind::tree:
        return to_adjacency(doc.to_tree()).to_rational();
    case DocumentKind::mesh:
        return doc.to_mesh().adjacency().to_rational();
    case DocumentKind::probability:
        return doc.to_probability().weights();
    case DocumentKind::directed:
        return doc.to_directed().weights();
    default:
        throw DomainError("'" + std::string(to_string(doc.kind)) +
                          "' documents carry no matrix");
    }
}

RationalMatrix load_matrix(const std::string& path) {
    const std::string text = read_file(path);
    if (looks_like_document(text)) {
        return matrix_of(parse_document(text));
    }
    return parse_matrix_text(text);
}

int cmd_invert(std::ostream& out, const std::string& file) {
    out << serialize_matrix_text(invert(load_matrix(file)));
    return 0;
}

AdjacencyMatrix adjacency_of(const OntologyDocument& doc) {
    switch (doc.kind) {
    case DocumentKind::tree:
        return to_adjacency(doc.to_tree());
    case DocumentKind::mesh:
        return doc.to_mesh().adjacency();
    default:
        throw DomainError("expected a tree or mesh document, got kind '" +
                          std::string(to_string(doc.kind)) + "'");
    }
}

DirectedProbabilityMatrix weights_of(const OntologyDocument& doc) {
    switch (doc.kind) {
    case DocumentKind::probability:
        return doc.to_probability().to_directed();
    case DocumentKind::directed:
        return doc.to_directed();
    default:
        throw DomainError("expected a probability or directed document, got kind '" +
                          std::string(to_string(doc.kind)) + "'");
    }
}

std::string join_ids(const std::vector<NodeId>& ids, const char* separator) {
    std::string text;
    for (const NodeId& id : ids) {
        if (!text.empty()) {
            text += separator;
        }
        text += id.str();
    }
    return text;
}

Link parse_link_argument(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == text.size()) {
        throw DomainError("link argument must be '<from>:<to>', got '" + text + "'");
    }
    return {NodeId(text.substr(0, colon)), NodeId(text.substr(colon + 1))};
}

json tree_report_json(const TreeReport& report) {
    json j{{"is_tree", report.is_tree},
           {"edge_count", report.edge_count},
           {"is_connected", report.is_connected}};
    if (report.cycle_witness) {
        json walk = json::array();
        for (const NodeId& id : *report.cycle_witness) {
            walk.push_back(id.str());
        }
        j["cycle_witness"] = walk;
    }
    return j;
}

void print_tree_report(std::ostream& out, const TreeReport& report) {
    out << "links: " << report.edge_count << "\n";
    out << "connected: " << (report.is_connected ? "yes" : "no") << "\n";
    out << "tree: " << (report.is_tree ? "yes" : "no") << "\n";
    if (report.cycle_witness) {
        out << "cycle: " << join_ids(*report.cycle_witness, " - ") << "\n";
    }
}

int cmd_validate(std::ostream& out, const std::string& file, bool as_json) {
    const OntologyDocument doc = parse_document_lenient(read_file(file));
    const std::size_t n = doc.nodes.size();

    bool valid = true;
    json j{{"kind", std::string(to_string(doc.kind))}, {"nodes", n}};
    std::ostringstream text;
    text << "kind: " << to_string(doc.kind) << "\n";
    text << "nodes: " << n << "\n";

    switch (doc.kind) {
    case DocumentKind::tree: {
        std::vector<Link> links;
        for (const DocumentLink& link : doc.links) {
            links.push_back({link.from, link.to});
        }
        const TreeReport report = validate_tree({doc.nodes, links});
        valid = report.is_tree;
        print_tree_report(text, report);
        j["report"] = tree_report_json(report);
        break;
    }
    case DocumentKind::mesh: {
        std::vector<Link> links;
        std::vector<std::string> self_links;
        for (const DocumentLink& link : doc.links) {
            if (link.from == link.to) {
                self_links.push_back(link.from.str());
                continue;
            }
            links.push_back({link.from, link.to});
        }
        const TreeReport report = validate_tree({doc.nodes, links});
        valid = report.is_connected && self_links.empty();
        text << "links: " << report.edge_count << "\n";
        text << "connected: " << (report.is_connected ? "yes" : "no") << "\n";
        for (const std::string& id : self_links) {
            text << "violation: self link on " << id << "\n";
        }
        j["report"] = {{"links", report.edge_count},
                       {"connected", report.is_connected},
                       {"self_links", self_links}};
        break;
    }
    case DocumentKind::probability:
    case DocumentKind::directed: {
        const bool symmetric = doc.kind == DocumentKind::probability;
        RationalMatrix weights(n);
        for (const DocumentLink& link : doc.links) {
            auto index = [&](const NodeId& id) {
                return static_cast<std::size_t>(
                    std::lower_bound(doc.nodes.begin(), doc.nodes.end(), id) -
                    doc.nodes.begin());
            };
            weights.at(index(link.from), index(link.to)) = *link.weight;
            if (symmetric) {
                weights.at(index(link.to), index(link.from)) = *link.weight;
            }
        }
        const ProbabilityMatrixReport report = validate_probability_matrix(weights, symmetric);
        valid = report.valid;
        text << "links: " << doc.links.size() << "\n";
        for (const std::string& violation : report.violations) {
            text << "violation: " << violation << "\n";
        }
        j["violations"] = report.violations;
        break;
    }
    case DocumentKind::corpus: {
        json entries = json::array();
        for (const DocumentEntry& entry : doc.entries) {
            std::vector<Link> links;
            for (const DocumentLink& link : entry.links) {
                links.push_back({link.from, link.to});
            }
            const TreeReport report = validate_tree({doc.nodes, links});
            valid = valid && report.is_tree;
            text << "expert " << entry.expert << ": "
                 << (report.is_tree ? "tree" : "not a tree") << " (" << report.edge_count
                 << " links)\n";
            entries.push_back({{"expert", entry.expert}, {"report", tree_report_json(report)}});
        }
        text << "experts: " << doc.entries.size() << "\n";
        j["entries"] = entries;
        break;
    }
    case DocumentKind::prerequisites: {
        const PrerequisiteRelation relation = doc.to_prerequisites();
        text << "pairs: " << relation.pairs().size() << "\n";
        if (auto cycle = relation.find_cycle()) {
            valid = false;
            text << "violation: cyclic, " << join_ids(*cycle, " -> ") << "\n";
            json walk = json::array();
            for (const NodeId& id : *cycle) {
                walk.push_back(id.str());
            }
            j["cycle"] = walk;
        } else {
            text << "order: " << join_ids(prerequisite_order(relation), " ") << "\n";
        }
        break;
    }
    }

    text << "valid: " << (valid ? "yes" : "no") << "\n";
    j["valid"] = valid;
    out << (as_json ? j.dump(2) + "\n" : text.str());
    return valid ? 0 : 1;
}

int cmd_equiv(std::ostream& out, const std::string& file_a, const std::string& file_b,
              bool as_json) {
    const OntologyDocument a = parse_document(read_file(file_a));
    const OntologyDocument b = parse_document(read_file(file_b));
    const bool equivalent = node_equivalent(a.nodes, b.nodes);

    std::vector<NodeId> only_a;
    std::vector<NodeId> only_b;
    std::set_difference(a.nodes.begin(), a.nodes.end(), b.nodes.begin(), b.nodes.end(),
                        std::back_inserter(only_a));
    std::set_difference(b.nodes.begin(), b.nodes.end(), a.nodes.begin(), a.nodes.end(),
                        std::back_inserter(only_b));

    if (as_json) {
        json j{{"equivalent", equivalent}};
        json ja = json::array();
        for (const NodeId& id : only_a) {
            ja.push_back(id.str());
        }
        json jb = json::array();
        for (const NodeId& id : only_b) {
            jb.push_back(id.str());
        }
        j["only_in_first"] = ja;
        j["only_in_second"] = jb;
        out << j.dump(2) << "\n";
    } else if (equivalent) {
        out << "equivalent: identical node sets (" << a.nodes.size()
            << " nodes; links may differ)\n";
    } else {
        out << "not equivalent\n";
        if (!only_a.empty()) {
            out << "only in " << file_a << ": " << join_ids(only_a, " ") << "\n";
        }
        if (!only_b.empty()) {
            out << "only in " << file_b << ": " << join_ids(only_b, " ") << "\n";
        }
    }
    return equivalent ? 0 : 1;
}

int cmd_compose(std::ostream& out, const std::vector<std::string>& files) {
    std::optional<AdjacencyMatrix> merged;
    for (const std::string& file : files) {
        AdjacencyMatrix next = adjacency_of(parse_document(read_file(file)));
        merged = merged ? merge(*merged, next) : std::move(next);
    }
    out << serialize_document(OntologyDocument::from_mesh(MeshOntology(*merged)));
    return 0;
}

int cmd_decompose(std::ostream& out, const std::string& mesh_file,
                  const std::vector<std::string>& removals, std::size_t enumerate_count) {
    const MeshOntology mesh = parse_document(read_file(mesh_file)).to_mesh();
    if (!removals.empty()) {
        std::vector<Link> removed;
        removed.reserve(removals.size());
        for (const std::string& text : removals) {
            removed.push_back(parse_link_argument(text));
        }
        const InstanceOntology instance = extract_spanning_tree(mesh, removed);
        out << serialize_document(OntologyDocument::from_tree(instance.tree()));
    } else {
        const auto trees = enumerate_spanning_trees(mesh, enumerate_count);
        for (std::size_t i = 0; i < trees.size(); ++i) {
            if (i != 0) {
                out << "---\n";
            }
            out << serialize_document(OntologyDocument::from_tree(trees[i].tree()));
        }
    }
    return 0;
}

int cmd_operator(std::ostream& out, const std::string& mesh_file, const std::string& tree_file) {
    const MeshOntology mesh = parse_document(read_file(mesh_file)).to_mesh();
    const InstanceOntology instance(parse_document(read_file(tree_file)).to_tree(), mesh.nodes());
    out << serialize_matrix_text(decomposition_operator(mesh, instance).matrix);
    return 0;
}

int cmd_reconstruct(std::ostream& out, const std::string& operator_file,
                    const std::string& tree_file) {
    DecompositionOperator op{load_matrix(operator_file), std::nullopt};
    const InstanceOntology instance(parse_document(read_file(tree_file)).to_tree());
    if (op.matrix.dimension() != instance.nodes().size()) {
        throw DimensionError("operator is " + std::to_string(op.matrix.dimension()) +
                             "-dimensional but the tree has " +
                             std::to_string(instance.nodes().size()) + " nodes");
    }
    out << serialize_matrix_text(reconstruct(op, instance));
    return 0;
}

int cmd_ingest(std::ostream& out, const std::string& corpus_file) {
    const ExpertCorpus corpus = parse_document(read_file(corpus_file)).to_corpus();
    out << serialize_document(OntologyDocument::from_probability(accumulate(corpus)));
    return 0;
}

int cmd_prereq(std::ostream& out, const std::string& probability_file,
               const std::string& pairs_file) {
    const ProbabilityMatrix base = parse_document(read_file(probability_file)).to_probability();
    const PrerequisiteRelation relation =
        parse_document(read_file(pairs_file)).to_prerequisites();
    out << serialize_document(
        OntologyDocument::from_directed(apply_prerequisites(base, relation)));
    return 0;
}

int cmd_plan(std::ostream& out, std::ostream& err, const std::string& file,
             const std::string& start, bool oracle, const std::string& precedence_file,
             bool as_json) {
    const DirectedProbabilityMatrix weights = weights_of(parse_document(read_file(file)));

    std::optional<NodeId> start_id;
    if (!start.empty()) {
        start_id = NodeId(start);
    }
    std::optional<PrerequisiteRelation> precedence;
    if (!precedence_file.empty()) {
        precedence = parse_document(read_file(precedence_file)).to_prerequisites();
    }

    const LearningPath path =
        plan_path(weights, start_id, precedence ? &*precedence : nullptr);

    bool oracle_agreed = true;
    if (oracle) {
        const LearningPath check =
            brute_force_plan(weights, start_id, precedence ? &*precedence : nullptr);
        oracle_agreed = check == path;
    }

    if (as_json) {
        json j;
        json order = json::array();
        for (const NodeId& id : path.order) {
            order.push_back(id.str());
        }
        j["order"] = order;
        j["probability"] = format_rational(path.probability);
        if (oracle) {
            j["oracle_agreed"] = oracle_agreed;
        }
        out << j.dump(2) << "\n";
    } else {
        out << "order: " << join_ids(path.order, " ") << "\n";
        out << "probability: " << format_rational(path.probability) << "\n";
        if (oracle) {
            out << "oracle: " << (oracle_agreed ? "agreed" : "DISAGREED") << "\n";
        }
    }
    if (!oracle_agreed) {
        err << "error: InvariantError: exhaustive oracle disagrees with the planner\n";
        return 1;
    }
    return 0;
}

int cmd_count_trees(std::ostream& out, const std::string& mesh_file, bool as_json) {
    const MeshOntology mesh = parse_document(read_file(mesh_file)).to_mesh();
    const Integer count = count_spanning_trees(mesh);
    if (as_json) {
        out << json{{"spanning_trees", count.str()}}.dump(2) << "\n";
    } else {
        out << count.str() << "\n";
    }
    return 0;
}

} // namespace

CommandResult run_command(const std::vector<std::string>& args) {
    CommandResult result;
    std::ostringstream out;
    std::ostringstream err;

    CLI::App app{"knowledge mesh toolkit: ontology documents, exact decomposition "
                 "operators, expert probability matrices, learning-path planning"};
    app.name("ontomesh");
    app.require_subcommand(1);

    std::string file_a;
    std::string file_b;
    std::vector<std::string> files;
    std::vector<std::string> removals;
    std::size_t enumerate_count = 0;
    std::string start;
    std::string precedence_file;
    bool as_json = false;
    bool oracle = false;

    CLI::App* validate = app.add_subcommand("validate", "check a document and print its report");
    validate->add_option("file", file_a, "document to check")->required();
    validate->add_flag("--json", as_json, "machine-readable report");

    CLI::App* invert_cmd =
        app.add_subcommand("invert", "print the exact inverse of a document's matrix");
    invert_cmd->add_option("matrix", file_a, "document or matrix text file")->required();

    CLI::App* equiv = app.add_subcommand("equiv", "compare the node sets of two documents");
    equiv->add_option("first", file_a, "first document")->required();
    equiv->add_option("second", file_b, "second document")->required();
    equiv->add_flag("--json", as_json, "machine-readable report");

    CLI::App* compose =
        app.add_subcommand("compose", "merge tree/mesh documents into one mesh");
    compose->add_option("files", files, "two or more documents over the same nodes")
        ->expected(2, -1);

    CLI::App* decompose =
        app.add_subcommand("decompose", "cut spanning trees out of a mesh document");
    decompose->add_option("mesh", file_a, "mesh document")->required();
    CLI::Option* remove_opt = decompose->add_option(
        "--remove", removals, "links to break, as from:to (repeatable or comma separated)");
    remove_opt->delimiter(',');
    CLI::Option* enumerate_opt = decompose->add_option(
        "--enumerate", enumerate_count, "emit the first K spanning trees");
    remove_opt->excludes(enumerate_opt);

    CLI::App* operator_cmd = app.add_subcommand(
        "operator", "print the decomposition operator taking a mesh onto a tree");
    operator_cmd->add_option("mesh", file_a, "mesh document")->required();
    operator_cmd->add_option("tree", file_b, "tree document over the same nodes")->required();

    CLI::App* reconstruct_cmd = app.add_subcommand(
        "reconstruct", "restore a mesh from a decomposition operator and its tree");
    reconstruct_cmd->add_option("operator", file_a, "operator matrix file")->required();
    reconstruct_cmd->add_option("tree", file_b, "tree document")->required();

    CLI::App* ingest = app.add_subcommand(
        "ingest", "accumulate an expert corpus into a probability document");
    ingest->add_option("corpus", file_a, "corpus document")->required();

    CLI::App* prereq = app.add_subcommand(
        "prereq", "apply prerequisite pairs to a probability document");
    prereq->add_option("probability", file_a, "probability document")->required();
    prereq->add_option("pairs", file_b, "prerequisites document")->required();

    CLI::App* plan = app.add_subcommand("plan", "maximum-probability learning path");
    plan->add_option("weights", file_a, "probability or directed document")->required();
    plan->add_option("--start", start, "fixed first node");
    plan->add_option("--precedence", precedence_file,
                     "prerequisites document enforced as a global order constraint");
    plan->add_flag("--oracle", oracle, "cross-check against the exhaustive planner");
    plan->add_flag("--json", as_json, "machine-readable report");

    CLI::App* count_trees = app.add_subcommand("count-trees", "number of spanning trees");
    count_trees->add_option("mesh", file_a, "mesh document")->required();
    count_trees->add_flag("--json", as_json, "machine-readable report");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("ontomesh");
    for (const std::string& arg : args) {
        argv.push_back(arg.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (validate->parsed()) {
            result.status = cmd_validate(out, file_a, as_json);
        } else if (invert_cmd->parsed()) {
            result.status = cmd_invert(out, file_a);
        } else if (equiv->parsed()) {
            result.status = cmd_equiv(out, file_a, file_b, as_json);
        } else if (compose->parsed()) {
            result.status = cmd_compose(out, files);
        } else if (decompose->parsed()) {
            if (removals.empty() && enumerate_count == 0) {
                throw CLI::RequiredError("decompose: one of --remove or --enumerate");
            }
            result.status = cmd_decompose(out, file_a, removals, enumerate_count);
        } else if (operator_cmd->parsed()) {
            result.status = cmd_operator(out, file_a, file_b);
        } else if (reconstruct_cmd->parsed()) {
            result.status = cmd_reconstruct(out, file_a, file_b);
        } else if (ingest->parsed()) {
            result.status = cmd_ingest(out, file_a);
        } else if (prereq->parsed()) {
            result.status = cmd_prereq(out, file_a, file_b);
        } else if (plan->parsed()) {
            result.status = cmd_plan(out, err, file_a, start, oracle, precedence_file, as_json);
        } else if (count_trees->parsed()) {
            result.status = cmd_count_trees(out, file_a, as_json);
        }
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        result.status = 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        result.status = 2;
    } catch (const SyntaxError& e) {
        err << "error: " << e.name() << ": " << e.what() << "\n";
        result.status = 2;
    } catch (const SchemaError& e) {
        err << "error: " << e.name() << ": " << e.what() << "\n";
        result.status = 2;
    } catch (const IoError& e) {
        err << "error: " << e.name() << ": " << e.what() << "\n";
        result.status = 2;
    } catch (const Error& e) {
        err << "error: " << e.name() << ": " << e.what() << "\n";
        result.status = 1;
    } catch (const std::exception& e) {
        // Last resort: nothing in the toolkit should land here.
        err << "error: Internal: " << e.what() << "\n";
        result.status = 1;
    }

    result.out = out.str();
    result.err = err.str();
    return result;
}

} // namespace ontomesh
