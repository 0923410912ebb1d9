#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "manazel/errors.hpp"
#include "manazel/model_io.hpp"

namespace manazel {

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void append_nodes(std::string& out, const std::vector<TreeNode>& nodes) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const TreeNode& n = nodes[i];
        out += "node: " + std::to_string(i);
        if (n.leaf) {
            out += " leaf " + std::to_string(n.cls);
        } else {
            out += " split " + std::to_string(n.feature) + " " + fmt17(n.threshold) +
                   " " + std::to_string(n.left) + " " + std::to_string(n.right);
        }
        out += "\n";
    }
}

class LineReader {
public:
    explicit LineReader(const std::string& text) : text_(text) {}

    // Returns false at end of input. The returned line excludes the LF.
    bool next(std::string& line) {
        if (pos_ >= text_.size()) return false;
        const std::size_t nl = text_.find('\n', pos_);
        if (nl == std::string::npos) {
            line = text_.substr(pos_);
            pos_ = text_.size();
        } else {
            line = text_.substr(pos_, nl - pos_);
            pos_ = nl + 1;
        }
        ++lineno_;
        return true;
    }

    std::string expect(const std::string& section) {
        std::string line;
        if (!next(line)) throw LoadError("model file ends before the " + section + " section");
        return line;
    }

    int lineno() const { return lineno_; }
    std::size_t pos() const { return pos_; }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    int lineno_ = 0;
};

double parse_num(const std::string& s, const std::string& what) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') {
        throw LoadError("malformed " + what + " value '" + s + "'");
    }
    return v;
}

long parse_long(const std::string& s, const std::string& what) {
    char* end = nullptr;
    const long v = std::strtol(s.c_str(), &end, 10);
    if (end == s.c_str() || *end != '\0') {
        throw LoadError("malformed " + what + " value '" + s + "'");
    }
    return v;
}

// Splits "key: rest" at the first ": ".
bool split_kv(const std::string& line, std::string& key, std::string& rest) {
    const std::size_t sep = line.find(": ");
    if (sep == std::string::npos) return false;
    key = line.substr(0, sep);
    rest = line.substr(sep + 2);
    return true;
}

std::vector<TreeNode> read_nodes(LineReader& in, std::size_t count) {
    std::vector<TreeNode> nodes(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::string line = in.expect("node list");
        std::istringstream ss(line);
        std::string tag, kind;
        long idx = -1;
        ss >> tag >> idx >> kind;
        if (tag != "node:" || !ss || idx != static_cast<long>(i)) {
            throw LoadError("expected node " + std::to_string(i) + ", got '" + line + "'");
        }
        TreeNode n;
        if (kind == "leaf") {
            n.leaf = true;
            ss >> n.cls;
            if (!ss || (n.cls != 0 && n.cls != 1)) {
                throw LoadError("malformed leaf node '" + line + "'");
            }
        } else if (kind == "split") {
            n.leaf = false;
            ss >> n.feature >> n.threshold >> n.left >> n.right;
            if (!ss || (n.feature != 0 && n.feature != 1) || n.left < 0 || n.right < 0 ||
                n.left >= static_cast<int>(count) || n.right >= static_cast<int>(count)) {
                throw LoadError("malformed split node '" + line + "'");
            }
        } else {
            throw LoadError("unknown node kind in '" + line + "'");
        }
        std::string extra;
        if (ss >> extra) throw LoadError("trailing fields in '" + line + "'");
        nodes[i] = n;
    }
    return nodes;
}

}  // namespace

std::uint32_t crc32(std::string_view bytes) {
    static const auto table = [] {
        std::array<std::uint32_t, 256> t{};
        for (std::uint32_t i = 0; i < 256; ++i) {
            std::uint32_t c = i;
            for (int bit = 0; bit < 8; ++bit) {
                c = (c & 1) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
            }
            t[i] = c;
        }
        return t;
    }();
    std::uint32_t crc = 0xFFFFFFFFu;
    for (const char ch : bytes) {
        crc = table[(crc ^ static_cast<unsigned char>(ch)) & 0xFFu] ^ (crc >> 8);
    }
    return crc ^ 0xFFFFFFFFu;
}

std::string serialize_model(const Classifier& m) {
    if (m.family() == Family::Stub) {
        throw InputError("stub models cannot be serialized");
    }

    std::string out = "manazel-model v1\n";
    out += "family: " + family_name(m.family()) + "\n";
    if (const auto s = m.seed()) out += "seed: " + std::to_string(*s) + "\n";
    for (const auto& [key, value] : m.hyperparams()) {
        out += "hp." + key + ": " + value + "\n";
    }

    switch (m.family()) {
        case Family::LogReg: {
            const auto p = static_cast<const LogisticRegression&>(m).params();
            out += "w.arcv: " + fmt17(p[0]) + "\n";
            out += "w.w: " + fmt17(p[1]) + "\n";
            out += "b: " + fmt17(p[2]) + "\n";
            break;
        }
        case Family::Svm: {
            const auto p = static_cast<const LinearSvm&>(m).params();
            out += "w.arcv: " + fmt17(p[0]) + "\n";
            out += "w.w: " + fmt17(p[1]) + "\n";
            out += "b: " + fmt17(p[2]) + "\n";
            break;
        }
        case Family::Tree: {
            const auto& nodes = static_cast<const DecisionTree&>(m).nodes();
            out += "nodes: " + std::to_string(nodes.size()) + "\n";
            append_nodes(out, nodes);
            break;
        }
        case Family::Forest: {
            const auto& trees = static_cast<const RandomForest&>(m).trees();
            out += "trees: " + std::to_string(trees.size()) + "\n";
            for (std::size_t t = 0; t < trees.size(); ++t) {
                out += "tree: " + std::to_string(t) + " " +
                       std::to_string(trees[t].nodes().size()) + "\n";
                append_nodes(out, trees[t].nodes());
            }
            break;
        }
        case Family::Knn: {
            const auto& knn = static_cast<const Knn&>(m);
            out += "rows: " + std::to_string(knn.stored_x().size()) + "\n";
            for (std::size_t i = 0; i < knn.stored_x().size(); ++i) {
                out += "row: " + fmt17(knn.stored_x()[i][0]) + " " +
                       fmt17(knn.stored_x()[i][1]) + " " +
                       std::to_string(knn.stored_y()[i]) + "\n";
            }
            break;
        }
        case Family::Stub:
            break;  // unreachable, rejected above
    }

    char crc_buf[16];
    std::snprintf(crc_buf, sizeof crc_buf, "%08x", crc32(out));
    out += std::string("checksum: ") + crc_buf + "\n";
    return out;
}

std::unique_ptr<Classifier> deserialize_model(const std::string& text) {
    // Verify the checksum before interpreting anything else: it covers every
    // byte up to the start of its own line.
    const std::string marker = "checksum: ";
    std::size_t csum_pos = text.rfind("\n" + marker);
    if (csum_pos != std::string::npos) {
        csum_pos += 1;
    } else if (text.compare(0, marker.size(), marker) == 0) {
        csum_pos = 0;
    } else {
        throw LoadError("model file ends before the checksum section");
    }
    {
        std::size_t end = text.find('\n', csum_pos);
        if (end == std::string::npos) end = text.size();
        const std::string stated = text.substr(csum_pos + marker.size(), end - csum_pos - marker.size());
        if (text.find_first_not_of(" \n", end) != std::string::npos) {
            throw LoadError("unexpected content after the checksum line");
        }
        char want[16];
        std::snprintf(want, sizeof want, "%08x", crc32(std::string_view(text).substr(0, csum_pos)));
        if (stated != want) {
            throw LoadError("checksum mismatch: file says " + stated + ", computed " + want);
        }
    }

    LineReader in(text);
    if (in.expect("header") != "manazel-model v1") {
        throw LoadError("unsupported model header (expected 'manazel-model v1')");
    }

    std::string line = in.expect("family");
    std::string key, rest;
    if (!split_kv(line, key, rest) || key != "family") {
        throw LoadError("expected the family section, got '" + line + "'");
    }
    Family family;
    try {
        family = family_from_name(rest);
    } catch (const InputError&) {
        throw LoadError("unknown model family '" + rest + "'");
    }

    std::uint64_t seed = 42;
    HyperParams hp;
    for (;;) {
        line = in.expect("parameter block");
        if (!split_kv(line, key, rest)) {
            throw LoadError("malformed line '" + line + "'");
        }
        if (key == "seed") {
            seed = std::strtoull(rest.c_str(), nullptr, 10);
        } else if (key.rfind("hp.", 0) == 0) {
            hp[key.substr(3)] = rest;
        } else {
            break;  // first parameter-block line, already split into key/rest
        }
    }

    auto model = make_classifier(family, hp, seed);

    const auto read_linear = [&](const char* first_key) {
        std::array<double, 3> p{};
        const char* names[3] = {first_key, "w.w", "b"};
        for (int i = 0; i < 3; ++i) {
            if (i > 0) {
                line = in.expect("parameter block");
                if (!split_kv(line, key, rest)) {
                    throw LoadError("malformed line '" + line + "'");
                }
            }
            if (key != names[i]) {
                throw LoadError("expected '" + std::string(names[i]) + "', got '" + key + "'");
            }
            p[i] = parse_num(rest, key);
        }
        return p;
    };

    switch (family) {
        case Family::LogReg:
            static_cast<LogisticRegression&>(*model).set_params(read_linear("w.arcv"));
            break;
        case Family::Svm:
            static_cast<LinearSvm&>(*model).set_params(read_linear("w.arcv"));
            break;
        case Family::Tree: {
            if (key != "nodes") throw LoadError("expected the node list, got '" + key + "'");
            const long count = parse_long(rest, "nodes");
            if (count < 1) throw LoadError("a tree needs at least one node");
            static_cast<DecisionTree&>(*model).set_nodes(
                read_nodes(in, static_cast<std::size_t>(count)));
            break;
        }
        case Family::Forest: {
            if (key != "trees") throw LoadError("expected the tree list, got '" + key + "'");
            const long count = parse_long(rest, "trees");
            if (count < 1) throw LoadError("a forest needs at least one tree");
            HyperParams tree_hp;
            if (const auto it = hp.find("max_depth"); it != hp.end()) {
                tree_hp["max_depth"] = it->second;
            }
            if (const auto it = hp.find("min_samples_split"); it != hp.end()) {
                tree_hp["min_samples_split"] = it->second;
            }
            std::vector<DecisionTree> trees;
            trees.reserve(static_cast<std::size_t>(count));
            for (long t = 0; t < count; ++t) {
                line = in.expect("tree list");
                std::istringstream ss(line);
                std::string tag;
                long idx = -1, n_nodes = 0;
                ss >> tag >> idx >> n_nodes;
                if (tag != "tree:" || !ss || idx != t || n_nodes < 1) {
                    throw LoadError("expected tree " + std::to_string(t) + ", got '" +
                                    line + "'");
                }
                DecisionTree tree(tree_hp);
                tree.set_nodes(read_nodes(in, static_cast<std::size_t>(n_nodes)));
                trees.push_back(std::move(tree));
            }
            static_cast<RandomForest&>(*model).set_trees(std::move(trees));
            break;
        }
        case Family::Knn: {
            if (key != "rows") throw LoadError("expected the row list, got '" + key + "'");
            const long count = parse_long(rest, "rows");
            if (count < 1) throw LoadError("a nearest-neighbour model needs stored rows");
            std::vector<std::array<double, 2>> x;
            std::vector<int> y;
            for (long i = 0; i < count; ++i) {
                line = in.expect("row list");
                std::istringstream ss(line);
                std::string tag;
                double a = 0.0, w = 0.0;
                int label = -1;
                ss >> tag >> a >> w >> label;
                if (tag != "row:" || !ss || (label != 0 && label != 1)) {
                    throw LoadError("malformed row '" + line + "'");
                }
                x.push_back({a, w});
                y.push_back(label);
            }
            static_cast<Knn&>(*model).set_stored(std::move(x), std::move(y));
            break;
        }
        case Family::Stub:
            throw LoadError("stub models cannot be loaded");
    }

    // Only the checksum line (already verified) may remain.
    line = in.expect("checksum");
    if (line.rfind(marker, 0) != 0) {
        throw LoadError("unexpected content after the parameter block: '" + line + "'");
    }
    return model;
}

void save_model(const Classifier& m, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open '" + path + "' for writing");
    const std::string text = serialize_model(m);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw InputError("failed writing model file '" + path + "'");
}

std::unique_ptr<Classifier> load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LoadError("cannot open model file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return deserialize_model(ss.str());
}

}  // namespace manazel
