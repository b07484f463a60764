#include "slh/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace slh {

namespace {

// Line splitter normalizing \r\n and \r endings.
std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

// Splits "KEYWORD : value" / "KEYWORD: value" / "KEYWORD value".
bool split_keyword(const std::string& line, std::string& key, std::string& value) {
    std::string t = trim(line);
    if (t.empty()) return false;
    size_t i = 0;
    while (i < t.size() && (std::isalnum(static_cast<unsigned char>(t[i])) || t[i] == '_')) {
        ++i;
    }
    key = t.substr(0, i);
    std::string rest = trim(t.substr(i));
    if (!rest.empty() && rest[0] == ':') rest = trim(rest.substr(1));
    value = rest;
    return !key.empty();
}

std::string upper(std::string s) {
    for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

bool parse_int(const std::string& tok, long& out) {
    if (tok.empty()) return false;
    size_t i = tok[0] == '-' ? 1 : 0;
    if (i == tok.size()) return false;
    long v = 0;
    for (; i < tok.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
        v = v * 10 + (tok[i] - '0');
        if (v > 100000000L) return false;
    }
    out = tok[0] == '-' ? -v : v;
    return true;
}

}  // namespace

NamedGraph parse_tsplib_hcp(const std::string& text) {
    auto lines = split_lines(text);
    NamedGraph out;
    long dimension = -1;
    bool type_seen = false;
    bool format_ok = false;
    size_t ln = 0;

    for (; ln < lines.size(); ++ln) {
        std::string key, value;
        if (!split_keyword(lines[ln], key, value)) continue;
        std::string k = upper(key);
        if (k == "NAME") {
            out.name = value;
        } else if (k == "COMMENT") {
            out.comment = value;
        } else if (k == "TYPE") {
            if (upper(value) != "HCP") {
                throw ParseError(static_cast<int>(ln + 1), "TYPE must be HCP, got '" + value + "'");
            }
            type_seen = true;
        } else if (k == "DIMENSION") {
            if (!parse_int(value, dimension) || dimension < 1) {
                throw ParseError(static_cast<int>(ln + 1), "bad DIMENSION '" + value + "'");
            }
        } else if (k == "EDGE_DATA_FORMAT") {
            if (upper(value) != "EDGE_LIST") {
                throw ParseError(static_cast<int>(ln + 1),
                                 "only EDGE_DATA_FORMAT EDGE_LIST is supported");
            }
            format_ok = true;
        } else if (k == "EDGE_WEIGHT_TYPE" || k == "EDGE_WEIGHT_FORMAT" ||
                   k == "EDGE_WEIGHT_SECTION") {
            throw ParseError(static_cast<int>(ln + 1), "edge weights are not part of HCP input");
        } else if (k == "EDGE_DATA_SECTION") {
            break;
        } else if (k == "EOF") {
            throw ParseError(static_cast<int>(ln + 1), "EOF before EDGE_DATA_SECTION");
        } else {
            throw ParseError(static_cast<int>(ln + 1), "unknown keyword '" + key + "'");
        }
    }
    if (ln == lines.size()) throw ParseError(static_cast<int>(ln), "missing EDGE_DATA_SECTION");
    if (!type_seen) throw ParseError(static_cast<int>(ln + 1), "missing TYPE: HCP");
    if (dimension < 1) throw ParseError(static_cast<int>(ln + 1), "missing DIMENSION");
    if (!format_ok) {
        throw ParseError(static_cast<int>(ln + 1), "missing EDGE_DATA_FORMAT: EDGE_LIST");
    }

    std::vector<std::pair<int, int>> edges;
    std::vector<long> pending;
    bool terminated = false;
    for (++ln; ln < lines.size() && !terminated; ++ln) {
        std::istringstream iss(lines[ln]);
        std::string tok;
        while (iss >> tok) {
            long v;
            if (!parse_int(tok, v)) {
                throw ParseError(static_cast<int>(ln + 1), "expected integer, got '" + tok + "'");
            }
            if (v == -1) {
                terminated = true;
                break;
            }
            if (v < 1 || v > dimension) {
                throw ParseError(static_cast<int>(ln + 1),
                                 "label " + std::to_string(v) + " out of range 1.." +
                                     std::to_string(dimension));
            }
            pending.push_back(v);
            if (pending.size() == 2) {
                edges.emplace_back(static_cast<int>(pending[0] - 1),
                                   static_cast<int>(pending[1] - 1));
                pending.clear();
            }
        }
    }
    if (!terminated) {
        throw ParseError(static_cast<int>(lines.size()), "edge section not terminated by -1");
    }
    if (!pending.empty()) {
        throw ParseError(static_cast<int>(ln), "odd number of labels in edge section");
    }
    for (; ln < lines.size(); ++ln) {
        std::string key, value;
        if (!split_keyword(lines[ln], key, value)) continue;
        if (upper(key) == "EOF") continue;
        throw ParseError(static_cast<int>(ln + 1), "unexpected content after edge section");
    }
    try {
        out.graph = Graph::build(static_cast<int>(dimension), edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(static_cast<int>(ln), e.what());
    }
    return out;
}

std::string write_tsplib_hcp(const Graph& g, const std::string& name,
                             const std::string& comment) {
    std::string s;
    s += "NAME : " + name + "\n";
    s += "COMMENT : " + (comment.empty() ? std::string("generated by slh") : comment) + "\n";
    s += "TYPE : HCP\n";
    s += "DIMENSION : " + std::to_string(g.vertex_count()) + "\n";
    s += "EDGE_DATA_FORMAT : EDGE_LIST\n";
    s += "EDGE_DATA_SECTION\n";
    for (auto [u, v] : g.edges()) {
        s += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    }
    s += "-1\nEOF\n";
    return s;
}

Graph parse_edge_list(const std::string& text) {
    auto lines = split_lines(text);
    size_t ln = 0;
    auto next_tokens = [&](std::vector<long>& out) -> bool {
        for (; ln < lines.size(); ++ln) {
            std::string t = trim(lines[ln]);
            if (t.empty() || t[0] == '#') continue;
            std::istringstream iss(t);
            std::string tok;
            out.clear();
            while (iss >> tok) {
                long v;
                if (!parse_int(tok, v)) {
                    throw ParseError(static_cast<int>(ln + 1), "expected integer, got '" + tok + "'");
                }
                out.push_back(v);
            }
            ++ln;
            return true;
        }
        return false;
    };
    std::vector<long> toks;
    if (!next_tokens(toks) || toks.size() != 2 || toks[0] < 1 || toks[1] < 0) {
        throw ParseError(static_cast<int>(ln), "expected header line 'n m'");
    }
    long n = toks[0], m = toks[1];
    std::vector<std::pair<int, int>> edges;
    for (long i = 0; i < m; ++i) {
        if (!next_tokens(toks) || toks.size() != 2) {
            throw ParseError(static_cast<int>(ln), "expected edge line 'u v'");
        }
        for (long v : toks) {
            if (v < 1 || v > n) {
                throw ParseError(static_cast<int>(ln), "label " + std::to_string(v) + " out of range");
            }
        }
        edges.emplace_back(static_cast<int>(toks[0] - 1), static_cast<int>(toks[1] - 1));
    }
    if (next_tokens(toks)) throw ParseError(static_cast<int>(ln), "trailing content");
    try {
        return Graph::build(static_cast<int>(n), edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(static_cast<int>(ln), e.what());
    }
}

std::string write_edge_list(const Graph& g) {
    std::string s = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges()) {
        s += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    }
    return s;
}

std::string write_tour(const Cycle& c, const std::string& name) {
    std::string s;
    s += "NAME : " + name + "\n";
    s += "TYPE : TOUR\n";
    s += "DIMENSION : " + std::to_string(c.seq.size()) + "\n";
    s += "TOUR_SECTION\n";
    for (int v : c.seq) s += std::to_string(v + 1) + "\n";
    s += "-1\nEOF\n";
    return s;
}

Cycle read_tour(const std::string& text) {
    auto lines = split_lines(text);
    long dimension = -1;
    size_t ln = 0;
    bool in_section = false;
    for (; ln < lines.size(); ++ln) {
        std::string key, value;
        if (!split_keyword(lines[ln], key, value)) continue;
        std::string k = upper(key);
        if (k == "NAME" || k == "COMMENT") continue;
        if (k == "TYPE") {
            if (upper(value) != "TOUR") {
                throw ParseError(static_cast<int>(ln + 1), "TYPE must be TOUR");
            }
        } else if (k == "DIMENSION") {
            if (!parse_int(value, dimension) || dimension < 1) {
                throw ParseError(static_cast<int>(ln + 1), "bad DIMENSION");
            }
        } else if (k == "TOUR_SECTION") {
            in_section = true;
            break;
        } else {
            throw ParseError(static_cast<int>(ln + 1), "unknown keyword '" + key + "'");
        }
    }
    if (!in_section) throw ParseError(static_cast<int>(ln), "missing TOUR_SECTION");
    Cycle c;
    bool terminated = false;
    for (++ln; ln < lines.size() && !terminated; ++ln) {
        std::istringstream iss(lines[ln]);
        std::string tok;
        while (iss >> tok) {
            long v;
            if (!parse_int(tok, v)) {
                throw ParseError(static_cast<int>(ln + 1), "expected integer, got '" + tok + "'");
            }
            if (v == -1) {
                terminated = true;
                break;
            }
            if (v < 1 || (dimension > 0 && v > dimension)) {
                throw ParseError(static_cast<int>(ln + 1), "label " + std::to_string(v) + " out of range");
            }
            c.seq.push_back(static_cast<int>(v - 1));
        }
    }
    if (!terminated) throw ParseError(static_cast<int>(lines.size()), "tour not terminated by -1");
    if (dimension > 0 && static_cast<long>(c.seq.size()) != dimension) {
        throw ParseError(static_cast<int>(ln), "tour length disagrees with DIMENSION");
    }
    return c;
}

}  // namespace slh
