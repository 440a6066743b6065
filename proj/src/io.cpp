#include "polypair/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <atomic>
#include <unistd.h>

#include "polypair/error.hpp"

namespace polypair {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view token, int line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0)
        throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": bad integer '" + std::string(token) + "'");
    return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

bool has_bracket_content(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line))
        if (line.substr(0, line.find('#')).find('[') != std::string::npos) return true;
    return false;
}

} // namespace

VertexFacetIncidence parse_facet_list(std::string_view text, int default_dim) {
    if (has_bracket_content(text)) {
        // Strip comments and a possible header before handing over.
        std::string body;
        int dim = default_dim;
        std::istringstream in{std::string(text)};
        std::string line;
        while (std::getline(in, line)) {
            auto view = trim(std::string_view(line).substr(0, line.find('#')));
            if (view.rfind("dim=", 0) == 0) {
                dim = parse_int(trim(view.substr(4)), 0);
                continue;
            }
            body += view;
        }
        return parse_bracket_format(body, dim);
    }

    int dim = default_dim;
    bool header_allowed = true;
    std::vector<Facet> facets;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto view = trim(std::string_view(line).substr(0, line.find('#')));
        if (view.empty()) continue;
        if (view.rfind("dim=", 0) == 0 || view.rfind("dim =", 0) == 0) {
            if (!header_allowed) throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": misplaced header");
            dim = parse_int(trim(view.substr(view.find('=') + 1)), line_no);
            header_allowed = false;
            continue;
        }
        auto tokens = split_ws(view);
        if (header_allowed && tokens.size() == 1) {
            dim = parse_int(tokens[0], line_no);
            header_allowed = false;
            continue;
        }
        header_allowed = false;
        Facet f;
        for (auto tok : tokens) f.push_back(parse_int(tok, line_no));
        facets.push_back(std::move(f));
    }
    if (facets.empty()) throw Error(ErrorCode::SyntaxError, "no facets");
    return VertexFacetIncidence(dim, std::move(facets));
}

VertexFacetIncidence parse_bracket_format(std::string_view text, int dim) {
    std::vector<Facet> facets;
    bool open = false;
    Facet current;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '[') {
            if (open) throw Error(ErrorCode::SyntaxError, "nested '['");
            open = true;
            current.clear();
        } else if (c == ']') {
            if (!open) throw Error(ErrorCode::SyntaxError, "unmatched ']'");
            open = false;
            facets.push_back(current);
        } else if (c >= '0' && c <= '9') {
            if (!open) throw Error(ErrorCode::SyntaxError, "label outside brackets");
            current.push_back(c - '0');
        } else {
            throw Error(ErrorCode::SyntaxError, std::string("non-digit label '") + c + "'");
        }
    }
    if (open) throw Error(ErrorCode::SyntaxError, "unbalanced brackets");
    if (facets.empty()) throw Error(ErrorCode::SyntaxError, "no facets");
    return VertexFacetIncidence(dim, std::move(facets));
}

std::vector<VertexFacetIncidence> parse_bracket_lines(std::string_view text, int dim) {
    std::vector<VertexFacetIncidence> out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        out.push_back(parse_bracket_format(line, dim));
    }
    return out;
}

std::string serialize(const VertexFacetIncidence& p, std::string_view comment) {
    std::ostringstream out;
    if (!comment.empty()) {
        std::istringstream lines{std::string(comment)};
        std::string line;
        while (std::getline(lines, line)) out << "# " << line << '\n';
    }
    out << "dim=" << p.dim() << '\n';
    for (const auto& f : p.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
        out << '\n';
    }
    return out.str();
}

std::string serialize_bracket(const VertexFacetIncidence& p) {
    if (p.num_vertices() > 10) throw Error(ErrorCode::ValidationError, "bracket format needs at most 10 vertices");
    std::string out;
    for (const auto& f : p.facets()) {
        out += '[';
        for (auto it = f.rbegin(); it != f.rend(); ++it) out += static_cast<char>('0' + *it);
        out += ']';
    }
    return out;
}

VertexFacetIncidence read_facet_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::SyntaxError, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_facet_list(buf.str());
}

void write_facet_file(const std::string& path, const VertexFacetIncidence& p, std::string_view comment) {
    namespace fs = std::filesystem;
    fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    static std::atomic<unsigned> counter{0};
    tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw Error(ErrorCode::SyntaxError, "cannot write " + tmp.string());
        out << serialize(p, comment);
    }
    fs::rename(tmp, target);
}

} // namespace polypair
