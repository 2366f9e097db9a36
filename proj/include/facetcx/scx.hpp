#pragma once

// Line-oriented text formats.
//
//   # comment
//   name <text>
//   v <label> ...        vertex declarations (isolated vertices)
//   f <label> ...        one generating face per line
//
// Maps use `m <source-label> <target-label>` lines.

#include <facetcx/complex.hpp>
#include <facetcx/maps.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace facetcx {

namespace detail {

    inline auto split_words(std::string_view line) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        std::istringstream in{std::string(line)};
        for (std::string w; in >> w;)
            out.push_back(w);
        return out;
    }

    inline auto strip_cr(std::string line) -> std::string
    {
        if (! line.empty() && line.back() == '\r')
            line.pop_back();
        return line;
    }

} // namespace detail

inline auto parse_scx(std::string_view text) -> Complex
{
    std::istringstream in{std::string(text)};
    std::string line, name;
    std::vector<Face> faces;
    std::set<std::string> declared;
    bool any_declared = false;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        line = detail::strip_cr(line);
        auto t = detail::trim(line);
        if (t.empty() || t.front() == '#')
            continue;
        auto words = detail::split_words(t);
        const auto & key = words.front();
        if (key == "name") {
            auto rest = detail::trim(t.substr(4));
            if (rest.empty())
                throw ParseError(no, "'name' needs a value");
            name = std::string(rest);
        }
        else if (key == "v") {
            any_declared = true;
            declared.insert(words.begin() + 1, words.end());
        }
        else if (key == "f") {
            if (words.size() == 1)
                throw ParseError(no, "facet line lists no vertices");
            faces.emplace_back(words.begin() + 1, words.end());
        }
        else
            throw ParseError(no, "unknown line type '" + key + "'");
    }
    std::optional<std::vector<std::string>> extra;
    if (any_declared) {
        for (const auto & f : faces)
            declared.insert(f.begin(), f.end());
        extra = std::vector<std::string>(declared.begin(), declared.end());
    }
    try {
        return Complex::from_faces(faces, extra, name);
    }
    catch (const ParseError &) {
        throw;
    }
    catch (const Error & e) {
        throw ParseError(no, e.what());
    }
}

inline auto serialize_scx(const Complex & c) -> std::string
{
    std::string out;
    if (! c.name().empty())
        out += "name " + c.name() + "\n";
    if (! c.empty()) {
        out += "v";
        for (const auto & v : c.vertices())
            out += " " + v;
        out += "\n";
    }
    for (auto f : c.facets()) {
        out += "f";
        for (const auto & l : c.labels_of(f))
            out += " " + l;
        out += "\n";
    }
    return out;
}

inline auto parse_map(std::string_view text, const Complex & source, const Complex & target) -> VertexMap
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::map<std::string, std::string> a;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        line = detail::strip_cr(line);
        auto t = detail::trim(line);
        if (t.empty() || t.front() == '#')
            continue;
        auto words = detail::split_words(t);
        if (words.size() != 3 || words[0] != "m")
            throw ParseError(no, "expected 'm <source> <target>'");
        if (! source.index_of(words[1]))
            throw ParseError(no, "'" + words[1] + "' is not a source vertex");
        if (! target.index_of(words[2]))
            throw ParseError(no, "'" + words[2] + "' is not a target vertex");
        if (! a.emplace(words[1], words[2]).second)
            throw ParseError(no, "'" + words[1] + "' is mapped twice");
    }
    for (const auto & v : source.vertices())
        if (! a.count(v))
            throw ParseError(no, "source vertex '" + v + "' is unmapped");
    return make_map(source, target, a);
}

inline auto serialize_map(const VertexMap & m) -> std::string
{
    std::string out;
    for (std::size_t i = 0; i < m.image.size(); ++i)
        out += "m " + m.source.label(i) + " " + m.target.label(m.image[i]) + "\n";
    return out;
}

/// Several complexes in one text, each section opened by `--- <role>`.
struct Bundle {
    std::vector<std::string> header; // lines before the first section
    std::vector<std::pair<std::string, Complex>> parts;

    auto get(const std::string & role) const -> const Complex &
    {
        for (const auto & [r, c] : parts)
            if (r == role)
                return c;
        throw Error("bundle has no complex '" + role + "'");
    }
};

inline auto parse_bundle(std::string_view text) -> Bundle
{
    Bundle b;
    std::istringstream in{std::string(text)};
    std::string line, role, body;
    bool open = false;
    std::size_t no = 0, start = 0;
    auto flush = [&] {
        if (! open)
            return;
        try {
            b.parts.emplace_back(role, parse_scx(body));
        }
        catch (const ParseError & e) {
            throw ParseError(start + e.line(), std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
        }
    };
    while (std::getline(in, line)) {
        ++no;
        line = detail::strip_cr(line);
        if (line.rfind("---", 0) == 0) {
            flush();
            role = std::string(detail::trim(std::string_view(line).substr(3)));
            if (role.empty())
                throw ParseError(no, "section without a role");
            body.clear();
            start = no;
            open = true;
        }
        else if (open)
            body += line + "\n";
        else if (! detail::trim(line).empty())
            b.header.push_back(line);
    }
    flush();
    return b;
}

inline auto serialize_bundle(const Bundle & b) -> std::string
{
    std::string out;
    for (const auto & h : b.header)
        out += h + "\n";
    for (const auto & [role, c] : b.parts)
        out += "--- " + role + "\n" + serialize_scx(c);
    return out;
}

} // namespace facetcx
