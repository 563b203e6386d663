#pragma once

#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "openbook/braid.hpp"
#include "openbook/openbook.hpp"

namespace openbook {

// Line-oriented open book files.
//
//   # comment                      (also allowed after content)
//   surface g=<int> b=<int>        first content line, mandatory
//   word <tok> ...                 monodromy as a twist word; tok is a curve
//                                  name with an optional ^<int> exponent;
//                                  several word lines concatenate
//   label <text>                   optional free-form label
//
// Alternatively the monodromy may be given explicitly (the form `transform`
// emits, since its results are generally not twist words):
//
//   map <gen> = <tok> ...          image of a generator under the monodromy
//   imap <gen> = <tok> ...         image under the inverse
//   defect <c> = <tok> ...         boundary defect of component c (2..b)
//   idefect <c> = <tok> ...        defect of the inverse
//
// where <tok> is a generator name with an optional ^<int> exponent and the
// bare token 1 denotes the empty word.  All maps and imaps must be present;
// omitted defects are empty.  Explicit data is validated on parse.  The two
// forms cannot be mixed.

namespace detail {

struct Tok {
    std::string text;
    int col = 0;  // 1-based
};

inline std::vector<Tok> split_tokens(const std::string& line) {
    std::vector<Tok> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

// Splits "name^k" into (name, k); a bare name has k = 1.
inline std::pair<std::string, long> split_power(const Tok& t, int line_no) {
    std::size_t caret = t.text.find('^');
    if (caret == std::string::npos) return {t.text, 1};
    std::string base = t.text.substr(0, caret);
    std::string exp = t.text.substr(caret + 1);
    if (base.empty() || exp.empty())
        throw ParseError("malformed token '" + t.text + "'", line_no, t.col);
    char* end = nullptr;
    long k = std::strtol(exp.c_str(), &end, 10);
    if (end == nullptr || *end != '\0' || k == 0)
        throw ParseError("malformed exponent in '" + t.text + "'", line_no, t.col);
    return {base, k};
}

inline long parse_int_field(const Tok& t, const std::string& key, int line_no) {
    const std::string prefix = key + "=";
    if (t.text.rfind(prefix, 0) != 0)
        throw ParseError("expected " + key + "=<int>, got '" + t.text + "'", line_no, t.col);
    std::string v = t.text.substr(prefix.size());
    char* end = nullptr;
    long n = std::strtol(v.c_str(), &end, 10);
    if (v.empty() || end == nullptr || *end != '\0')
        throw ParseError("expected " + key + "=<int>, got '" + t.text + "'", line_no, t.col);
    return n;
}

}  // namespace detail

inline OpenBook parse_open_book(const std::string& text,
                                std::size_t budget = kDefaultWordBudget) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;

    bool have_surface = false;
    Surface surface(0, 1);  // replaced once the surface line is read
    std::vector<std::pair<std::string, int>> twists;
    bool have_word_line = false;
    std::string label;
    bool have_label = false;

    std::map<std::string, int> gen_index;  // name -> 1-based letter
    std::vector<Word> fwd, inv;
    std::vector<bool> have_fwd, have_inv;
    std::vector<Word> fdef, idef;
    bool have_explicit = false;

    auto parse_gen_word = [&](const std::vector<detail::Tok>& toks, std::size_t from) {
        Word w;
        for (std::size_t i = from; i < toks.size(); ++i) {
            if (toks[i].text == "1" && i == from && toks.size() == from + 1) return w;
            auto [name, k] = detail::split_power(toks[i], line_no);
            auto it = gen_index.find(name);
            if (it == gen_index.end())
                throw ParseError("unknown generator '" + name + "'", line_no, toks[i].col);
            for (long r = 0; r < std::labs(k); ++r)
                w.append(k > 0 ? Word::generator(it->second)
                               : Word::generator(it->second).inverse());
        }
        return w;
    };

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (std::size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::vector<detail::Tok> toks = detail::split_tokens(line);
        if (toks.empty()) continue;
        const detail::Tok& head = toks[0];

        if (!have_surface) {
            if (head.text != "surface")
                throw ParseError("expected a surface line first", line_no, head.col);
            if (toks.size() != 3)
                throw ParseError("surface line needs g=<int> and b=<int>", line_no, head.col);
            long g = detail::parse_int_field(toks[1], "g", line_no);
            long b = detail::parse_int_field(toks[2], "b", line_no);
            if (g < 0 || b < 1 || g > 1000 || b > 1000)
                throw ParseError("surface parameters out of range", line_no, toks[1].col);
            surface = Surface(static_cast<int>(g), static_cast<int>(b));
            const auto& names = surface.generator_names();
            for (std::size_t i = 0; i < names.size(); ++i)
                gen_index[names[i]] = static_cast<int>(i) + 1;
            fwd.assign(names.size(), Word());
            inv.assign(names.size(), Word());
            have_fwd.assign(names.size(), false);
            have_inv.assign(names.size(), false);
            fdef.assign(static_cast<std::size_t>(std::max(0, surface.boundary_components() - 1)),
                        Word());
            idef = fdef;
            have_surface = true;
            continue;
        }

        if (head.text == "surface") {
            throw ParseError("duplicate surface line", line_no, head.col);
        } else if (head.text == "word") {
            have_word_line = true;
            for (std::size_t i = 1; i < toks.size(); ++i) {
                if (toks[i].text == "1" && toks.size() == 2) break;
                auto [name, k] = detail::split_power(toks[i], line_no);
                if (!surface.has_curve(name))
                    throw ParseError("unknown curve '" + name + "'", line_no, toks[i].col);
                for (long r = 0; r < std::labs(k); ++r) twists.emplace_back(name, k > 0 ? 1 : -1);
            }
        } else if (head.text == "map" || head.text == "imap") {
            have_explicit = true;
            if (toks.size() < 3 || toks[2].text != "=")
                throw ParseError("expected '" + head.text + " <gen> = <word>'", line_no, head.col);
            auto it = gen_index.find(toks[1].text);
            if (it == gen_index.end())
                throw ParseError("unknown generator '" + toks[1].text + "'", line_no, toks[1].col);
            std::size_t idx = static_cast<std::size_t>(it->second - 1);
            Word w = parse_gen_word(toks, 3);
            if (head.text == "map") {
                if (have_fwd[idx])
                    throw ParseError("duplicate map for '" + toks[1].text + "'", line_no, head.col);
                fwd[idx] = w;
                have_fwd[idx] = true;
            } else {
                if (have_inv[idx])
                    throw ParseError("duplicate imap for '" + toks[1].text + "'", line_no,
                                     head.col);
                inv[idx] = w;
                have_inv[idx] = true;
            }
        } else if (head.text == "defect" || head.text == "idefect") {
            have_explicit = true;
            if (toks.size() < 3 || toks[2].text != "=")
                throw ParseError("expected '" + head.text + " <component> = <word>'", line_no,
                                 head.col);
            char* end = nullptr;
            long c = std::strtol(toks[1].text.c_str(), &end, 10);
            if (end == nullptr || *end != '\0' || c < 2 || c > surface.boundary_components())
                throw ParseError("boundary component out of range in '" + toks[1].text + "'",
                                 line_no, toks[1].col);
            Word w = parse_gen_word(toks, 3);
            (head.text == "defect" ? fdef : idef)[static_cast<std::size_t>(c - 2)] = w;
        } else if (head.text == "label") {
            if (have_label) throw ParseError("duplicate label line", line_no, head.col);
            std::size_t start = static_cast<std::size_t>(head.col - 1) + 5;
            while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start])))
                ++start;
            label = line.substr(std::min(start, line.size()));
            while (!label.empty() && std::isspace(static_cast<unsigned char>(label.back())))
                label.pop_back();
            have_label = true;
        } else {
            throw ParseError("unknown directive '" + head.text + "'", line_no, head.col);
        }
    }

    if (!have_surface) throw ParseError("missing surface line", std::max(line_no, 1), 1);
    if (have_explicit && have_word_line)
        throw ParseError("cannot mix a word line with explicit monodromy lines", line_no, 1);

    MappingClass m = MappingClass::identity(surface);
    if (have_explicit) {
        const auto& names = surface.generator_names();
        for (std::size_t i = 0; i < names.size(); ++i)
            if (!have_fwd[i] || !have_inv[i])
                throw ParseError("missing map/imap for generator '" + names[i] + "'", line_no, 1);
        m = MappingClass::from_data(surface, fwd, inv, fdef, idef, budget);
    } else {
        m = twist_word(surface, twists, budget);
    }
    return OpenBook(surface, m, label);
}

// Emits the explicit form; parsing it back reproduces the mapping class
// exactly.
inline std::string emit_open_book(const OpenBook& ob) {
    const Surface& s = ob.page;
    std::ostringstream out;
    out << "surface g=" << s.genus() << " b=" << s.boundary_components() << "\n";
    const auto& names = s.generator_names();
    for (std::size_t i = 0; i < names.size(); ++i)
        out << "map " << names[i] << " = " << s.word_str(ob.monodromy.images()[i]) << "\n";
    for (std::size_t i = 0; i < names.size(); ++i)
        out << "imap " << names[i] << " = " << s.word_str(ob.monodromy.inverse_images()[i])
            << "\n";
    for (int c = 2; c <= s.boundary_components(); ++c) {
        const Word& u = ob.monodromy.defect(c);
        if (!u.empty()) out << "defect " << c << " = " << s.word_str(u) << "\n";
        const Word& ui = ob.monodromy.inverse_defects()[static_cast<std::size_t>(c - 2)];
        if (!ui.empty()) out << "idefect " << c << " = " << s.word_str(ui) << "\n";
    }
    if (!ob.label.empty()) out << "label " << ob.label << "\n";
    return out.str();
}

// Twist-word file, used when the monodromy is known as a twist word (the
// braid lift emits these).
inline std::string emit_twist_file(const Surface& s,
                                   const std::vector<std::pair<std::string, int>>& twists,
                                   const std::string& label) {
    std::ostringstream out;
    out << "surface g=" << s.genus() << " b=" << s.boundary_components() << "\n";
    out << "word";
    for (const auto& [name, sign] : twists) out << ' ' << name << (sign < 0 ? "^-1" : "");
    out << "\n";
    if (!label.empty()) out << "label " << label << "\n";
    return out.str();
}

// Braid words: tokens s<i> with an optional ^<int> exponent.
inline BraidWord parse_braid(int strands, const std::string& text) {
    if (strands < 2) throw ParseError("a braid needs at least 2 strands", 1, 1);
    std::vector<detail::Tok> toks = detail::split_tokens(text);
    std::vector<int> letters;
    for (const auto& t : toks) {
        if (t.text == "1" && toks.size() == 1) break;
        auto [name, k] = detail::split_power(t, 1);
        if (name.size() < 2 || name[0] != 's')
            throw ParseError("bad braid token '" + t.text + "'", 1, t.col);
        char* end = nullptr;
        long i = std::strtol(name.c_str() + 1, &end, 10);
        if (end == nullptr || *end != '\0' || i < 1)
            throw ParseError("bad braid token '" + t.text + "'", 1, t.col);
        if (i >= strands)
            throw ParseError("generator s" + std::to_string(i) + " needs at least " +
                                 std::to_string(i + 1) + " strands",
                             1, t.col);
        for (long r = 0; r < std::labs(k); ++r)
            letters.push_back(k > 0 ? static_cast<int>(i) : -static_cast<int>(i));
    }
    return BraidWord(strands, letters);
}

}  // namespace openbook
