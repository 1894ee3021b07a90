#include "layoutalg/notation.hpp"

#include <charconv>

namespace layoutalg {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NestedTuple tuple() {
        skip();
        if (peek() != '(') return NestedTuple::integer(integer());
        ++pos_;
        skip();
        std::vector<NestedTuple> modes;
        if (peek() == ')') {
            ++pos_;
            return NestedTuple::tuple(modes);
        }
        while (true) {
            modes.push_back(tuple());
            skip();
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            expect(")");
            return NestedTuple::tuple(modes);
        }
    }

    Int integer() {
        skip();
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        if (first == last || *first < '0' || *first > '9') fail("expected an integer");
        Int v = 0;
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec == std::errc::result_out_of_range) {
            throw Error(ErrorKind::Overflow, "integer literal out of 64-bit range");
        }
        pos_ += static_cast<std::size_t>(ptr - first);
        return v;
    }

    PointedMap map_list(char close) {
        PointedMap m;
        skip();
        if (peek() == close) return m;
        while (true) {
            m.push_back(static_cast<MapEntry>(integer()));
            skip();
            if (peek() != ',') return m;
            ++pos_;
        }
    }

    void expect(std::string_view token) {
        skip();
        if (text_.substr(pos_, token.size()) != token) fail("expected '" + std::string(token) + "'");
        pos_ += token.size();
    }

    void finish() {
        skip();
        if (pos_ != text_.size()) fail("unexpected trailing input");
    }

private:
    void skip() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }
    [[nodiscard]] char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::ParseError,
                    what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void append(std::string& out, const IntVec& e, const Profile& p, std::size_t& next) {
    if (p.is_leaf()) {
        out += std::to_string(e[next++]);
        return;
    }
    out += '(';
    for (std::size_t i = 0; i < p.children().size(); ++i) {
        if (i > 0) out += ',';
        append(out, e, p.children()[i], next);
    }
    out += ')';
}

}  // namespace

NestedTuple parse_tuple(std::string_view text) {
    Parser p(text);
    NestedTuple t = p.tuple();
    p.finish();
    return t;
}

Layout parse_layout(std::string_view text) {
    Parser p(text);
    NestedTuple s = p.tuple();
    p.expect(":");
    NestedTuple d = p.tuple();
    p.finish();
    return {std::move(s), std::move(d)};
}

NestMorphism parse_morphism(std::string_view text) {
    Parser p(text);
    NestedTuple dom = p.tuple();
    p.expect("--(");
    PointedMap m = p.map_list(')');
    p.expect(")-->");
    NestedTuple cod = p.tuple();
    p.finish();
    return {std::move(dom), std::move(cod), std::move(m)};
}

PointedMap parse_map(std::string_view text) {
    Parser p(text);
    PointedMap m = p.map_list('\0');
    p.finish();
    return m;
}

std::string to_string(const Profile& p) {
    if (p.is_leaf()) return "*";
    std::string out = "(";
    for (std::size_t i = 0; i < p.children().size(); ++i) {
        if (i > 0) out += ',';
        out += to_string(p.children()[i]);
    }
    return out + ")";
}

std::string to_string(const NestedTuple& t) {
    std::string out;
    std::size_t next = 0;
    append(out, t.entries(), t.profile(), next);
    return out;
}

std::string to_string(const FlatLayout& l) {
    return to_string(NestedTuple::flat(l.shape())) + ":" + to_string(NestedTuple::flat(l.stride()));
}

std::string to_string(const Layout& l) { return to_string(l.shape()) + ":" + to_string(l.stride()); }

std::string to_string(const PointedMap& m) {
    std::string out = "(";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(m[i]);
    }
    return out + ")";
}

std::string to_string(const TupleMorphism& f) {
    return to_string(NestedTuple::flat(f.domain())) + "--" + to_string(f.map()) + "-->" +
           to_string(NestedTuple::flat(f.codomain()));
}

std::string to_string(const NestMorphism& f) {
    return to_string(f.domain()) + "--" + to_string(f.map()) + "-->" + to_string(f.codomain());
}

}  // namespace layoutalg
