#include "c2framed/expr.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>
#include <vector>

#include "c2framed/errors.hpp"

namespace c2framed {

namespace {

constexpr std::int64_t kMaxCount = 1'000'000;

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool at_end() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
    }

    bool consume(char c) {
        if (!at_end() && peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

std::int64_t parse_int(Cursor& cur, bool allow_sign, const char* what) {
    const std::size_t start = cur.pos;
    std::size_t p = cur.pos;
    if (allow_sign && p < cur.text.size() && (cur.text[p] == '+' || cur.text[p] == '-')) ++p;
    const std::size_t digits_begin = p;
    while (p < cur.text.size() && is_digit(cur.text[p])) ++p;
    if (p == digits_begin) throw ParseError(start, what);

    // std::from_chars understands '-' but not a leading '+'.
    const std::size_t value_begin = (cur.text[start] == '+') ? start + 1 : start;
    std::int64_t value = 0;
    const auto result =
        std::from_chars(cur.text.data() + value_begin, cur.text.data() + p, value);
    if (result.ec == std::errc::result_out_of_range) {
        throw ParseError(start, std::string(what) + " within the signed 64-bit range");
    }
    cur.pos = p;
    return value;
}

ComponentKind parse_generator(Cursor& cur) {
    const std::size_t start = cur.pos;
    std::size_t p = cur.pos;
    while (p < cur.text.size() && is_word_char(cur.text[p])) ++p;
    const auto word = cur.text.substr(start, p - start);
    const auto kind = kind_from_name(word);
    if (!kind) throw ParseError(start, "generator name (S1, C2xS1, S2s or S1s)");
    cur.pos = p;
    return *kind;
}

void parse_term(Cursor& cur, FramingGrade grade, std::vector<FramedComponent>& out) {
    cur.skip_ws();
    if (cur.at_end()) throw ParseError(cur.pos, "generator or count");

    std::int64_t count = 1;
    if (is_digit(cur.peek())) {
        const std::size_t count_start = cur.pos;
        count = parse_int(cur, /*allow_sign=*/false, "count");
        if (count < 1 || count > kMaxCount) {
            throw ParseError(count_start, "count between 1 and " + std::to_string(kMaxCount));
        }
        cur.skip_ws();
        if (!cur.consume('*')) throw ParseError(cur.pos, "'*' after count");
        cur.skip_ws();
    }

    const ComponentKind kind = parse_generator(cur);
    cur.skip_ws();
    if (!cur.consume('[')) throw ParseError(cur.pos, "'[' after generator name");
    cur.skip_ws();
    const std::int64_t twist = parse_int(cur, /*allow_sign=*/true, "signed twist integer");
    cur.skip_ws();
    if (!cur.consume(']')) throw ParseError(cur.pos, "']' after twist");

    const FramedComponent component = make_component(kind, twist, grade);
    out.insert(out.end(), static_cast<std::size_t>(count), component);
}

}  // namespace

FramedManifold parse_manifold(std::string_view text, FramingGrade grade) {
    Cursor cur{text};
    cur.skip_ws();
    if (cur.at_end()) return FramedManifold(grade);

    std::vector<FramedComponent> components;
    for (;;) {
        parse_term(cur, grade, components);
        cur.skip_ws();
        if (cur.at_end()) break;
        if (!cur.consume('+')) throw ParseError(cur.pos, "'+' or end of input");
    }
    return {grade, std::move(components)};
}

std::string format_manifold(const FramedManifold& m) {
    const FramedManifold canonical = normalize(m);
    const auto comps = canonical.components();
    std::string out;
    for (std::size_t i = 0; i < comps.size();) {
        std::size_t j = i;
        while (j < comps.size() && comps[j] == comps[i]) ++j;
        if (!out.empty()) out += " + ";
        if (j - i > 1) {
            out += std::to_string(j - i);
            out += '*';
        }
        out += kind_name(comps[i].kind);
        out += '[';
        out += std::to_string(comps[i].twist);
        out += ']';
        i = j;
    }
    return out;
}

}  // namespace c2framed
