#pragma once

#include "gpoly/zpoly.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace gpoly::testing {

// Reads a polynomial written the way it is typeset: "-z_1^3z_9 + 3z_1^2z_{10}",
// "z_{4,1}z_{3,1}", "(2+y)" is not supported.  Line-break markup (&, \\) is skipped.
inline ZPoly tex_poly(const std::string& text)
{
    std::string s;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '&' || std::isspace(static_cast<unsigned char>(text[i])))
            continue;
        if (text[i] == '\\' && i + 1 < text.size() && text[i + 1] == '\\') {
            ++i;
            continue;
        }
        s += text[i];
    }
    std::size_t i = 0;
    auto number = [&]() {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        if (start == i)
            throw std::runtime_error("tex_poly: expected a number at " + std::to_string(i) + " in " + s);
        return std::stoi(s.substr(start, i - start));
    };
    // A subscript or exponent: one digit, or a braced list.
    auto group = [&](int& a, int& b) {
        b = 0;
        if (i < s.size() && s[i] == '{') {
            ++i;
            a = number();
            if (s[i] == ',') {
                ++i;
                b = number();
            }
            if (s[i] != '}')
                throw std::runtime_error("tex_poly: expected }");
            ++i;
        } else {
            a = s[i++] - '0';
        }
    };
    ZPoly out;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        long c = 1;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            c = number();
        ZMonomial m;
        while (i < s.size() && (s[i] == 'z' || s[i] == 'y')) {
            bool is_y = s[i] == 'y';
            ++i;
            int w = 0, d = 0;
            if (!is_y) {
                if (s[i] != '_')
                    throw std::runtime_error("tex_poly: expected _");
                ++i;
                group(w, d);
            }
            int e = 1, unused = 0;
            if (i < s.size() && s[i] == '^') {
                ++i;
                group(e, unused);
            }
            m = m * (is_y ? ZMonomial::y(e) : ZMonomial::z(w, d, e));
        }
        out.add(m, sign * c);
    }
    return out;
}

inline ZPoly Z(int w, int d = 0) { return ZPoly::z(w, d); }

} // namespace gpoly::testing
