#include "fo/io.hpp"

#include <cctype>
#include <sstream>

#include "fo/errors.hpp"

namespace fo {

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    char take() {
        skip_ws();
        return s[i++];
    }
    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream os;
        os << "parse error at position " << i << ": " << what;
        throw InputError(os.str());
    }
};

std::string read_digits(Cursor& c) {
    c.skip_ws();
    size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == start) c.fail("expected digits");
    return c.s.substr(start, c.i - start);
}

Rational read_coeff(Cursor& c) {
    std::string num = read_digits(c);
    mpz_class n(num);
    if (c.peek() == '/') {
        c.take();
        std::string den = read_digits(c);
        mpz_class d(den);
        if (d == 0) c.fail("zero denominator");
        return Rational(n, d);
    }
    return Rational(n);
}

// var('^'exp)?, var := 'x'digit+
void read_varpow(Cursor& c, int nvars, Monomial& m) {
    if (c.peek() != 'x') c.fail("expected variable");
    c.take();
    if (!std::isdigit(static_cast<unsigned char>(c.peek()))) c.fail("expected variable index");
    std::string idx = read_digits(c);
    long v = 0;
    try {
        v = std::stol(idx);
    } catch (...) {
        c.fail("variable index out of range");
    }
    if (v < 1 || v > nvars) c.fail("variable x" + idx + " out of range (1.." + std::to_string(nvars) + ")");
    uint32_t exp = 1;
    if (c.peek() == '^') {
        c.take();
        std::string es = read_digits(c);
        if (es.size() > 6) c.fail("exponent too large");
        exp = static_cast<uint32_t>(std::stoul(es));
    }
    m.e[static_cast<size_t>(v - 1)] += exp;
}

} // namespace

Poly parse_poly(const std::string& text, int nvars) {
    Cursor c{text};
    Poly result(nvars);
    if (c.eof()) c.fail("empty polynomial");
    bool first = true;
    while (!c.eof()) {
        int sign = 1;
        char p = c.peek();
        if (p == '+' || p == '-') {
            c.take();
            sign = (p == '-') ? -1 : 1;
        } else if (!first) {
            c.fail("expected '+' or '-'");
        }
        // term := coeff ('*' monomial)? | monomial
        Rational coeff(1);
        Monomial mono(nvars);
        char t = c.peek();
        if (std::isdigit(static_cast<unsigned char>(t))) {
            coeff = read_coeff(c);
            if (c.peek() == '*') {
                c.take();
                read_varpow(c, nvars, mono);
                while (c.peek() == '*') {
                    c.take();
                    read_varpow(c, nvars, mono);
                }
            }
        } else if (t == 'x') {
            read_varpow(c, nvars, mono);
            while (c.peek() == '*') {
                c.take();
                read_varpow(c, nvars, mono);
            }
        } else {
            c.fail("expected term");
        }
        if (sign < 0) coeff = -coeff;
        result.add_term(mono, coeff);
        first = false;
    }
    return result;
}

namespace {

void append_monomial(std::ostringstream& os, const Monomial& m,
                     const std::vector<std::string>& names, bool leading_star) {
    bool first = !leading_star;
    for (int i = 0; i < m.nvars(); ++i) {
        uint32_t e = m.e[static_cast<size_t>(i)];
        if (e == 0) continue;
        if (!first) os << '*';
        first = false;
        os << names[static_cast<size_t>(i)];
        if (e > 1) os << '^' << e;
    }
}

} // namespace

std::string poly_to_string(const Poly& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) { os << '-'; a = -a; }
        } else {
            os << (a.sign() < 0 ? '-' : '+');
            if (a.sign() < 0) a = -a;
        }
        bool has_vars = m.degree() > 0;
        if (!has_vars) {
            os << a.str();
        } else if (a == Rational(1)) {
            append_monomial(os, m, names, false);
        } else {
            os << a.str();
            append_monomial(os, m, names, true);
        }
        first = false;
    }
    return os.str();
}

std::string poly_to_string(const Poly& p) {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(p.nvars()));
    for (int i = 1; i <= p.nvars(); ++i) names.push_back("x" + std::to_string(i));
    return poly_to_string(p, names);
}

std::vector<Rational> parse_rational_tuple(const std::string& text) {
    std::vector<Rational> out;
    std::string cur;
    auto flush = [&]() {
        // trim
        size_t a = cur.find_first_not_of(" \t");
        size_t b = cur.find_last_not_of(" \t");
        if (a == std::string::npos) throw InputError("empty coordinate in tuple");
        out.push_back(Rational::from_string(cur.substr(a, b - a + 1)));
        cur.clear();
    };
    for (char ch : text) {
        if (ch == ',') flush();
        else cur += ch;
    }
    flush();
    return out;
}

} // namespace fo
