#include "cmf/ideal_doc.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cmf {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isspace(c); });
}

struct Tokenizer {
    const std::string& text;
    int line;
    std::size_t pos = 0;

    int column() const { return static_cast<int>(pos) + 1; }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    long long integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos) throw ParseError(line, column(), "expected an integer");
        return std::stoll(text.substr(start, pos - start));
    }
    std::string identifier() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                text[pos] == '_'))
            ++pos;
        if (start == pos ||
            std::isdigit(static_cast<unsigned char>(text[start])))
            throw ParseError(line, column(), "expected an identifier");
        return text.substr(start, pos - start);
    }
};

}  // namespace

Polynomial parse_polynomial(const PolyRing& R, const std::string& text,
                            int line) {
    Tokenizer tk{text, line};
    std::vector<Term> terms;

    auto var_index = [&](const std::string& name) -> std::size_t {
        for (std::size_t i = 0; i < R.n; ++i)
            if (R.names[i] == name) return i;
        throw UnknownVariable(name);
    };

    auto parse_term = [&](bool negative) {
        Fp coeff = R.field.one();
        std::vector<int> exps(R.n, 0);
        bool saw_factor = false;
        for (;;) {
            char c = tk.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff = R.field.mul(coeff, R.field.from_int(tk.integer()));
                saw_factor = true;
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t i = var_index(tk.identifier());
                int e = 1;
                if (tk.accept('^')) e = static_cast<int>(tk.integer());
                if (e < 0) throw ParseError(line, tk.column(), "negative exponent");
                exps[i] += e;
                saw_factor = true;
            } else {
                break;
            }
            if (!tk.accept('*')) {
                // Juxtaposition is allowed; stop at +, -, or end.
                char nxt = tk.peek();
                if (nxt == '+' || nxt == '-' || nxt == '\0') break;
                if (!std::isalnum(static_cast<unsigned char>(nxt)) && nxt != '_')
                    throw ParseError(line, tk.column(), "unexpected character");
            }
        }
        if (!saw_factor)
            throw ParseError(line, tk.column(), "expected a term");
        if (negative) coeff = R.field.neg(coeff);
        terms.push_back(Term{Monomial(std::move(exps)), coeff});
    };

    bool negative = tk.accept('-');
    if (tk.done()) throw ParseError(line, tk.column(), "empty polynomial");
    parse_term(negative);
    while (!tk.done()) {
        if (tk.accept('+')) {
            parse_term(false);
        } else if (tk.accept('-')) {
            parse_term(true);
        } else {
            throw ParseError(line, tk.column(), "expected '+' or '-'");
        }
    }
    return Polynomial::from_terms(R, std::move(terms));
}

IdealDocument parse_document(const std::string& text) {
    IdealDocument doc;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    enum class State { Header, Separator, Generators } state = State::Header;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string lstr = strip_comment(raw);
        if (blank(lstr)) continue;
        if (state == State::Header) {
            Tokenizer tk{lstr, lineno};
            std::string kw = tk.identifier();
            if (kw != "ring")
                throw ParseError(lineno, 1, "expected 'ring F<p> [vars]'");
            std::string fp = tk.identifier();
            if (fp.size() < 2 || fp[0] != 'F')
                throw ParseError(lineno, tk.column(), "expected field tag F<p>");
            try {
                doc.p = static_cast<std::uint32_t>(std::stoul(fp.substr(1)));
            } catch (...) {
                throw ParseError(lineno, tk.column(), "bad field modulus");
            }
            if (!tk.accept('['))
                throw ParseError(lineno, tk.column(), "expected '['");
            for (;;) {
                doc.vars.push_back(tk.identifier());
                if (tk.accept(']')) break;
                if (!tk.accept(','))
                    throw ParseError(lineno, tk.column(), "expected ',' or ']'");
            }
            for (std::size_t i = 0; i < doc.vars.size(); ++i)
                for (std::size_t j = i + 1; j < doc.vars.size(); ++j)
                    if (doc.vars[i] == doc.vars[j])
                        throw ParseError(lineno, 1,
                                         "duplicate variable " + doc.vars[i]);
            state = State::Separator;
        } else if (state == State::Separator) {
            Tokenizer tk{lstr, lineno};
            if (tk.identifier() != "ideal" || !tk.done())
                throw ParseError(lineno, 1, "expected the 'ideal' separator");
            state = State::Generators;
        } else {
            doc.generator_texts.push_back(lstr);
        }
    }
    if (state == State::Header)
        throw ParseError(lineno, 1, "missing 'ring' header");
    if (state == State::Separator)
        throw ParseError(lineno, 1, "missing 'ideal' separator");
    return doc;
}

Ideal document_to_ideal(const IdealDocument& doc) {
    PolyRing R(doc.vars.size(), doc.p, doc.vars);
    std::vector<Polynomial> gens;
    int lineno = 0;
    for (const auto& text : doc.generator_texts) {
        ++lineno;
        Polynomial f = parse_polynomial(R, text, lineno);
        if (!f.is_homogeneous())
            throw NonHomogeneousGenerator("generator '" + text +
                                          "' is not homogeneous");
        gens.push_back(std::move(f));
    }
    return Ideal(std::move(R), std::move(gens));
}

std::string print_document(const PolyRing& R,
                           const std::vector<Polynomial>& gens) {
    std::ostringstream os;
    os << "ring F" << R.field.modulus() << " [";
    for (std::size_t i = 0; i < R.n; ++i) {
        if (i) os << ", ";
        os << R.names[i];
    }
    os << "]\nideal\n";
    for (const auto& g : gens) os << to_string(R, g) << "\n";
    return os.str();
}

std::string print_document(const Ideal& I) {
    return print_document(I.ring(), I.gens());
}

}  // namespace cmf
