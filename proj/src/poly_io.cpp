#include "macdual/poly_io.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace macdual {

VarTable VarTable::standard(int nvars) {
    static const char* few[] = {"x", "y", "z", "t", "u", "v", "w"};
    VarTable vt;
    if (nvars <= 7) {
        for (int i = 0; i < nvars; ++i) vt.names.emplace_back(few[i]);
    } else {
        for (int i = 0; i < nvars; ++i) vt.names.emplace_back("x" + std::to_string(i + 1));
    }
    return vt;
}

int VarTable::index_of(const std::string& name) const {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name || names[i] == lower) return static_cast<int>(i);
    return -1;
}

namespace {

class Parser {
public:
    Parser(const std::string& text, const VarTable& vars) : s_(text), vars_(vars) {}

    Poly run() {
        Poly p = expression();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return p;
    }

private:
    const std::string& s_;
    const VarTable& vars_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool consume(char c) {
        if (peek_is(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expression() {
        int n = vars_.nvars();
        Poly total(n);
        bool first = true;
        while (true) {
            skip_ws();
            int sign = 1;
            if (consume('+')) {
                sign = 1;
            } else if (consume('-')) {
                sign = -1;
            } else if (!first) {
                break;
            }
            if (first && pos_ >= s_.size()) throw ParseError("empty expression", pos_);
            total = total + term() * Rat(sign);
            first = false;
        }
        if (first) throw ParseError("empty expression", pos_);
        return total;
    }

    Poly term() {
        Poly prod = factor();
        while (true) {
            skip_ws();
            if (consume('*')) {
                prod = prod * factor();
            } else if (pos_ < s_.size() &&
                       (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(')) {
                prod = prod * factor(); // juxtaposition
            } else {
                break;
            }
        }
        return prod;
    }

    Poly factor() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("expected factor", pos_);
        char c = s_[pos_];
        if (c == '(') {
            size_t open = pos_;
            ++pos_;
            Poly inner = expression();
            if (!consume(')')) throw ParseError("missing ')'", open);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational_factor();
        if (std::isalpha(static_cast<unsigned char>(c))) return variable_power();
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    Poly rational_factor() {
        Int num = integer();
        if (consume('/')) {
            skip_ws();
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw ParseError("expected denominator", pos_);
            Int den = integer();
            if (den == 0) throw ParseError("zero denominator", pos_);
            Rat q(num, den);
            q.canonicalize();
            return Poly::constant(vars_.nvars(), q);
        }
        return Poly::constant(vars_.nvars(), Rat(num));
    }

    Int integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer", pos_);
        return Int(s_.substr(start, pos_ - start));
    }

    Poly variable_power() {
        size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                    s_[pos_] == '_'))
            ++pos_;
        std::string name = s_.substr(start, pos_ - start);
        int idx = vars_.index_of(name);
        if (idx < 0) throw ParseError("unknown variable '" + name + "'", start);
        int power = 1;
        if (consume('^')) {
            Int p = integer();
            if (p < 0 || p > 100000) throw ParseError("exponent out of range", pos_);
            power = static_cast<int>(p.get_si());
        }
        return Poly::monomial(Monomial::var(idx, vars_.nvars(), power));
    }
};

} // namespace

Poly parse_poly(const std::string& text, const VarTable& vars) {
    return Parser(text, vars).run();
}

Poly parse_poly_auto(const std::string& text, int min_nvars) {
    // Infer the variable count from the identifiers that appear.
    std::set<std::string> seen;
    for (size_t i = 0; i < text.size();) {
        if (std::isalpha(static_cast<unsigned char>(text[i]))) {
            size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                       text[j] == '_'))
                ++j;
            std::string name = text.substr(i, j - i);
            std::transform(name.begin(), name.end(), name.begin(),
                           [](unsigned char c) { return std::tolower(c); });
            seen.insert(name);
            i = j;
        } else {
            ++i;
        }
    }
    bool numbered = false;
    int needed = min_nvars;
    for (const auto& name : seen) {
        if (name.size() >= 2 && name[0] == 'x' &&
            std::all_of(name.begin() + 1, name.end(),
                        [](unsigned char c) { return std::isdigit(c); })) {
            numbered = true;
            needed = std::max(needed, std::stoi(name.substr(1)));
        }
    }
    if (numbered) {
        VarTable vt;
        for (int i = 0; i < needed; ++i) vt.names.emplace_back("x" + std::to_string(i + 1));
        return parse_poly(text, vt);
    }
    static const std::string few[] = {"x", "y", "z", "t", "u", "v", "w"};
    for (int i = 0; i < 7; ++i)
        if (seen.count(few[i])) needed = std::max(needed, i + 1);
    if (needed == 0) needed = 1;
    return parse_poly(text, VarTable::standard(needed));
}

std::string to_string(const Monomial& m, const VarTable& vars) {
    if (m.is_one()) return "1";
    std::string s;
    for (int i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars.names[i];
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

std::string to_string(const Monomial& m) { return to_string(m, VarTable::standard(m.nvars())); }

std::string to_string(const Poly& p, const VarTable& vars) {
    if (p.is_zero()) return "0";
    std::string s;
    for (auto& [m, c] : p.terms()) {
        Rat a = c;
        if (s.empty()) {
            if (a < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        bool coef_one = (a == 1);
        if (!coef_one || m.is_one()) {
            bool frac = a.get_den() != 1;
            if (frac) s += "(";
            s += a.get_str();
            if (frac) s += ")";
            if (!m.is_one()) s += "*";
        }
        if (!m.is_one()) s += to_string(m, vars);
    }
    return s;
}

std::string to_string(const Poly& p) { return to_string(p, VarTable::standard(p.nvars())); }

} // namespace macdual
