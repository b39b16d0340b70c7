#include "macdual/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace macdual {

Polynomial Polynomial::monomial(int nvars, Side side, const Monomial& m,
                                const Scalar& c) {
    Polynomial p(nvars, side);
    p.add_term(m, c);
    return p;
}

Polynomial Polynomial::one(int nvars, Side side) {
    return monomial(nvars, side, mono_one(nvars));
}

Polynomial Polynomial::variable(int nvars, Side side, int i) {
    return monomial(nvars, side, mono_var(i, nvars));
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return macdual::degree(terms_.rbegin()->first);
}

int Polynomial::order() const {
    if (terms_.empty()) return -1;
    return macdual::degree(terms_.begin()->first);
}

bool Polynomial::is_homogeneous() const {
    return terms_.empty() || degree() == order();
}

Polynomial Polynomial::homogeneous_part(int d) const {
    Polynomial out(nvars_, side_);
    for (const auto& [m, c] : terms_)
        if (macdual::degree(m) == d) out.terms_.emplace(m, c);
    return out;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading monomial");
    return terms_.rbegin()->first;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
    if (static_cast<int>(m.size()) != nvars_)
        throw std::invalid_argument("monomial arity mismatch");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

static void check_compatible(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars() || a.side() != b.side())
        throw std::invalid_argument("polynomial ambient mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_compatible(*this, o);
    Polynomial out(*this);
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_compatible(*this, o);
    Polynomial out(*this);
    for (const auto& [m, c] : o.terms_) out.add_term(m, Scalar(-c));
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(nvars_, side_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, Scalar(-c));
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_compatible(*this, o);
    Polynomial out(nvars_, side_);
    for (const auto& [m, c] : terms_)
        for (const auto& [n, d] : o.terms_) out.add_term(mono_mul(m, n), c * d);
    return out;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    Polynomial out(nvars_, side_);
    if (c == 0) return out;
    for (const auto& [m, co] : terms_) out.terms_.emplace(m, Scalar(co * c));
    return out;
}

Polynomial Polynomial::mono_multiplied(const Monomial& m) const {
    Polynomial out(nvars_, side_);
    for (const auto& [n, c] : terms_) out.terms_.emplace(mono_mul(m, n), c);
    return out;
}

Polynomial Polynomial::truncated(int N) const {
    Polynomial out(nvars_, side_);
    for (const auto& [m, c] : terms_)
        if (macdual::degree(m) <= N) out.terms_.emplace(m, c);
    return out;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && side_ == o.side_ && terms_ == o.terms_;
}

Polynomial Polynomial::with_side(Side s) const {
    Polynomial out(nvars_, s);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c);
    return out;
}

// ------------------------------------------------------------------ parsing

namespace {

struct Tokenizer {
    const std::string& text;
    const std::vector<std::string>& names;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return text[pos];
    }
    // longest variable-name match at the cursor, or -1
    int match_name() {
        skip_ws();
        int best = -1;
        std::size_t best_len = 0;
        for (std::size_t i = 0; i < names.size(); ++i) {
            const auto& n = names[i];
            if (n.size() > best_len && text.compare(pos, n.size(), n) == 0) {
                best = static_cast<int>(i);
                best_len = n.size();
            }
        }
        if (best >= 0) pos += best_len;
        return best;
    }
    std::string match_number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos < text.size() && text[pos] == '/') {
            std::size_t save = pos;
            ++pos;
            std::size_t dstart = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == dstart) pos = save;  // '/' not followed by digits
        }
        return text.substr(start, pos - start);
    }
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text, int nvars, Side side,
                             const std::vector<std::string>& names) {
    if (static_cast<int>(names.size()) != nvars)
        throw std::invalid_argument("name list arity mismatch");
    Tokenizer tk{text, names};
    Polynomial out(nvars, side);
    bool first = true;
    while (!tk.eof()) {
        Scalar sign(1);
        char c = tk.peek();
        if (c == '+') {
            ++tk.pos;
        } else if (c == '-') {
            sign = -1;
            ++tk.pos;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' in polynomial: " + text);
        }
        first = false;
        if (tk.eof()) throw std::invalid_argument("dangling sign in polynomial: " + text);

        Scalar coeff(sign);
        Monomial mono = mono_one(nvars);
        bool any_factor = false;
        while (true) {
            if (tk.eof()) break;
            char p = tk.peek();
            if (p == '+' || p == '-') break;
            if (p == '*') {
                ++tk.pos;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(p))) {
                std::string num = tk.match_number();
                if (num.empty()) throw std::invalid_argument("bad number in: " + text);
                coeff *= scalar_from_string(num);
                any_factor = true;
                continue;
            }
            int vi = tk.match_name();
            if (vi < 0)
                throw std::invalid_argument("unexpected character '" + std::string(1, p) +
                                            "' in polynomial: " + text);
            int expo = 1;
            if (!tk.eof() && tk.peek() == '^') {
                ++tk.pos;
                std::string num = tk.match_number();
                if (num.empty() || num.find('/') != std::string::npos)
                    throw std::invalid_argument("bad exponent in: " + text);
                expo = std::stoi(num);
            }
            mono[vi] += expo;
            any_factor = true;
        }
        if (!any_factor) throw std::invalid_argument("empty term in polynomial: " + text);
        out.add_term(mono, coeff);
    }
    return out;
}

Polynomial Polynomial::parse(const std::string& text, int nvars, Side side) {
    return parse(text, nvars, side, default_names(nvars, side));
}

std::string Polynomial::str(const std::vector<std::string>& names, bool compact) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Render leading (largest) terms first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Scalar a = c > 0 ? c : Scalar(-c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool has_vars = macdual::degree(m) > 0;
        bool printed = false;
        if (a != 1 || !has_vars) {
            os << scalar_to_string(a);
            printed = true;
        }
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (printed && !compact) os << "*";
            os << names[i];
            if (m[i] > 1) os << "^" << m[i];
            printed = true;
        }
    }
    return os.str();
}

std::string Polynomial::str() const {
    return str(default_names(nvars_, side_), false);
}

Polynomial poly_pow(const Polynomial& f, int k) {
    if (k < 0) throw std::invalid_argument("poly_pow: negative exponent");
    Polynomial out = Polynomial::one(f.nvars(), f.side());
    for (int i = 0; i < k; ++i) out = out * f;
    return out;
}

std::vector<std::string> default_names(int nvars, Side side) {
    std::vector<std::string> out;
    const char* stem = side == Side::ring ? "x" : "X";
    for (int i = 1; i <= nvars; ++i) out.push_back(stem + std::to_string(i));
    return out;
}

std::vector<std::string> letter_names(int nvars, Side side) {
    static const char* lower[] = {"x", "y", "z", "w", "v", "u"};
    static const char* upper[] = {"X", "Y", "Z", "W", "V", "U"};
    if (nvars > 6) return default_names(nvars, side);
    std::vector<std::string> out;
    for (int i = 0; i < nvars; ++i)
        out.push_back(side == Side::ring ? lower[i] : upper[i]);
    return out;
}

}  // namespace macdual
