#include "mzeta/germ.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "mzeta/errors.hpp"

namespace mzeta {

Germ::Germ(int dim, std::map<Exponents, BigInt> support)
    : dim_(dim), support_(std::move(support)) {
    if (dim_ < 1) throw Error("InvalidGerm", "dimension must be >= 1");
    if (support_.empty()) throw ZeroPolynomialError("germ has empty support");
    for (const auto& [e, c] : support_) {
        if (static_cast<int>(e.size()) != dim_)
            throw Error("InvalidGerm", "exponent vector length != dimension");
        bool all_zero = true;
        for (int v : e) {
            if (v < 0) throw Error("InvalidGerm", "negative exponent");
            if (v != 0) all_zero = false;
        }
        if (all_zero) throw ConstantTermError("germ has a nonzero constant term");
        if (c == 0) throw Error("InvalidGerm", "zero coefficient stored");
    }
}

Germ Germ::embedded(int dim) const {
    if (dim < dim_) throw Error("InvalidGerm", "cannot embed into a smaller dimension");
    if (dim == dim_) return *this;
    std::map<Exponents, BigInt> sup;
    for (const auto& [e, c] : support_) {
        Exponents ext = e;
        ext.resize(static_cast<std::size_t>(dim), 0);
        sup.emplace(std::move(ext), c);
    }
    return Germ(dim, std::move(sup));
}

namespace {

std::string variable_name(int index, int dim) {
    if (dim <= 3) {
        static const char* names[] = {"x", "y", "z"};
        return names[index];
    }
    return "x" + std::to_string(index + 1);
}

} // namespace

std::string Germ::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : support_) {
        BigInt a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        std::string mono;
        for (int i = 0; i < dim_; ++i) {
            int p = e[static_cast<std::size_t>(i)];
            if (p == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += variable_name(i, dim_);
            if (p != 1) mono += "^" + std::to_string(p);
        }
        if (a != 1 || mono.empty()) {
            os << a.str();
            if (!mono.empty()) os << "*";
        }
        os << mono;
        first = false;
    }
    return os.str();
}

namespace {

// A polynomial value during parsing: exponent vectors of flexible length.
using Poly = std::map<std::vector<int>, BigInt>;

Poly poly_const(const BigInt& c) {
    Poly p;
    if (c != 0) p.emplace(std::vector<int>{}, c);
    return p;
}

std::vector<int> add_exps(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

void poly_add_term(Poly& p, const std::vector<int>& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = p.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [e, c] : b) poly_add_term(r, e, c);
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) poly_add_term(r, add_exps(ea, eb), ca * cb);
    return r;
}

Poly poly_neg(const Poly& a) {
    Poly r;
    for (const auto& [e, c] : a) r.emplace(e, -c);
    return r;
}

Poly poly_pow(const Poly& a, long long n) {
    Poly r = poly_const(1);
    for (long long i = 0; i < n; ++i) r = poly_mul(r, a);
    return r;
}

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    Poly run() {
        Poly p = parse_sum();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly parse_sum() {
        skip_ws();
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        Poly acc = parse_product();
        if (neg) acc = poly_neg(acc);
        while (true) {
            if (accept('+')) {
                acc = poly_add(acc, parse_product());
            } else if (accept('-')) {
                acc = poly_add(acc, poly_neg(parse_product()));
            } else {
                break;
            }
        }
        return acc;
    }

    Poly parse_product() {
        Poly acc = parse_factor();
        while (true) {
            skip_ws();
            if (accept('*')) {
                acc = poly_mul(acc, parse_factor());
            } else if (pos_ < s_.size() &&
                       (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(')) {
                acc = poly_mul(acc, parse_factor()); // juxtaposition
            } else {
                break;
            }
        }
        return acc;
    }

    Poly parse_factor() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        Poly base;
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            base = parse_sum();
            if (!accept(')')) fail("expected ')'");
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            base = poly_const(parse_integer());
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            base = parse_variable();
        } else {
            fail("expected a number, variable or '('");
        }
        if (accept('^')) {
            long long e = parse_exponent();
            base = poly_pow(base, e);
        }
        return base;
    }

    BigInt parse_integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return BigInt(s_.substr(start, pos_ - start));
    }

    long long parse_exponent() {
        skip_ws();
        std::size_t start = pos_;
        BigInt v = parse_integer();
        if (v > 4096) throw ParseError(start, "exponent too large");
        return v.convert_to<long long>();
    }

    Poly parse_variable() {
        std::size_t start = pos_;
        char c = s_[pos_++];
        int index;
        if (c == 'x' && pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t num_start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            long long k = std::stoll(s_.substr(num_start, pos_ - num_start));
            if (k < 1 || k > 64) throw ParseError(start, "variable index out of range");
            index = static_cast<int>(k - 1);
        } else if (c == 'x') {
            index = 0;
        } else if (c == 'y') {
            index = 1;
        } else if (c == 'z') {
            index = 2;
        } else {
            throw ParseError(start, "unknown variable '" + std::string(1, c) + "'");
        }
        std::vector<int> e(static_cast<std::size_t>(index) + 1, 0);
        e[static_cast<std::size_t>(index)] = 1;
        Poly p;
        p.emplace(std::move(e), BigInt(1));
        return p;
    }
};

} // namespace

Germ parse_germ(const std::string& text, int min_dim) {
    Parser parser(text);
    Poly p = parser.run();
    if (p.empty()) throw ZeroPolynomialError("expression is the zero polynomial");
    int dim = min_dim;
    for (const auto& [e, c] : p) {
        (void)c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) dim = std::max(dim, static_cast<int>(i) + 1);
    }
    if (dim < 1) dim = 1;
    std::map<Germ::Exponents, BigInt> support;
    for (const auto& [e, c] : p) {
        Germ::Exponents ext = e;
        ext.resize(static_cast<std::size_t>(dim), 0);
        bool all_zero = std::all_of(ext.begin(), ext.end(), [](int v) { return v == 0; });
        if (all_zero) throw ConstantTermError("f(0) must vanish");
        support.emplace(std::move(ext), c);
    }
    return Germ(dim, std::move(support));
}

SupportClass classify(const Germ& g) {
    SupportClass out;
    out.two_var = (g.dim() == 2);

    bool all_pos = true, all_neg = true;
    bool all_even = true;
    bool all_univariate_even = true;
    for (const auto& [e, c] : g.support()) {
        if (c > 0) all_neg = false;
        if (c < 0) all_pos = false;
        int involved = 0;
        for (int v : e) {
            if (v != 0) ++involved;
            if (v % 2 != 0) all_even = false;
        }
        bool even_here = true;
        for (int v : e)
            if (v % 2 != 0) even_here = false;
        if (involved != 1 || !even_here) all_univariate_even = false;
    }
    if (all_pos)
        out.global_sign = 1;
    else if (all_neg)
        out.global_sign = -1;

    bool one_sign = all_pos || all_neg;
    // A single monomial can never cancel, whatever its parity.
    bool single = g.support().size() == 1;
    out.cancellation_free = single || (all_even && one_sign);
    out.diagonal = all_univariate_even && one_sign;
    return out;
}

} // namespace mzeta
