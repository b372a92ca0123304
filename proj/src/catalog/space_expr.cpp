#include "cohomotopy/catalog/space_expr.hpp"

#include "cohomotopy/error.hpp"

#include <algorithm>
#include <cctype>

namespace cohomotopy::catalog {

SpaceExpr SpaceExpr::sphere(int n) {
    if (n < 1) raise(ErrorCode::InvalidArgument, "S(n) needs n >= 1");
    SpaceExpr x;
    x.kind = Kind::Sphere;
    x.n = n;
    return x;
}

SpaceExpr SpaceExpr::moore(int n, const Integer& p, unsigned r) {
    if (n < 2) raise(ErrorCode::InvalidArgument, "M(n; p^r) needs n >= 2");
    if (!algebra::is_prime(p)) raise(ErrorCode::InvalidArgument, "M(n; p^r) needs a prime p, got " + p.str());
    if (r < 1) raise(ErrorCode::InvalidArgument, "M(n; p^r) needs r >= 1");
    SpaceExpr x;
    x.kind = Kind::Moore;
    x.n = n;
    x.p = p;
    x.r = r;
    return x;
}

SpaceExpr SpaceExpr::complex_projective(int n) {
    if (n < 1) raise(ErrorCode::InvalidArgument, "CP(n) needs n >= 1");
    SpaceExpr x;
    x.kind = Kind::ComplexProjective;
    x.n = n;
    return x;
}

SpaceExpr SpaceExpr::quaternionic_projective(int n) {
    if (n < 1) raise(ErrorCode::InvalidArgument, "HP(n) needs n >= 1");
    SpaceExpr x;
    x.kind = Kind::QuaternionicProjective;
    x.n = n;
    return x;
}

SpaceExpr SpaceExpr::wedge(std::vector<SpaceExpr> parts) {
    if (parts.empty()) raise(ErrorCode::InvalidArgument, "wedge needs at least one summand");
    SpaceExpr x;
    x.kind = Kind::Wedge;
    x.n = 0;
    x.parts = std::move(parts);
    return x;
}

SpaceExpr SpaceExpr::suspension(SpaceExpr base, int k) {
    if (k < 1) raise(ErrorCode::InvalidArgument, "susp(X, k) needs k >= 1");
    SpaceExpr x;
    x.kind = Kind::Suspension;
    x.n = k;
    x.parts.push_back(std::move(base));
    return x;
}

std::string SpaceExpr::to_string() const {
    switch (kind) {
    case Kind::Sphere:
        return "S(" + std::to_string(n) + ")";
    case Kind::Moore:
        return "M(" + std::to_string(n) + "; " + p.str() + "^" + std::to_string(r) + ")";
    case Kind::ComplexProjective:
        return "CP(" + std::to_string(n) + ")";
    case Kind::QuaternionicProjective:
        return "HP(" + std::to_string(n) + ")";
    case Kind::Wedge: {
        std::string s = "wedge(";
        for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i].to_string();
        return s + ")";
    }
    case Kind::Suspension:
        return "susp(" + parts[0].to_string() + ", " + std::to_string(n) + ")";
    }
    return {};
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
    }

    SpaceExpr parse() {
        SpaceExpr x = expr();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return x;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        raise(ErrorCode::ParseError, "space expression \"" + s_ + "\": " + what + " at offset " + std::to_string(pos_));
    }

    bool accept(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    std::string word() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string w = s_.substr(start, pos_ - start);
        std::transform(w.begin(), w.end(), w.begin(), [](unsigned char c) { return std::tolower(c); });
        return w;
    }

    Integer number() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        if (pos_ - start > 6) fail("number too large");
        return Integer(s_.substr(start, pos_ - start));
    }

    int small() { return static_cast<int>(number()); }

    SpaceExpr expr() {
        std::string w = word();
        if (w.empty()) fail("expected a space name");
        expect('(');
        SpaceExpr out;
        try {
            if (w == "s" || w == "sphere") {
                out = SpaceExpr::sphere(small());
            } else if (w == "cp") {
                out = SpaceExpr::complex_projective(small());
            } else if (w == "hp") {
                out = SpaceExpr::quaternionic_projective(small());
            } else if (w == "m" || w == "moore") {
                int n = small();
                if (!accept(';')) expect(',');
                Integer p = number();
                unsigned r = 1;
                if (accept('^') || accept(',')) r = static_cast<unsigned>(small());
                out = SpaceExpr::moore(n, p, r);
            } else if (w == "wedge") {
                std::vector<SpaceExpr> parts{expr()};
                while (accept(',')) parts.push_back(expr());
                out = SpaceExpr::wedge(std::move(parts));
            } else if (w == "susp") {
                SpaceExpr base = expr();
                int k = 1;
                if (accept(',')) k = small();
                out = SpaceExpr::suspension(std::move(base), k);
            } else {
                fail("unknown space \"" + w + "\"");
            }
        } catch (const Error& e) {
            if (e.code() == ErrorCode::InvalidArgument) raise(ErrorCode::ParseError, e.message());
            throw;
        }
        expect(')');
        return out;
    }

    std::string s_;
    std::size_t pos_ = 0;
};

} // namespace

SpaceExpr parse_space_expr(const std::string& text) { return Parser(text).parse(); }

int catalog_dimension(const SpaceExpr& x) {
    switch (x.kind) {
    case SpaceExpr::Kind::Sphere:
        return x.n;
    case SpaceExpr::Kind::Moore:
        return x.n + 1;
    case SpaceExpr::Kind::ComplexProjective:
        return 2 * x.n;
    case SpaceExpr::Kind::QuaternionicProjective:
        return 4 * x.n;
    case SpaceExpr::Kind::Wedge: {
        int d = 0;
        for (const auto& part : x.parts) d = std::max(d, catalog_dimension(part));
        return d;
    }
    case SpaceExpr::Kind::Suspension:
        return catalog_dimension(x.parts[0]) + x.n;
    }
    return 0;
}

} // namespace cohomotopy::catalog
