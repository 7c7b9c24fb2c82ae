#include "dompoly/expr.hpp"

#include <cctype>

namespace dompoly {

long Param::value(std::optional<long> n) const {
    if (a == 0) return b;
    if (!n) throw InvalidParameterError("expression uses the free variable n but no n was given");
    return a * *n + b;
}

std::string Param::to_string() const {
    if (a == 0) return std::to_string(b);
    std::string s;
    if (a == -1)
        s = "-n";
    else if (a == 1)
        s = "n";
    else
        s = std::to_string(a) + "n";
    if (b > 0) s += "+" + std::to_string(b);
    if (b < 0) s += std::to_string(b);
    return s;
}

bool Expr::has_free_var() const {
    switch (kind) {
        case Kind::Cart:
        case Kind::Strong:
        case Kind::Tensor:
            return left->has_free_var() || right->has_free_var();
        case Kind::File:
            return false;
        case Kind::CompleteBipartite:
            return p1.is_free() || p2.is_free();
        default:
            return p1.is_free();
    }
}

Graph Expr::instantiate(std::optional<long> n) const {
    switch (kind) {
        case Kind::Path:
            return path_graph(static_cast<int>(p1.value(n)));
        case Kind::Cycle:
            return cycle_graph(static_cast<int>(p1.value(n)));
        case Kind::Complete:
            return complete_graph(static_cast<int>(p1.value(n)));
        case Kind::CompleteBipartite:
            return complete_bipartite_graph(static_cast<int>(p1.value(n)),
                                            static_cast<int>(p2.value(n)));
        case Kind::Cart:
            return cartesian_product(left->instantiate(n), right->instantiate(n)).first;
        case Kind::Strong:
            return strong_product(left->instantiate(n), right->instantiate(n)).first;
        case Kind::Tensor:
            return tensor_product(left->instantiate(n), right->instantiate(n)).first;
        case Kind::File:
            return read_edge_list_file(path);
    }
    throw InvalidParameterError("unreachable expression kind");
}

std::string Expr::to_string() const {
    switch (kind) {
        case Kind::Path:
            return "P:" + p1.to_string();
        case Kind::Cycle:
            return "C:" + p1.to_string();
        case Kind::Complete:
            return "K:" + p1.to_string();
        case Kind::CompleteBipartite:
            return "KB:" + p1.to_string() + "," + p2.to_string();
        case Kind::Cart:
            return "cart(" + left->to_string() + "," + right->to_string() + ")";
        case Kind::Strong:
            return "strong(" + left->to_string() + "," + right->to_string() + ")";
        case Kind::Tensor:
            return "tensor(" + left->to_string() + "," + right->to_string() + ")";
        case Kind::File:
            return "file(" + path + ")";
    }
    return "?";
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    Expr parse() {
        Expr e = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a family or product name");
        return s_.substr(start, pos_ - start);
    }

    long integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(s_[start]))))
            fail("expected an integer");
        return std::stol(s_.substr(start, pos_ - start));
    }

    // literal | n | [int] n [(+|-) int]
    Param param() {
        skip_ws();
        Param p;
        bool have_coeff = false;
        long coeff = 1;
        if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) ||
                                 s_[pos_] == '-' || s_[pos_] == '+')) {
            coeff = integer();
            have_coeff = true;
        }
        if (pos_ < s_.size() && s_[pos_] == '*') ++pos_;  // allow 3*n
        if (pos_ < s_.size() && s_[pos_] == 'n') {
            ++pos_;
            p.a = coeff;
            skip_ws();
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) p.b = integer();
        } else {
            if (!have_coeff) fail("expected an integer or n");
            p.b = coeff;
        }
        return p;
    }

    Expr expr() {
        std::string name = ident();
        Expr e{};
        if (name == "P" || name == "C" || name == "K" || name == "KB") {
            expect(':');
            e.p1 = param();
            if (name == "P") e.kind = Expr::Kind::Path;
            if (name == "C") e.kind = Expr::Kind::Cycle;
            if (name == "K") e.kind = Expr::Kind::Complete;
            if (name == "KB") {
                e.kind = Expr::Kind::CompleteBipartite;
                expect(',');
                e.p2 = param();
            }
            return e;
        }
        if (name == "cart" || name == "strong" || name == "tensor") {
            e.kind = name == "cart"     ? Expr::Kind::Cart
                     : name == "strong" ? Expr::Kind::Strong
                                        : Expr::Kind::Tensor;
            expect('(');
            e.left = std::make_shared<Expr>(expr());
            expect(',');
            e.right = std::make_shared<Expr>(expr());
            expect(')');
            return e;
        }
        if (name == "file") {
            e.kind = Expr::Kind::File;
            expect('(');
            std::size_t close = s_.find(')', pos_);
            if (close == std::string::npos) fail("unterminated file(...)");
            e.path = s_.substr(pos_, close - pos_);
            pos_ = close + 1;
            return e;
        }
        fail("unknown name '" + name + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(const std::string& text) { return Parser(text).parse(); }

}  // namespace dompoly
