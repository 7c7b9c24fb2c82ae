#include "dompoly/compute.hpp"

#include "dompoly/engines.hpp"
#include "dompoly/oracle.hpp"

namespace dompoly {

namespace {

bool is_complete(const Expr& e) { return e.kind == Expr::Kind::Complete; }

// cart(A,B) with B complete, in either order; returns (other, r).
std::optional<std::pair<const Expr*, long>> cart_with_complete(const Expr& e,
                                                               std::optional<long> n) {
    if (e.kind != Expr::Kind::Cart) return std::nullopt;
    if (is_complete(*e.right)) return {{e.left.get(), e.right->p1.value(n)}};
    if (is_complete(*e.left)) return {{e.right.get(), e.left->p1.value(n)}};
    return std::nullopt;
}

std::optional<std::pair<const Expr*, long>> strong_with_complete_shape(const Expr& e,
                                                                       std::optional<long> n) {
    if (e.kind != Expr::Kind::Strong) return std::nullopt;
    if (is_complete(*e.right)) return {{e.left.get(), e.right->p1.value(n)}};
    if (is_complete(*e.left)) return {{e.right.get(), e.left->p1.value(n)}};
    return std::nullopt;
}

ComputeResult brute_result(const Expr& expr, const ComputeConfig& cfg, std::optional<long> n) {
    BruteConfig bc;
    bc.cap = cfg.cap_brute;
    bc.parallel = cfg.parallel;
    return {domination_polynomial(expr.instantiate(n), bc), "brute"};
}

}  // namespace

Method parse_method(const std::string& name) {
    if (name == "auto") return Method::Auto;
    if (name == "brute") return Method::Brute;
    if (name == "recurrence") return Method::Recurrence;
    if (name == "formula") return Method::Formula;
    if (name == "gk2") return Method::Gk2;
    if (name == "pnkr") return Method::Pnkr;
    if (name == "strong-compose") return Method::StrongCompose;
    throw InvalidParameterError("unknown method '" + name + "'");
}

std::string method_name(Method m) {
    switch (m) {
        case Method::Auto: return "auto";
        case Method::Brute: return "brute";
        case Method::Recurrence: return "recurrence";
        case Method::Formula: return "formula";
        case Method::Gk2: return "gk2";
        case Method::Pnkr: return "pnkr";
        case Method::StrongCompose: return "strong-compose";
    }
    return "?";
}

ComputeResult compute(const Expr& expr, Method method, const ComputeConfig& cfg,
                      std::optional<long> n) {
    switch (method) {
        case Method::Auto: {
            // closed form > family recurrence > gk2 > brute
            if (is_complete(expr)) return {complete_poly(static_cast<int>(expr.p1.value(n))), "formula:complete"};
            if (expr.kind == Expr::Kind::Path)
                return {path_poly(static_cast<int>(expr.p1.value(n))), "recurrence:path"};
            if (expr.kind == Expr::Kind::Cycle)
                return {cycle_poly(static_cast<int>(expr.p1.value(n))), "recurrence:cycle"};
            if (expr.kind == Expr::Kind::Cart && is_complete(*expr.left) &&
                is_complete(*expr.right)) {
                const long r = expr.left->p1.value(n), s = expr.right->p1.value(n);
                if (r >= 1 && s >= 1)
                    return {kr_ks_poly(static_cast<int>(r), static_cast<int>(s)), "formula:krks"};
            }
            if (auto pk = cart_with_complete(expr, n)) {
                auto [other, r] = *pk;
                if (other->kind == Expr::Kind::Path && r >= 1)
                    return {pn_kr_poly(static_cast<int>(other->p1.value(n)), static_cast<int>(r)),
                            "recurrence:pnkr"};
            }
            if (auto sk = strong_with_complete_shape(expr, n)) {
                auto [other, r] = *sk;
                if (r >= 1) {
                    ComputeResult inner = compute(*other, Method::Auto, cfg, n);
                    return {strong_with_complete(inner.poly, static_cast<int>(r)),
                            "compose(" + inner.method_used + ")"};
                }
            }
            if (auto pk = cart_with_complete(expr, n)) {
                auto [other, r] = *pk;
                Graph base = other->instantiate(n);
                if (r == 2 && base.vertex_count() >= 1 && base.vertex_count() <= cfg.cap_gk2)
                    return {gk2_poly(base, cfg.cap_gk2), "gk2"};
            }
            return brute_result(expr, cfg, n);
        }
        case Method::Brute:
            return brute_result(expr, cfg, n);
        case Method::Recurrence: {
            if (expr.kind == Expr::Kind::Path)
                return {path_poly(static_cast<int>(expr.p1.value(n))), "recurrence:path"};
            if (expr.kind == Expr::Kind::Cycle)
                return {cycle_poly(static_cast<int>(expr.p1.value(n))), "recurrence:cycle"};
            if (auto pk = cart_with_complete(expr, n)) {
                auto [other, r] = *pk;
                if (other->kind == Expr::Kind::Path && r == 2)
                    return {ladder_poly(static_cast<int>(other->p1.value(n))),
                            "recurrence:ladder"};
            }
            throw InvalidParameterError(
                "method 'recurrence' needs P:n, C:n or cart(P:n,K:2), got " + expr.to_string());
        }
        case Method::Formula: {
            if (is_complete(expr))
                return {complete_poly(static_cast<int>(expr.p1.value(n))), "formula:complete"};
            if (expr.kind == Expr::Kind::Cart && is_complete(*expr.left) &&
                is_complete(*expr.right))
                return {kr_ks_poly(static_cast<int>(expr.left->p1.value(n)),
                                   static_cast<int>(expr.right->p1.value(n))),
                        "formula:krks"};
            throw InvalidParameterError("method 'formula' needs K:r or cart(K:r,K:s), got " +
                                        expr.to_string());
        }
        case Method::Gk2: {
            if (auto pk = cart_with_complete(expr, n)) {
                auto [other, r] = *pk;
                if (r == 2) return {gk2_poly(other->instantiate(n), cfg.cap_gk2), "gk2"};
            }
            throw InvalidParameterError("method 'gk2' needs cart(E,K:2), got " + expr.to_string());
        }
        case Method::Pnkr: {
            if (auto pk = cart_with_complete(expr, n)) {
                auto [other, r] = *pk;
                if (other->kind == Expr::Kind::Path)
                    return {pn_kr_poly(static_cast<int>(other->p1.value(n)), static_cast<int>(r)),
                            "recurrence:pnkr"};
            }
            throw InvalidParameterError("method 'pnkr' needs cart(P:n,K:r), got " +
                                        expr.to_string());
        }
        case Method::StrongCompose: {
            if (auto sk = strong_with_complete_shape(expr, n)) {
                auto [other, r] = *sk;
                ComputeResult inner = compute(*other, Method::Auto, cfg, n);
                return {strong_with_complete(inner.poly, static_cast<int>(r)),
                        "compose(" + inner.method_used + ")"};
            }
            throw InvalidParameterError("method 'strong-compose' needs strong(E,K:r), got " +
                                        expr.to_string());
        }
    }
    throw InvalidParameterError("unreachable method");
}

std::vector<IntPoly> family_polynomials(const FamilySpec& family, Method method,
                                        const ComputeConfig& cfg) {
    std::vector<IntPoly> out;
    for (long n = family.n_begin; n <= family.n_end; ++n) {
        try {
            out.push_back(compute(family.expr, method, cfg, n).poly);
        } catch (CapacityError& e) {
            throw CapacityError(std::string(e.what()) + " (family member n = " +
                                std::to_string(n) + ")");
        } catch (ParseError&) {
            throw;
        }
    }
    return out;
}

}  // namespace dompoly
