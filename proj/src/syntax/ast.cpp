#include "faasforge/syntax/ast.hpp"

namespace faasforge::syntax {

namespace {

template <class... Ts> struct Overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<ExprPtr> clone_all(const std::vector<ExprPtr>& items) {
    std::vector<ExprPtr> out;
    out.reserve(items.size());
    for (const ExprPtr& e : items)
        out.push_back(clone(*e));
    return out;
}

} // namespace

ExprPtr make_expr(ExprNode node, SourceSpan span) {
    auto e = std::make_unique<Expr>();
    e->span = span;
    e->node = std::move(node);
    return e;
}

StmtPtr make_stmt(StmtNode node, SourceSpan span) {
    auto s = std::make_unique<Stmt>();
    s->span = span;
    s->node = std::move(node);
    return s;
}

ExprPtr clone(const Expr& e) {
    ExprNode node = std::visit(
        Overloaded{
            [](const IntLit& n) -> ExprNode { return IntLit{n.value}; },
            [](const FloatLit& n) -> ExprNode { return n; },
            [](const StrLit& n) -> ExprNode { return n; },
            [](const BoolLit& n) -> ExprNode { return n; },
            [](const NoneLit& n) -> ExprNode { return n; },
            [](const ListLit& n) -> ExprNode { return ListLit{clone_all(n.items)}; },
            [](const TupleLit& n) -> ExprNode { return TupleLit{clone_all(n.items)}; },
            [](const MapLit& n) -> ExprNode {
                MapLit out;
                for (const MapEntry& entry : n.entries)
                    out.entries.push_back(MapEntry{entry.key, clone(*entry.value)});
                return out;
            },
            [](const Name& n) -> ExprNode { return n; },
            [](const Attribute& n) -> ExprNode {
                return Attribute{clone(*n.object), n.attr};
            },
            [](const Subscript& n) -> ExprNode {
                return Subscript{clone(*n.object), clone(*n.index)};
            },
            [](const Call& n) -> ExprNode {
                return Call{clone(*n.callee), clone_all(n.args)};
            },
            [](const BinOp& n) -> ExprNode {
                return BinOp{clone(*n.lhs), n.op, clone(*n.rhs)};
            },
            [](const UnaryOp& n) -> ExprNode {
                return UnaryOp{n.op, clone(*n.operand)};
            },
            [](const Compare& n) -> ExprNode {
                Compare out;
                out.first = clone(*n.first);
                for (const CompareStep& step : n.rest)
                    out.rest.push_back(CompareStep{step.op, clone(*step.operand)});
                return out;
            },
            [](const BoolOp& n) -> ExprNode {
                return BoolOp{n.op, clone_all(n.operands)};
            },
            [](const UnsupportedExpr& n) -> ExprNode { return n; },
        },
        e.node);
    return make_expr(std::move(node), e.span);
}

std::vector<StmtPtr> clone(const std::vector<StmtPtr>& body) {
    std::vector<StmtPtr> out;
    out.reserve(body.size());
    for (const StmtPtr& s : body)
        out.push_back(clone(*s));
    return out;
}

FunctionDef clone(const FunctionDef& fn) {
    return FunctionDef{fn.name, fn.params, clone(fn.body)};
}

StmtPtr clone(const Stmt& s) {
    StmtNode node = std::visit(
        Overloaded{
            [](const Import& n) -> StmtNode { return n; },
            [](const FunctionDef& n) -> StmtNode { return clone(n); },
            [](const ClassDef& n) -> StmtNode {
                return ClassDef{n.name, clone(n.methods)};
            },
            [](const Assign& n) -> StmtNode {
                return Assign{clone(*n.target), clone(*n.value)};
            },
            [](const AugAssign& n) -> StmtNode {
                return AugAssign{clone(*n.target), n.op, clone(*n.value)};
            },
            [](const Return& n) -> StmtNode {
                return Return{n.value ? clone(*n.value) : nullptr};
            },
            [](const If& n) -> StmtNode {
                If out;
                for (const IfBranch& br : n.branches)
                    out.branches.push_back(IfBranch{clone(*br.condition), clone(br.body)});
                out.orelse = clone(n.orelse);
                return out;
            },
            [](const While& n) -> StmtNode {
                return While{clone(*n.condition), clone(n.body)};
            },
            [](const ForRange& n) -> StmtNode {
                ForRange out;
                out.var = n.var;
                for (const ExprPtr& b : n.bounds)
                    out.bounds.push_back(clone(*b));
                out.body = clone(n.body);
                return out;
            },
            [](const GlobalDecl& n) -> StmtNode { return n; },
            [](const ExprStmt& n) -> StmtNode { return ExprStmt{clone(*n.expr)}; },
            [](const MainGuard& n) -> StmtNode { return MainGuard{clone(n.body)}; },
            [](const Pass& n) -> StmtNode { return n; },
            [](const UnsupportedStmt& n) -> StmtNode { return n; },
        },
        s.node);
    return make_stmt(std::move(node), s.span);
}

SyntaxTree clone(const SyntaxTree& tree) {
    SyntaxTree out;
    out.root.body = clone(tree.root.body);
    return out;
}

namespace {

bool equal_all(const std::vector<ExprPtr>& a, const std::vector<ExprPtr>& b) {
    if (a.size() != b.size())
        return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!equal(*a[i], *b[i]))
            return false;
    return true;
}

bool equal_body(const std::vector<StmtPtr>& a, const std::vector<StmtPtr>& b) {
    if (a.size() != b.size())
        return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!equal(*a[i], *b[i]))
            return false;
    return true;
}

} // namespace

bool equal(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index())
        return false;
    return std::visit(
        Overloaded{
            [&](const IntLit& n) { return n.value == std::get<IntLit>(b.node).value; },
            [&](const FloatLit& n) { return n.value == std::get<FloatLit>(b.node).value; },
            [&](const StrLit& n) { return n.value == std::get<StrLit>(b.node).value; },
            [&](const BoolLit& n) { return n.value == std::get<BoolLit>(b.node).value; },
            [&](const NoneLit&) { return true; },
            [&](const ListLit& n) {
                return equal_all(n.items, std::get<ListLit>(b.node).items);
            },
            [&](const TupleLit& n) {
                return equal_all(n.items, std::get<TupleLit>(b.node).items);
            },
            [&](const MapLit& n) {
                const auto& other = std::get<MapLit>(b.node);
                if (n.entries.size() != other.entries.size())
                    return false;
                for (size_t i = 0; i < n.entries.size(); ++i)
                    if (n.entries[i].key != other.entries[i].key ||
                        !equal(*n.entries[i].value, *other.entries[i].value))
                        return false;
                return true;
            },
            [&](const Name& n) { return n.id == std::get<Name>(b.node).id; },
            [&](const Attribute& n) {
                const auto& other = std::get<Attribute>(b.node);
                return n.attr == other.attr && equal(*n.object, *other.object);
            },
            [&](const Subscript& n) {
                const auto& other = std::get<Subscript>(b.node);
                return equal(*n.object, *other.object) && equal(*n.index, *other.index);
            },
            [&](const Call& n) {
                const auto& other = std::get<Call>(b.node);
                return equal(*n.callee, *other.callee) && equal_all(n.args, other.args);
            },
            [&](const BinOp& n) {
                const auto& other = std::get<BinOp>(b.node);
                return n.op == other.op && equal(*n.lhs, *other.lhs) &&
                       equal(*n.rhs, *other.rhs);
            },
            [&](const UnaryOp& n) {
                const auto& other = std::get<UnaryOp>(b.node);
                return n.op == other.op && equal(*n.operand, *other.operand);
            },
            [&](const Compare& n) {
                const auto& other = std::get<Compare>(b.node);
                if (!equal(*n.first, *other.first) || n.rest.size() != other.rest.size())
                    return false;
                for (size_t i = 0; i < n.rest.size(); ++i)
                    if (n.rest[i].op != other.rest[i].op ||
                        !equal(*n.rest[i].operand, *other.rest[i].operand))
                        return false;
                return true;
            },
            [&](const BoolOp& n) {
                const auto& other = std::get<BoolOp>(b.node);
                return n.op == other.op && equal_all(n.operands, other.operands);
            },
            [&](const UnsupportedExpr& n) {
                return n.construct == std::get<UnsupportedExpr>(b.node).construct;
            },
        },
        a.node);
}

bool equal(const Stmt& a, const Stmt& b) {
    if (a.node.index() != b.node.index())
        return false;
    return std::visit(
        Overloaded{
            [&](const Import& n) { return n.module == std::get<Import>(b.node).module; },
            [&](const FunctionDef& n) {
                const auto& other = std::get<FunctionDef>(b.node);
                return n.name == other.name && n.params == other.params &&
                       equal_body(n.body, other.body);
            },
            [&](const ClassDef& n) {
                const auto& other = std::get<ClassDef>(b.node);
                return n.name == other.name && equal_body(n.methods, other.methods);
            },
            [&](const Assign& n) {
                const auto& other = std::get<Assign>(b.node);
                return equal(*n.target, *other.target) && equal(*n.value, *other.value);
            },
            [&](const AugAssign& n) {
                const auto& other = std::get<AugAssign>(b.node);
                return n.op == other.op && equal(*n.target, *other.target) &&
                       equal(*n.value, *other.value);
            },
            [&](const Return& n) {
                const auto& other = std::get<Return>(b.node);
                if (!n.value || !other.value)
                    return !n.value && !other.value;
                return equal(*n.value, *other.value);
            },
            [&](const If& n) {
                const auto& other = std::get<If>(b.node);
                if (n.branches.size() != other.branches.size())
                    return false;
                for (size_t i = 0; i < n.branches.size(); ++i)
                    if (!equal(*n.branches[i].condition, *other.branches[i].condition) ||
                        !equal_body(n.branches[i].body, other.branches[i].body))
                        return false;
                return equal_body(n.orelse, other.orelse);
            },
            [&](const While& n) {
                const auto& other = std::get<While>(b.node);
                return equal(*n.condition, *other.condition) &&
                       equal_body(n.body, other.body);
            },
            [&](const ForRange& n) {
                const auto& other = std::get<ForRange>(b.node);
                return n.var == other.var && equal_all(n.bounds, other.bounds) &&
                       equal_body(n.body, other.body);
            },
            [&](const GlobalDecl& n) {
                return n.names == std::get<GlobalDecl>(b.node).names;
            },
            [&](const ExprStmt& n) {
                return equal(*n.expr, *std::get<ExprStmt>(b.node).expr);
            },
            [&](const MainGuard& n) {
                return equal_body(n.body, std::get<MainGuard>(b.node).body);
            },
            [&](const Pass&) { return true; },
            [&](const UnsupportedStmt& n) {
                return n.construct == std::get<UnsupportedStmt>(b.node).construct;
            },
        },
        a.node);
}

bool equal(const SyntaxTree& a, const SyntaxTree& b) {
    return equal_body(a.root.body, b.root.body);
}

} // namespace faasforge::syntax
